#include "maxtorus/simd.hpp"

#include <immintrin.h>

#include <vector>

namespace maxtorus::simd::avx2 {

bool available() { return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"); }

namespace {

double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v), hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void matvec(const double* w, std::size_t rows, std::size_t cols, const double* y, double* out) {
  for (std::size_t a = 0; a < rows; ++a) {
    const double* row = w + a * cols;
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= cols; j += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(y + j), acc);
    double s = horizontal_sum(acc);
    for (; j < cols; ++j) s += row[j] * y[j];
    out[a] = s;
  }
}

void pair_hessian(const double* w, const double* p, std::size_t rows, std::size_t cols, double* h) {
  for (std::size_t i = 0; i < cols * cols; ++i) h[i] = 0;
  std::vector<double> diff(cols);
  double* d = diff.data();
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < rows; ++b) {
      const double c = p[a] * p[b];
      for (std::size_t i = 0; i < cols; ++i) d[i] = w[a * cols + i] - w[b * cols + i];
      for (std::size_t i = 0; i < cols; ++i) {
        const __m256d ci = _mm256_set1_pd(c * d[i]);
        double* hrow = h + i * cols;
        std::size_t j = 0;
        for (; j + 4 <= cols; j += 4)
          _mm256_storeu_pd(hrow + j, _mm256_fmadd_pd(ci, _mm256_loadu_pd(d + j), _mm256_loadu_pd(hrow + j)));
        for (; j < cols; ++j) hrow[j] += c * d[i] * d[j];
      }
    }
}

}  // namespace maxtorus::simd::avx2
