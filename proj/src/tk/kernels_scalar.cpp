#include "maxtorus/simd.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace maxtorus::simd {

namespace scalar {

void matvec(const double* w, std::size_t rows, std::size_t cols, const double* y, double* out) {
  for (std::size_t a = 0; a < rows; ++a) {
    double s = 0;
    for (std::size_t j = 0; j < cols; ++j) s += w[a * cols + j] * y[j];
    out[a] = s;
  }
}

void pair_hessian(const double* w, const double* p, std::size_t rows, std::size_t cols, double* h) {
  for (std::size_t i = 0; i < cols * cols; ++i) h[i] = 0;
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < rows; ++b) {
      const double c = p[a] * p[b];
      for (std::size_t i = 0; i < cols; ++i) {
        const double di = w[a * cols + i] - w[b * cols + i];
        for (std::size_t j = 0; j < cols; ++j) h[i * cols + j] += c * di * (w[a * cols + j] - w[b * cols + j]);
      }
    }
}

}  // namespace scalar

#ifndef MAXTORUS_HAVE_AVX2
namespace avx2 {
bool available() { return false; }
void matvec(const double*, std::size_t, std::size_t, const double*, double*) {
  throw std::logic_error("AVX2 kernels not compiled in");
}
void pair_hessian(const double*, const double*, std::size_t, std::size_t, double*) {
  throw std::logic_error("AVX2 kernels not compiled in");
}
}  // namespace avx2
#endif

Kernels kernels(Backend backend) {
  if (backend == Backend::Avx2) {
    if (!avx2::available()) throw std::runtime_error("AVX2 backend unavailable on this machine");
    return {Backend::Avx2, avx2::matvec, avx2::pair_hessian};
  }
  return {Backend::Scalar, scalar::matvec, scalar::pair_hessian};
}

const Kernels& dispatch() {
  static const Kernels chosen = [] {
    const char* env = std::getenv("MAXTORUS_SIMD");
    const bool force_scalar = env && std::strcmp(env, "scalar") == 0;
    return kernels(!force_scalar && avx2::available() ? Backend::Avx2 : Backend::Scalar);
  }();
  return chosen;
}

const char* backend_name(Backend backend) { return backend == Backend::Avx2 ? "avx2" : "scalar"; }

}  // namespace maxtorus::simd
