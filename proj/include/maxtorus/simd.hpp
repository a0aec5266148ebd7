#pragma once

// Float inner loops of the potential and Hessian evaluation. Every kernel
// has a scalar reference and an AVX2/FMA variant; `dispatch` picks one at
// runtime.

#include <cstddef>

namespace maxtorus::simd {

/// out[a] = <W_a, y> for the rows of the row-major rows × cols matrix W.
using MatvecFn = void (*)(const double* w, std::size_t rows, std::size_t cols, const double* y, double* out);

/// H (cols × cols, row-major, overwritten) = Σ_{a,b} p_a p_b (W_a - W_b)(W_a - W_b)^T
/// over ordered pairs.
using PairHessianFn = void (*)(const double* w, const double* p, std::size_t rows, std::size_t cols,
                               double* h);

namespace scalar {
void matvec(const double* w, std::size_t rows, std::size_t cols, const double* y, double* out);
void pair_hessian(const double* w, const double* p, std::size_t rows, std::size_t cols, double* h);
}  // namespace scalar

namespace avx2 {
/// True when compiled in and the CPU reports AVX2 and FMA.
bool available();
void matvec(const double* w, std::size_t rows, std::size_t cols, const double* y, double* out);
void pair_hessian(const double* w, const double* p, std::size_t rows, std::size_t cols, double* h);
}  // namespace avx2

enum class Backend { Scalar, Avx2 };

struct Kernels {
  Backend backend;
  MatvecFn matvec;
  PairHessianFn pair_hessian;
};

/// Best available backend; MAXTORUS_SIMD=scalar forces the reference.
const Kernels& dispatch();
Kernels kernels(Backend backend);
const char* backend_name(Backend backend);

}  // namespace maxtorus::simd
