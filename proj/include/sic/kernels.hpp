#pragma once

#include <cstddef>

namespace sic::kernels {

// Data-parallel inner loops used by the numerical oracles. Each kernel has
// a scalar reference implementation and SIMD variants (AVX2 on x86-64,
// NEON on aarch64) selected once at runtime. The SIC_SIMD environment
// variable ("scalar", "avx2", "neon") overrides detection.
enum class Backend { scalar, avx2, neon };

Backend active_backend();
const char* backend_name(Backend b);
bool backend_supported(Backend b);
// Force a backend (tests use this to compare variants). Throws if the
// host cannot run it.
void set_backend(Backend b);

double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);

// y[i] = exp(x[i]); handles +-inf, |x| beyond the double range clamps to 0/inf.
void vexp(const double* x, double* y, std::size_t n);

// y[i] = ln(x[i]); x <= 0 follows IEEE conventions (-inf at 0, NaN below).
void vlog(const double* x, double* y, std::size_t n);

// sum_i w[i] * x[i] * ln(x[i]) with 0 * ln 0 = 0.  (entropy accumulations)
double xlogx_weighted_sum(const double* w, const double* x, std::size_t n);

// C[r, c] += sum_k A[k, r] * B[k, c]   (A: kdim x rows, B: kdim x cols,
// row-major with leading dimensions lda/ldb/ldc). The contraction behind
// the finite-t mutual-information tables.
void gemm_tn_acc(const double* a, std::size_t lda, const double* b, std::size_t ldb,
                 double* c, std::size_t ldc, std::size_t kdim, std::size_t rows,
                 std::size_t cols);

// Scalar reference implementations, always available (equivalence tests).
namespace scalar {
double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
void vexp(const double* x, double* y, std::size_t n);
void vlog(const double* x, double* y, std::size_t n);
double xlogx_weighted_sum(const double* w, const double* x, std::size_t n);
void gemm_tn_acc(const double* a, std::size_t lda, const double* b, std::size_t ldb,
                 double* c, std::size_t ldc, std::size_t kdim, std::size_t rows,
                 std::size_t cols);
}  // namespace scalar

}  // namespace sic::kernels
