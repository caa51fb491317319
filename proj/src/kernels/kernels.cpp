#include "sic/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace sic::kernels {

namespace scalar {

double sum(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double dot(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void vexp(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = std::exp(x[i]);
}

void vlog(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = std::log(x[i]);
}

double xlogx_weighted_sum(const double* w, const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] > 0.0) acc += w[i] * x[i] * std::log(x[i]);
    }
    return acc;
}

void gemm_tn_acc(const double* a, std::size_t lda, const double* b, std::size_t ldb,
                 double* c, std::size_t ldc, std::size_t kdim, std::size_t rows,
                 std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        double* crow = c + r * ldc;
        for (std::size_t k = 0; k < kdim; ++k) {
            const double av = a[k * lda + r];
            const double* brow = b + k * ldb;
            for (std::size_t j = 0; j < cols; ++j) crow[j] += av * brow[j];
        }
    }
}

}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define SIC_HAVE_AVX2_BUILD 1
namespace avx2 {
double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
void vexp(const double* x, double* y, std::size_t n);
void vlog(const double* x, double* y, std::size_t n);
double xlogx_weighted_sum(const double* w, const double* x, std::size_t n);
void gemm_tn_acc(const double* a, std::size_t lda, const double* b, std::size_t ldb,
                 double* c, std::size_t ldc, std::size_t kdim, std::size_t rows,
                 std::size_t cols);
}  // namespace avx2
#endif

#if defined(__aarch64__)
#define SIC_HAVE_NEON_BUILD 1
namespace neon {
double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double xlogx_weighted_sum(const double* w, const double* x, std::size_t n);
void gemm_tn_acc(const double* a, std::size_t lda, const double* b, std::size_t ldb,
                 double* c, std::size_t ldc, std::size_t kdim, std::size_t rows,
                 std::size_t cols);
}  // namespace neon
#endif

namespace {

Backend detect_backend() {
    if (const char* env = std::getenv("SIC_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && backend_supported(Backend::avx2))
            return Backend::avx2;
        if (std::strcmp(env, "neon") == 0 && backend_supported(Backend::neon))
            return Backend::neon;
        return Backend::scalar;
    }
#ifdef SIC_HAVE_AVX2_BUILD
    if (backend_supported(Backend::avx2)) return Backend::avx2;
#endif
#ifdef SIC_HAVE_NEON_BUILD
    return Backend::neon;
#endif
    return Backend::scalar;
}

Backend g_backend = detect_backend();

}  // namespace

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#ifdef SIC_HAVE_AVX2_BUILD
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::neon:
#ifdef SIC_HAVE_NEON_BUILD
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend active_backend() { return g_backend; }

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "?";
}

void set_backend(Backend b) {
    if (!backend_supported(b))
        throw std::runtime_error(std::string("kernel backend not supported on this host: ") +
                                 backend_name(b));
    g_backend = b;
}

double sum(const double* x, std::size_t n) {
#ifdef SIC_HAVE_AVX2_BUILD
    if (g_backend == Backend::avx2) return avx2::sum(x, n);
#endif
#ifdef SIC_HAVE_NEON_BUILD
    if (g_backend == Backend::neon) return neon::sum(x, n);
#endif
    return scalar::sum(x, n);
}

double dot(const double* x, const double* y, std::size_t n) {
#ifdef SIC_HAVE_AVX2_BUILD
    if (g_backend == Backend::avx2) return avx2::dot(x, y, n);
#endif
#ifdef SIC_HAVE_NEON_BUILD
    if (g_backend == Backend::neon) return neon::dot(x, y, n);
#endif
    return scalar::dot(x, y, n);
}

void vexp(const double* x, double* y, std::size_t n) {
#ifdef SIC_HAVE_AVX2_BUILD
    if (g_backend == Backend::avx2) return avx2::vexp(x, y, n);
#endif
    return scalar::vexp(x, y, n);
}

void vlog(const double* x, double* y, std::size_t n) {
#ifdef SIC_HAVE_AVX2_BUILD
    if (g_backend == Backend::avx2) return avx2::vlog(x, y, n);
#endif
    return scalar::vlog(x, y, n);
}

double xlogx_weighted_sum(const double* w, const double* x, std::size_t n) {
#ifdef SIC_HAVE_AVX2_BUILD
    if (g_backend == Backend::avx2) return avx2::xlogx_weighted_sum(w, x, n);
#endif
#ifdef SIC_HAVE_NEON_BUILD
    if (g_backend == Backend::neon) return neon::xlogx_weighted_sum(w, x, n);
#endif
    return scalar::xlogx_weighted_sum(w, x, n);
}

void gemm_tn_acc(const double* a, std::size_t lda, const double* b, std::size_t ldb,
                 double* c, std::size_t ldc, std::size_t kdim, std::size_t rows,
                 std::size_t cols) {
#ifdef SIC_HAVE_AVX2_BUILD
    if (g_backend == Backend::avx2)
        return avx2::gemm_tn_acc(a, lda, b, ldb, c, ldc, kdim, rows, cols);
#endif
#ifdef SIC_HAVE_NEON_BUILD
    if (g_backend == Backend::neon)
        return neon::gemm_tn_acc(a, lda, b, ldb, c, ldc, kdim, rows, cols);
#endif
    return scalar::gemm_tn_acc(a, lda, b, ldb, c, ldc, kdim, rows, cols);
}

}  // namespace sic::kernels
