// NEON kernel variants (aarch64). Transcendentals stay on the scalar path;
// only the bandwidth-bound reductions and the GEMM contraction are lifted.
#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>
#include <cstddef>

namespace sic::kernels::neon {

double sum(const double* x, std::size_t n) {
    float64x2_t a0 = vdupq_n_f64(0.0), a1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        a0 = vaddq_f64(a0, vld1q_f64(x + i));
        a1 = vaddq_f64(a1, vld1q_f64(x + i + 2));
    }
    double acc = vaddvq_f64(a0) + vaddvq_f64(a1);
    for (; i < n; ++i) acc += x[i];
    return acc;
}

double dot(const double* x, const double* y, std::size_t n) {
    float64x2_t a0 = vdupq_n_f64(0.0), a1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        a0 = vfmaq_f64(a0, vld1q_f64(x + i), vld1q_f64(y + i));
        a1 = vfmaq_f64(a1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
    }
    double acc = vaddvq_f64(a0) + vaddvq_f64(a1);
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
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
    const std::size_t jv = cols & ~std::size_t{3};
    for (std::size_t r = 0; r < rows; ++r) {
        double* crow = c + r * ldc;
        for (std::size_t j = 0; j < jv; j += 4) {
            float64x2_t a0 = vld1q_f64(crow + j);
            float64x2_t a1 = vld1q_f64(crow + j + 2);
            for (std::size_t k = 0; k < kdim; ++k) {
                const float64x2_t av = vdupq_n_f64(a[k * lda + r]);
                a0 = vfmaq_f64(a0, av, vld1q_f64(b + k * ldb + j));
                a1 = vfmaq_f64(a1, av, vld1q_f64(b + k * ldb + j + 2));
            }
            vst1q_f64(crow + j, a0);
            vst1q_f64(crow + j + 2, a1);
        }
        for (std::size_t j = jv; j < cols; ++j) {
            double s = crow[j];
            for (std::size_t k = 0; k < kdim; ++k) s += a[k * lda + r] * b[k * ldb + j];
            crow[j] = s;
        }
    }
}

}  // namespace sic::kernels::neon

#endif  // aarch64
