// AVX2+FMA kernel variants. Compiled with -mavx2 -mfma; only dispatched to
// after __builtin_cpu_supports() confirms the host.
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace sic::kernels::avx2 {

namespace {

// int64 lanes |v| < 2^51 to double (magic-number trick; AVX2 has no cvt).
inline __m256d small_i64_to_f64(__m256i v) {
    const __m256i magic = _mm256_set1_epi64x(0x4338000000000000LL);
    return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_add_epi64(v, magic)),
                         _mm256_castsi256_pd(magic));
}

// exp(x) with Cody-Waite reduction and a degree-13 Taylor tail on
// |r| <= ln(2)/2. Values below -708 flush to zero (subnormal results are
// not needed at the call sites), above 709 saturate to +inf.
inline __m256d exp4(__m256d x) {
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
    const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
    const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);

    __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, ln2_hi, x);
    r = _mm256_fnmadd_pd(n, ln2_lo, r);

    static const double kInvFact[14] = {
        1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0,
        1.0 / 362880.0,     1.0 / 40320.0,     1.0 / 5040.0,     1.0 / 720.0,
        1.0 / 120.0,        1.0 / 24.0,        1.0 / 6.0,        1.0 / 2.0,
        1.0,                1.0};
    __m256d p = _mm256_set1_pd(kInvFact[0]);
    for (int i = 1; i < 14; ++i) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kInvFact[i]));

    n = _mm256_max_pd(_mm256_set1_pd(-1022.0), _mm256_min_pd(n, _mm256_set1_pd(1023.0)));
    __m256i n64 = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(n));
    __m256d scale =
        _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52));
    __m256d res = _mm256_mul_pd(p, scale);

    res = _mm256_blendv_pd(res, _mm256_setzero_pd(),
                           _mm256_cmp_pd(x, _mm256_set1_pd(-708.0), _CMP_LT_OQ));
    res = _mm256_blendv_pd(res, _mm256_set1_pd(HUGE_VAL),
                           _mm256_cmp_pd(x, _mm256_set1_pd(709.0), _CMP_GT_OQ));
    res = _mm256_blendv_pd(res, x, _mm256_cmp_pd(x, x, _CMP_UNORD_Q));
    return res;
}

// ln(x) via exponent split and the atanh series on the mantissa.
inline __m256d log4(__m256d x) {
    const __m256d ln2 = _mm256_set1_pd(0.6931471805599453094);
    const __m256d zero = _mm256_setzero_pd();

    __m256d subnormal = _mm256_and_pd(_mm256_cmp_pd(x, _mm256_set1_pd(0x1.0p-1022), _CMP_LT_OQ),
                                      _mm256_cmp_pd(x, zero, _CMP_GT_OQ));
    __m256d xs = _mm256_blendv_pd(x, _mm256_mul_pd(x, _mm256_set1_pd(0x1.0p54)), subnormal);

    __m256i xi = _mm256_castpd_si256(xs);
    __m256i e64 =
        _mm256_sub_epi64(_mm256_srli_epi64(xi, 52), _mm256_set1_epi64x(1023));
    __m256i mant = _mm256_or_si256(_mm256_and_si256(xi, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
                                   _mm256_set1_epi64x(0x3FF0000000000000LL));
    __m256d m = _mm256_castsi256_pd(mant);

    // fold m into [1/sqrt2, sqrt2]; mask is -1 per lane, so subtracting it
    // bumps the exponent where the fold applied
    __m256d fold = _mm256_cmp_pd(m, _mm256_set1_pd(1.4142135623730951), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), fold);
    e64 = _mm256_sub_epi64(e64, _mm256_castpd_si256(fold));

    __m256d e = small_i64_to_f64(e64);
    e = _mm256_blendv_pd(e, _mm256_sub_pd(e, _mm256_set1_pd(54.0)), subnormal);

    const __m256d one = _mm256_set1_pd(1.0);
    __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    __m256d s2 = _mm256_mul_pd(s, s);
    static const double kC[10] = {2.0 / 19.0, 2.0 / 17.0, 2.0 / 15.0, 2.0 / 13.0, 2.0 / 11.0,
                                  2.0 / 9.0,  2.0 / 7.0,  2.0 / 5.0,  2.0 / 3.0,  2.0};
    __m256d p = _mm256_set1_pd(kC[0]);
    for (int i = 1; i < 10; ++i) p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(kC[i]));
    __m256d lnm = _mm256_mul_pd(p, s);

    __m256d res = _mm256_fmadd_pd(e, ln2, lnm);

    // edge cases: 0 -> -inf, negative -> NaN, inf/nan passthrough
    res = _mm256_blendv_pd(res, _mm256_set1_pd(-HUGE_VAL), _mm256_cmp_pd(x, zero, _CMP_EQ_OQ));
    res = _mm256_blendv_pd(res, _mm256_set1_pd(NAN), _mm256_cmp_pd(x, zero, _CMP_LT_OQ));
    res = _mm256_blendv_pd(res, x, _mm256_cmp_pd(x, _mm256_set1_pd(HUGE_VAL), _CMP_EQ_OQ));
    res = _mm256_blendv_pd(res, x, _mm256_cmp_pd(x, x, _CMP_UNORD_Q));
    return res;
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

double sum(const double* x, std::size_t n) {
    __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        a0 = _mm256_add_pd(a0, _mm256_loadu_pd(x + i));
        a1 = _mm256_add_pd(a1, _mm256_loadu_pd(x + i + 4));
    }
    double acc = hsum(_mm256_add_pd(a0, a1));
    for (; i < n; ++i) acc += x[i];
    return acc;
}

double dot(const double* x, const double* y, std::size_t n) {
    __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
        a1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), a1);
    }
    double acc = hsum(_mm256_add_pd(a0, a1));
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void vexp(const double* x, double* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(y + i, exp4(_mm256_loadu_pd(x + i)));
    if (i < n) {
        double in[4] = {0, 0, 0, 0}, out[4];
        for (std::size_t j = i; j < n; ++j) in[j - i] = x[j];
        _mm256_storeu_pd(out, exp4(_mm256_loadu_pd(in)));
        for (std::size_t j = i; j < n; ++j) y[j] = out[j - i];
    }
}

void vlog(const double* x, double* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(y + i, log4(_mm256_loadu_pd(x + i)));
    if (i < n) {
        double in[4] = {1, 1, 1, 1}, out[4];
        for (std::size_t j = i; j < n; ++j) in[j - i] = x[j];
        _mm256_storeu_pd(out, log4(_mm256_loadu_pd(in)));
        for (std::size_t j = i; j < n; ++j) y[j] = out[j - i];
    }
}

double xlogx_weighted_sum(const double* w, const double* x, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    __m256d acc = zero;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xv = _mm256_loadu_pd(x + i);
        __m256d term = _mm256_mul_pd(_mm256_mul_pd(_mm256_loadu_pd(w + i), xv), log4(xv));
        term = _mm256_blendv_pd(term, zero, _mm256_cmp_pd(xv, zero, _CMP_LE_OQ));
        acc = _mm256_add_pd(acc, term);
    }
    double out = hsum(acc);
    for (; i < n; ++i) {
        if (x[i] > 0.0) out += w[i] * x[i] * std::log(x[i]);
    }
    return out;
}

void gemm_tn_acc(const double* a, std::size_t lda, const double* b, std::size_t ldb,
                 double* c, std::size_t ldc, std::size_t kdim, std::size_t rows,
                 std::size_t cols) {
    const std::size_t jv = cols & ~std::size_t{7};
    std::size_t r = 0;
    for (; r + 2 <= rows; r += 2) {
        double* c0 = c + r * ldc;
        double* c1 = c + (r + 1) * ldc;
        for (std::size_t j = 0; j < jv; j += 8) {
            __m256d a00 = _mm256_loadu_pd(c0 + j), a01 = _mm256_loadu_pd(c0 + j + 4);
            __m256d a10 = _mm256_loadu_pd(c1 + j), a11 = _mm256_loadu_pd(c1 + j + 4);
            for (std::size_t k = 0; k < kdim; ++k) {
                const double* brow = b + k * ldb + j;
                __m256d b0 = _mm256_loadu_pd(brow);
                __m256d b1 = _mm256_loadu_pd(brow + 4);
                __m256d av0 = _mm256_set1_pd(a[k * lda + r]);
                __m256d av1 = _mm256_set1_pd(a[k * lda + r + 1]);
                a00 = _mm256_fmadd_pd(av0, b0, a00);
                a01 = _mm256_fmadd_pd(av0, b1, a01);
                a10 = _mm256_fmadd_pd(av1, b0, a10);
                a11 = _mm256_fmadd_pd(av1, b1, a11);
            }
            _mm256_storeu_pd(c0 + j, a00);
            _mm256_storeu_pd(c0 + j + 4, a01);
            _mm256_storeu_pd(c1 + j, a10);
            _mm256_storeu_pd(c1 + j + 4, a11);
        }
        for (std::size_t j = jv; j < cols; ++j) {
            double s0 = c0[j], s1 = c1[j];
            for (std::size_t k = 0; k < kdim; ++k) {
                s0 += a[k * lda + r] * b[k * ldb + j];
                s1 += a[k * lda + r + 1] * b[k * ldb + j];
            }
            c0[j] = s0;
            c1[j] = s1;
        }
    }
    for (; r < rows; ++r) {
        double* crow = c + r * ldc;
        for (std::size_t j = 0; j < jv; j += 8) {
            __m256d a0 = _mm256_loadu_pd(crow + j), a1 = _mm256_loadu_pd(crow + j + 4);
            for (std::size_t k = 0; k < kdim; ++k) {
                __m256d av = _mm256_set1_pd(a[k * lda + r]);
                a0 = _mm256_fmadd_pd(av, _mm256_loadu_pd(b + k * ldb + j), a0);
                a1 = _mm256_fmadd_pd(av, _mm256_loadu_pd(b + k * ldb + j + 4), a1);
            }
            _mm256_storeu_pd(crow + j, a0);
            _mm256_storeu_pd(crow + j + 4, a1);
        }
        for (std::size_t j = jv; j < cols; ++j) {
            double s = crow[j];
            for (std::size_t k = 0; k < kdim; ++k) s += a[k * lda + r] * b[k * ldb + j];
            crow[j] = s;
        }
    }
}

}  // namespace sic::kernels::avx2

#endif  // x86-64
