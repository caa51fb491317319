#include "sic/mi_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sic/kernels.hpp"
#include "sic/quadrature.hpp"
#include "sic/special.hpp"

namespace sic {

namespace {

constexpr double kLnPi = 1.1447298858494001741;

// lgamma at integer and half-integer arguments, tabulated once per call.
struct LgammaTables {
    std::vector<double> at_int;   // at_int[j]  = lgamma(j + 1)
    std::vector<double> at_half;  // at_half[j] = lgamma(j + 1/2)

    explicit LgammaTables(std::size_t max_index) {
        at_int.resize(max_index + 1);
        at_half.resize(max_index + 1);
        for (std::size_t j = 0; j <= max_index; ++j) {
            at_int[j] = std::lgamma(static_cast<double>(j) + 1.0);
            at_half[j] = std::lgamma(static_cast<double>(j) + 0.5);
        }
    }

    // ln C(n, c)
    double lchoose(std::size_t n, std::size_t c) const {
        return at_int[n] - at_int[c] - at_int[n - c];
    }
    // ln B(a + 1/2, b + 1/2) for integer a, b
    double lbeta_hh(std::size_t a, std::size_t b) const {
        return at_half[a] + at_half[b] - at_int[a + b];  // Gamma(a+b+1)
    }
};

// E_{Beta(1/2,1/2)}[h_b(theta)] by quadrature, with a refinement-based
// error estimate. (Closed form exists; the oracle recomputes it numerically
// on purpose.)
struct PriorEntropy {
    double value_bits;
    double error_bits;
};

PriorEntropy prior_binary_entropy() {
    auto hb = [](double th) {
        double h = 0.0;
        if (th > 0.0) h -= th * std::log2(th);
        if (th < 1.0) h -= (1.0 - th) * std::log2(1.0 - th);
        return h;
    };
    const double coarse = beta_half_expectation(hb, 256);
    const double fine = beta_half_expectation(hb, 512);
    return {fine, std::abs(fine - coarse)};
}

// E_{Beta(cz+1/2, t-cz+1/2)}[h_b] for all cz (posterior mixture components)
std::vector<double> posterior_hb_table(std::uint64_t t) {
    std::vector<double> out(t + 1);
    for (std::uint64_t cz = 0; cz <= t; ++cz)
        out[cz] = beta_expected_binary_entropy_bits(static_cast<double>(cz) + 0.5,
                                                    static_cast<double>(t - cz) + 0.5);
    return out;
}

void check_conditional_guards(std::uint64_t n, std::uint64_t m, HyperT t) {
    if (n > 2048 || m > 2048)
        throw std::domain_error("mi_conditional: n and m are limited to 2048");
    if (!t.is_infinite() && t.value > 2048)
        throw std::domain_error("mi_conditional: finite t is limited to 2048");
}

// Joint per-sequence log-probabilities lJ[cy][cx] (cy-major), plus the
// ln-marginals of each side. For finite t the coupling is contracted over
// the latent count cz with the SIMD GEMM after per-column rescaling.
struct JointTables {
    std::uint64_t n, m;
    std::vector<double> lj;   // (m+1) x (n+1), cy-major
    std::vector<double> lpx;  // per-sequence ln p(x) by count
    std::vector<double> lpy;
    std::vector<double> lwx;  // ln binomial coefficients
    std::vector<double> lwy;
    double mixture_mass_residual = 0.0;  // max relative defect of sum_cz W vs p(y)

    double lJ(std::uint64_t cx, std::uint64_t cy) const { return lj[cy * (n + 1) + cx]; }
};

JointTables build_joint(std::uint64_t n, std::uint64_t m, HyperT t,
                        const LgammaTables& lg) {
    JointTables jt;
    jt.n = n;
    jt.m = m;
    jt.lpx.resize(n + 1);
    jt.lwx.resize(n + 1);
    for (std::uint64_t cx = 0; cx <= n; ++cx) {
        jt.lpx[cx] = lg.lbeta_hh(cx, n - cx) - kLnPi;
        jt.lwx[cx] = lg.lchoose(n, cx);
    }
    jt.lpy.resize(m + 1);
    jt.lwy.resize(m + 1);
    for (std::uint64_t cy = 0; cy <= m; ++cy) {
        jt.lpy[cy] = lg.lbeta_hh(cy, m - cy) - kLnPi;
        jt.lwy[cy] = lg.lchoose(m, cy);
    }
    jt.lj.resize((m + 1) * (n + 1));

    if (t.is_infinite()) {
        // theta2 == theta1: one Beta integral over the pooled counts
        for (std::uint64_t cy = 0; cy <= m; ++cy) {
            double* row = jt.lj.data() + cy * (n + 1);
            for (std::uint64_t cx = 0; cx <= n; ++cx)
                row[cx] = lg.lbeta_hh(cx + cy, (n - cx) + (m - cy)) - kLnPi;
        }
        return jt;
    }

    const std::uint64_t tv = t.value;
    // lT1[cz, cx] = ln C(t,cz) + ln B(cx+cz+.5, n-cx+t-cz+.5) - ln pi
    // lT2[cz, cy] = ln B(cy+cz+.5, m-cy+t-cz+.5) - ln B(cz+.5, t-cz+.5)
    const std::size_t rows = tv + 1, ncx = n + 1, ncy = m + 1;
    std::vector<double> t1(rows * ncx), t2(rows * ncy);
    for (std::uint64_t cz = 0; cz <= tv; ++cz) {
        const double czc = lg.lchoose(tv, cz);
        double* r1 = t1.data() + cz * ncx;
        for (std::uint64_t cx = 0; cx <= n; ++cx)
            r1[cx] = czc + lg.lbeta_hh(cx + cz, (n - cx) + (tv - cz)) - kLnPi;
        const double norm = lg.lbeta_hh(cz, tv - cz);
        double* r2 = t2.data() + cz * ncy;
        for (std::uint64_t cy = 0; cy <= m; ++cy)
            r2[cy] = lg.lbeta_hh(cy + cz, (m - cy) + (tv - cz)) - norm;
    }
    // rescale columns so the exponentials stay in (0, 1]
    std::vector<double> ax(ncx, -HUGE_VAL), by(ncy, -HUGE_VAL);
    for (std::size_t cz = 0; cz < rows; ++cz) {
        const double* r1 = t1.data() + cz * ncx;
        for (std::size_t j = 0; j < ncx; ++j) ax[j] = std::max(ax[j], r1[j]);
        const double* r2 = t2.data() + cz * ncy;
        for (std::size_t j = 0; j < ncy; ++j) by[j] = std::max(by[j], r2[j]);
    }
    for (std::size_t cz = 0; cz < rows; ++cz) {
        double* r1 = t1.data() + cz * ncx;
        for (std::size_t j = 0; j < ncx; ++j) r1[j] -= ax[j];
        double* r2 = t2.data() + cz * ncy;
        for (std::size_t j = 0; j < ncy; ++j) r2[j] -= by[j];
    }
    kernels::vexp(t1.data(), t1.data(), t1.size());
    kernels::vexp(t2.data(), t2.data(), t2.size());

    // G[cy, cx] = sum_cz T2[cz, cy] T1[cz, cx]
    std::vector<double> g(ncy * ncx, 0.0);
    kernels::gemm_tn_acc(t2.data(), ncy, t1.data(), ncx, g.data(), ncx, rows, ncy, ncx);
    kernels::vlog(g.data(), g.data(), g.size());
    for (std::size_t cy = 0; cy < ncy; ++cy) {
        double* row = jt.lj.data() + cy * ncx;
        const double* grow = g.data() + cy * ncx;
        for (std::size_t cx = 0; cx < ncx; ++cx) row[cx] = grow[cx] + ax[cx] + by[cy];
    }
    return jt;
}

double entropy_x_bits(std::uint64_t n, const LgammaTables& lg) {
    double acc = 0.0;
    for (std::uint64_t cx = 0; cx <= n; ++cx) {
        const double lp = lg.lbeta_hh(cx, n - cx) - kLnPi;
        acc -= std::exp(lg.lchoose(n, cx) + lp) * lp;
    }
    return acc * kLog2E;
}

}  // namespace

MIResult mi_unconditional(std::uint64_t n) {
    if (n > 4096) throw std::domain_error("mi_unconditional: n is limited to 4096");
    MIConfig cfg{2, n, 0, HyperT::finite(0)};
    if (n == 0) return MIResult{0.0, 0.0, cfg};
    const LgammaTables lg(n + 1);
    const PriorEntropy prior = prior_binary_entropy();
    const double value = entropy_x_bits(n, lg) - static_cast<double>(n) * prior.value_bits;
    return MIResult{value, static_cast<double>(n) * prior.error_bits, cfg};
}

MIResult mi_conditional(std::uint64_t n, std::uint64_t m, HyperT t) {
    check_conditional_guards(n, m, t);
    MIConfig cfg{2, n, m, t};
    if (n == 0) return MIResult{0.0, 0.0, cfg};
    const LgammaTables lg(n + m + (t.is_infinite() ? 0 : t.value) + 2);
    const PriorEntropy prior = prior_binary_entropy();
    if (m == 0) {
        const double value =
            entropy_x_bits(n, lg) - static_cast<double>(n) * prior.value_bits;
        return MIResult{value, static_cast<double>(n) * prior.error_bits, cfg};
    }

    const JointTables jt = build_joint(n, m, t, lg);

    // E[h_b(theta1) | y] per y-count: Beta posterior at t = inf, otherwise a
    // mixture over the latent count cz with Beta-binomial weights.
    std::vector<double> hb_given_y(m + 1);
    double mass_residual = 0.0;
    if (t.is_infinite()) {
        for (std::uint64_t cy = 0; cy <= m; ++cy)
            hb_given_y[cy] = beta_expected_binary_entropy_bits(
                static_cast<double>(cy) + 0.5, static_cast<double>(m - cy) + 0.5);
    } else {
        const std::uint64_t tv = t.value;
        const std::vector<double> hbz = posterior_hb_table(tv);
        std::vector<double> lw(tv + 1), w(tv + 1);
        for (std::uint64_t cy = 0; cy <= m; ++cy) {
            // ln W(cz, y) = ln C(t,cz) + ln B(cy+cz+.5, m-cy+t-cz+.5) - ln pi
            double mx = -HUGE_VAL;
            for (std::uint64_t cz = 0; cz <= tv; ++cz) {
                lw[cz] = lg.lchoose(tv, cz) + lg.lbeta_hh(cy + cz, (m - cy) + (tv - cz)) -
                         kLnPi;
                mx = std::max(mx, lw[cz]);
            }
            for (std::uint64_t cz = 0; cz <= tv; ++cz) lw[cz] -= mx;
            kernels::vexp(lw.data(), w.data(), tv + 1);
            const double mass = kernels::sum(w.data(), tv + 1);
            hb_given_y[cy] = kernels::dot(w.data(), hbz.data(), tv + 1) / mass;
            // the mixture mass must reproduce p(y); residual tracks table error
            const double rel =
                std::abs(std::log(mass) + mx - jt.lpy[cy]);
            mass_residual = std::max(mass_residual, rel);
        }
    }

    // I(X; theta | Y) = sum_y p(y) [ H(X | Y=y) - n E[h_b | y] ]
    const std::size_t ncx = n + 1;
    std::vector<double> probs(ncx), factor(ncx);
    double value = 0.0;
    for (std::uint64_t cy = 0; cy <= m; ++cy) {
        const double lpy = jt.lpy[cy];
        const double* lrow = jt.lj.data() + cy * ncx;
        for (std::size_t cx = 0; cx < ncx; ++cx) {
            const double lcond = lrow[cx] - lpy;  // ln p(x | y) per sequence
            probs[cx] = jt.lwx[cx] + lcond;
            factor[cx] = lcond;
        }
        kernels::vexp(probs.data(), probs.data(), ncx);
        const double hxy = -kernels::dot(probs.data(), factor.data(), ncx) * kLog2E;
        const double pyw = std::exp(jt.lwy[cy] + lpy);
        value += pyw * (hxy - static_cast<double>(n) * hb_given_y[cy]);
    }
    const double err = static_cast<double>(n) * (prior.error_bits + mass_residual);
    return MIResult{value, err, cfg};
}

double mi_x_y(std::uint64_t n, std::uint64_t m, HyperT t) {
    check_conditional_guards(n, m, t);
    if (n == 0 || m == 0) return 0.0;
    const LgammaTables lg(n + m + (t.is_infinite() ? 0 : t.value) + 2);
    const JointTables jt = build_joint(n, m, t, lg);
    const std::size_t ncx = n + 1;
    std::vector<double> probs(ncx), factor(ncx);
    double acc = 0.0;  // in nats until the end
    for (std::uint64_t cy = 0; cy <= m; ++cy) {
        const double* lrow = jt.lj.data() + cy * ncx;
        for (std::size_t cx = 0; cx < ncx; ++cx) {
            probs[cx] = jt.lwx[cx] + jt.lwy[cy] + lrow[cx];
            factor[cx] = lrow[cx] - jt.lpx[cx] - jt.lpy[cy];
        }
        kernels::vexp(probs.data(), probs.data(), ncx);
        acc += kernels::dot(probs.data(), factor.data(), ncx);
    }
    return acc * kLog2E;
}

MIIdentityReport mi_gap_identity_check(std::uint64_t n, std::uint64_t m, HyperT t,
                                       double tolerance) {
    const double ixt = mi_unconditional(n).value_bits;
    const double ixty = mi_conditional(n, m, t).value_bits;
    const double ixy = mi_x_y(n, m, t);
    const double residual = ixt - ixty - ixy;
    return MIIdentityReport{ixt, ixty, ixy, residual, std::abs(residual) <= tolerance,
                            tolerance};
}

}  // namespace sic
