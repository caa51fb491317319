#include "sic/correlation.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "sic/special.hpp"

namespace sic {

namespace {

// theta2 | z: per-row Dirichlet(counts + 1/2) posterior (conjugate).
ParamVector posterior_sample(SourceClass cls, const String& z, Rng& rng) {
    const std::size_t nrows = cls.kind == ModelKind::memoryless ? 1 : cls.k;
    std::vector<std::vector<double>> alpha(nrows, std::vector<double>(cls.k, 0.5));
    if (cls.kind == ModelKind::memoryless) {
        for (Symbol s : z) alpha[0][s] += 1.0;
    } else {
        for (std::size_t i = 1; i < z.size(); ++i) alpha[z[i - 1]][z[i]] += 1.0;
    }
    std::vector<std::vector<double>> rows(nrows);
    for (std::size_t r = 0; r < nrows; ++r) rows[r] = rng.dirichlet(alpha[r]);
    return ParamVector(cls, std::move(rows));
}

}  // namespace

CorrelatedPair sample_pair(SourceClass cls, HyperT t, Rng& rng) {
    ParamVector theta1 = jeffreys_sample(cls, rng);
    return sample_pair_given(theta1, t, rng);
}

CorrelatedPair sample_pair_given(const ParamVector& theta1, HyperT t, Rng& rng) {
    const SourceClass cls = theta1.source_class();
    if (t.is_infinite()) return CorrelatedPair{theta1, theta1, t, String{}};
    String z = sample_string(theta1, static_cast<std::size_t>(t.value), rng);
    ParamVector theta2 = posterior_sample(cls, z, rng);
    return CorrelatedPair{theta1, std::move(theta2), t, std::move(z)};
}

namespace {

// Recursive enumeration of count compositions (c_1..c_k), sum = t.
// For each class the kernel term is
//   multinomial(t; c) * prod t1_i^{c_i} * prod t2_i^{c_i} / marginal(c)
// with marginal(c) = prod Gamma(c_i + 1/2)/Gamma(1/2) * Gamma(k/2)/Gamma(t + k/2)
// (the Dirichlet(1/2)-multinomial sequence probability).
struct KernelEnumerator {
    const std::vector<double>& p1;
    const std::vector<double>& p2;
    std::uint64_t t;
    std::uint32_t k;
    double lg_norm;  // ln Gamma(k/2) - ln Gamma(t + k/2)
    std::vector<std::uint64_t> counts;
    double total = 0.0;

    void run(std::uint32_t idx, std::uint64_t remaining, double acc) {
        if (idx + 1 == k) {
            counts[idx] = remaining;
            total += std::exp(acc + term(idx, remaining));
            return;
        }
        for (std::uint64_t c = 0; c <= remaining; ++c) {
            counts[idx] = c;
            run(idx + 1, remaining - c, acc + term(idx, c));
        }
    }

    double term(std::uint32_t i, std::uint64_t c) const {
        const double cd = static_cast<double>(c);
        // per-symbol contribution to: ln multinomial + ln p1^c + ln p2^c - ln marginal-part
        return -lgamma_ln(cd + 1.0) + cd * (std::log(p1[i]) + std::log(p2[i])) -
               (lgamma_ln(cd + 0.5) - lgamma_ln(0.5));
    }

    double finish() const {
        // global factors: Gamma(t+1) from the multinomial, minus the
        // marginal's Gamma(k/2)/Gamma(t+k/2)
        return total * std::exp(lgamma_ln(static_cast<double>(t) + 1.0) - lg_norm);
    }
};

}  // namespace

double f_t_exact(const ParamVector& theta1, const ParamVector& theta2, std::uint64_t t) {
    const SourceClass cls = theta1.source_class();
    if (cls.kind != ModelKind::memoryless)
        throw std::invalid_argument("f_t_exact: memoryless classes only");
    if (!(cls == theta2.source_class()))
        throw std::invalid_argument("f_t_exact: parameter vectors from different classes");
    if (t == 0) return 1.0;
    const double combos = std::pow(static_cast<double>(cls.k), static_cast<double>(t));
    if (combos > 1e6)
        throw std::domain_error(
            "f_t_exact: k^t exceeds the enumeration guard (1e6); use Monte Carlo sampling");
    KernelEnumerator e{theta1.row(0), theta2.row(0), t, cls.k,
                       lgamma_ln(cls.k / 2.0) - lgamma_ln(static_cast<double>(t) + cls.k / 2.0),
                       std::vector<std::uint64_t>(cls.k, 0)};
    e.run(0, t, 0.0);
    return e.finish();
}

double jeffreys_density(const ParamVector& theta) {
    const SourceClass cls = theta.source_class();
    if (cls.kind != ModelKind::memoryless)
        throw std::invalid_argument("jeffreys_density: memoryless classes only");
    // Dirichlet(1/2,...,1/2): Gamma(k/2)/Gamma(1/2)^k * prod theta_i^{-1/2}
    const double k = static_cast<double>(cls.k);
    double ln = lgamma_ln(k / 2.0) - k * lgamma_ln(0.5);
    for (double v : theta.row(0)) ln -= 0.5 * std::log(v);
    return std::exp(ln);
}

double joint_density(const ParamVector& theta1, const ParamVector& theta2, std::uint64_t t) {
    return jeffreys_density(theta1) * jeffreys_density(theta2) * f_t_exact(theta1, theta2, t);
}

MarginalTestReport marginal_test(SourceClass cls, HyperT t, std::uint64_t trials, Rng& rng,
                                 double significance) {
    if (trials < 1000) throw std::invalid_argument("marginal_test: trials must be >= 1e3");
    const std::size_t nrows = cls.kind == ModelKind::memoryless ? 1 : cls.k;
    // quantiles[component] across trials; each component is Beta(1/2,(k-1)/2)
    std::vector<std::vector<double>> q(nrows * cls.k);
    for (auto& v : q) v.reserve(trials);
    const double a = 0.5, b = (static_cast<double>(cls.k) - 1.0) / 2.0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const CorrelatedPair pair = sample_pair(cls, t, rng);
        for (std::size_t r = 0; r < nrows; ++r)
            for (std::size_t j = 0; j < cls.k; ++j)
                q[r * cls.k + j].push_back(beta_cdf(a, b, pair.theta2.row(r)[j]));
    }
    double worst_stat = 0.0, min_p = 1.0;
    for (auto& component : q) {
        const double d = ks_statistic(std::move(component));
        const double p = ks_pvalue(d, trials);
        worst_stat = std::max(worst_stat, d);
        min_p = std::min(min_p, p);
    }
    const double adj = std::min(1.0, min_p * static_cast<double>(q.size()));
    return MarginalTestReport{worst_stat, adj, adj > significance, significance, trials};
}

MeanSquareReport mean_square_distance(SourceClass cls, HyperT t, std::uint64_t trials,
                                      Rng& rng) {
    if (t.is_infinite()) return MeanSquareReport{0.0, 0.0, trials};
    if (trials < 1000) throw std::invalid_argument("mean_square_distance: trials must be >= 1e3");
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const CorrelatedPair pair = sample_pair(cls, t, rng);
        const double d2 = pair.theta1.squared_distance(pair.theta2);
        sum += d2;
        sumsq += d2 * d2;
    }
    const double n = static_cast<double>(trials);
    const double mean = sum / n;
    const double var = std::max(0.0, sumsq / n - mean * mean);
    return MeanSquareReport{mean, std::sqrt(var / n), trials};
}

}  // namespace sic
