#include "sic/redundancy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sic {

namespace {

void validate(const RedundancyQuery& q) {
    if (q.n < 1) throw std::invalid_argument("redundancy: n must be >= 1");
    if (q.d < 1) throw std::invalid_argument("redundancy: d must be >= 1");
    if (q.m < 0.0 || q.t < 0.0)
        throw std::invalid_argument("redundancy: m and t must be nonnegative");
    if (q.k < 2) throw std::invalid_argument("redundancy: k must be >= 2");
    const double ceiling = static_cast<double>(q.n) * std::log2(static_cast<double>(q.k));
    if (q.entropy_n_bits < 0.0 || q.entropy_n_bits > ceiling * (1.0 + 1e-12))
        throw std::invalid_argument("redundancy: entropy_n must lie in [0, n log2 k]");
}

double clamp_ceiling(const RedundancyQuery& q) {
    return std::max(0.0, static_cast<double>(q.n) * std::log2(static_cast<double>(q.k)) -
                             q.entropy_n_bits);
}

}  // namespace

double maximin_redundancy_raw(std::uint64_t n, std::uint64_t d, double log_c_bits) {
    if (n < 1) throw std::invalid_argument("maximin_redundancy: n must be >= 1");
    return 0.5 * static_cast<double>(d) *
               std::log2(static_cast<double>(n) / (2.0 * M_PI * M_E)) +
           log_c_bits;
}

double maximin_redundancy(const RedundancyQuery& q) {
    validate(q);
    const double raw = maximin_redundancy_raw(q.n, q.d, q.log_c_bits);
    if (!q.clamp) return raw;
    return std::clamp(raw, 0.0, clamp_ceiling(q));
}

double m_star(double m, double t) {
    if (m < 0.0 || t < 0.0) throw std::invalid_argument("m_star: m,t must be nonnegative");
    if (m == 0.0 || t == 0.0) return 0.0;
    const bool mi = std::isinf(m), ti = std::isinf(t);
    if (mi && ti) return infinite();
    if (ti) return m;
    if (mi) return t / 2.0;
    return 1.0 / (1.0 / m + 2.0 / t);
}

double r_hat(std::uint64_t n, double m, double t, std::uint64_t d) {
    if (n < 1) throw std::invalid_argument("r_hat: n must be >= 1");
    const double ms = m_star(m, t);
    if (std::isinf(ms)) return 0.0;
    if (ms == 0.0)
        throw std::domain_error(
            "r_hat: m* = 0 is the no-side-info regime; use side_info_redundancy");
    return 0.5 * static_cast<double>(d) * std::log2(1.0 + static_cast<double>(n) / ms);
}

double side_info_redundancy(const RedundancyQuery& q) {
    validate(q);
    const double rbar = maximin_redundancy(q);
    if (m_star(q.m, q.t) == 0.0) return rbar;  // equality case of the sandwich lemma
    return std::min(r_hat(q.n, q.m, q.t, q.d), rbar);
}

double gain(const RedundancyQuery& q) {
    validate(q);
    if (!(q.entropy_n_bits > 0.0))
        throw std::invalid_argument("gain: entropy_n must be positive (degenerate source)");
    const double rbar = maximin_redundancy(q);
    const double rside = side_info_redundancy(q);
    return (q.entropy_n_bits + rbar) / (q.entropy_n_bits + rside);
}

double gain_limit(const RedundancyQuery& q) {
    validate(q);
    if (!(q.entropy_n_bits > 0.0))
        throw std::invalid_argument("gain_limit: entropy_n must be positive");
    return 1.0 + maximin_redundancy(q) / q.entropy_n_bits;
}

double memory_threshold(std::uint64_t n, std::uint64_t d, double entropy_n_bits,
                        double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("memory_threshold: delta must lie in (0,1)");
    if (!(entropy_n_bits > 0.0))
        throw std::invalid_argument("memory_threshold: entropy_n must be positive");
    return (1.0 - delta) / delta * (static_cast<double>(n) / entropy_n_bits) *
           (static_cast<double>(d) / 2.0) * kLog2E;
}

double binary_entropy(double eps) {
    if (eps < 0.0 || eps > 1.0)
        throw std::invalid_argument("binary_entropy: argument must lie in [0,1]");
    double h = 0.0;
    if (eps > 0.0) h -= eps * std::log2(eps);
    if (eps < 1.0) h -= (1.0 - eps) * std::log2(1.0 - eps);
    return h;
}

AlmostLosslessBound almost_lossless_lower_bound(double maximin_bits, double entropy_n_bits,
                                                double eps) {
    const double raw =
        (1.0 - eps) * maximin_bits - binary_entropy(eps) - eps * entropy_n_bits;
    return AlmostLosslessBound{raw, std::max(0.0, raw)};
}

double one_to_one_lower_bound(std::uint64_t n, std::uint64_t d, double log_c_bits) {
    if (n < 1) throw std::invalid_argument("one_to_one_lower_bound: n must be >= 1");
    if (d < 2) throw std::invalid_argument("one_to_one_lower_bound: requires d >= 2");
    return 0.5 * (static_cast<double>(d) - 2.0) *
               std::log2(static_cast<double>(n) / (2.0 * M_PI * M_E)) -
           std::log2(2.0 * M_PI * M_E * M_E) + log_c_bits;
}

double strategy_gain(Strategy s, const RedundancyQuery& q) {
    validate(q);
    return s == Strategy::ucomp_ed ? gain(q) : 1.0;
}

RedundancyReport evaluate_redundancy(const RedundancyQuery& q) {
    validate(q);
    const double raw = maximin_redundancy_raw(q.n, q.d, q.log_c_bits);
    const double rbar = maximin_redundancy(q);
    const double ms = m_star(q.m, q.t);
    const double rhat = ms == 0.0 ? rbar : r_hat(q.n, q.m, q.t, q.d);
    RedundancyReport rep;
    rep.maximin_bits = rbar;
    rep.m_star = ms;
    rep.r_hat_bits = rhat;
    rep.side_info_redundancy_bits = side_info_redundancy(q);
    rep.gain = q.entropy_n_bits > 0.0 ? gain(q) : 1.0;
    rep.gain_limit = q.entropy_n_bits > 0.0 ? gain_limit(q) : 1.0;
    rep.clamped = q.clamp && raw != rbar;
    return rep;
}

}  // namespace sic
