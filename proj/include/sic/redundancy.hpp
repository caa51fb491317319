#pragma once

#include <cstdint>

#include "sic/common.hpp"

namespace sic {

// Inputs to the closed-form redundancy/gain calculators. m and t are in
// source characters and may be infinity(); the asymptotic formulas take the
// corresponding limits. logC is the log2 Fisher-integral constant of the
// model class (see log_fisher_integral_bits).
struct RedundancyQuery {
    std::uint64_t n = 1;
    double m = 0.0;
    double t = 0.0;
    std::uint64_t d = 1;
    double log_c_bits = 0.0;
    double entropy_n_bits = 0.0;
    std::uint32_t k = 2;  // alphabet size; sets the clamp ceiling n log2 k - H^n
    bool clamp = true;
};

struct RedundancyReport {
    double maximin_bits;              // R-bar^n
    double m_star;                    // effective side-information length
    double r_hat_bits;                // (d/2) log2(1 + n/m*)
    double side_info_redundancy_bits; // R-bar^{n,m,t}
    double gain;                      // g^{n,m,t}
    double gain_limit;                // g-hat^{n,t} = 1 + R-bar/H
    bool clamped;
};

// Raw asymptotic maximin redundancy (d/2) log2(n/(2 pi e)) + logC, o(1)
// dropped; can be negative at small n.
double maximin_redundancy_raw(std::uint64_t n, std::uint64_t d, double log_c_bits);

// Clamped to [0, n log2 k - entropy_n] when q.clamp is set.
double maximin_redundancy(const RedundancyQuery& q);

// 1/m* = 1/m + 2/t, with the continuous-limit conventions
// m*(m,inf)=m, m*(inf,t)=t/2, and m*=0 whenever m or t is 0.
double m_star(double m, double t);

// (d/2) log2(1 + n/m*); 0 when m* = inf. m* = 0 is the no-side-info regime
// and is reported through side_info_redundancy instead.
double r_hat(std::uint64_t n, double m, double t, std::uint64_t d);

// R-bar^{n,m,t}: equals the maximin redundancy when min{m,t} = 0 and is
// never above it (the conditioning inequality, asserted structurally here).
double side_info_redundancy(const RedundancyQuery& q);

// g = (H^n + R-bar^n) / (H^n + R-bar^{n,m,t}); requires entropy_n > 0.
double gain(const RedundancyQuery& q);

// limit of the gain as m* -> inf: 1 + R-bar^n / H^n
double gain_limit(const RedundancyQuery& q);

// Sufficient effective memory for (1-delta) of the unlimited-memory gain:
//   m_delta = ((1-delta)/delta) * (n/H^n) * (d/2) * log2(e)   [characters]
double memory_threshold(std::uint64_t n, std::uint64_t d, double entropy_n_bits,
                        double delta);

double binary_entropy(double eps);

struct AlmostLosslessBound {
    double raw_bits;      // (1-eps) R-bar - h_b(eps) - eps H^n; may be negative
    double floored_bits;  // max(raw, 0)
};

AlmostLosslessBound almost_lossless_lower_bound(double maximin_bits, double entropy_n_bits,
                                                double eps);

// Converse bound for one-to-one (nonsingular) codes:
//   ((d-2)/2) log2(n/(2 pi e)) - log2(2 pi e^2) + logC
double one_to_one_lower_bound(std::uint64_t n, std::uint64_t d, double log_c_bits);

enum class Strategy : std::uint8_t { ucomp = 0, ucomp_e = 1, ucomp_d = 2, ucomp_ed = 3 };

// Strictly lossless coding gains by strategy: side information at only one
// end provides none, so everything except ucomp_ed is exactly 1.
double strategy_gain(Strategy s, const RedundancyQuery& q);

RedundancyReport evaluate_redundancy(const RedundancyQuery& q);

}  // namespace sic
