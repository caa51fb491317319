#pragma once

#include <cstdint>

#include "sic/common.hpp"

namespace sic {

// Exact small-instance computations of the mutual informations that the
// closed-form redundancy expressions approximate, for the k = 2 memoryless
// family under the Jeffreys prior. Sufficient statistics reduce everything
// to sums over (count_x, count_y, count_z) with Beta-binomial closed forms,
// so the values are exact up to floating-point summation and the one prior
// quadrature.
struct MIConfig {
    std::uint32_t k = 2;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    HyperT t = HyperT::finite(0);
};

struct MIResult {
    double value_bits;
    double quadrature_error_estimate;
    MIConfig config;
};

// I(X^n; theta), n <= 4096.
MIResult mi_unconditional(std::uint64_t n);

// I(X^n; theta1 | Y^m); n, m <= 2048, t <= 2048 or infinity.
MIResult mi_conditional(std::uint64_t n, std::uint64_t m, HyperT t);

struct MIIdentityReport {
    double i_x_theta;
    double i_x_theta_given_y;
    double i_x_y;
    double residual_bits;  // I(X;th) - I(X;th|Y) - I(X;Y)
    bool pass;             // |residual| within tolerance
    double tolerance;
};

// Computes the three informations by separate numerical routes and checks
// the chain-rule identity I(X;th) - I(X;th|Y) = I(X;Y).
MIIdentityReport mi_gap_identity_check(std::uint64_t n, std::uint64_t m, HyperT t,
                                       double tolerance = 1e-4);

// I(X^n; Y^m) under the correlation model (same guards as mi_conditional).
double mi_x_y(std::uint64_t n, std::uint64_t m, HyperT t);

}  // namespace sic
