#pragma once

#include <cstdint>

#include "sic/common.hpp"
#include "sic/rng.hpp"
#include "sic/sources.hpp"

namespace sic {

// Two parameter vectors coupled through a latent string z^t: theta1 is a
// Jeffreys draw, z ~ mu_theta1^t, and theta2 is drawn from the posterior
// given z (exact under the per-row Dirichlet(1/2) prior). t = 0 makes the
// pair independent; t = infinity makes theta2 identical to theta1.
struct CorrelatedPair {
    ParamVector theta1;
    ParamVector theta2;
    HyperT t;
    String z;  // empty when t = 0 or t = infinity
};

CorrelatedPair sample_pair(SourceClass cls, HyperT t, Rng& rng);

// Same chain with theta1 supplied by the caller (used by the codec's
// measurement harness to share theta1/x randomness across strategies).
CorrelatedPair sample_pair_given(const ParamVector& theta1, HyperT t, Rng& rng);

// The coupling kernel f^t(theta1, theta2): sum over all z^t of
// mu_t1(z) mu_t2(z) / marginal(z), evaluated exactly by enumerating count
// classes with the closed-form Dirichlet-multinomial marginal.
// Memoryless classes only; guarded at k^t <= 1e6.
double f_t_exact(const ParamVector& theta1, const ParamVector& theta2, std::uint64_t t);

// Jeffreys density w_J(theta) on the free coordinates (memoryless only).
double jeffreys_density(const ParamVector& theta);

// p^t(theta1, theta2) = w_J(theta1) w_J(theta2) f^t(theta1, theta2)
double joint_density(const ParamVector& theta1, const ParamVector& theta2, std::uint64_t t);

struct MarginalTestReport {
    double statistic;  // worst per-component KS statistic
    double p_value;    // Bonferroni-adjusted across components
    bool pass;         // p_value > significance
    double significance;
    std::uint64_t trials;
};

// Goodness of fit of sampled theta2 components against the Dirichlet(1/2)
// marginals Beta(1/2, (k-1)/2). Verifies that the chain leaves the prior
// invariant for every t.
MarginalTestReport marginal_test(SourceClass cls, HyperT t, std::uint64_t trials, Rng& rng,
                                 double significance = 0.01);

struct MeanSquareReport {
    double mean;     // Monte Carlo estimate of E || theta2 - theta1 ||^2
    double std_err;  // standard error of the mean
    std::uint64_t trials;
};

MeanSquareReport mean_square_distance(SourceClass cls, HyperT t, std::uint64_t trials,
                                      Rng& rng);

}  // namespace sic
