#pragma once

#include <cstdint>
#include <vector>

namespace sic {

// log Gamma, natural log (thin wrapper so call sites stay uniform)
double lgamma_ln(double x);

// ln B(a,b)
double lbeta_ln(double a, double b);

// ln C(n, c)
double lchoose_ln(double n, double c);

// digamma
double digamma(double x);

// Regularized incomplete beta I_x(a,b), i.e. the Beta(a,b) CDF at x.
double beta_cdf(double a, double b, double x);

// E_{Beta(a,b)}[h_b(theta)] in bits, via digamma identities.
double beta_expected_binary_entropy_bits(double a, double b);

// Asymptotic Kolmogorov-Smirnov p-value for a one-sample test with n
// observations and statistic d (Stephens' small-sample correction).
double ks_pvalue(double d, std::uint64_t n);

// KS statistic from already-computed CDF quantiles (need not be sorted).
double ks_statistic(std::vector<double> quantiles);

}  // namespace sic
