#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace sic {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Computed by Newton iteration on the Legendre recurrence; cached per order.
const GaussLegendre& gauss_legendre(std::size_t order);

// integral of f over [a, b]
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::size_t order = 512);

// E_{Beta(1/2,1/2)}[ f(theta) ]. The arcsine substitution theta = sin^2(phi)
// removes the endpoint singularities of the Jeffreys weight, so plain
// Gauss-Legendre converges at spectral rate.
double beta_half_expectation(const std::function<double(double)>& f,
                             std::size_t order = 512);

// Numerical evaluation of  int_simplex  prod_i theta_i^{-1/2}  dtheta
// over the (k-1)-dimensional probability simplex, k in {2,3,4}.
// Used as an independent cross-check of the closed-form Fisher integral.
double simplex_sqrt_fisher_integral(unsigned k, std::size_t order = 64);

}  // namespace sic
