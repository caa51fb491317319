#include "sic/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sic {

namespace {

GaussLegendre compute_gauss_legendre(std::size_t n) {
    if (n < 2) throw std::invalid_argument("gauss_legendre: order must be >= 2");
    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    const std::size_t mid = (n + 1) / 2;
    for (std::size_t i = 0; i < mid; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n(x) = 0.
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        gl.nodes[i] = -x;
        gl.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        gl.weights[i] = w;
        gl.weights[n - 1 - i] = w;
    }
    return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(std::size_t order) {
    static std::mutex mu;
    static std::map<std::size_t, GaussLegendre> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::size_t order) {
    const auto& gl = gauss_legendre(order);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double acc = 0.0;
    for (std::size_t i = 0; i < order; ++i)
        acc += gl.weights[i] * f(mid + half * gl.nodes[i]);
    return acc * half;
}

double beta_half_expectation(const std::function<double(double)>& f, std::size_t order) {
    // (2/pi) int_0^{pi/2} f(sin^2 phi) dphi
    return (2.0 / M_PI) * integrate([&](double phi) {
               const double s = std::sin(phi);
               return f(s * s);
           },
                                    0.0, M_PI / 2.0, order);
}

namespace {

// Nested integral over the simplex with theta_j = s * sin^2(phi) layers;
// each substitution contributes 2 sqrt(s) cos(phi), and the innermost pair
// integrates a constant. Dimensions peel off one at a time.
double simplex_recurse(unsigned vars_left, double remaining, std::size_t order) {
    const auto& gl = gauss_legendre(order);
    const double half = M_PI / 4.0;
    double acc = 0.0;
    if (vars_left == 2) {
        // int_0^s theta^{-1/2} (s - theta)^{-1/2} dtheta  ==  int_0^{pi/2} 2 dphi
        for (std::size_t i = 0; i < order; ++i) acc += gl.weights[i] * 2.0;
        return acc * half;
    }
    for (std::size_t i = 0; i < order; ++i) {
        const double phi = half * (gl.nodes[i] + 1.0);
        const double c = std::cos(phi);
        const double inner = simplex_recurse(vars_left - 1, remaining * c * c, order);
        acc += gl.weights[i] * 2.0 * std::sqrt(remaining) * c * inner;
    }
    return acc * half;
}

}  // namespace

double simplex_sqrt_fisher_integral(unsigned k, std::size_t order) {
    if (k < 2 || k > 4)
        throw std::invalid_argument("simplex_sqrt_fisher_integral: k must be in {2,3,4}");
    return simplex_recurse(k, 1.0, order);
}

}  // namespace sic
