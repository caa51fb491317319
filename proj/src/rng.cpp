#include "sic/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace sic {

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    // rejection sampling over the largest multiple of bound
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % bound;
}

double Rng::normal() {
    if (have_cached_normal_) {
        have_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = next_double_pos();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(a);
    have_cached_normal_ = true;
    return r * std::cos(a);
}

double Rng::gamma(double shape) {
    if (!(shape > 0.0)) throw std::invalid_argument("gamma: shape must be positive");
    if (shape == 0.5) {
        const double z = normal();
        return 0.5 * z * z;  // chi-square(1)/2 = Gamma(1/2, 1)
    }
    if (shape < 1.0) {
        const double g = gamma(shape + 1.0);
        return g * std::pow(next_double_pos(), 1.0 / shape);
    }
    // Marsaglia & Tsang squeeze method
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_double_pos();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

std::vector<double> Rng::dirichlet(const std::vector<double>& alpha) {
    std::vector<double> g(alpha.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        double v = gamma(alpha[i]);
        if (v <= 0.0) v = 1e-300;  // keep components strictly positive
        g[i] = v;
        sum += v;
    }
    for (auto& v : g) v /= sum;
    return g;
}

std::vector<double> Rng::dirichlet_symmetric(double alpha, std::size_t k) {
    return dirichlet(std::vector<double>(k, alpha));
}

}  // namespace sic
