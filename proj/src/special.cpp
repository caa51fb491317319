#include "sic/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/digamma.hpp>

#include "sic/common.hpp"

namespace sic {

double lgamma_ln(double x) { return std::lgamma(x); }

double lbeta_ln(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double lchoose_ln(double n, double c) {
    return std::lgamma(n + 1.0) - std::lgamma(c + 1.0) - std::lgamma(n - c + 1.0);
}

double digamma(double x) { return boost::math::digamma(x); }

double beta_cdf(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return boost::math::ibeta(a, b, x);
}

double beta_expected_binary_entropy_bits(double a, double b) {
    // E[-theta ln theta] = -(a/(a+b)) (psi(a+1) - psi(a+b+1)); same for 1-theta.
    const double s = a + b;
    const double t1 = -(a / s) * (digamma(a + 1.0) - digamma(s + 1.0));
    const double t2 = -(b / s) * (digamma(b + 1.0) - digamma(s + 1.0));
    return (t1 + t2) * kLog2E;
}

double ks_pvalue(double d, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("ks_pvalue: n must be positive");
    const double sn = std::sqrt(static_cast<double>(n));
    const double lambda = (sn + 0.12 + 0.11 / sn) * d;
    if (lambda < 1e-3) return 1.0;
    // Q_KS(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2)
    double sum = 0.0, sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += sign * term;
        if (term < 1e-16) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_statistic(std::vector<double> q) {
    if (q.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(q.begin(), q.end());
    const double n = static_cast<double>(q.size());
    double d = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        const double nq = n * q[j];
        d = std::max(d, std::max(nq - static_cast<double>(j),
                                 static_cast<double>(j + 1) - nq));
    }
    return d / n;
}

}  // namespace sic
