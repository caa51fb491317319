#include <cmath>
#include <vector>

#include "doctest.h"
#include "sic/common.hpp"
#include "sic/quadrature.hpp"
#include "sic/rng.hpp"
#include "sic/special.hpp"

using namespace sic;

TEST_SUITE("foundation") {

TEST_CASE("rng: fixed seed reproduces the stream, substreams differ") {
    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    Rng s1 = Rng::substream(7, 1, 0);
    Rng s2 = Rng::substream(7, 1, 1);
    Rng s3 = Rng::substream(7, 2, 0);
    const auto v1 = s1.next_u64(), v2 = s2.next_u64(), v3 = s3.next_u64();
    CHECK(v1 != v2);
    CHECK(v1 != v3);
    Rng s1b = Rng::substream(7, 1, 0);
    CHECK(s1b.next_u64() == v1);
}

TEST_CASE("rng: gamma and normal moments") {
    Rng rng(2024);
    const int n = 200000;
    double sum = 0, sum2 = 0;
    for (int i = 0; i < n; ++i) {
        const double g = rng.gamma(0.5);
        sum += g;
        sum2 += g * g;
    }
    const double mean = sum / n, var = sum2 / n - mean * mean;
    CHECK(mean == doctest::Approx(0.5).epsilon(0.02));   // Gamma(1/2,1): mean 1/2
    CHECK(var == doctest::Approx(0.5).epsilon(0.05));    // variance 1/2

    sum = sum2 = 0;
    for (int i = 0; i < n; ++i) {
        const double g = rng.gamma(2.7);
        sum += g;
        sum2 += g * g;
    }
    CHECK(sum / n == doctest::Approx(2.7).epsilon(0.02));
    CHECK(sum2 / n - (sum / n) * (sum / n) == doctest::Approx(2.7).epsilon(0.05));

    sum = sum2 = 0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        sum += z;
        sum2 += z * z;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("rng: dirichlet samples live on the simplex with the right mean") {
    Rng rng(5);
    double mean0 = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const auto v = rng.dirichlet_symmetric(0.5, 3);
        double s = 0;
        for (double x : v) {
            CHECK(x > 0.0);
            s += x;
        }
        CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
        mean0 += v[0];
    }
    CHECK(mean0 / n == doctest::Approx(1.0 / 3.0).epsilon(0.02));
}

TEST_CASE("gauss-legendre quadrature: polynomial and smooth integrands") {
    CHECK(integrate([](double x) { return x * x; }, -1, 1, 16) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::exp(x); }, 0, 1, 32) ==
          doctest::Approx(M_E - 1.0).epsilon(1e-14));
}

TEST_CASE("beta(1/2,1/2) expectations by quadrature") {
    CHECK(beta_half_expectation([](double th) { return th; }) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // E[h_b(theta)] = 2 - log2(e)
    auto hb = [](double th) { return -th * std::log2(th) - (1 - th) * std::log2(1 - th); };
    CHECK(beta_half_expectation(hb) == doctest::Approx(2.0 - kLog2E).epsilon(1e-10));
}

TEST_CASE("simplex Fisher-weight integral matches Gamma(1/2)^k / Gamma(k/2)") {
    CHECK(simplex_sqrt_fisher_integral(2) == doctest::Approx(M_PI).epsilon(1e-10));
    CHECK(simplex_sqrt_fisher_integral(3) == doctest::Approx(2.0 * M_PI).epsilon(1e-10));
    CHECK(simplex_sqrt_fisher_integral(4) == doctest::Approx(M_PI * M_PI).epsilon(1e-10));
}

TEST_CASE("special functions: spot values") {
    const double gamma_e = 0.5772156649015329;
    CHECK(digamma(1.0) == doctest::Approx(-gamma_e).epsilon(1e-12));
    CHECK(digamma(2.0) == doctest::Approx(1.0 - gamma_e).epsilon(1e-12));
    CHECK(digamma(0.5) == doctest::Approx(-gamma_e - 2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(std::exp(lchoose_ln(10, 3)) == doctest::Approx(120.0).epsilon(1e-10));
    CHECK(beta_cdf(0.5, 0.5, 0.3) ==
          doctest::Approx(2.0 / M_PI * std::asin(std::sqrt(0.3))).epsilon(1e-12));
    CHECK(beta_expected_binary_entropy_bits(0.5, 0.5) ==
          doctest::Approx(2.0 - kLog2E).epsilon(1e-12));
}

TEST_CASE("kolmogorov-smirnov: calibrated on a clean uniform sample") {
    Rng rng(99);
    std::vector<double> q(5000);
    for (auto& v : q) v = rng.next_double();
    const double d = ks_statistic(q);
    CHECK(ks_pvalue(d, q.size()) > 0.01);

    for (auto& v : q) v = 0.5 * rng.next_double();  // clearly not uniform
    CHECK(ks_pvalue(ks_statistic(q), q.size()) < 1e-6);
}

}  // TEST_SUITE
