#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "sic/kernels.hpp"
#include "sic/rng.hpp"

using namespace sic;
namespace k = sic::kernels;

namespace {

std::vector<double> random_vec(Rng& rng, std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (auto& x : v) x = lo + (hi - lo) * rng.next_double();
    return v;
}

// Runs fn under every backend the host supports and the scalar reference,
// comparing results.
template <typename Fn>
void for_each_simd_backend(Fn&& fn) {
    const k::Backend saved = k::active_backend();
    for (k::Backend b : {k::Backend::avx2, k::Backend::neon}) {
        if (!k::backend_supported(b)) continue;
        k::set_backend(b);
        fn(b);
    }
    k::set_backend(saved);
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("dispatch exposes a working backend and scalar is always available") {
    CHECK(k::backend_supported(k::Backend::scalar));
    const k::Backend b = k::active_backend();
    CHECK(k::backend_name(b) != nullptr);
    k::set_backend(k::Backend::scalar);
    double x[3] = {1, 2, 3};
    CHECK(k::sum(x, 3) == 6.0);
    k::set_backend(b);
}

TEST_CASE("sum and dot match the scalar reference") {
    Rng rng(31);
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{7}, std::size_t{8},
                          std::size_t{64}, std::size_t{1001}}) {
        const auto x = random_vec(rng, n, -5.0, 5.0);
        const auto y = random_vec(rng, n, -5.0, 5.0);
        const double rs = k::scalar::sum(x.data(), n);
        const double rd = k::scalar::dot(x.data(), y.data(), n);
        for_each_simd_backend([&](k::Backend) {
            CHECK(k::sum(x.data(), n) == doctest::Approx(rs).epsilon(1e-13));
            CHECK(k::dot(x.data(), y.data(), n) == doctest::Approx(rd).epsilon(1e-13));
        });
    }
}

TEST_CASE("vexp matches std::exp across the full working range") {
    Rng rng(32);
    auto x = random_vec(rng, 4096, -700.0, 700.0);
    const double inf = std::numeric_limits<double>::infinity();
    x.insert(x.end(), {0.0, -0.0, 1.0, -1.0, 709.0, -708.0, inf, -inf,
                       std::numeric_limits<double>::quiet_NaN()});
    std::vector<double> ref(x.size()), out(x.size());
    k::scalar::vexp(x.data(), ref.data(), x.size());
    for_each_simd_backend([&](k::Backend) {
        k::vexp(x.data(), out.data(), x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (std::isnan(ref[i])) {
                CHECK(std::isnan(out[i]));
            } else if (std::isinf(ref[i])) {
                CHECK(out[i] == ref[i]);
            } else {
                CHECK(std::abs(out[i] - ref[i]) <=
                      1e-13 * std::abs(ref[i]) + 1e-300);
            }
        }
    });
}

TEST_CASE("vlog matches std::log including edge cases") {
    Rng rng(33);
    std::vector<double> x;
    for (int i = 0; i < 4096; ++i)
        x.push_back(std::exp((rng.next_double() * 2.0 - 1.0) * 690.0));
    const double inf = std::numeric_limits<double>::infinity();
    x.insert(x.end(), {1.0, 2.0, 0.5, M_PI, 1e-310 /*subnormal*/, 0.0, -1.0, inf,
                       std::numeric_limits<double>::quiet_NaN()});
    std::vector<double> ref(x.size()), out(x.size());
    k::scalar::vlog(x.data(), ref.data(), x.size());
    for_each_simd_backend([&](k::Backend) {
        k::vlog(x.data(), out.data(), x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (std::isnan(ref[i])) {
                CHECK(std::isnan(out[i]));
            } else if (std::isinf(ref[i])) {
                CHECK(out[i] == ref[i]);
            } else {
                CHECK(std::abs(out[i] - ref[i]) <=
                      1e-13 * std::max(1.0, std::abs(ref[i])));
            }
        }
    });
}

TEST_CASE("xlogx_weighted_sum handles zeros and matches scalar") {
    Rng rng(34);
    auto w = random_vec(rng, 513, 0.0, 2.0);
    auto x = random_vec(rng, 513, 0.0, 1.0);
    x[0] = 0.0;
    x[100] = 0.0;
    const double ref = k::scalar::xlogx_weighted_sum(w.data(), x.data(), x.size());
    for_each_simd_backend([&](k::Backend) {
        CHECK(k::xlogx_weighted_sum(w.data(), x.data(), x.size()) ==
              doctest::Approx(ref).epsilon(1e-12));
    });
}

TEST_CASE("gemm_tn_acc matches the scalar contraction on awkward shapes") {
    Rng rng(35);
    for (auto [t, r, c] : {std::tuple<int, int, int>{1, 1, 1},
                           {3, 5, 7},
                           {17, 9, 33},
                           {64, 31, 130}}) {
        const auto a = random_vec(rng, std::size_t(t) * r, -1.0, 1.0);
        const auto b = random_vec(rng, std::size_t(t) * c, -1.0, 1.0);
        auto cref = random_vec(rng, std::size_t(r) * c, -1.0, 1.0);
        auto cout = cref;
        k::scalar::gemm_tn_acc(a.data(), r, b.data(), c, cref.data(), c, t, r, c);
        for_each_simd_backend([&](k::Backend) {
            auto trial = cout;
            k::gemm_tn_acc(a.data(), r, b.data(), c, trial.data(), c, t, r, c);
            for (std::size_t i = 0; i < trial.size(); ++i)
                CHECK(trial[i] == doctest::Approx(cref[i]).epsilon(1e-12));
        });
    }
}

}  // TEST_SUITE
