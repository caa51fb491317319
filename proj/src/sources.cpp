#include "sic/sources.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sic/kernels.hpp"
#include "sic/special.hpp"

namespace sic {

namespace {

constexpr double kRowSumTol = 1e-12;
constexpr double kPositivityFloor = 1e-12;

}  // namespace

SourceClass::SourceClass(ModelKind kind_, std::uint32_t k_) : kind(kind_), k(k_) {
    if (k < 2) throw std::invalid_argument("SourceClass: alphabet size must be >= 2");
}

std::uint64_t SourceClass::dimension() const {
    if (k < 2) throw std::invalid_argument("dimension: alphabet size must be >= 2");
    return kind == ModelKind::memoryless ? std::uint64_t{k} - 1
                                         : std::uint64_t{k} * (k - 1);
}

ParamVector::ParamVector(SourceClass cls, std::vector<std::vector<double>> rows)
    : cls_(cls), rows_(std::move(rows)) {
    const std::size_t want = cls_.kind == ModelKind::memoryless ? 1 : cls_.k;
    if (rows_.size() != want)
        throw std::invalid_argument("ParamVector: wrong number of rows for class");
    for (const auto& row : rows_) {
        if (row.size() != cls_.k)
            throw std::invalid_argument("ParamVector: row length must equal k");
        double sum = 0.0;
        for (double v : row) {
            if (!(v > 0.0))
                throw std::invalid_argument(
                    "ParamVector: entries must be strictly positive (ergodicity)");
            sum += v;
        }
        if (std::abs(sum - 1.0) > kRowSumTol)
            throw std::invalid_argument("ParamVector: row does not sum to 1");
    }
}

ParamVector ParamVector::memoryless(std::vector<double> probs) {
    const auto k = static_cast<std::uint32_t>(probs.size());
    return ParamVector(SourceClass::memoryless(k), {std::move(probs)});
}

ParamVector ParamVector::markov1(std::vector<std::vector<double>> rows) {
    const auto k = static_cast<std::uint32_t>(rows.size());
    return ParamVector(SourceClass::markov1(k), std::move(rows));
}

std::vector<double> ParamVector::stationary() const {
    if (cls_.kind == ModelKind::memoryless) return rows_[0];
    // Solve pi P = pi, sum pi = 1 by Gaussian elimination on (P^T - I) with
    // the last equation replaced by the normalization constraint.
    const std::size_t k = cls_.k;
    std::vector<double> a(k * k);
    std::vector<double> b(k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            a[i * k + j] = rows_[j][i] - (i == j ? 1.0 : 0.0);
    for (std::size_t j = 0; j < k; ++j) a[(k - 1) * k + j] = 1.0;
    b[k - 1] = 1.0;

    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(a[r * k + col]) > std::abs(a[piv * k + col])) piv = r;
        if (std::abs(a[piv * k + col]) < 1e-14)
            throw std::runtime_error("stationary: transition matrix is not ergodic");
        if (piv != col) {
            for (std::size_t j = 0; j < k; ++j) std::swap(a[piv * k + j], a[col * k + j]);
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            const double f = a[r * k + col] / a[col * k + col];
            if (f == 0.0) continue;
            for (std::size_t j = col; j < k; ++j) a[r * k + j] -= f * a[col * k + j];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> pi(k);
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        pi[i] = b[i] / a[i * k + i];
        if (!(pi[i] > 0.0) || !std::isfinite(pi[i]))
            throw std::runtime_error("stationary: no valid stationary distribution");
        sum += pi[i];
    }
    for (auto& v : pi) v /= sum;
    return pi;
}

double ParamVector::squared_distance(const ParamVector& other) const {
    if (!(cls_ == other.cls_))
        throw std::invalid_argument("squared_distance: source classes differ");
    double acc = 0.0;
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t j = 0; j + 1 < rows_[r].size(); ++j) {
            const double dv = rows_[r][j] - other.rows_[r][j];
            acc += dv * dv;
        }
    return acc;
}

namespace {

double entropy_bits(const std::vector<double>& p) {
    std::vector<double> ones(p.size(), 1.0);
    return -kernels::xlogx_weighted_sum(ones.data(), p.data(), p.size()) * kLog2E;
}

}  // namespace

EntropyReport entropy(const ParamVector& theta, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("entropy: n must be >= 1");
    if (theta.source_class().kind == ModelKind::memoryless) {
        const double rate = entropy_bits(theta.row(0));
        return {rate, static_cast<double>(n) * rate};
    }
    const auto pi = theta.stationary();
    double rate = 0.0;
    for (std::size_t i = 0; i < pi.size(); ++i) rate += pi[i] * entropy_bits(theta.row(i));
    const double h0 = entropy_bits(pi);
    return {rate, h0 + static_cast<double>(n - 1) * rate};
}

double log2_string_prob(const ParamVector& theta, const String& x) {
    if (x.empty()) return 0.0;
    if (theta.source_class().kind == ModelKind::memoryless) {
        const auto& p = theta.row(0);
        double acc = 0.0;
        for (Symbol s : x) acc += std::log2(p.at(s));
        return acc;
    }
    const auto pi = theta.stationary();
    double acc = std::log2(pi.at(x[0]));
    for (std::size_t i = 1; i < x.size(); ++i) acc += std::log2(theta.row(x[i - 1]).at(x[i]));
    return acc;
}

namespace {

Symbol draw_from(const std::vector<double>& p, Rng& rng) {
    double u = rng.next_double();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        acc += p[i];
        if (u < acc) return static_cast<Symbol>(i);
    }
    return static_cast<Symbol>(p.size() - 1);
}

}  // namespace

String sample_string(const ParamVector& theta, std::size_t n, Rng& rng) {
    String out;
    out.reserve(n);
    if (n == 0) return out;
    if (theta.source_class().kind == ModelKind::memoryless) {
        const auto& p = theta.row(0);
        for (std::size_t i = 0; i < n; ++i) out.push_back(draw_from(p, rng));
        return out;
    }
    const auto pi = theta.stationary();
    Symbol s = draw_from(pi, rng);
    out.push_back(s);
    for (std::size_t i = 1; i < n; ++i) {
        s = draw_from(theta.row(s), rng);
        out.push_back(s);
    }
    return out;
}

namespace {

std::vector<double> normalize_counts(const std::vector<double>& counts) {
    double total = 0.0;
    for (double c : counts) total += c;
    const std::size_t k = counts.size();
    if (total == 0.0) return std::vector<double>(k, 1.0 / static_cast<double>(k));
    std::vector<double> p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = counts[i] / total;
    // positivity floor, then renormalize
    double sum = 0.0;
    for (auto& v : p) {
        if (v < kPositivityFloor) v = kPositivityFloor;
        sum += v;
    }
    for (auto& v : p) v /= sum;
    return p;
}

}  // namespace

ParamVector mle(const String& x, SourceClass cls) {
    if (x.empty()) throw std::invalid_argument("mle: input string is empty");
    for (Symbol s : x)
        if (s >= cls.k) throw std::invalid_argument("mle: symbol out of alphabet range");
    if (cls.kind == ModelKind::memoryless) {
        std::vector<double> counts(cls.k, 0.0);
        for (Symbol s : x) counts[s] += 1.0;
        return ParamVector(cls, {normalize_counts(counts)});
    }
    if (x.size() < 2) throw std::invalid_argument("mle: Markov estimation needs length >= 2");
    std::vector<std::vector<double>> counts(cls.k, std::vector<double>(cls.k, 0.0));
    for (std::size_t i = 1; i < x.size(); ++i) counts[x[i - 1]][x[i]] += 1.0;
    std::vector<std::vector<double>> rows(cls.k);
    for (std::size_t r = 0; r < cls.k; ++r) rows[r] = normalize_counts(counts[r]);
    return ParamVector(cls, std::move(rows));
}

ParamVector jeffreys_sample(SourceClass cls, Rng& rng) {
    const std::size_t nrows = cls.kind == ModelKind::memoryless ? 1 : cls.k;
    std::vector<std::vector<double>> rows(nrows);
    for (auto& row : rows) row = rng.dirichlet_symmetric(0.5, cls.k);
    return ParamVector(cls, std::move(rows));
}

double log_fisher_integral_bits(SourceClass cls) {
    // memoryless: int over the simplex of prod theta_i^{-1/2}
    //           = Gamma(1/2)^k / Gamma(k/2), taken in log2.
    const double k = static_cast<double>(cls.k);
    const double per_row = (k / 2.0) * std::log2(M_PI) - lgamma_ln(k / 2.0) * kLog2E;
    return cls.kind == ModelKind::memoryless ? per_row : k * per_row;
}

}  // namespace sic
