#pragma once

#include <cstdint>
#include <vector>

#include "sic/common.hpp"
#include "sic/rng.hpp"

namespace sic {

enum class ModelKind { memoryless, markov1 };

// A parametric source family: memoryless or first-order Markov over a
// finite alphabet of size k.
struct SourceClass {
    ModelKind kind = ModelKind::memoryless;
    std::uint32_t k = 2;

    SourceClass() = default;
    SourceClass(ModelKind kind_, std::uint32_t k_);

    // Free-parameter count: k-1 (memoryless) or k(k-1) (Markov).
    std::uint64_t dimension() const;

    static SourceClass memoryless(std::uint32_t k) { return {ModelKind::memoryless, k}; }
    static SourceClass markov1(std::uint32_t k) { return {ModelKind::markov1, k}; }

    friend bool operator==(const SourceClass& a, const SourceClass& b) {
        return a.kind == b.kind && a.k == b.k;
    }
};

// A point in the parameter space: one probability row (memoryless) or a
// k x k row-stochastic transition matrix (Markov). Construction validates
// row sums (1 within 1e-12) and strict positivity of every entry, which is
// the ergodicity requirement the redundancy results assume.
class ParamVector {
public:
    ParamVector(SourceClass cls, std::vector<std::vector<double>> rows);

    static ParamVector memoryless(std::vector<double> probs);
    static ParamVector markov1(std::vector<std::vector<double>> rows);

    const SourceClass& source_class() const { return cls_; }
    std::uint32_t k() const { return cls_.k; }
    std::size_t row_count() const { return rows_.size(); }
    const std::vector<double>& row(std::size_t i) const { return rows_.at(i); }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

    // Unique stationary distribution (the single row for memoryless).
    std::vector<double> stationary() const;

    // Squared distance to another parameter vector in the free d-dimensional
    // parametrization (the last column of each row is determined by the rest
    // and is excluded, matching how the Fisher information is indexed).
    double squared_distance(const ParamVector& other) const;

private:
    SourceClass cls_;
    std::vector<std::vector<double>> rows_;
};

struct EntropyReport {
    double entropy_rate;  // bits per character
    double entropy_n;     // bits for a length-n string
};

// H^n(theta) and the entropy rate. Markov strings start from the
// stationary distribution: H^n = H(pi) + (n-1) * sum_i pi_i H(row_i).
EntropyReport entropy(const ParamVector& theta, std::uint64_t n);

// exact log2 mu_theta(x) for a concrete string (stationary start for Markov)
double log2_string_prob(const ParamVector& theta, const String& x);

String sample_string(const ParamVector& theta, std::size_t n, Rng& rng);

// Empirical frequencies / transition frequencies. Zero entries are floored
// at 1e-12 and the row renormalized; Markov rows never visited fall back to
// the uniform row.
ParamVector mle(const String& x, SourceClass cls);

// Jeffreys-prior draw: symmetric Dirichlet(1/2) per row.
ParamVector jeffreys_sample(SourceClass cls, Rng& rng);

// log2 of the Fisher-determinant integral over the parameter space:
//   memoryless: log2( Gamma(1/2)^k / Gamma(k/2) )
//   markov1:    k * [memoryless constant]   (independent-rows approximation)
double log_fisher_integral_bits(SourceClass cls);

}  // namespace sic
