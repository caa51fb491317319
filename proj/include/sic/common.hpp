#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace sic {

// Symbols are indices into a finite alphabet of size k (2 <= k <= 65535).
using Symbol = std::uint16_t;
using String = std::vector<Symbol>;

constexpr double kLog2E = 1.4426950408889634074;  // log2(e)
constexpr double kLn2 = 0.6931471805599453094;

inline double infinite() { return std::numeric_limits<double>::infinity(); }

// The correlation hyperparameter t: a nonnegative integer or infinity.
struct HyperT {
    bool inf = false;
    std::uint64_t value = 0;

    static HyperT infinity() { return HyperT{true, 0}; }
    static HyperT finite(std::uint64_t v) { return HyperT{false, v}; }

    bool is_infinite() const { return inf; }
    bool is_zero() const { return !inf && value == 0; }
    double as_double() const { return inf ? infinite() : static_cast<double>(value); }

    friend bool operator==(const HyperT& a, const HyperT& b) {
        return a.inf == b.inf && (a.inf || a.value == b.value);
    }
};

}  // namespace sic
