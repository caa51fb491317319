#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sic/common.hpp"
#include "sic/redundancy.hpp"
#include "sic/sources.hpp"

namespace sic {

// Strictly lossless memory-assisted codec: adaptive arithmetic coding driven
// by the add-1/2 (Jeffreys mixture) sequential predictor. With encoder+decoder
// side information the side-string counts are folded in, discounted by
// m*(m,t)/m = t/(t+2m), the effective-length factor of the conditional
// redundancy formula. All prediction state is exact integer arithmetic, so
// bitstreams are identical across platforms.

struct SideInfo {
    String y;
    HyperT t = HyperT::infinity();
};

struct CodecOptions {
    SourceClass cls;
    Strategy strategy = Strategy::ucomp;
    std::optional<SideInfo> side;  // required for ucomp_ed
    bool side_checksum = true;     // stamp a hash of y into the container
    bool content_checksum = true;  // stamp a hash of x; decode verifies it
};

struct CodecRun {
    Strategy strategy;
    std::uint32_t k = 0;
    std::uint64_t n = 0;
    std::vector<std::uint8_t> container;  // framed bitstream
    std::uint64_t payload_bits = 0;       // exact arithmetic-code length l(x)
    double ideal_bits = 0.0;              // -log2 of the unquantized mixture probability
};

class CodecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

CodecRun encode(const String& x, const CodecOptions& opt);

// Decoding requires the same (class, strategy, side info) the encoder used;
// header fields and checksums are verified and any mismatch throws
// CodecError rather than returning corrupted output.
String decode(const std::vector<std::uint8_t>& container, const CodecOptions& opt);

struct RedundancyMeasurement {
    // Pointwise estimator mean of [ -log2 P_mix(x) + log2 mu_theta1(x) ]:
    // unbiased for E l - H^n with far lower variance than differencing the
    // two expectations separately.
    double mean_redundancy_bits = 0.0;
    double std_err_bits = 0.0;
    double mean_length_bits = 0.0;  // integer bitstream lengths, termination included
    double mean_ideal_bits = 0.0;
    double mean_entropy_bits = 0.0;
    double mean_naive_redundancy_bits = 0.0;  // mean_ideal - mean_entropy
    std::uint64_t trials = 0;
};

// Fresh (theta1 ~ Jeffreys, x ~ mu_theta1) draws per trial; for ucomp_ed the
// side string comes from the correlation chain given theta1, drawn from an
// independent substream so strategies share identical (theta1, x) sequences
// for a fixed seed.
RedundancyMeasurement measure_redundancy(SourceClass cls, std::uint64_t n,
                                         Strategy strategy, std::uint64_t m, HyperT t,
                                         std::uint64_t trials, std::uint64_t seed,
                                         unsigned threads = 1);

// FNV-1a 64 over the symbol stream (container checksums).
std::uint64_t string_checksum(const String& s);

}  // namespace sic
