#include "sic/arith_coder.hpp"

#include <stdexcept>

namespace sic {

namespace {

constexpr std::uint64_t kHalf = std::uint64_t{1} << 63;
constexpr std::uint64_t kQuarter = std::uint64_t{1} << 62;
constexpr std::uint64_t kThreeQuarter = kHalf + kQuarter;
using u128 = unsigned __int128;

}  // namespace

void ArithmeticEncoder::encode(std::uint64_t cum_lo, std::uint64_t cum_hi,
                               std::uint64_t total) {
    if (!(cum_lo < cum_hi && cum_hi <= total))
        throw std::invalid_argument("ArithmeticEncoder: bad cumulative interval");
    const u128 span = static_cast<u128>(high_ - low_) + 1;
    high_ = low_ + static_cast<std::uint64_t>(span * cum_hi / total) - 1;
    low_ = low_ + static_cast<std::uint64_t>(span * cum_lo / total);
    for (;;) {
        if (high_ < kHalf) {
            emit(0);
        } else if (low_ >= kHalf) {
            emit(1);
            low_ -= kHalf;
            high_ -= kHalf;
        } else if (low_ >= kQuarter && high_ < kThreeQuarter) {
            ++pending_;
            low_ -= kQuarter;
            high_ -= kQuarter;
        } else {
            break;
        }
        low_ <<= 1;
        high_ = (high_ << 1) | 1;
    }
}

void ArithmeticEncoder::finish() {
    // Two disambiguation bits pin the final interval; trailing zero padding
    // then decodes to a value inside it.
    ++pending_;
    emit(low_ < kQuarter ? 0 : 1);
}

std::uint64_t ArithmeticDecoder::decode_target(std::uint64_t total) const {
    const u128 span = static_cast<u128>(high_ - low_) + 1;
    const u128 scaled = (static_cast<u128>(value_ - low_) + 1) * total - 1;
    const std::uint64_t target = static_cast<std::uint64_t>(scaled / span);
    return target < total ? target : total - 1;
}

void ArithmeticDecoder::consume(std::uint64_t cum_lo, std::uint64_t cum_hi,
                                std::uint64_t total) {
    const u128 span = static_cast<u128>(high_ - low_) + 1;
    high_ = low_ + static_cast<std::uint64_t>(span * cum_hi / total) - 1;
    low_ = low_ + static_cast<std::uint64_t>(span * cum_lo / total);
    for (;;) {
        if (high_ < kHalf) {
            // straddle nothing; renormalize below
        } else if (low_ >= kHalf) {
            low_ -= kHalf;
            high_ -= kHalf;
            value_ -= kHalf;
        } else if (low_ >= kQuarter && high_ < kThreeQuarter) {
            low_ -= kQuarter;
            high_ -= kQuarter;
            value_ -= kQuarter;
        } else {
            break;
        }
        low_ <<= 1;
        high_ = (high_ << 1) | 1;
        value_ = (value_ << 1) | static_cast<unsigned>(in_.next());
    }
}

}  // namespace sic
