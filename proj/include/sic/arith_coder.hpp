#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sic {

// MSB-first bit sink; the final partial byte is zero-padded, which matches
// the decoder's convention of reading zeros past the end of the payload.
class BitWriter {
public:
    void push(int bit) {
        cur_ = static_cast<std::uint8_t>((cur_ << 1) | (bit & 1));
        if (++fill_ == 8) {
            bytes_.push_back(cur_);
            cur_ = 0;
            fill_ = 0;
        }
        ++count_;
    }

    std::uint64_t bit_count() const { return count_; }

    std::vector<std::uint8_t> take_bytes() {
        std::vector<std::uint8_t> out = std::move(bytes_);
        if (fill_ > 0) out.push_back(static_cast<std::uint8_t>(cur_ << (8 - fill_)));
        bytes_.clear();
        cur_ = 0;
        fill_ = 0;
        count_ = 0;
        return out;
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint8_t cur_ = 0;
    int fill_ = 0;
    std::uint64_t count_ = 0;
};

// MSB-first bit source over a byte span; reads past the end yield zeros
// (the arithmetic decoder's value register legitimately looks ahead).
class BitReader {
public:
    BitReader(const std::uint8_t* data, std::size_t size) : data_(data), size_(size) {}

    int next() {
        if (byte_ >= size_) return 0;
        const int bit = (data_[byte_] >> (7 - fill_)) & 1;
        if (++fill_ == 8) {
            fill_ = 0;
            ++byte_;
        }
        return bit;
    }

private:
    const std::uint8_t* data_;
    std::size_t size_;
    std::size_t byte_ = 0;
    int fill_ = 0;
};

// 64-bit integer arithmetic coder (Witten-Neal-Cleary scaling with pending
// middle-interval bits). Cumulative frequencies are exact integers with
// total <= 2^32, so encoder and decoder state is identical bit for bit on
// every platform.
class ArithmeticEncoder {
public:
    explicit ArithmeticEncoder(BitWriter& out) : out_(out) {}

    // Encode a symbol occupying [cum_lo, cum_hi) of [0, total).
    void encode(std::uint64_t cum_lo, std::uint64_t cum_hi, std::uint64_t total);

    // Terminates the stream; emits at most 2 + pending bits.
    void finish();

private:
    void emit(int bit) {
        out_.push(bit);
        for (; pending_ > 0; --pending_) out_.push(bit ^ 1);
    }

    BitWriter& out_;
    std::uint64_t low_ = 0;
    std::uint64_t high_ = ~std::uint64_t{0};
    std::uint64_t pending_ = 0;
};

class ArithmeticDecoder {
public:
    explicit ArithmeticDecoder(BitReader& in) : in_(in) {
        for (int i = 0; i < 64; ++i) value_ = (value_ << 1) | static_cast<unsigned>(in_.next());
    }

    // Scaled position of the value register within [0, total); the caller
    // locates the symbol whose [cum_lo, cum_hi) contains it.
    std::uint64_t decode_target(std::uint64_t total) const;

    // Mirror of ArithmeticEncoder::encode for the located symbol.
    void consume(std::uint64_t cum_lo, std::uint64_t cum_hi, std::uint64_t total);

private:
    BitReader& in_;
    std::uint64_t low_ = 0;
    std::uint64_t high_ = ~std::uint64_t{0};
    std::uint64_t value_ = 0;
};

}  // namespace sic
