#include "sic/codec.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <thread>

#include "sic/arith_coder.hpp"
#include "sic/correlation.hpp"

namespace sic {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTotal = u64{1} << 32;  // quantized frequency precision
constexpr std::uint8_t kMagic[4] = {'S', 'I', 'C', '1'};
constexpr std::uint8_t kFlagSideChecksum = 0x80;
constexpr std::uint8_t kFlagContentChecksum = 0x40;

// Sequential mixture predictor over exact integer counts.
//
// Real-valued counts are 1/2 + w*side_count + adaptive_count with
// w = num/den; scaling by 2*den makes every count the integer
//   den + 2*num*side_count + 2*den*adaptive_count.
class MixturePredictor {
public:
    MixturePredictor(SourceClass cls, const String* side, HyperT t)
        : cls_(cls), k_(cls.k) {
        const std::size_t rows = cls.kind == ModelKind::memoryless ? 1 : cls.k + 1;
        u64 m = side ? side->size() : 0;
        if (side && m > 0 && !t.is_zero()) {
            if (t.is_infinite()) {
                num_ = 1;
                den_ = 1;
            } else {
                num_ = t.value;
                den_ = t.value + 2 * m;
                const u64 g = std::gcd(num_, den_);
                num_ /= g;
                den_ /= g;
            }
        } else {
            num_ = 0;
            den_ = 1;
        }
        units_.assign(rows, std::vector<u64>(k_, den_));
        totals_.assign(rows, static_cast<u128>(den_) * k_);
        if (side && num_ > 0) {
            if (cls.kind == ModelKind::memoryless) {
                for (Symbol s : *side) add_side(0, s);
            } else {
                for (std::size_t i = 1; i < side->size(); ++i)
                    add_side((*side)[i - 1], (*side)[i]);
            }
        }
        reset();
    }

    void reset() {
        context_ = cls_.kind == ModelKind::memoryless ? 0 : k_;
        ideal_bits_ = 0.0;
    }

    // Quantized cumulative frequencies for the active context; cums has k+1
    // entries with cums[k] == 2^32. Largest-remainder rounding, every symbol
    // keeps a nonzero frequency.
    void cumulative(std::vector<u64>& cums) {
        const auto& u = units_[context_];
        const u128 total = totals_[context_];
        cums.resize(k_ + 1);
        freq_.resize(k_);
        rem_.resize(k_);
        order_.resize(k_);
        u64 assigned = 0;
        for (std::uint32_t s = 0; s < k_; ++s) {
            const u128 scaled = static_cast<u128>(u[s]) << 32;
            freq_[s] = static_cast<u64>(scaled / total);
            rem_[s] = scaled % total;
            assigned += freq_[s];
        }
        u64 deficit = kTotal - assigned;
        if (deficit > 0) {
            std::iota(order_.begin(), order_.end(), std::uint32_t{0});
            std::sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
                if (rem_[a] != rem_[b]) return rem_[a] > rem_[b];
                return a < b;
            });
            for (u64 i = 0; i < deficit; ++i) ++freq_[order_[i]];
        }
        // never round a live symbol to zero; steal from the largest
        std::uint32_t zeros = 0, arg_max = 0;
        for (std::uint32_t s = 0; s < k_; ++s) {
            if (freq_[s] == 0) ++zeros;
            if (freq_[s] > freq_[arg_max]) arg_max = s;
        }
        if (zeros > 0) {
            freq_[arg_max] -= zeros;
            for (std::uint32_t s = 0; s < k_; ++s)
                if (freq_[s] == 0) freq_[s] = 1;
        }
        cums[0] = 0;
        for (std::uint32_t s = 0; s < k_; ++s) cums[s + 1] = cums[s] + freq_[s];
    }

    // Advance on the coded symbol; accumulates the exact mixture length.
    void observe(Symbol s) {
        auto& u = units_[context_];
        const u128 total = totals_[context_];
        ideal_bits_ -= std::log2(static_cast<double>(static_cast<long double>(u[s]) /
                                                     static_cast<long double>(total)));
        u[s] += 2 * den_;
        totals_[context_] += 2 * den_;
        if (cls_.kind == ModelKind::markov1) context_ = s;
    }

    double ideal_bits() const { return ideal_bits_; }

private:
    void add_side(std::size_t row, Symbol s) {
        units_[row][s] += 2 * num_;
        totals_[row] += 2 * num_;
    }

    SourceClass cls_;
    std::uint32_t k_;
    u64 num_ = 0, den_ = 1;
    std::vector<std::vector<u64>> units_;
    std::vector<u128> totals_;
    std::size_t context_ = 0;
    double ideal_bits_ = 0.0;
    // scratch
    std::vector<u64> freq_;
    std::vector<u128> rem_;
    std::vector<std::uint32_t> order_;
};

void put_u16(std::vector<std::uint8_t>& v, std::uint16_t x) {
    v.push_back(static_cast<std::uint8_t>(x >> 8));
    v.push_back(static_cast<std::uint8_t>(x));
}

void put_u64(std::vector<std::uint8_t>& v, u64 x) {
    for (int i = 7; i >= 0; --i) v.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}

u64 get_u64(const std::uint8_t* p) {
    u64 x = 0;
    for (int i = 0; i < 8; ++i) x = (x << 8) | p[i];
    return x;
}

void validate_options(const CodecOptions& opt) {
    if (opt.strategy == Strategy::ucomp_ed) {
        if (!opt.side)
            throw std::invalid_argument("codec: ucomp_ed requires side information (y, t)");
        for (Symbol s : opt.side->y)
            if (s >= opt.cls.k)
                throw std::invalid_argument("codec: side-info symbol outside alphabet");
    }
}

// Strategies other than ucomp_ed do not feed side counts into the
// predictor: encoder-only or decoder-only side information provably buys
// nothing for strictly lossless coding, so they share Ucomp's code lengths.
const String* predictor_side(const CodecOptions& opt) {
    if (opt.strategy != Strategy::ucomp_ed || !opt.side) return nullptr;
    return &opt.side->y;
}

HyperT predictor_t(const CodecOptions& opt) {
    return opt.side ? opt.side->t : HyperT::finite(0);
}

}  // namespace

std::uint64_t string_checksum(const String& s) {
    u64 h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint8_t b) {
        h ^= b;
        h *= 0x100000001b3ULL;
    };
    for (Symbol v : s) {
        mix(static_cast<std::uint8_t>(v & 0xff));
        mix(static_cast<std::uint8_t>(v >> 8));
    }
    return h;
}

CodecRun encode(const String& x, const CodecOptions& opt) {
    validate_options(opt);
    for (Symbol s : x)
        if (s >= opt.cls.k)
            throw std::invalid_argument("codec: symbol outside the declared alphabet");
    if (x.size() > (std::size_t{1} << 26) ||
        (opt.side && opt.side->y.size() > (std::size_t{1} << 26)))
        throw std::invalid_argument("codec: string length limited to 2^26 characters");

    CodecRun run;
    run.strategy = opt.strategy;
    run.k = opt.cls.k;
    run.n = x.size();

    std::uint8_t flags = static_cast<std::uint8_t>(opt.strategy);
    if (opt.side_checksum && opt.side) flags |= kFlagSideChecksum;
    if (opt.content_checksum) flags |= kFlagContentChecksum;

    auto& c = run.container;
    c.insert(c.end(), kMagic, kMagic + 4);
    put_u16(c, static_cast<std::uint16_t>(opt.cls.k));
    put_u64(c, x.size());
    c.push_back(flags);
    if (flags & kFlagSideChecksum) put_u64(c, string_checksum(opt.side->y));
    if (flags & kFlagContentChecksum) put_u64(c, string_checksum(x));

    if (!x.empty()) {
        MixturePredictor pred(opt.cls, predictor_side(opt), predictor_t(opt));
        BitWriter bits;
        ArithmeticEncoder enc(bits);
        std::vector<u64> cums;
        for (Symbol s : x) {
            pred.cumulative(cums);
            enc.encode(cums[s], cums[s + 1], kTotal);
            pred.observe(s);
        }
        enc.finish();
        run.payload_bits = bits.bit_count();
        run.ideal_bits = pred.ideal_bits();
        const auto payload = bits.take_bytes();
        c.insert(c.end(), payload.begin(), payload.end());
    }
    return run;
}

String decode(const std::vector<std::uint8_t>& container, const CodecOptions& opt) {
    validate_options(opt);
    std::size_t off = 0;
    auto need = [&](std::size_t bytes) {
        if (container.size() - off < bytes)
            throw CodecError("codec: container truncated inside the header");
    };
    need(15);
    if (std::memcmp(container.data(), kMagic, 4) != 0)
        throw CodecError("codec: bad magic bytes");
    off = 4;
    const std::uint32_t k = (static_cast<std::uint32_t>(container[off]) << 8) | container[off + 1];
    off += 2;
    const u64 n = get_u64(container.data() + off);
    off += 8;
    const std::uint8_t flags = container[off++];
    const auto strategy = static_cast<Strategy>(flags & 0x03);

    if (k != opt.cls.k) throw CodecError("codec: container alphabet size differs");
    if (strategy != opt.strategy)
        throw CodecError("codec: container strategy differs from the decoder's");

    u64 side_sum = 0;
    bool have_side_sum = false;
    if (flags & kFlagSideChecksum) {
        need(8);
        side_sum = get_u64(container.data() + off);
        off += 8;
        have_side_sum = true;
    }
    u64 content_sum = 0;
    bool have_content_sum = false;
    if (flags & kFlagContentChecksum) {
        need(8);
        content_sum = get_u64(container.data() + off);
        off += 8;
        have_content_sum = true;
    }
    if (have_side_sum && opt.side && string_checksum(opt.side->y) != side_sum)
        throw CodecError("codec: side-information checksum mismatch (wrong y at decoder)");

    String x;
    x.reserve(n);
    if (n > 0) {
        MixturePredictor pred(opt.cls, predictor_side(opt), predictor_t(opt));
        BitReader bits(container.data() + off, container.size() - off);
        ArithmeticDecoder dec(bits);
        std::vector<u64> cums;
        for (u64 i = 0; i < n; ++i) {
            pred.cumulative(cums);
            const u64 target = dec.decode_target(kTotal);
            const auto it = std::upper_bound(cums.begin() + 1, cums.end(), target);
            const auto s = static_cast<Symbol>(std::distance(cums.begin() + 1, it));
            dec.consume(cums[s], cums[s + 1], kTotal);
            pred.observe(s);
            x.push_back(s);
        }
    }
    if (have_content_sum && string_checksum(x) != content_sum)
        throw CodecError(
            "codec: content checksum mismatch (truncated or corrupt bitstream, or wrong side "
            "information)");
    return x;
}

RedundancyMeasurement measure_redundancy(SourceClass cls, std::uint64_t n,
                                         Strategy strategy, std::uint64_t m, HyperT t,
                                         std::uint64_t trials, std::uint64_t seed,
                                         unsigned threads) {
    if (trials < 30) throw std::invalid_argument("measure_redundancy: trials must be >= 30");
    if (threads == 0) threads = 1;

    struct Acc {
        double red = 0, red2 = 0, bits = 0, ideal = 0, ent = 0;
    };
    std::vector<Acc> acc(threads);

    auto worker = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        CodecOptions opt{cls, strategy, std::nullopt, true, true};
        for (std::uint64_t i = lo; i < hi; ++i) {
            Rng rng_main = Rng::substream(seed, 1, i);
            Rng rng_side = Rng::substream(seed, 2, i);
            const ParamVector theta1 = jeffreys_sample(cls, rng_main);
            const String x = sample_string(theta1, n, rng_main);
            if (strategy == Strategy::ucomp_ed) {
                const CorrelatedPair pair = sample_pair_given(theta1, t, rng_side);
                opt.side = SideInfo{sample_string(pair.theta2, m, rng_side), t};
            }
            const CodecRun run = encode(x, opt);
            const double r = run.ideal_bits + log2_string_prob(theta1, x);
            acc[w].red += r;
            acc[w].red2 += r * r;
            acc[w].bits += static_cast<double>(run.payload_bits);
            acc[w].ideal += run.ideal_bits;
            acc[w].ent += entropy(theta1, n).entropy_n;
        }
    };

    if (threads == 1) {
        worker(0, 0, trials);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (trials + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, trials);
            const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, trials);
            pool.emplace_back(worker, w, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    Acc total;
    for (const auto& a : acc) {
        total.red += a.red;
        total.red2 += a.red2;
        total.bits += a.bits;
        total.ideal += a.ideal;
        total.ent += a.ent;
    }
    const double nt = static_cast<double>(trials);
    RedundancyMeasurement out;
    out.trials = trials;
    out.mean_redundancy_bits = total.red / nt;
    const double var = std::max(0.0, total.red2 / nt - out.mean_redundancy_bits *
                                                           out.mean_redundancy_bits);
    out.std_err_bits = std::sqrt(var / nt);
    out.mean_length_bits = total.bits / nt;
    out.mean_ideal_bits = total.ideal / nt;
    out.mean_entropy_bits = total.ent / nt;
    out.mean_naive_redundancy_bits = out.mean_ideal_bits - out.mean_entropy_bits;
    return out;
}

}  // namespace sic
