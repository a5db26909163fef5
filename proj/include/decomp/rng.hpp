#pragma once

#include <array>
#include <cstdint>

namespace decomp {

// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3", SC 2011). A block is a pure function of
// (counter, key), which is what makes per-trial streams reproducible
// independently of scheduling and worker count.
namespace philox {

constexpr std::uint32_t kMult0 = 0xD2511F53;
constexpr std::uint32_t kMult1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline Counter block(Counter c, Key k) {
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = std::uint64_t{kMult0} * c[0];
        const std::uint64_t p1 = std::uint64_t{kMult1} * c[2];
        c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0],
             static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1],
             static_cast<std::uint32_t>(p0)};
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return c;
}

}  // namespace philox

// One named random stream, keyed by a 64-bit seed plus two context words
// (e.g. the sweep's k and the trial index). The counter layout reserves
// word 0 for the in-stream block counter, so streams with distinct
// (seed, context_a mod 2^32, context_b) never overlap.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t context_a, std::uint64_t context_b)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          base_{0,
                static_cast<std::uint32_t>(context_a),
                static_cast<std::uint32_t>(context_b),
                static_cast<std::uint32_t>(context_b >> 32)} {}

    std::uint32_t next_u32() {
        if (pos_ == 4) {
            philox::Counter c = base_;
            c[0] = block_++;
            buf_ = philox::block(c, key_);
            pos_ = 0;
        }
        return buf_[pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        return (std::uint64_t{next_u32()} << 32) | lo;
    }

    // Uniform draw from [0, n) via rejection, so there is no modulo bias.
    std::uint32_t uniform_below(std::uint32_t n) {
        const std::uint64_t span = std::uint64_t{1} << 32;
        const std::uint64_t limit = span - span % n;
        for (;;) {
            const std::uint32_t u = next_u32();
            if (u < limit) return u % n;
        }
    }

private:
    philox::Key key_;
    philox::Counter base_;
    philox::Counter buf_{};
    std::uint32_t block_ = 0;
    int pos_ = 4;
};

}  // namespace decomp
