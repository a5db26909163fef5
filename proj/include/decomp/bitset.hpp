#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace decomp {

// Fixed-capacity membership bitset over [0, n). The Monte Carlo inner loop
// leans on set() keeping a live popcount, so coverage checks are O(1).
class DynamicBitset {
public:
    DynamicBitset() = default;

    explicit DynamicBitset(std::size_t n)
        : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) {
        std::uint64_t& w = words_[i >> 6];
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        count_ += !(w & mask);
        w |= mask;
    }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const { return count_; }

    bool all() const { return count_ == size_; }

    void clear() {
        std::fill(words_.begin(), words_.end(), 0);
        count_ = 0;
    }

    friend bool operator==(const DynamicBitset& a, const DynamicBitset& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    std::size_t size_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace decomp
