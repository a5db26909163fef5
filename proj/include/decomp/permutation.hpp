#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace decomp {

// A permutation of [0, m) stored as its image array. Elements of the
// symmetric group are addressed by Lehmer rank, a bijection between
// permutations of degree m and [0, m!).
class Permutation {
public:
    explicit Permutation(std::uint32_t degree);  // identity
    explicit Permutation(std::vector<std::uint32_t> images);

    std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
    std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    // (p.compose(q))(i) = p(q(i)): apply q first.
    Permutation compose(const Permutation& rhs) const;
    Permutation inverse() const;

    std::uint64_t lehmer_rank() const;
    static Permutation from_lehmer_rank(std::uint32_t degree, std::uint64_t rank);

    // Number of elements commuting with this permutation inside S_m:
    // prod over cycle lengths l with multiplicity c_l of l^c_l * c_l!.
    std::uint64_t centralizer_order_in_symmetric() const;

    // Sorted cycle lengths, e.g. (1,2,0,3) -> [1, 3].
    std::vector<std::uint32_t> cycle_type() const;

    std::string to_cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint32_t> images_;
};

std::uint64_t factorial(std::uint32_t m);  // m <= 20

}  // namespace decomp
