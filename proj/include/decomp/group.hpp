#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace decomp {

enum class GroupBackend { dense_table, permutation };

enum class GroupDefect {
    parse,
    not_latin_square,
    no_identity,
    missing_inverse,
    not_associative,
    unsupported_order,
};

// Raised when a multiplication table fails to define a group; the witness
// indices identify the offending entry or triple.
class GroupError : public std::runtime_error {
public:
    GroupError(GroupDefect defect, std::string message,
               std::array<std::uint32_t, 3> witness = {0, 0, 0})
        : std::runtime_error(std::move(message)), defect(defect), witness(witness) {}

    GroupDefect defect;
    std::array<std::uint32_t, 3> witness;
};

// A finite group on element indices 0..n-1. Immutable after construction and
// safe to share across threads. Backed either by a dense Cayley table
// (n <= 16384) or, for large symmetric groups, by on-the-fly composition of
// Lehmer-unranked permutations.
class Group {
public:
    static constexpr std::uint32_t kDenseOrderLimit = 16384;

    std::uint32_t order() const { return order_; }
    std::uint32_t identity() const { return identity_; }
    GroupBackend backend() const { return backend_; }

    std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const {
        if (backend_ == GroupBackend::dense_table)
            return table_[std::size_t{a} * order_ + b];
        return perm_multiply(a, b);
    }

    std::uint32_t inverse(std::uint32_t g) const {
        if (backend_ == GroupBackend::dense_table) return inverse_[g];
        return perm_inverse(g);
    }

    // Raw table pointer for hot loops; null for the permutation backend.
    const std::uint32_t* table_data() const {
        return backend_ == GroupBackend::dense_table ? table_.data() : nullptr;
    }

    // Degree m when the group is S_m on the permutation backend, else 0.
    std::uint32_t symmetric_degree() const { return sym_degree_; }

    // Display label; diagnostics only, not part of equality semantics.
    std::string element_label(std::uint32_t g) const;

    friend Group build_cyclic(std::uint32_t m);
    friend Group build_dihedral(std::uint32_t m);
    friend Group build_symmetric(std::uint32_t m, GroupBackend backend);
    friend Group build_product(const Group& g, const Group& h);
    friend Group load_table(std::istream& in);

private:
    Group() = default;
    void derive_identity_and_inverses();  // dense backend; throws GroupError

    std::uint32_t order_ = 0;
    std::uint32_t identity_ = 0;
    GroupBackend backend_ = GroupBackend::dense_table;
    std::uint32_t sym_degree_ = 0;
    std::vector<std::uint32_t> table_;    // row-major g*h, dense only
    std::vector<std::uint32_t> inverse_;  // dense only
    std::vector<std::string> labels_;     // optional, dense only

    std::uint32_t perm_multiply(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t perm_inverse(std::uint32_t g) const;
};

// Cyclic group C_m: i * j = (i + j) mod m.
Group build_cyclic(std::uint32_t m);

// Dihedral group D_{2m} of order 2m with x^i at index i and y x^i at
// index m + i, multiplication per <x, y : x^m = y^2 = 1, y x y = x^-1>.
Group build_dihedral(std::uint32_t m);

// Symmetric group S_m with elements indexed by Lehmer rank. Dense table for
// m <= 7; permutation backend for 8 <= m <= 10.
Group build_symmetric(std::uint32_t m);
Group build_symmetric(std::uint32_t m, GroupBackend backend);

// Direct product with index pairing (a, b) -> a * |h| + b.
Group build_product(const Group& g, const Group& h);

// Parse the plain-text Cayley table format (line 1 = n, then n rows of n
// 0-based indices; entry at row g, column h is g*h) and fully validate it.
Group load_table(std::istream& in);
Group load_table_file(const std::string& path);

// Check the group axioms: Latin square, identity, inverses, associativity
// (exhaustive for n <= 256, randomized with >= 10 n^2 triples above).
// Throws GroupError with a witness on the first violation.
void validate_group(const Group& g);

}  // namespace decomp
