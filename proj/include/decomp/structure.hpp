#pragma once

#include <cstdint>
#include <vector>

#include "decomp/group.hpp"
#include "decomp/rational.hpp"

namespace decomp {

// Centralizer sizes, conjugacy classes, and the center of a group, computed
// once and shared. Satisfies, by construction:
//   sum_x |C(x)| = n * R               (Burnside identity)
//   class_size(x) * |C(x)| = n         (orbit-stabilizer)
//   center_size = #{x : |C(x)| = n}
struct CentralizerProfile {
    std::uint32_t order = 0;
    std::vector<std::uint32_t> centralizer_sizes;  // |C(x)| per element
    std::vector<std::uint32_t> class_of;           // element -> class id
    std::vector<std::uint32_t> class_sizes;        // per class id
    std::uint32_t class_count = 0;                 // R(G)
    std::uint32_t center_size = 0;                 // |Z(G)|

    // Distinct centralizer sizes with multiplicities, ascending; this is
    // what the theta and Suen evaluations actually consume.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> size_histogram() const;
};

// Computes the profile. Dense backends use a direct O(n^2) commutation scan;
// the permutation backend of S_m derives |C(x)| from cycle types instead.
// workers: 0 = runtime default, 1 = serial reference, w > 1 = OpenMP teams.
CentralizerProfile profile(const Group& g, int workers = 0);

// Serial reference implementation of the dense scan, kept for testing the
// parallel path against.
CentralizerProfile profile_serial(const Group& g);

// Pr[ab = ba] for independent uniform a, b: sum_x |C(x)| / n^2 = R/n, exact.
Rational commute_probability(const CentralizerProfile& p);

}  // namespace decomp
