#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "decomp/group.hpp"
#include "decomp/montecarlo.hpp"
#include "decomp/rational.hpp"

namespace decomp::oracle {

// Brute-force enumeration on tiny instances: the ground truth every
// closed-form moment and probability is tested against. Deliberately shares
// no product-set code with the Monte Carlo path (raw nested loops over the
// table, no bitset), so agreement between the two is evidence.

inline constexpr std::uint32_t kSingleMeanOrderCap = 512;
inline constexpr std::uint32_t kPairMeanOrderCap = 128;
inline constexpr std::uint64_t kTupleCap = 100'000'000;  // n^(k+m) outcomes

// Pr[ab = x or ba = x] over all n^2 pairs (a, b), exact.
Rational exact_single_mean(const Group& g, std::uint32_t x);

// Which index the adjacent pair of indicators shares.
enum class SharedAxis { row, column };

// E[I_v(x) I_u(y)] by enumerating the n^3 conditioning triples: for a shared
// row, triples (a, b, b') with [ab = x or ba = x] and [ab' = y or b'a = y];
// for a shared column, (b, a, a') symmetrically.
Rational exact_pair_mean(const Group& g, std::uint32_t x, std::uint32_t y,
                         SharedAxis axis);

// P(G, k) and friends by enumerating every draw tuple (k draws for A and m
// for B; the aa variant draws A only).
Rational exact_p(const Group& g, std::uint32_t k, std::uint32_t m,
                 Variant variant = Variant::both, int workers = 0);

// Full distribution of |S| = |G \ product set| over all draw tuples.
struct ExactDistribution {
    std::uint64_t total = 0;                      // number of outcomes
    std::map<std::uint32_t, std::uint64_t> counts;  // |S| value -> outcomes

    Rational probability_of(std::uint32_t value) const;
    Rational expectation() const;
};
ExactDistribution exact_miss_distribution(const Group& g, std::uint32_t k,
                                          std::uint32_t m,
                                          Variant variant = Variant::both,
                                          int workers = 0);

// Pr[x in S] for every element x, exact. For the two-set variants this
// conditions on the A-tuple and counts the allowed b draws per element, so
// it only enumerates n^k tuples; the aa variant enumerates A-tuples
// directly.
std::vector<Rational> exact_miss_probabilities(const Group& g, std::uint32_t k,
                                               std::uint32_t m,
                                               Variant variant = Variant::both,
                                               int workers = 0);

}  // namespace decomp::oracle
