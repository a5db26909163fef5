#include "decomp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <omp.h>

namespace decomp::oracle {

namespace {

int resolve_workers(int workers) {
    return workers > 0 ? workers : omp_get_max_threads();
}

void require_element(const Group& g, std::uint32_t x) {
    if (x >= g.order()) throw std::out_of_range("element index out of range");
}

// n^digits if it stays under the cap, else throws.
std::uint64_t checked_outcomes(std::uint32_t n, std::uint32_t digits,
                               std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < digits; ++i) {
        if (total > cap / n)
            throw std::domain_error("oracle: instance too large to enumerate");
        total *= n;
    }
    return total;
}

// Visits every base-n tuple whose first digit is `first`, in lexicographic
// order. `tuple` must have size >= 1 and tuple[0] == first on entry.
template <typename Visit>
void enumerate_suffix(std::uint32_t n, std::vector<std::uint32_t>& tuple,
                      Visit&& visit) {
    const std::size_t digits = tuple.size();
    std::fill(tuple.begin() + 1, tuple.end(), 0);
    for (;;) {
        visit(tuple);
        std::size_t pos = digits;
        while (pos > 1) {
            if (++tuple[pos - 1] < n) break;
            tuple[pos - 1] = 0;
            --pos;
        }
        if (pos == 1) return;
    }
}

// Marks the product set of a draw tuple in `covered` (values 0/1) and
// returns |S| = n - |covered set|. Raw nested loops over the table on
// purpose; this is the implementation that keeps the oracle independent of
// the Monte Carlo bitset path.
std::uint32_t miss_count_of_tuple(const Group& g, const std::vector<std::uint32_t>& tuple,
                                  std::uint32_t k, Variant variant,
                                  std::vector<std::uint8_t>& covered) {
    const std::uint32_t n = g.order();
    std::fill(covered.begin(), covered.end(), 0);
    if (variant == Variant::aa) {
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j)
                covered[g.multiply(tuple[i], tuple[j])] = 1;
    } else {
        const auto total = static_cast<std::uint32_t>(tuple.size());
        for (std::uint32_t i = 0; i < k; ++i) {
            for (std::uint32_t j = k; j < total; ++j) {
                covered[g.multiply(tuple[i], tuple[j])] = 1;
                if (variant == Variant::both)
                    covered[g.multiply(tuple[j], tuple[i])] = 1;
            }
        }
    }
    std::uint32_t hits = 0;
    for (std::uint32_t x = 0; x < n; ++x) hits += covered[x];
    return n - hits;
}

// Histogram of |S| over all draw tuples; shared core of exact_p and
// exact_miss_distribution. Parallel over the outermost draw coordinate.
std::vector<std::uint64_t> miss_histogram(const Group& g, std::uint32_t k,
                                          std::uint32_t m, Variant variant,
                                          int workers) {
    if (k < 1) throw std::domain_error("oracle: k must be >= 1");
    if (variant != Variant::aa && m < 1)
        throw std::domain_error("oracle: m must be >= 1");
    const std::uint32_t n = g.order();
    const std::uint32_t digits = variant == Variant::aa ? k : k + m;
    checked_outcomes(n, digits, kTupleCap);

    std::vector<std::uint64_t> histogram(n + 1, 0);
    const int nt = resolve_workers(workers);
#pragma omp parallel num_threads(nt) if (workers != 1)
    {
        std::vector<std::uint32_t> tuple(digits);
        std::vector<std::uint8_t> covered(n);
        std::vector<std::uint64_t> local(n + 1, 0);
#pragma omp for schedule(static)
        for (std::int64_t first = 0; first < static_cast<std::int64_t>(n); ++first) {
            tuple[0] = static_cast<std::uint32_t>(first);
            enumerate_suffix(n, tuple, [&](const std::vector<std::uint32_t>& t) {
                ++local[miss_count_of_tuple(g, t, k, variant, covered)];
            });
        }
#pragma omp critical(oracle_histogram_merge)
        for (std::uint32_t i = 0; i <= n; ++i) histogram[i] += local[i];
    }
    return histogram;
}

}  // namespace

Rational exact_single_mean(const Group& g, std::uint32_t x) {
    require_element(g, x);
    const std::uint32_t n = g.order();
    if (n > kSingleMeanOrderCap)
        throw std::domain_error("oracle: order too large for pair enumeration");
    std::uint64_t count = 0;
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            count += g.multiply(a, b) == x || g.multiply(b, a) == x;
    return make_rational(BigInt(count), BigInt(n) * n);
}

Rational exact_pair_mean(const Group& g, std::uint32_t x, std::uint32_t y,
                         SharedAxis axis) {
    require_element(g, x);
    require_element(g, y);
    const std::uint32_t n = g.order();
    if (n > kPairMeanOrderCap)
        throw std::domain_error("oracle: order too large for triple enumeration");
    // Triple count grouped by the shared draw g0: the b and b' (or a and a')
    // coordinates are enumerated independently given g0, so the sum of
    // per-coordinate counts multiplies out to the triple count.
    std::uint64_t triples = 0;
    for (std::uint32_t shared = 0; shared < n; ++shared) {
        std::uint64_t hits_x = 0, hits_y = 0;
        for (std::uint32_t other = 0; other < n; ++other) {
            const std::uint32_t ab = axis == SharedAxis::row
                                         ? g.multiply(shared, other)
                                         : g.multiply(other, shared);
            const std::uint32_t ba = axis == SharedAxis::row
                                         ? g.multiply(other, shared)
                                         : g.multiply(shared, other);
            hits_x += ab == x || ba == x;
            hits_y += ab == y || ba == y;
        }
        triples += hits_x * hits_y;
    }
    return make_rational(BigInt(triples), BigInt(n) * n * n);
}

Rational exact_p(const Group& g, std::uint32_t k, std::uint32_t m, Variant variant,
                 int workers) {
    const auto histogram = miss_histogram(g, k, m, variant, workers);
    std::uint64_t total = 0;
    for (std::uint64_t c : histogram) total += c;
    return make_rational(BigInt(histogram[0]), BigInt(total));
}

Rational ExactDistribution::probability_of(std::uint32_t value) const {
    const auto it = counts.find(value);
    return make_rational(BigInt(it == counts.end() ? 0 : it->second), BigInt(total));
}

Rational ExactDistribution::expectation() const {
    BigInt weighted = 0;
    for (const auto& [value, count] : counts) weighted += BigInt(value) * count;
    return make_rational(weighted, BigInt(total));
}

ExactDistribution exact_miss_distribution(const Group& g, std::uint32_t k,
                                          std::uint32_t m, Variant variant,
                                          int workers) {
    const auto histogram = miss_histogram(g, k, m, variant, workers);
    ExactDistribution dist;
    for (std::uint32_t value = 0; value < histogram.size(); ++value) {
        if (histogram[value] == 0) continue;
        dist.counts[value] = histogram[value];
        dist.total += histogram[value];
    }
    return dist;
}

std::vector<Rational> exact_miss_probabilities(const Group& g, std::uint32_t k,
                                               std::uint32_t m, Variant variant,
                                               int workers) {
    if (k < 1) throw std::domain_error("oracle: k must be >= 1");
    const std::uint32_t n = g.order();
    const int nt = resolve_workers(workers);

    if (variant == Variant::aa) {
        const std::uint64_t total = checked_outcomes(n, k, kTupleCap);
        std::vector<std::uint64_t> misses(n, 0);
#pragma omp parallel num_threads(nt) if (workers != 1)
        {
            std::vector<std::uint32_t> tuple(k);
            std::vector<std::uint8_t> covered(n);
            std::vector<std::uint64_t> local(n, 0);
#pragma omp for schedule(static)
            for (std::int64_t first = 0; first < static_cast<std::int64_t>(n); ++first) {
                tuple[0] = static_cast<std::uint32_t>(first);
                enumerate_suffix(n, tuple, [&](const std::vector<std::uint32_t>& t) {
                    std::fill(covered.begin(), covered.end(), 0);
                    for (std::uint32_t i = 0; i < k; ++i)
                        for (std::uint32_t j = 0; j < k; ++j)
                            covered[g.multiply(t[i], t[j])] = 1;
                    for (std::uint32_t x = 0; x < n; ++x)
                        local[x] += !covered[x];
                });
            }
#pragma omp critical(oracle_miss_probs_merge_aa)
            for (std::uint32_t x = 0; x < n; ++x) misses[x] += local[x];
        }
        std::vector<Rational> out;
        out.reserve(n);
        for (std::uint32_t x = 0; x < n; ++x)
            out.push_back(make_rational(BigInt(misses[x]), BigInt(total)));
        return out;
    }

    if (m < 1) throw std::domain_error("oracle: m must be >= 1");
    // Conditioned on the A-tuple, the b draws are independent, so
    // Pr[x in S | A] = (allowed(A, x) / n)^m where allowed counts the b
    // values producing neither ab = x nor ba = x for any drawn a.
    checked_outcomes(n, k, kTupleCap);
    checked_outcomes(n, m, std::uint64_t{1} << 56);  // keeps allowed^m in 64 bits

    std::vector<unsigned __int128> weighted(n, 0);
#pragma omp parallel num_threads(nt) if (workers != 1)
    {
        std::vector<std::uint32_t> tuple(k);
        std::vector<std::uint8_t> forbidden(n);
        std::vector<unsigned __int128> local(n, 0);
#pragma omp for schedule(static)
        for (std::int64_t first = 0; first < static_cast<std::int64_t>(n); ++first) {
            tuple[0] = static_cast<std::uint32_t>(first);
            enumerate_suffix(n, tuple, [&](const std::vector<std::uint32_t>& t) {
                for (std::uint32_t x = 0; x < n; ++x) {
                    std::fill(forbidden.begin(), forbidden.end(), 0);
                    for (std::uint32_t i = 0; i < k; ++i) {
                        const std::uint32_t a = t[i];
                        // b with ab = x, and for the two-sided event also
                        // b with ba = x.
                        forbidden[g.multiply(g.inverse(a), x)] = 1;
                        if (variant == Variant::both)
                            forbidden[g.multiply(x, g.inverse(a))] = 1;
                    }
                    std::uint32_t allowed = 0;
                    for (std::uint32_t b = 0; b < n; ++b) allowed += !forbidden[b];
                    std::uint64_t power = 1;
                    for (std::uint32_t j = 0; j < m; ++j) power *= allowed;
                    local[x] += power;
                }
            });
        }
#pragma omp critical(oracle_miss_probs_merge)
        for (std::uint32_t x = 0; x < n; ++x) weighted[x] += local[x];
    }

    const BigInt denom = pow(BigInt(n), k + m);
    std::vector<Rational> out;
    out.reserve(n);
    for (std::uint32_t x = 0; x < n; ++x) {
        const auto hi = static_cast<std::uint64_t>(weighted[x] >> 64);
        const auto lo = static_cast<std::uint64_t>(weighted[x]);
        BigInt num = BigInt(hi);
        num <<= 64;
        num += lo;
        out.push_back(make_rational(num, denom));
    }
    return out;
}

}  // namespace decomp::oracle
