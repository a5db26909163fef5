#include "decomp/structure.hpp"

#include <algorithm>
#include <map>

#include <omp.h>

#include "decomp/permutation.hpp"

namespace decomp {

namespace {

int resolve_workers(int workers) {
    return workers > 0 ? workers : omp_get_max_threads();
}

// Conjugacy classes as orbits of x -> h x h^-1, plus the derived fields.
// Assumes centralizer_sizes is already filled.
void fill_classes_dense(const Group& g, CentralizerProfile& p) {
    const std::uint32_t n = g.order();
    p.class_of.assign(n, n);
    p.class_sizes.clear();
    for (std::uint32_t x = 0; x < n; ++x) {
        if (p.class_of[x] != n) continue;
        const auto id = static_cast<std::uint32_t>(p.class_sizes.size());
        std::uint32_t size = 0;
        for (std::uint32_t h = 0; h < n; ++h) {
            const std::uint32_t y = g.multiply(g.multiply(h, x), g.inverse(h));
            if (p.class_of[y] == n) {
                p.class_of[y] = id;
                ++size;
            }
        }
        p.class_sizes.push_back(size);
    }
    p.class_count = static_cast<std::uint32_t>(p.class_sizes.size());
}

CentralizerProfile profile_dense(const Group& g, int workers) {
    const std::uint32_t n = g.order();
    CentralizerProfile p;
    p.order = n;
    p.centralizer_sizes.assign(n, 0);

    if (workers == 1) {
        for (std::uint32_t x = 0; x < n; ++x) {
            std::uint32_t c = 0;
            for (std::uint32_t h = 0; h < n; ++h)
                c += g.multiply(h, x) == g.multiply(x, h);
            p.centralizer_sizes[x] = c;
        }
    } else {
        const int nt = resolve_workers(workers);
#pragma omp parallel for schedule(static) num_threads(nt)
        for (std::int64_t x = 0; x < static_cast<std::int64_t>(n); ++x) {
            const auto xu = static_cast<std::uint32_t>(x);
            std::uint32_t c = 0;
            for (std::uint32_t h = 0; h < n; ++h)
                c += g.multiply(h, xu) == g.multiply(xu, h);
            p.centralizer_sizes[xu] = c;
        }
    }

    fill_classes_dense(g, p);
    p.center_size = static_cast<std::uint32_t>(
        std::count(p.centralizer_sizes.begin(), p.centralizer_sizes.end(), n));
    return p;
}

// For S_m on the permutation backend the O(n^2) scan is out of reach;
// |C(x)| follows from the cycle type and classes are the cycle types.
// Class ids are assigned by first occurrence in element order, so the
// result does not depend on the worker count.
CentralizerProfile profile_symmetric(const Group& g, int workers) {
    const std::uint32_t n = g.order();
    const std::uint32_t m = g.symmetric_degree();
    CentralizerProfile p;
    p.order = n;
    p.centralizer_sizes.assign(n, 0);
    p.class_of.assign(n, 0);

    // Cycle type packed into 4 bits per cycle length (m <= 10).
    std::vector<std::uint64_t> type_key(n);
    const int nt = resolve_workers(workers);
#pragma omp parallel for schedule(static) num_threads(nt) if (workers != 1)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(n); ++r) {
        const auto perm = Permutation::from_lehmer_rank(m, static_cast<std::uint64_t>(r));
        std::uint64_t key = 0;
        for (std::uint32_t len : perm.cycle_type()) key = (key << 4) | len;
        type_key[r] = key;
        p.centralizer_sizes[r] =
            static_cast<std::uint32_t>(perm.centralizer_order_in_symmetric());
    }

    std::map<std::uint64_t, std::uint32_t> type_ids;
    for (std::uint32_t r = 0; r < n; ++r) {
        auto [it, inserted] =
            type_ids.try_emplace(type_key[r], static_cast<std::uint32_t>(type_ids.size()));
        if (inserted) p.class_sizes.push_back(0);
        p.class_of[r] = it->second;
        ++p.class_sizes[it->second];
    }
    p.class_count = static_cast<std::uint32_t>(p.class_sizes.size());
    p.center_size = static_cast<std::uint32_t>(
        std::count(p.centralizer_sizes.begin(), p.centralizer_sizes.end(), n));
    return p;
}

}  // namespace

std::vector<std::pair<std::uint32_t, std::uint32_t>>
CentralizerProfile::size_histogram() const {
    std::map<std::uint32_t, std::uint32_t> hist;
    for (std::uint32_t c : centralizer_sizes) ++hist[c];
    return {hist.begin(), hist.end()};
}

CentralizerProfile profile(const Group& g, int workers) {
    if (g.backend() == GroupBackend::permutation) return profile_symmetric(g, workers);
    return profile_dense(g, workers);
}

CentralizerProfile profile_serial(const Group& g) { return profile(g, 1); }

Rational commute_probability(const CentralizerProfile& p) {
    std::uint64_t total = 0;
    for (std::uint32_t c : p.centralizer_sizes) total += c;
    return make_rational(BigInt(total), BigInt(p.order) * p.order);
}

}  // namespace decomp
