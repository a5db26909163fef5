#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "decomp/rational.hpp"
#include "decomp/structure.hpp"

namespace decomp {

// Indicator model: draw a_1..a_k, b_1..b_k uniformly; for v = (i,j) in
// [k]x[k] let I_v(x) = 1{x = a_i b_j or x = b_j a_i}. The vertices sharing a
// row or column index form the dependency graph Gamma, and Suen's inequality
// turns the exact first/second moments below into bounds on
// Pr[x is missed by AB u BA].

// E[I_v(x)] = (2/n)(1 - |C(x)|/(2n)), exact.
Rational single_mean(const CentralizerProfile& p, std::uint32_t x);

// |C(x) n C(y)| by direct scan; used by pair_mean for x != y.
std::uint32_t centralizer_intersection(const Group& g, std::uint32_t x, std::uint32_t y);

// Thread-safe memo for centralizer intersections, keyed on the raw (x, y)
// pair (the value is a class function in each argument, but the raw key is
// cheap and safe).
class IntersectionCache {
public:
    std::uint32_t get(const Group& g, std::uint32_t x, std::uint32_t y);

private:
    std::mutex mu_;
    std::unordered_map<std::uint64_t, std::uint32_t> map_;
};

// E[I_v(x) I_u(y)] for adjacent v, u:
// (4/n^2)(1 - (|C(x)|+|C(y)|)/(2n) + |C(x) n C(y)|/(4n)), exact.
Rational pair_mean(const Group& g, const CentralizerProfile& p, std::uint32_t x,
                   std::uint32_t y, IntersectionCache* cache = nullptr);

// Gamma neighborhood sizes: degree of any vertex and |{w : w ~ {v,u}}| for
// adjacent v, u. The formulas are 2(k-1) and 3(k-1)+1.
struct NeighborhoodCounts {
    std::uint64_t degree;
    std::uint64_t pair_closed;
};
NeighborhoodCounts neighborhood_counts(std::uint64_t k);

// Suen bounds on Pr[x in S] for the k^2 indicators I_v(x).
struct SuenReport {
    double delta = 0;
    double delta_star = 0;
    double upper = 0;     // e^Delta * baseline
    double lower = 0;     // max(0, (1 - Delta* e^Delta) * baseline)
    double baseline = 0;  // (1 - E[I_v(x)])^(k^2)
    Rational single;      // E[I_v(x)]
    Rational pair;        // E[I_v(x) I_u(x)] for adjacent v, u
    std::uint64_t k = 0;
};

// Closed-form evaluation. k = 1 is the edgeless case: Delta = Delta* = 0 and
// the bounds coincide with the exact independent product.
SuenReport suen_point(const CentralizerProfile& p, std::uint32_t x, std::uint64_t k);

// A dependency graph: symmetric adjacency, no self-loops. Edges are stored
// once with u < v, in lexicographic order.
class DependencyGraph {
public:
    DependencyGraph(std::uint32_t vertex_count,
                    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

    // The graph Gamma on [k]x[k]: (i,j) ~ (l,m) iff exactly one coordinate
    // matches. Vertex (i,j) has index i*k + j.
    static DependencyGraph grid(std::uint32_t k);

    std::uint32_t vertex_count() const { return vertex_count_; }
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const {
        return edges_;
    }
    const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const {
        return adjacency_[v];
    }

private:
    std::uint32_t vertex_count_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
};

struct GenericSuenBounds {
    double delta = 0;
    double delta_star = 0;
    double upper = 0;
    double lower = 0;
};

// Direct summation of Delta and Delta* over an arbitrary dependency graph.
// means[i] = E[X_i] (must be < 1); edge_pair_means is aligned with edges().
GenericSuenBounds suen_generic(const DependencyGraph& graph,
                               const std::vector<double>& means,
                               const std::vector<double>& edge_pair_means);

// sum_x e^{Delta(x)} (1 - E[I_v(x)])^{k^2}: a rigorous upper bound on
// E[|S|], hence on Pr[AB u BA != G] by Markov. Grouped by distinct
// centralizer sizes. May overflow to +inf in regimes where the bound is
// vacuous; it is still a valid upper bound there.
double miss_expectation_upper(const CentralizerProfile& p, std::uint64_t k);

}  // namespace decomp
