#include "decomp/suen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace decomp {

namespace {

void require_element(const CentralizerProfile& p, std::uint32_t x) {
    if (x >= p.order) throw std::out_of_range("element index out of range");
}

// Suen bounds from Delta, Delta*, and the independent product.
void finish_bounds(double delta, double delta_star, double baseline, double& upper,
                   double& lower) {
    upper = std::exp(delta) * baseline;
    lower = std::max(0.0, (1.0 - delta_star * std::exp(delta)) * baseline);
}

// Closed-form Delta/Delta* for the grid graph with identical vertex means:
// half * k^2 * 2(k-1) ordered adjacent pairs, each contributing
// pair_term * (1 - p)^-(3(k-1)+1).
struct PointBounds {
    double delta, delta_star, baseline;
};

PointBounds point_bounds(double single, double pair, std::uint64_t k) {
    const auto counts = neighborhood_counts(k);
    const double adjacent_ordered = double(k) * double(k) * double(counts.degree);
    const double product_term =
        std::pow(1.0 - single, -double(counts.pair_closed));
    PointBounds b{};
    if (k >= 2) {
        b.delta = 0.5 * adjacent_ordered * pair * product_term;
        b.delta_star = 0.5 * adjacent_ordered * single * single * product_term;
    }
    b.baseline = std::pow(1.0 - single, double(k) * double(k));
    return b;
}

}  // namespace

Rational single_mean(const CentralizerProfile& p, std::uint32_t x) {
    require_element(p, x);
    const std::uint64_t n = p.order;
    const std::uint64_t c = p.centralizer_sizes[x];
    // (2/n)(1 - |C(x)|/(2n)) = (2n - |C(x)|) / n^2
    return make_rational(BigInt(2 * n - c), BigInt(n) * n);
}

std::uint32_t centralizer_intersection(const Group& g, std::uint32_t x, std::uint32_t y) {
    if (x >= g.order() || y >= g.order())
        throw std::out_of_range("element index out of range");
    std::uint32_t count = 0;
    for (std::uint32_t h = 0; h < g.order(); ++h)
        count += g.multiply(h, x) == g.multiply(x, h) &&
                 g.multiply(h, y) == g.multiply(y, h);
    return count;
}

std::uint32_t IntersectionCache::get(const Group& g, std::uint32_t x, std::uint32_t y) {
    const std::uint64_t key = (std::uint64_t{x} << 32) | y;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
    }
    const std::uint32_t value = centralizer_intersection(g, x, y);
    std::lock_guard<std::mutex> lock(mu_);
    return map_.try_emplace(key, value).first->second;
}

Rational pair_mean(const Group& g, const CentralizerProfile& p, std::uint32_t x,
                   std::uint32_t y, IntersectionCache* cache) {
    require_element(p, x);
    require_element(p, y);
    const std::uint64_t n = p.order;
    const std::uint64_t cx = p.centralizer_sizes[x];
    const std::uint64_t cy = p.centralizer_sizes[y];
    const std::uint64_t cxy =
        x == y ? cx : (cache ? cache->get(g, x, y) : centralizer_intersection(g, x, y));
    // (4/n^2)(1 - (cx+cy)/(2n) + cxy/(4n)) = (4n - 2(cx+cy) + cxy) / n^3
    return make_rational(BigInt(4 * n - 2 * (cx + cy) + cxy), BigInt(n) * n * n);
}

NeighborhoodCounts neighborhood_counts(std::uint64_t k) {
    if (k < 1) throw std::domain_error("neighborhood_counts: k must be >= 1");
    return {2 * (k - 1), 3 * (k - 1) + 1};
}

SuenReport suen_point(const CentralizerProfile& p, std::uint32_t x, std::uint64_t k) {
    require_element(p, x);
    if (p.order < 3) throw std::domain_error("suen_point requires n >= 3");
    if (k < 1) throw std::domain_error("suen_point: k must be >= 1");

    SuenReport r;
    r.k = k;
    r.single = single_mean(p, x);
    // E[I_v(x) I_u(x)]: the pair formula at y = x, where the intersection
    // is |C(x)| itself, so the profile suffices.
    const std::uint64_t n = p.order;
    const std::uint64_t c = p.centralizer_sizes[x];
    r.pair = make_rational(BigInt(4 * n - 3 * c), BigInt(n) * n * n);

    const PointBounds b = point_bounds(to_double(r.single), to_double(r.pair), k);
    r.delta = b.delta;
    r.delta_star = b.delta_star;
    r.baseline = b.baseline;
    finish_bounds(r.delta, r.delta_star, r.baseline, r.upper, r.lower);
    return r;
}

DependencyGraph::DependencyGraph(
    std::uint32_t vertex_count,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : vertex_count_(vertex_count), adjacency_(vertex_count) {
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("dependency graph: self-loop");
        if (u > v) std::swap(u, v);
        if (v >= vertex_count) throw std::out_of_range("dependency graph: vertex index");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

DependencyGraph DependencyGraph::grid(std::uint32_t k) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) {
            for (std::uint32_t m = j + 1; m < k; ++m)
                edges.emplace_back(i * k + j, i * k + m);  // same row
            for (std::uint32_t l = i + 1; l < k; ++l)
                edges.emplace_back(i * k + j, l * k + j);  // same column
        }
    return DependencyGraph(k * k, std::move(edges));
}

GenericSuenBounds suen_generic(const DependencyGraph& graph,
                               const std::vector<double>& means,
                               const std::vector<double>& edge_pair_means) {
    if (means.size() != graph.vertex_count())
        throw std::invalid_argument("suen_generic: means size mismatch");
    if (edge_pair_means.size() != graph.edges().size())
        throw std::invalid_argument("suen_generic: edge means size mismatch");
    for (double m : means)
        if (m >= 1.0) throw std::domain_error("suen_generic: mean must be < 1");

    GenericSuenBounds r;
    std::vector<char> mark(graph.vertex_count(), 0);
    for (std::size_t e = 0; e < graph.edges().size(); ++e) {
        const auto [u, v] = graph.edges()[e];
        // Product over w adjacent to u or v; u and v qualify themselves
        // since they are adjacent to each other.
        double product = 1.0;
        for (std::uint32_t w : graph.neighbors(u)) {
            product /= 1.0 - means[w];
            mark[w] = 1;
        }
        for (std::uint32_t w : graph.neighbors(v))
            if (!mark[w]) product /= 1.0 - means[w];
        for (std::uint32_t w : graph.neighbors(u)) mark[w] = 0;

        r.delta += edge_pair_means[e] * product;
        r.delta_star += means[u] * means[v] * product;
    }

    double baseline = 1.0;
    for (double m : means) baseline *= 1.0 - m;
    finish_bounds(r.delta, r.delta_star, baseline, r.upper, r.lower);
    return r;
}

double miss_expectation_upper(const CentralizerProfile& p, std::uint64_t k) {
    if (p.order < 3) throw std::domain_error("miss_expectation_upper requires n >= 3");
    if (k < 1) throw std::domain_error("miss_expectation_upper: k must be >= 1");
    const std::uint64_t n = p.order;
    double sum = 0.0;
    for (const auto& [size, count] : p.size_histogram()) {
        const double single = double(2 * n - size) / (double(n) * n);
        const double pair = double(4 * n - 3 * std::uint64_t{size}) /
                            (double(n) * n * n);
        const PointBounds b = point_bounds(single, pair, k);
        sum += double(count) * std::exp(b.delta) * b.baseline;
    }
    return sum;
}

}  // namespace decomp
