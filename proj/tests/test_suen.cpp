#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "catalog.hpp"
#include "decomp/oracle.hpp"
#include "decomp/rng.hpp"
#include "decomp/suen.hpp"

using namespace decomp;

TEST_CASE("single mean worked examples") {
    const auto c4 = profile(build_cyclic(4));
    CHECK(single_mean(c4, 2) == make_rational(1, 4));  // abelian: 1/n

    const auto s3 = profile(build_symmetric(3));
    CHECK(single_mean(s3, 1) == make_rational(5, 18));  // transposition
    CHECK(single_mean(s3, 0) == make_rational(1, 6));   // identity
}

TEST_CASE("pair mean worked examples") {
    const Group c5 = build_cyclic(5);
    const auto pc5 = profile(c5);
    CHECK(pair_mean(c5, pc5, 2, 2) == make_rational(1, 25));  // abelian x = y: 1/n^2

    const Group s3 = build_symmetric(3);
    const auto ps3 = profile(s3);
    CHECK(pair_mean(s3, ps3, 1, 1) == make_rational(1, 12));
    // transposition vs 3-cycle: C(x) n C(y) = {1}
    CHECK(centralizer_intersection(s3, 1, 3) == 1);
    CHECK(pair_mean(s3, ps3, 1, 3) == make_rational(5, 72));
}

TEST_CASE("pair mean is symmetric and matches both oracle axes") {
    const Group g = build_dihedral(4);
    const auto p = profile(g);
    IntersectionCache cache;
    for (std::uint32_t x = 0; x < g.order(); ++x)
        for (std::uint32_t y = 0; y < g.order(); ++y) {
            const Rational closed = pair_mean(g, p, x, y, &cache);
            CHECK(closed == pair_mean(g, p, y, x, &cache));
            CHECK(closed == oracle::exact_pair_mean(g, x, y, oracle::SharedAxis::row));
            CHECK(closed ==
                  oracle::exact_pair_mean(g, x, y, oracle::SharedAxis::column));
        }
}

TEST_CASE("single mean matches the oracle across a few groups") {
    for (const Group& g : {build_symmetric(4), build_dihedral(6), build_cyclic(11)}) {
        const auto p = profile(g);
        for (std::uint32_t x = 0; x < g.order(); ++x)
            CHECK(single_mean(p, x) == oracle::exact_single_mean(g, x));
    }
}

TEST_CASE("moment bounds: pair <= single <= 2/n with denominators dividing n^3") {
    const Group g = build_symmetric(3);
    const auto p = profile(g);
    const BigInt n3 = BigInt(g.order()) * g.order() * g.order();
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        const Rational s = single_mean(p, x);
        CHECK(s <= make_rational(2, g.order()));
        for (std::uint32_t y = 0; y < g.order(); ++y) {
            const Rational q = pair_mean(g, p, x, y);
            CHECK(q >= 0);
            CHECK(q <= s);
            CHECK(n3 % denominator(q) == 0);
        }
        CHECK(n3 % denominator(s) == 0);
    }
}

TEST_CASE("neighborhood counts") {
    CHECK(neighborhood_counts(1).degree == 0);
    CHECK(neighborhood_counts(1).pair_closed == 1);
    CHECK(neighborhood_counts(3).degree == 4);
    CHECK(neighborhood_counts(3).pair_closed == 7);
    CHECK(neighborhood_counts(5).degree == 8);
    CHECK(neighborhood_counts(5).pair_closed == 13);
}

TEST_CASE("neighborhood counts match the explicit grid graph") {
    for (std::uint32_t k : {2u, 3u, 5u}) {
        const auto graph = DependencyGraph::grid(k);
        const auto expected = neighborhood_counts(k);
        REQUIRE(graph.vertex_count() == k * k);
        for (std::uint32_t v = 0; v < graph.vertex_count(); ++v)
            CHECK(graph.neighbors(v).size() == expected.degree);
        // |{w : w ~ {v,u}}| over every edge, counted from adjacency
        for (const auto& [u, v] : graph.edges()) {
            std::set<std::uint32_t> closed;
            for (std::uint32_t w : graph.neighbors(u)) closed.insert(w);
            for (std::uint32_t w : graph.neighbors(v)) closed.insert(w);
            CHECK(closed.size() == expected.pair_closed);
        }
    }
}

TEST_CASE("suen_point equals suen_generic on the explicit grid") {
    for (const Group& g : {build_symmetric(3), build_dihedral(4)}) {
        const auto p = profile(g);
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            for (std::uint64_t k = 1; k <= 4; ++k) {
                const SuenReport point = suen_point(p, x, k);
                const auto graph = DependencyGraph::grid(static_cast<std::uint32_t>(k));
                const std::vector<double> means(k * k, to_double(point.single));
                const std::vector<double> pairs(graph.edges().size(),
                                                to_double(point.pair));
                const auto generic = suen_generic(graph, means, pairs);
                CHECK(point.delta ==
                      doctest::Approx(generic.delta).epsilon(1e-12));
                CHECK(point.delta_star ==
                      doctest::Approx(generic.delta_star).epsilon(1e-12));
                CHECK(point.upper == doctest::Approx(generic.upper).epsilon(1e-12));
                CHECK(point.lower == doctest::Approx(generic.lower).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("edgeless graph gives the exact independent product") {
    const DependencyGraph graph(3, {});
    const std::vector<double> means{0.1, 0.2, 0.25};
    const auto b = suen_generic(graph, means, {});
    CHECK(b.delta == 0.0);
    CHECK(b.delta_star == 0.0);
    CHECK(b.upper == doctest::Approx(0.9 * 0.8 * 0.75).epsilon(1e-15));
    CHECK(b.lower == doctest::Approx(0.9 * 0.8 * 0.75).epsilon(1e-15));
}

TEST_CASE("complete graph on 3 vertices, direct arithmetic") {
    const DependencyGraph graph(3, {{0, 1}, {0, 2}, {1, 2}});
    const std::vector<double> means(3, 0.1);
    const std::vector<double> pairs(3, 0.02);
    const auto b = suen_generic(graph, means, pairs);
    // every vertex is adjacent to each edge (the endpoints are adjacent to
    // each other), so each term carries (1 - 0.1)^-3
    const double expected_delta = 3 * 0.02 * std::pow(0.9, -3.0);
    const double expected_delta_star = 3 * 0.01 * std::pow(0.9, -3.0);
    CHECK(b.delta == doctest::Approx(expected_delta).epsilon(1e-12));
    CHECK(b.delta_star == doctest::Approx(expected_delta_star).epsilon(1e-12));
    CHECK(b.upper ==
          doctest::Approx(std::exp(b.delta) * std::pow(0.9, 3.0)).epsilon(1e-12));
}

TEST_CASE("suen_generic rejects a unit mean") {
    const DependencyGraph graph(2, {{0, 1}});
    CHECK_THROWS_AS(suen_generic(graph, {1.0, 0.5}, {0.1}), std::domain_error);
}

TEST_CASE("dependency graph construction rejects self-loops") {
    CHECK_THROWS_AS(DependencyGraph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("k = 1 has no adjacent pairs: bounds collapse to the exact product") {
    const auto p = profile(build_cyclic(8));
    const SuenReport r = suen_point(p, 3, 1);
    CHECK(r.delta == 0.0);
    CHECK(r.delta_star == 0.0);
    CHECK(r.upper == doctest::Approx(r.baseline));
    CHECK(r.lower == doctest::Approx(r.baseline));
    CHECK(r.baseline == doctest::Approx(1.0 - 1.0 / 8.0));
}

TEST_CASE("independent limit: delta = 0 collapses both bounds to the baseline") {
    // a graph with edges whose pair means equal the mean products still has
    // delta > 0; the edgeless case is the true independent limit
    const DependencyGraph graph(4, {});
    const std::vector<double> means(4, 0.125);
    const auto b = suen_generic(graph, means, {});
    const double baseline = std::pow(0.875, 4.0);
    CHECK(b.upper == doctest::Approx(baseline).epsilon(1e-15));
    CHECK(b.lower == doctest::Approx(baseline).epsilon(1e-15));
}

TEST_CASE("suen bounds bracket the exact miss probability on tiny instances") {
    for (const Group& g : {build_cyclic(8), build_dihedral(3)}) {
        const auto p = profile(g);
        for (std::uint64_t k : {2u, 3u, 4u}) {
            const auto exact = oracle::exact_miss_probabilities(
                g, static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k));
            for (std::uint32_t x = 0; x < g.order(); ++x) {
                const SuenReport r = suen_point(p, x, k);
                const double truth = to_double(exact[x]);
                CHECK(r.lower <= truth + 1e-12);
                CHECK(truth <= r.upper + 1e-12);
            }
        }
    }
}

TEST_CASE("delta caps from the closed-form bound") {
    // Delta, Delta* <= 4 k^3/n^2 exp(6k/(n-2)) on random groups and draws
    const auto catalog = testing::group_catalog();
    RandomStream stream(31337, 0, 0);
    int tested = 0;
    while (tested < 50) {
        const auto& [spec, g] =
            catalog[stream.uniform_below(static_cast<std::uint32_t>(catalog.size()))];
        if (g.order() < 3) continue;
        const auto p = profile(g);
        const std::uint32_t x = stream.uniform_below(g.order());
        const std::uint64_t k = 2 + stream.uniform_below(g.order() - 1);
        if (k > g.order()) continue;
        CAPTURE(spec);
        CAPTURE(x);
        CAPTURE(k);
        const SuenReport r = suen_point(p, x, k);
        const double n = g.order();
        const double cap = 4.0 * double(k) * double(k) * double(k) / (n * n) *
                           std::exp(6.0 * double(k) / (n - 2.0));
        CHECK(r.delta <= cap * (1.0 + 1e-12));
        CHECK(r.delta_star <= cap * (1.0 + 1e-12));
        ++tested;
    }
}

TEST_CASE("miss expectation bound: abelian scale check") {
    // With k^2 >= n log(n * 1e6), the baseline sum n (1 - 1/n)^(k^2) is at
    // most 1e-6; the e^Delta factor stays modest at this n.
    const auto p = profile(build_cyclic(2048));
    const double n = 2048.0;
    const auto k = static_cast<std::uint64_t>(
        std::ceil(std::sqrt(n * std::log(n * 1e6))));
    const double bound = miss_expectation_upper(p, k);
    const double baseline_sum = n * std::pow(1.0 - 1.0 / n, double(k) * double(k));
    CHECK(baseline_sum <= 1e-6);
    CHECK(bound >= baseline_sum);
    CHECK(bound <= 1e-4);
}

TEST_CASE("miss expectation bound exceeds the exact expectation") {
    const Group s3 = build_symmetric(3);
    const auto p = profile(s3);
    const auto misses = oracle::exact_miss_probabilities(s3, 6, 6);
    Rational exact_expectation(0);
    for (const Rational& q : misses) exact_expectation += q;
    const double bound = miss_expectation_upper(p, 6);
    CHECK(to_double(exact_expectation) <= bound);
    // k = 6 on n = 6 is far outside the sparse regime, so the bound is
    // astronomically loose there; the point is only that it stays an upper
    // bound. A small-k instance keeps it informative:
    const auto misses2 = oracle::exact_miss_probabilities(s3, 2, 2);
    Rational e2(0);
    for (const Rational& q : misses2) e2 += q;
    CHECK(to_double(e2) <= miss_expectation_upper(p, 2));
}

TEST_CASE("intersection cache returns scan values") {
    const Group g = build_symmetric(4);
    IntersectionCache cache;
    RandomStream stream(5, 0, 0);
    for (int i = 0; i < 50; ++i) {
        const std::uint32_t x = stream.uniform_below(g.order());
        const std::uint32_t y = stream.uniform_below(g.order());
        CHECK(cache.get(g, x, y) == centralizer_intersection(g, x, y));
        CHECK(cache.get(g, x, y) == centralizer_intersection(g, x, y));  // cached
    }
}
