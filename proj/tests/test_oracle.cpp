#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "catalog.hpp"
#include "decomp/oracle.hpp"

using namespace decomp;
using namespace decomp::oracle;

TEST_CASE("exact_p worked values") {
    CHECK(exact_p(build_cyclic(2), 2, 2) == make_rational(3, 4));
    CHECK(exact_p(build_cyclic(3), 2, 2) == make_rational(4, 9));
    CHECK(exact_p(build_symmetric(3), 3, 3) == make_rational(7, 12));
    CHECK(exact_p(build_symmetric(3), 2, 2) == make_rational(1, 9));
    // k = m = 1 on n >= 3: at most two products exist
    CHECK(exact_p(build_cyclic(5), 1, 1) == Rational(0));
    CHECK(exact_p(build_symmetric(3), 1, 1) == Rational(0));
}

TEST_CASE("abelian groups: both and ab-only variants coincide") {
    CHECK(exact_p(build_cyclic(3), 2, 2, Variant::ab_only) ==
          exact_p(build_cyclic(3), 2, 2, Variant::both));
    CHECK(exact_p(build_cyclic(4), 2, 3, Variant::ab_only) ==
          exact_p(build_cyclic(4), 2, 3, Variant::both));
}

TEST_CASE("aa variant ignores B draws") {
    CHECK(exact_p(build_cyclic(3), 2, 0, Variant::aa) == make_rational(2, 3));
    // {a1, a2} squares to all of C_3 iff a1 != a2: 6 of 9 tuples
}

TEST_CASE("exact_p is symmetric in the roles of A and B") {
    for (const Group& g : {build_symmetric(3), build_dihedral(3)}) {
        for (std::uint32_t k = 1; k <= 3; ++k)
            for (std::uint32_t m = 1; m <= 3; ++m)
                CHECK(exact_p(g, k, m) == exact_p(g, m, k));
    }
}

TEST_CASE("exact_p is nondecreasing in k and m") {
    const Group g = build_symmetric(3);
    Rational prev(0);
    for (std::uint32_t k = 1; k <= 4; ++k) {
        const Rational cur = exact_p(g, k, 3);
        CHECK(cur >= prev);
        prev = cur;
    }
    prev = Rational(0);
    for (std::uint32_t m = 1; m <= 4; ++m) {
        const Rational cur = exact_p(g, 3, m);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("miss distribution of S_3 at k = m = 2") {
    const auto dist = exact_miss_distribution(build_symmetric(3), 2, 2);
    CHECK(dist.total == 1296);
    CHECK(dist.counts.at(0) == 144);
    CHECK(dist.counts.at(1) == 360);
    CHECK(dist.counts.at(2) == 264);
    CHECK(dist.counts.at(3) == 360);
    CHECK(dist.counts.at(4) == 150);
    CHECK(dist.counts.at(5) == 18);
    CHECK(dist.counts.count(6) == 0);  // something is always covered
}

TEST_CASE("distribution value at zero equals exact_p") {
    for (const Group& g : {build_cyclic(4), build_dihedral(3)}) {
        for (std::uint32_t k = 1; k <= 3; ++k) {
            const auto dist = exact_miss_distribution(g, k, k);
            CHECK(dist.probability_of(0) == exact_p(g, k, k));
        }
    }
}

TEST_CASE("expectation from the distribution matches per-element linearity") {
    for (const Group& g : {build_symmetric(3), build_cyclic(5), build_dihedral(4)}) {
        for (std::uint32_t k = 1; k <= 2; ++k) {
            const auto dist = exact_miss_distribution(g, k, k);
            const auto per_element = exact_miss_probabilities(g, k, k);
            Rational linear(0);
            for (const Rational& q : per_element) linear += q;
            CHECK(dist.expectation() == linear);
        }
    }
}

TEST_CASE("conditional per-element misses match a direct tuple enumeration") {
    const Group g = build_symmetric(3);
    const std::uint32_t n = g.order();
    const std::uint32_t k = 2, m = 2;
    // direct route: enumerate all n^(k+m) tuples and tally per-element misses
    std::vector<std::uint64_t> missed(n, 0);
    std::uint64_t total = 0;
    for (std::uint32_t a1 = 0; a1 < n; ++a1)
        for (std::uint32_t a2 = 0; a2 < n; ++a2)
            for (std::uint32_t b1 = 0; b1 < n; ++b1)
                for (std::uint32_t b2 = 0; b2 < n; ++b2) {
                    ++total;
                    std::vector<bool> covered(n, false);
                    for (std::uint32_t a : {a1, a2})
                        for (std::uint32_t b : {b1, b2}) {
                            covered[g.multiply(a, b)] = true;
                            covered[g.multiply(b, a)] = true;
                        }
                    for (std::uint32_t x = 0; x < n; ++x)
                        missed[x] += !covered[x];
                }
    const auto conditional = exact_miss_probabilities(g, k, m);
    for (std::uint32_t x = 0; x < n; ++x)
        CHECK(conditional[x] == make_rational(BigInt(missed[x]), BigInt(total)));
}

TEST_CASE("per-element misses for the aa variant") {
    const Group g = build_cyclic(3);
    const auto misses = exact_miss_probabilities(g, 2, 0, Variant::aa);
    // A = {a1, a2}: AA covers everything iff a1 != a2 (6/9 tuples); when
    // a1 = a2 = a, AA = {2a} misses the other two elements.
    Rational total(0);
    for (const Rational& q : misses) total += q;
    CHECK(total == make_rational(6, 9));  // E[|S|] = 3 * (1/3) * (2/3)
}

TEST_CASE("oracle caps reject oversized instances") {
    CHECK_THROWS_AS(exact_p(build_cyclic(4), 8, 8), std::domain_error);
    CHECK_THROWS_AS(exact_single_mean(build_cyclic(1024), 5), std::domain_error);
    CHECK_THROWS_AS(
        exact_pair_mean(build_cyclic(256), 1, 2, SharedAxis::row),
        std::domain_error);
    CHECK_THROWS_AS(exact_miss_distribution(build_cyclic(11), 4, 4),
                    std::domain_error);  // 11^8 > 1e8 outcomes
}

TEST_CASE("single and pair mean enumerations on an asymmetric group") {
    const Group g = build_symmetric(3);
    CHECK(exact_single_mean(g, 1) == make_rational(10, 36));
    CHECK(exact_pair_mean(g, 1, 1, SharedAxis::row) == make_rational(18, 216));
    CHECK(exact_pair_mean(g, 1, 3, SharedAxis::row) ==
          exact_pair_mean(g, 1, 3, SharedAxis::column));
}

TEST_CASE("oracle agrees between serial and parallel enumeration") {
    const Group g = build_dihedral(3);
    CHECK(exact_p(g, 2, 2, Variant::both, 1) == exact_p(g, 2, 2, Variant::both, 4));
    const auto serial = exact_miss_distribution(g, 2, 2, Variant::both, 1);
    const auto parallel = exact_miss_distribution(g, 2, 2, Variant::both, 4);
    CHECK(serial.total == parallel.total);
    CHECK(serial.counts == parallel.counts);
    const auto misses_serial = exact_miss_probabilities(g, 2, 2, Variant::both, 1);
    const auto misses_parallel = exact_miss_probabilities(g, 2, 2, Variant::both, 4);
    CHECK(misses_serial == misses_parallel);
}
