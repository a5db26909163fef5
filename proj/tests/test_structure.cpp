#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "catalog.hpp"
#include "decomp/rng.hpp"
#include "decomp/structure.hpp"

using namespace decomp;

TEST_CASE("cyclic profiles are fully central") {
    for (std::uint32_t m : {3u, 5u, 12u, 64u}) {
        const auto p = profile(build_cyclic(m));
        CHECK(p.class_count == m);
        CHECK(p.center_size == m);
        for (std::uint32_t c : p.centralizer_sizes) CHECK(c == m);
        for (std::uint32_t s : p.class_sizes) CHECK(s == 1);
    }
}

TEST_CASE("S_3 profile") {
    const auto p = profile(build_symmetric(3));
    CHECK(p.class_count == 3);
    CHECK(p.center_size == 1);
    // identity: 6; transpositions (ranks 1, 2, 5): 2; 3-cycles (3, 4): 3
    CHECK(p.centralizer_sizes == std::vector<std::uint32_t>{6, 2, 2, 3, 3, 2});
}

TEST_CASE("D_8 profile") {
    const auto p = profile(build_dihedral(4));
    CHECK(p.class_count == 5);
    CHECK(p.center_size == 2);
    std::multiset<std::uint32_t> sizes(p.centralizer_sizes.begin(),
                                       p.centralizer_sizes.end());
    CHECK(sizes == std::multiset<std::uint32_t>{8, 8, 4, 4, 4, 4, 4, 4});
    // the reflections y x^i commute exactly with {1, x^{m/2}, y x^i, y x^{i+m/2}}
    for (std::uint32_t i = 4; i < 8; ++i) CHECK(p.centralizer_sizes[i] == 4);
}

TEST_CASE("Burnside and orbit-stabilizer identities hold exactly") {
    for (const auto& [spec, g] : testing::group_catalog()) {
        CAPTURE(spec);
        const auto p = profile(g);
        std::uint64_t total = 0;
        for (std::uint32_t c : p.centralizer_sizes) total += c;
        CHECK(total == std::uint64_t{p.order} * p.class_count);
        for (std::uint32_t x = 0; x < p.order; ++x)
            CHECK(std::uint64_t{p.class_sizes[p.class_of[x]]} *
                      p.centralizer_sizes[x] ==
                  p.order);
        CHECK(p.center_size ==
              std::count(p.centralizer_sizes.begin(), p.centralizer_sizes.end(),
                         p.order));
        std::uint64_t class_total = 0;
        for (std::uint32_t s : p.class_sizes) class_total += s;
        CHECK(class_total == p.order);
    }
}

TEST_CASE("commute probability is R/n exactly") {
    for (const auto& [spec, g] : testing::group_catalog()) {
        CAPTURE(spec);
        const auto p = profile(g);
        CHECK(commute_probability(p) ==
              make_rational(BigInt(p.class_count), BigInt(p.order)));
    }
    CHECK(commute_probability(profile(build_cyclic(9))) == Rational(1));
    CHECK(commute_probability(profile(build_symmetric(3))) == make_rational(1, 2));
    CHECK(commute_probability(profile(build_dihedral(4))) == make_rational(5, 8));
}

TEST_CASE("commute probability equals the pair-enumeration count") {
    for (const Group& g : {build_symmetric(3), build_dihedral(4), build_cyclic(7)}) {
        std::uint64_t commuting = 0;
        for (std::uint32_t a = 0; a < g.order(); ++a)
            for (std::uint32_t b = 0; b < g.order(); ++b)
                commuting += g.multiply(a, b) == g.multiply(b, a);
        const auto p = profile(g);
        CHECK(commute_probability(p) ==
              make_rational(BigInt(commuting), BigInt(g.order()) * g.order()));
    }
}

TEST_CASE("conjugation by a fixed element permutes each class onto itself") {
    for (const Group& g : {build_dihedral(8), build_symmetric(4),
                           build_product(build_cyclic(3), build_symmetric(3))}) {
        const auto p = profile(g);
        RandomStream stream(777, g.order(), 0);
        for (int rep = 0; rep < 100; ++rep) {
            const std::uint32_t h = stream.uniform_below(g.order());
            const std::uint32_t h_inv = g.inverse(h);
            for (std::uint32_t x = 0; x < g.order(); ++x) {
                const std::uint32_t y = g.multiply(g.multiply(h, x), h_inv);
                CHECK(p.class_of[y] == p.class_of[x]);
            }
        }
    }
}

TEST_CASE("cycle-type centralizers match the scan for small symmetric groups") {
    for (std::uint32_t m : {3u, 4u, 5u}) {
        const auto scan = profile(build_symmetric(m, GroupBackend::dense_table));
        const auto formula = profile(build_symmetric(m, GroupBackend::permutation));
        CHECK(scan.centralizer_sizes == formula.centralizer_sizes);
        CHECK(scan.class_count == formula.class_count);
        CHECK(scan.center_size == formula.center_size);
        // same partition of elements into classes
        for (std::uint32_t x = 0; x < scan.order; ++x)
            CHECK(scan.class_sizes[scan.class_of[x]] ==
                  formula.class_sizes[formula.class_of[x]]);
    }
}

TEST_CASE("S_8 profile via cycle types") {
    const auto p = profile(build_symmetric(8));
    CHECK(p.order == 40320);
    CHECK(p.class_count == 22);  // partitions of 8
    CHECK(p.center_size == 1);
    std::uint64_t total = 0;
    for (std::uint32_t c : p.centralizer_sizes) total += c;
    CHECK(total == std::uint64_t{40320} * 22);
}

TEST_CASE("serial and parallel profiles agree") {
    for (const Group& g : {build_dihedral(16), build_symmetric(4)}) {
        const auto serial = profile_serial(g);
        const auto parallel = profile(g, 4);
        CHECK(serial.centralizer_sizes == parallel.centralizer_sizes);
        CHECK(serial.class_of == parallel.class_of);
        CHECK(serial.class_sizes == parallel.class_sizes);
    }
    const auto serial = profile(build_symmetric(8), 1);
    const auto parallel = profile(build_symmetric(8), 4);
    CHECK(serial.centralizer_sizes == parallel.centralizer_sizes);
    CHECK(serial.class_of == parallel.class_of);
}

TEST_CASE("size histogram sums to the order") {
    const auto p = profile(build_dihedral(6));
    std::uint64_t total = 0;
    for (const auto& [size, count] : p.size_histogram()) {
        CHECK(size >= 2);
        CHECK(p.order % size == 0);  // centralizers are subgroups
        total += count;
    }
    CHECK(total == p.order);
}
