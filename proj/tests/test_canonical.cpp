#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "wilson/canonical.hpp"
#include "wilson/fixtures.hpp"

#include <cstdlib>
#include <random>
#include <set>

using namespace wilson;
using wilson::testing::random_nontrivial_walk;

TEST_CASE("minimal assignment cancels the winding square by square") {
    const Loop p = Loop::from_moves({0, 0}, "URDL");
    const PlaquetteAssignment k = height_assignment(p);
    CHECK(k.area() == 1);
    CHECK(k.count(Plaquette{{0, 0}, false}) == 1); // h = +1 inside, so one
                                                   // negative copy cancels it
    const PlaquetteAssignment k2 = height_assignment(p.wound(2));
    CHECK(k2.count(Plaquette{{0, 0}, false}) == 2);

    const PlaquetteAssignment kneg = height_assignment(Loop::from_moves({0, 0}, "RULD"));
    CHECK(kneg.count(Plaquette{{0, 0}, true}) == 1);

    std::mt19937 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        const Loop l = random_nontrivial_walk(rng, 16);
        const PlaquetteAssignment k3 = height_assignment(l);
        long total = 0;
        for (const auto& [sq, h] : height_field(l)) {
            CHECK(k3.count(Plaquette{sq, h < 0}) == std::abs(h));
            total += std::abs(h);
        }
        CHECK(k3.area() == total);
        CHECK(is_balanced(remove_backtracks(l), k3));
        CHECK(is_balanced_via_height(remove_backtracks(l), k3));
    }
}

TEST_CASE("collections of the smallest loops") {
    const auto unit = canonical_collection(Loop::from_moves({0, 0}, "URDL"));
    CHECK(unit.cardinality == 1);
    CHECK(unit.all.size() == 1);
    CHECK(unit.all[0] == unit.base);
    CHECK(unit.base.area() == 1);
    REQUIRE(unit.regions.size() == 1);
    CHECK(unit.regions[0].cap == 0); // d = |h| = 1 leaves no slack

    // doubly wound unit square: d = |h| = 2, still a single member
    const auto doubled = canonical_collection(Loop::from_moves({0, 0}, "URDLURDL"));
    CHECK(doubled.cardinality == 1);
    CHECK(doubled.base.area() == 2);

    // figure eight: two lobes of opposite orientation
    const auto eight = canonical_collection(Loop::from_moves({1, 1}, "DLURRULD"));
    CHECK(eight.cardinality == 1);
    CHECK(eight.base.area() == 2);
    CHECK(eight.base.support_size() == 2);
}

TEST_CASE("slack regions multiply the collection") {
    // lobe with an inner curl: one region has d - |h| = 2, giving cap 1
    const auto curl = canonical_collection(Loop::from_moves({1, 1}, "URRULDDLUURRDLDL"));
    CHECK(curl.cardinality == 2);
    CHECK(curl.all.size() == 2);
    CHECK(curl.base.area() == 3);
    CHECK(curl.all[0].area() + curl.all[1].area() == 3 + 5); // one symmetric layer

    // four pockets of slack -> four members
    const auto pockets =
        canonical_collection(Loop::from_moves({1, 1}, "UULDRRRULDDLLDLUUUURRRRRDDDDLLLU"));
    CHECK(pockets.cardinality == 4);
    CHECK(pockets.all.size() == 4);

    long cap_product = 1;
    for (const auto& r : pockets.regions) cap_product *= r.cap + 1;
    CHECK(cap_product == pockets.cardinality);
}

TEST_CASE("every member is balanced and they are pairwise distinct") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        const Loop l = random_nontrivial_walk(rng, 14);
        const auto col = canonical_collection(l);
        CHECK(col.cardinality == static_cast<long>(col.all.size()));
        CHECK(col.all.front() == col.base);
        const Loop red = remove_backtracks(l);
        std::set<std::string> keys;
        for (const PlaquetteAssignment& k : col.all) {
            CHECK(is_balanced(red, k));
            CHECK(is_balanced_via_height(red, k));
            keys.insert(canonical_key(red, k));
            // members differ from the base by whole symmetric layers
            for (const auto& [p, n] : col.base.counts()) {
                CHECK(k.count(p) >= n);
            }
            CHECK((k.area() - col.base.area()) % 2 == 0);
        }
        CHECK(keys.size() == col.all.size());
    }
}

TEST_CASE("backtracks are erased before enumeration") {
    const Loop clean = Loop::from_moves({0, 0}, "URDL");
    const Loop padded = Loop::from_moves({0, 0}, "RLURDL"); // leading backtrack
    const auto a = canonical_collection(clean);
    const auto b = canonical_collection(padded);
    CHECK(a.cardinality == b.cardinality);
    CHECK(a.base == b.base);
}

TEST_CASE("collections match the declared sizes of the fixture corpus") {
    for (const Fixture& f : builtin_fixtures()) {
        const auto col = canonical_collection(f.loop);
        CHECK_MESSAGE(col.cardinality == f.kcount, f.name);
        CHECK(col.all.size() == static_cast<std::size_t>(f.kcount));
    }
}
