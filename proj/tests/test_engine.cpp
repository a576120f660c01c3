#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "wilson/engine.hpp"
#include "wilson/closedform.hpp"
#include "wilson/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

using namespace wilson;
using wilson::testing::random_nontrivial_walk;

namespace {

std::map<Vec, long> added_heights(const Loop& a, const Loop& b) {
    auto sum = height_field(a);
    for (const auto& [sq, h] : height_field(b)) {
        sum[sq] += h;
        if (sum[sq] == 0) sum.erase(sq);
    }
    return sum;
}

Loop reversed_loop(const Loop& l) {
    std::string moves = l.moves();
    std::reverse(moves.begin(), moves.end());
    for (char& c : moves) {
        c = c == 'U' ? 'D' : c == 'D' ? 'U' : c == 'L' ? 'R' : 'L';
    }
    return Loop::from_moves(l.base(), moves);
}

} // namespace

TEST_CASE("splittings: structure on known words and random loops") {
    // embedded loops never split
    const Loop rect = Loop::from_moves({0, 0}, "URRDLL");
    for (std::size_t i = 0; i < rect.size(); ++i) {
        CHECK(enumerate_splittings(rect, i).empty());
    }

    // doubly wound square: the two same-direction visits split it in half
    const Loop p2 = Loop::from_moves({0, 0}, "URDLURDL");
    const auto sp = enumerate_splittings(p2, 0);
    REQUIRE(sp.size() == 1);
    CHECK(sp[0].positive);
    CHECK(sp[0].first.size() == 4);
    CHECK(sp[0].second.size() == 4);

    std::mt19937 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const Loop l = remove_backtracks(random_nontrivial_walk(rng, 16));
        for (std::size_t at = 0; at < l.size(); ++at) {
            for (const Splitting& s : enumerate_splittings(l, at)) {
                const std::size_t total = s.first.size() + s.second.size();
                if (s.positive) {
                    CHECK(total == l.size());
                } else {
                    CHECK(total == l.size() - 2); // opposite visits are excised
                }
                // winding is additive across the split
                CHECK(added_heights(s.first, s.second) == height_field(l));
            }
        }
    }
}

TEST_CASE("deformations: the charged plaquette moves into the loop") {
    const Loop p = Loop::from_moves({0, 0}, "URDL");
    PlaquetteAssignment k;
    k.add(Plaquette{{0, 0}, false}, 1);
    const auto defs = enumerate_deformations(p, 0, k);
    REQUIRE(defs.size() == 1);
    CHECK_FALSE(defs[0].attach); // the charge traverses the reverse edge
    CHECK(defs[0].plaquette == Plaquette{{0, 0}, false});
    CHECK(remove_backtracks(defs[0].loop).empty()); // absorbing it closes up

    // no charges, no deformations
    PlaquetteAssignment none;
    CHECK(enumerate_deformations(p, 0, none).empty());

    // balance is preserved: moving a charge into the loop keeps every edge
    // traversal matched
    for (const Fixture& f : builtin_fixtures()) {
        if (f.loop.size() > 20) continue;
        const Loop red = remove_backtracks(f.loop);
        const auto col = canonical_collection(red);
        for (const PlaquetteAssignment& kk : col.all) {
            for (const Deformation& d : enumerate_deformations(red, 0, kk)) {
                PlaquetteAssignment rest = kk;
                rest.add(d.plaquette, -1);
                CHECK(is_balanced(remove_backtracks(d.loop), rest));
            }
        }
    }
}

TEST_CASE("balanced decompositions split the assignment exactly") {
    const Loop p2 = Loop::from_moves({0, 0}, "URDLURDL");
    const auto sp = enumerate_splittings(p2, 0);
    REQUIRE(sp.size() == 1);
    PlaquetteAssignment k;
    k.add(Plaquette{{0, 0}, false}, 2);
    const auto parts = balanced_decompositions(sp[0].first, sp[0].second, k);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first.count(Plaquette{{0, 0}, false}) == 1);
    CHECK(parts[0].second.count(Plaquette{{0, 0}, false}) == 1);

    // cross-check against brute force on a slack collection member
    const Loop curl = Loop::from_moves({1, 1}, "URRULDDLUURRDLDL");
    const auto col = canonical_collection(curl);
    for (const PlaquetteAssignment& kk : col.all) {
        const auto sp2 = enumerate_splittings(curl.wound(2), 0);
        for (const Splitting& s : sp2) {
            PlaquetteAssignment dbl;
            for (const auto& [pq, n] : kk.counts()) dbl.add(pq, 2 * n);
            const auto got = balanced_decompositions(s.first, s.second, dbl);
            // brute force over all per-plaquette splits
            long expect = 0;
            std::vector<std::pair<Plaquette, long>> items(dbl.counts().begin(),
                                                          dbl.counts().end());
            std::vector<long> take(items.size(), 0);
            for (;;) {
                PlaquetteAssignment k1, k2;
                for (std::size_t i = 0; i < items.size(); ++i) {
                    k1.add(items[i].first, take[i]);
                    k2.add(items[i].first, items[i].second - take[i]);
                }
                if (is_balanced(s.first, k1) && is_balanced(s.second, k2)) ++expect;
                std::size_t i = 0;
                while (i < items.size() && take[i] == items[i].second) take[i++] = 0;
                if (i == items.size()) break;
                ++take[i];
            }
            CHECK(static_cast<long>(got.size()) == expect);
            for (const auto& [k1, k2] : got) {
                CHECK(is_balanced(s.first, k1));
                CHECK(is_balanced(s.second, k2));
                PlaquetteAssignment sum = k1;
                for (const auto& [pq, n] : k2.counts()) sum.add(pq, n);
                CHECK(sum == dbl);
            }
        }
    }
}

TEST_CASE("worked examples") {
    CHECK(wilson_expectation(Loop{}) == Polynomial::monomial(0, 1));
    CHECK(wilson_expectation(Loop::from_moves({0, 0}, "UD")) == Polynomial::monomial(0, 1));
    CHECK(wilson_expectation(Loop::from_moves({0, 0}, "URDL")) == Polynomial::monomial(1, 1));
    CHECK(wilson_expectation(Loop::from_moves({0, 0}, "RULD")) == Polynomial::monomial(1, 1));
    CHECK(wilson_expectation(Loop::from_moves({1, 1}, "DLURRULD")) ==
          Polynomial::monomial(2, 1));
    // doubly wound unit square vanishes
    CHECK(wilson_expectation(Loop::from_moves({0, 0}, "URDLURDL")).is_zero());
    // wound rectangles follow the closed-form coefficients
    const Loop r12 = Loop::from_moves({0, 0}, "UURDDL");
    CHECK(wilson_expectation(r12.wound(2)) ==
          Polynomial::monomial(4, winding_coefficient(2, 2)));
    CHECK(wilson_expectation(r12.wound(3)) ==
          Polynomial::monomial(6, winding_coefficient(3, 2)));
}

TEST_CASE("engine matches every builtin fixture") {
    Engine eng;
    for (const Fixture& f : builtin_fixtures()) {
        CHECK_MESSAGE(eng.expectation(f.loop) == f.expected, f.name);
    }
}

TEST_CASE("fixture files on disk round-trip through the engine") {
    const char* dir = std::getenv("WILSON_FIXTURES");
    if (dir == nullptr) return; // only run where the corpus is checked out
    const auto fixtures = load_fixture_dir(dir);
    CHECK(fixtures.size() == builtin_fixtures().size());
    Engine eng;
    for (const Fixture& f : fixtures) {
        CHECK_MESSAGE(eng.expectation(f.loop) == f.expected, f.name);
    }
}

TEST_CASE("memoization: idempotent, shared, and capped") {
    Engine eng;
    const Loop curl = Loop::from_moves({1, 1}, "URRULDDLUURRDLDL");
    const Polynomial first = eng.expectation(curl);
    const auto hits_before = eng.stats().memo_hits;
    CHECK(eng.expectation(curl) == first);
    CHECK(eng.stats().memo_hits > hits_before);

    // translated copies reuse the same entries wholesale
    const auto entries = eng.memo_entries();
    CHECK(eng.expectation(curl.translated({40, -17})) == first);
    CHECK(eng.memo_entries() == entries);

    Engine capped;
    capped.set_memo_limit(1);
    CHECK_THROWS_AS(capped.expectation(curl), MemoLimitExceeded);
}

TEST_CASE("the result ignores presentation: backtracks, rotation, reflection axes") {
    std::mt19937 rng(67);
    const char* words[] = {"URDL", "DLURRULD", "URDLLUURRRDDDLLU", "URRULDDLUURRDLDL"};
    for (const char* moves : words) {
        const Loop l = Loop::from_moves({1, 1}, moves);
        const Polynomial want = wilson_expectation(l);

        // insert a backtracking spur at a random spot
        std::string padded(moves);
        std::uniform_int_distribution<std::size_t> pos(0, padded.size());
        padded.insert(pos(rng), "RL");
        CHECK(wilson_expectation(Loop::from_moves({1, 1}, padded)) == want);

        CHECK(wilson_expectation(l.translated({-9, 23})) == want);
        CHECK(wilson_expectation(rotate90(l)) == want);
        std::uniform_int_distribution<std::size_t> cyc(0, l.size() - 1);
        CHECK(wilson_expectation(l.rotated_to(cyc(rng))) == want);
        CHECK(wilson_expectation(reversed_loop(l)) == want);
    }
}

TEST_CASE("strategies and parallel evaluation agree") {
    const char* words[] = {"DLURRULD", "URRULDDLUURRDLDL", "URRDLLURRRDLLLURRRRDLLLL"};
    for (const char* moves : words) {
        const Loop l = Loop::from_moves({1, 1}, moves);
        const Polynomial want = wilson_expectation(l, Strategy::boundary);
        CHECK(wilson_expectation(l, Strategy::first) == want);
        CHECK(wilson_expectation(l, Strategy::min_branch) == want);
        Engine eng;
        CHECK(eng.expectation_parallel(l, 4) == want);
    }
}

TEST_CASE("rooting the first expansion anywhere changes nothing") {
    const Loop l = Loop::from_moves({1, 1}, "URRULDDLUURRDLDL");
    const auto col = canonical_collection(l);
    for (const PlaquetteAssignment& k : col.all) {
        Engine ref;
        const Rational want = ref.coefficient(l, k);
        for (std::size_t e = 0; e < l.size(); ++e) {
            Engine eng;
            CHECK(eng.coefficient_rooted(l, k, e) == want);
        }
    }
}

TEST_CASE("breakdown reassembles the polynomial") {
    Engine eng;
    const Loop l = Loop::from_moves({1, 1}, "UULDRRRULDDLLDLUUUURRRRRDDDDLLLU");
    const auto parts = eng.breakdown(l);
    CHECK(parts.size() == 4);
    Polynomial sum;
    for (const auto& [k, c] : parts) sum.add_term(k.area(), c);
    CHECK(sum == eng.expectation(l));

    // unbalanced / off-collection assignments contribute nothing
    PlaquetteAssignment stray;
    stray.add(Plaquette{{30, 30}, true}, 1);
    CHECK(eng.coefficient(Loop::from_moves({0, 0}, "URDL"), stray) == 0);
}

TEST_CASE("edge selection is deterministic and in range") {
    const Loop l = Loop::from_moves({1, 1}, "URRULDDLUURRDLDL");
    const auto col = canonical_collection(l);
    for (const PlaquetteAssignment& k : col.all) {
        for (Strategy s : {Strategy::first, Strategy::boundary, Strategy::min_branch}) {
            const std::size_t e = select_edge(l, k, s);
            CHECK(e < l.size());
            CHECK(select_edge(l, k, s) == e);
        }
    }
    CHECK(strategy_from_name("boundary") == Strategy::boundary);
    CHECK(std::string(strategy_name(Strategy::min_branch)) == "min_branch");
    CHECK_THROWS_AS(strategy_from_name("bogus"), ParseError);
}
