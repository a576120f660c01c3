#pragma once

#include "wilson/lattice.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace wilson::testing {

// Uniformly shuffled balanced move multiset: a of R/L each, b of U/D each.
// Any such word closes, so the result is always a valid (possibly
// self-touching, possibly backtracking) loop of 2(a+b) edges.
inline Loop random_closed_walk(std::mt19937& rng, int max_edges) {
    const int half = max_edges / 2;
    std::uniform_int_distribution<int> pick_half(1, half);
    const int k = pick_half(rng);
    std::uniform_int_distribution<int> pick_a(0, k);
    const int a = pick_a(rng);
    const int b = k - a;
    std::string moves;
    moves.append(a, 'R');
    moves.append(a, 'L');
    moves.append(b, 'U');
    moves.append(b, 'D');
    std::shuffle(moves.begin(), moves.end(), rng);
    std::uniform_int_distribution<long> coord(-3, 3);
    return Loop::from_moves({coord(rng), coord(rng)}, moves);
}

// Same, but retries until the backtrack-free reduction is nonempty.
inline Loop random_nontrivial_walk(std::mt19937& rng, int max_edges) {
    for (;;) {
        Loop l = random_closed_walk(rng, max_edges);
        if (!remove_backtracks(l).empty()) return l;
    }
}

} // namespace wilson::testing
