#pragma once

#include "wilson/geometry.hpp"
#include "wilson/lattice.hpp"

#include <vector>

namespace wilson {

// Minimal assignment cancelling the loop's winding: on each square with
// winding w it places |w| copies of the square's negative orientation when
// w > 0, and |w| copies of the positive orientation when w < 0.
PlaquetteAssignment height_assignment(const Loop& l);

// The finite family of assignments the expectation sums over: the minimal
// assignment plus, per interior region, up to (d - |h|) / 2 symmetric layers
// (one positive and one negative copy on every square of the region).
struct CanonicalCollection {
    PlaquetteAssignment base;    // minimal assignment of the reduced loop
    struct LayerRegion {
        std::vector<Vec> squares;
        long cap = 0;            // max symmetric layers: (d - |h|) / 2
    };
    std::vector<LayerRegion> regions;        // interior regions, deterministic order
    std::vector<PlaquetteAssignment> all;    // layer tuples in lexicographic order
    long cardinality = 0;                    // product of (cap + 1), computed
                                             // independently of all.size()
};

// Backtracking pairs are erased from the loop first.  Throws ParityViolation
// if any region reports an odd excess d - |h|.
CanonicalCollection canonical_collection(const Loop& l);

} // namespace wilson
