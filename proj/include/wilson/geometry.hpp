#pragma once

#include "wilson/lattice.hpp"

#include <map>
#include <vector>

namespace wilson {

// A maximal set of unit squares connected through dual edges that the loop
// never crosses.  Winding number and crossing distance are constant on each
// region; `exterior` marks the unbounded one.
struct Region {
    std::vector<Vec> squares;   // sorted bases
    long h = 0;                 // winding number of the loop around the region
    long d = 0;                 // min crossings (with multiplicity) to infinity
    long area = 0;              // squares.size()
    bool exterior = false;
};

// Per-loop dual-lattice data over a working box (loop bounding box expanded
// by `margin`).  Squares outside the box have h = d = 0.
struct LoopGeometry {
    Vec box_min;                // inclusive range of square bases
    Vec box_max;
    std::map<Vec, long> height;       // nonzero entries only
    std::map<Vec, long> distance;     // nonzero entries only
    std::vector<Region> regions;      // interior regions sorted by first square,
                                      // exterior last
    long support_area = 0;            // total area of interior regions
};

LoopGeometry analyze_loop(const Loop& l, long margin = 2);

long height_at(const LoopGeometry& g, Vec square);
long distance_at(const LoopGeometry& g, Vec square);

// Winding number of the loop around the centre of each square, swept
// row-by-row from the far west (where it vanishes).  Sparse: zeros omitted.
std::map<Vec, long> height_field(const Loop& l);

// Same field accumulated column-by-column from the far south; must agree.
std::map<Vec, long> height_field_columnwise(const Loop& l);

// Independent single-square evaluation: signed crossings of the loop with an
// eastward ray from the square centre.
long winding_ray(const Loop& l, Vec square);

// n_e(l, k) = times the loop traverses e plus the counts of the two oriented
// plaquettes whose boundary traverses e.
long traversal_count(const Loop& l, const PlaquetteAssignment& k, const Edge& e);

// Balanced: every unoriented edge is traversed equally often in both
// orientations once plaquette boundaries are added in.
bool is_balanced(const Loop& l, const PlaquetteAssignment& k);

// Equivalent criterion through the winding field: the assignment's signed
// excess must cancel the loop's winding square by square.  Kept separate so
// the two routes can be checked against each other.
bool is_balanced_via_height(const Loop& l, const PlaquetteAssignment& k);

} // namespace wilson
