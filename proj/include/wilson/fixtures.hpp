#pragma once

#include "wilson/catalog.hpp"
#include "wilson/lattice.hpp"
#include "wilson/loop_io.hpp"
#include "wilson/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace wilson {

// A concrete lattice loop with an independently predicted expectation.
// `source` states where the prediction comes from:
//   "catalog"  catalog_polynomial(class_id, areas), kcount from the row
//   "winding"  winding_coefficient(winding, shape_area) * beta^(winding*area)
//   "explicit" the polynomial is declared directly
struct Fixture {
    std::string name;
    Loop loop;
    std::string source;
    int class_id = 0;    // catalog source: row id
    AreaMap areas;       //   ... and its named area parameters
    std::string shape;   // winding source: shape label,
    long shape_area = 0; //   ... its area,
    long winding = 1;    //   ... and the repetition count
    Polynomial expected;
    long kcount = 1;     // expected canonical collection size
    std::string note;
    // (|h|, d, area) triples of the interior regions, sorted; filled when
    // fixture files are written, revalidated against the loop on load.
    std::vector<std::array<long, 3>> regions;
};

// The shipped corpus: minimal-area and squeezed representatives of catalog
// classes 1-8 and 15 (several area points each), plus the winding families
// (rectangles through 3x3, an L-tromino, repetitions up to 4).
const std::vector<Fixture>& builtin_fixtures();

// Interior-region signature (|h|, d, area) of a loop, sorted.
std::vector<std::array<long, 3>> region_signature(const Loop& l);

Json fixture_to_json(const Fixture& f);

// Parses and cross-validates: the stored expected polynomial must match the
// polynomial recomputed from the declared source.
Fixture fixture_from_json(const Json& j);

// One JSON file per builtin fixture plus manifest.json.
void write_fixture_files(const std::string& dir);

// Loads every *.json fixture in dir (manifest.json excluded), validating each
// against its declared source formula, kcount, and region signature.
std::vector<Fixture> load_fixture_dir(const std::string& dir);

} // namespace wilson
