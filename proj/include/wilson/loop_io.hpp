#pragma once

#include "wilson/lattice.hpp"
#include "wilson/rational.hpp"

#include <json.hpp>

#include <string>

namespace wilson {

using Json = nlohmann::ordered_json;

// Loop serialization.  Two accepted input shapes:
//   {"origin": [x, y], "moves": "URDL..."}     (origin defaults to [0, 0])
//   {"vertices": [[x0, y0], [x1, y1], ..., [x0, y0]]}   (closed walk, unit steps)
// Output always uses the origin/moves shape.
Loop loop_from_json(const Json& j);
Json loop_to_json(const Loop& l);

// Reads and parses a loop file; ParseError on IO or format problems.
Loop load_loop_file(const std::string& path);

// Rationals as {"num": "...", "den": "..."} decimal strings (arbitrary size).
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// Polynomials as [{"exp": e, "num": "...", "den": "..."}, ...] ascending in e.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// Assignments as [{"base": [x, y], "sign": "+"|"-", "count": n}, ...] in the
// internal (sorted) support order.
Json assignment_to_json(const PlaquetteAssignment& k);
PlaquetteAssignment assignment_from_json(const Json& j);

} // namespace wilson
