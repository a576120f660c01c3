#pragma once

#include "wilson/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace wilson {

// One row of the 28-class catalogue of closed-form expectations for loop
// classes with at most three transverse self-crossings.  Rows carry a fixed
// id (1-28), a structural slug, the named area parameters in order (s* are
// singly-wound lobes, t* doubly-wound pockets, u* triply-wound, v*
// quadruply-wound), and the size of the canonical assignment collection for
// the class, which is independent of the area values.
struct CatalogEntry {
    int id;
    std::string slug;
    std::vector<std::string> params;
    long kcount;
};

const std::vector<CatalogEntry>& catalog();

// UnknownClass if id is outside 1..28.
const CatalogEntry& catalog_entry(int id);

using AreaMap = std::map<std::string, long>;

// Expectation polynomial of class `id` at the given named areas.  Every
// parameter of the row must be present and positive; unknown names are
// rejected.
Polynomial catalog_polynomial(int id, const AreaMap& areas);

} // namespace wilson
