#include "wilson/canonical.hpp"

#include <cassert>
#include <sstream>

namespace wilson {

PlaquetteAssignment height_assignment(const Loop& l) {
    PlaquetteAssignment k;
    for (const auto& [s, w] : height_field(l)) {
        if (w > 0) {
            k.add(Plaquette{s, false}, w);
        } else {
            k.add(Plaquette{s, true}, -w);
        }
    }
    return k;
}

CanonicalCollection canonical_collection(const Loop& l) {
    const Loop reduced = remove_backtracks(l);
    CanonicalCollection cc;
    cc.base = height_assignment(reduced);
    const LoopGeometry g = analyze_loop(reduced);
    for (const Region& r : g.regions) {
        if (r.exterior) continue;
        const long excess = r.d - std::abs(r.h);
        if (excess % 2 != 0) {
            std::ostringstream os;
            os << "region at (" << r.squares.front().x << "," << r.squares.front().y
               << ") has odd excess d - |h| = " << excess;
            throw ParityViolation(os.str());
        }
        cc.regions.push_back({r.squares, excess / 2});
    }
    cc.cardinality = 1;
    for (const auto& lr : cc.regions) cc.cardinality *= lr.cap + 1;

    // Enumerate layer tuples (k_1, ..., k_m), 0 <= k_i <= cap_i, in
    // lexicographic order: a symmetric layer on a region adds one positive
    // and one negative copy on each of its squares.
    std::vector<long> tuple(cc.regions.size(), 0);
    for (;;) {
        PlaquetteAssignment k = cc.base;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (tuple[i] == 0) continue;
            for (const Vec& s : cc.regions[i].squares) {
                k.add(Plaquette{s, true}, tuple[i]);
                k.add(Plaquette{s, false}, tuple[i]);
            }
        }
        cc.all.push_back(std::move(k));
        // odometer with the last position fastest
        std::size_t i = tuple.size();
        while (i > 0) {
            --i;
            if (tuple[i] < cc.regions[i].cap) {
                ++tuple[i];
                for (std::size_t j = i + 1; j < tuple.size(); ++j) tuple[j] = 0;
                break;
            }
            if (i == 0) {
                assert(static_cast<long>(cc.all.size()) == cc.cardinality);
                return cc;
            }
        }
        if (tuple.empty()) {
            assert(cc.cardinality == 1);
            return cc;
        }
    }
}

} // namespace wilson
