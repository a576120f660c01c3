#include "wilson/catalog.hpp"

#include "wilson/errors.hpp"

#include <sstream>

namespace wilson {

namespace {

// cubed-winding factor (3u-3)(3u-2)/6, the n=3 winding coefficient at area u
Rational q3(const Rational& u) { return (3 * u - 3) * (3 * u - 2) / 6; }

Polynomial mono(long e, const Rational& c) { return Polynomial::monomial(e, c); }

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> rows = {
        {1, "simple", {"s"}, 1},
        {2, "lobes-2", {"s1", "s2"}, 1},
        {3, "curl", {"s", "t"}, 1},
        {4, "lobes-3", {"s1", "s2", "s3"}, 1},
        {5, "curl-pair-a", {"s", "t1", "t2"}, 1},
        {6, "curl-pair-b", {"s", "t1", "t2"}, 2},
        {7, "lobes-2-curl", {"s1", "s2", "t"}, 1},
        {8, "coil", {"s", "t", "u"}, 1},
        {9, "lobes-4-a", {"s1", "s2", "s3", "s4"}, 1},
        {10, "coil-curl-a", {"s", "t1", "t2", "u"}, 1},
        {11, "coil-curl-b", {"s", "t1", "t2", "u"}, 4},
        {12, "lobes-2-coil", {"s1", "s2", "t", "u"}, 1},
        {13, "spiral", {"s", "t", "u", "v"}, 1},
        {14, "lobes-2-curls-2-a", {"s1", "s2", "t1", "t2"}, 1},
        {15, "curl-triple-a", {"s", "t1", "t2", "t3"}, 4},
        {16, "lobes-4-b", {"s1", "s2", "s3", "s4"}, 1},
        {17, "lobes-3-curl-a", {"s1", "s2", "s3", "t"}, 1},
        {18, "lobes-2-curls-2-b", {"s1", "s2", "t1", "t2"}, 1},
        {19, "curl-triple-b", {"s", "t1", "t2", "t3"}, 1},
        {20, "lobes-2-curls-2-c", {"s1", "s2", "t1", "t2"}, 2},
        {21, "lobes-3-curl-b", {"s1", "s2", "s3", "t"}, 1},
        {22, "curl-triple-c", {"s", "t1", "t2", "t3"}, 2},
        {23, "curl-triple-d", {"s", "t1", "t2", "t3"}, 2},
        {24, "coil-curl-c", {"s", "t1", "t2", "u"}, 2},
        {25, "coil-pair-a", {"s", "t", "u1", "u2"}, 1},
        {26, "coil-pair-b", {"s", "t", "u1", "u2"}, 2},
        {27, "lobes-3-curl-c", {"s1", "s2", "s3", "t"}, 1},
        {28, "lobes-2-curls-2-d", {"s1", "s2", "t1", "t2"}, 4},
    };
    return rows;
}

const CatalogEntry& catalog_entry(int id) {
    const auto& rows = catalog();
    if (id < 1 || id > static_cast<int>(rows.size())) {
        std::ostringstream os;
        os << "class id " << id << " outside 1.." << rows.size();
        throw UnknownClass(os.str());
    }
    return rows[id - 1];
}

Polynomial catalog_polynomial(int id, const AreaMap& areas) {
    const CatalogEntry& row = catalog_entry(id);
    for (const auto& [name, value] : areas) {
        bool known = false;
        for (const auto& p : row.params) known = known || p == name;
        if (!known) {
            std::ostringstream os;
            os << "class " << id << " has no area parameter '" << name << "'";
            throw WilsonError(os.str());
        }
    }
    auto get = [&](const char* name) -> long {
        auto it = areas.find(name);
        if (it == areas.end()) {
            std::ostringstream os;
            os << "class " << id << " needs area parameter '" << name << "'";
            throw WilsonError(os.str());
        }
        if (it->second < 1) {
            std::ostringstream os;
            os << "class " << id << " area '" << name << "' must be positive, got "
               << it->second;
            throw WilsonError(os.str());
        }
        return it->second;
    };

    switch (id) {
        case 1: {
            return mono(get("s"), 1);
        }
        case 2: {
            return mono(get("s1") + get("s2"), 1);
        }
        case 3: {
            const long s = get("s"), t = get("t");
            return mono(s + 2 * t, 1 - Rational(t));
        }
        case 4: {
            return mono(get("s1") + get("s2") + get("s3"), 1);
        }
        case 5: {
            const long s = get("s"), t1 = get("t1"), t2 = get("t2");
            return mono(s + 2 * t1 + 2 * t2, (1 - Rational(t1)) * (1 - Rational(t2)));
        }
        case 6: {
            const long s = get("s"), t1 = get("t1"), t2 = get("t2");
            return mono(s + 2 * t1, 1) + mono(s + 2 * t1 + 2 * t2, -Rational(t1));
        }
        case 7: {
            const long s1 = get("s1"), s2 = get("s2"), t = get("t");
            return mono(s1 + s2 + 2 * t, 1 - Rational(t));
        }
        case 8: {
            const long s = get("s"), t = get("t"), u = get("u");
            return mono(s + 2 * t + 3 * u, q3(u) - Rational(t) * (1 - Rational(u)));
        }
        case 9: {
            return mono(get("s1") + get("s2") + get("s3") + get("s4"), 1);
        }
        case 10: {
            const long s = get("s"), t1 = get("t1"), t2 = get("t2"), u = get("u");
            const Rational inner = q3(u) - Rational(t1) * (1 - Rational(u));
            return mono(s + 2 * t1 + 2 * t2 + 3 * u, (1 - Rational(t2)) * inner);
        }
        case 11: {
            const long s = get("s"), t1 = get("t1"), t2 = get("t2"), u = get("u");
            return mono(s + 2 * t1 + u, 1) +
                   mono(s + 2 * t1 + 2 * t2 + 3 * u,
                        -Rational(t1) * (1 - Rational(u)));
        }
        case 12: {
            const long s1 = get("s1"), s2 = get("s2"), t = get("t"), u = get("u");
            return mono(s1 + s2 + 2 * t + 3 * u, q3(u) - Rational(t) * (1 - Rational(u)));
        }
        case 13: {
            const long s = get("s"), t = get("t"), lu = get("u"), lv = get("v");
            const Rational u = lu, v = lv;
            Rational c = 1;
            c -= Rational(5, 2) * u;
            c += Rational(3, 2) * u * u;
            c -= Rational(13, 3) * v;
            c += Rational(13, 2) * u * v;
            c -= Rational(3, 2) * u * u * v;
            c += 6 * v * v;
            c -= 4 * u * v * v;
            c -= Rational(8, 3) * v * v * v;
            c -= Rational(t) * (q3(v) - u * (1 - v));
            return mono(s + 2 * t + 3 * lu + 4 * lv, c);
        }
        case 14:
        case 18: {
            const long s1 = get("s1"), s2 = get("s2"), t1 = get("t1"), t2 = get("t2");
            return mono(s1 + s2 + 2 * t1 + 2 * t2,
                        (1 - Rational(t1)) * (1 - Rational(t2)));
        }
        case 15: {
            const long s = get("s"), t1 = get("t1"), t2 = get("t2"), t3 = get("t3");
            return mono(s + 2 * t1 + 2 * t2, 1) + mono(s + 2 * t1 + 2 * t3, 1) +
                   mono(s + 2 * t1 + 2 * t2 + 2 * t3, -(1 + Rational(t1)));
        }
        case 16: {
            return mono(get("s1") + get("s2") + get("s3") + get("s4"), 1);
        }
        case 17:
        case 21:
        case 27: {
            const long s1 = get("s1"), s2 = get("s2"), s3 = get("s3"), t = get("t");
            return mono(s1 + s2 + s3 + 2 * t, 1 - Rational(t));
        }
        case 19: {
            const long s = get("s"), t1 = get("t1"), t2 = get("t2"), t3 = get("t3");
            return mono(s + 2 * t1 + 2 * t2 + 2 * t3,
                        (1 - Rational(t1)) * (1 - Rational(t2)) * (1 - Rational(t3)));
        }
        case 20: {
            const long s1 = get("s1"), s2 = get("s2"), t1 = get("t1"), t2 = get("t2");
            return mono(s1 + s2 + 2 * t1, 1) +
                   mono(s1 + s2 + 2 * t1 + 2 * t2, -Rational(t1));
        }
        case 22: {
            const long s = get("s"), t1 = get("t1"), t2 = get("t2"), t3 = get("t3");
            return mono(s + 2 * t1 + 2 * t3, 1 - Rational(t3)) +
                   mono(s + 2 * t1 + 2 * t2 + 2 * t3,
                        -(1 - Rational(t3)) * Rational(t1));
        }
        case 23: {
            const long s = get("s"), t1 = get("t1"), t2 = get("t2"), t3 = get("t3");
            return mono(s + 2 * t1 + 2 * t3, 1 - Rational(t3)) +
                   mono(s + 2 * t1 + 2 * t2 + 2 * t3, -Rational(t1));
        }
        case 24: {
            const long s = get("s"), t1 = get("t1"), t2 = get("t2"), u = get("u");
            return mono(s + 2 * t1 + 3 * u, 1 - Rational(u)) +
                   mono(s + 2 * t1 + 2 * t2 + 3 * u,
                        q3(u) - (1 + Rational(t1)) * (1 - Rational(u)));
        }
        case 25: {
            const long s = get("s"), t = get("t"), lu1 = get("u1"), lu2 = get("u2");
            const Rational u1 = lu1, u2 = lu2;
            Rational c = q3(u1 + u2);
            c -= Rational(t) * (1 - u1) * (1 - u2);
            c += u1 * u2 * (1 - Rational(3, 2) * (u1 + u2));
            return mono(s + 2 * t + 3 * lu1 + 3 * lu2, c);
        }
        case 26: {
            const long s = get("s"), t = get("t"), lu1 = get("u1"), lu2 = get("u2");
            const Rational u1 = lu1, u2 = lu2;
            const Rational second =
                u1 * (Rational(t) + u2 - Rational(1, 2)) + Rational(3, 2) * u1 * u1;
            return mono(s + 2 * t + 3 * lu1 + 3 * lu2, 1 - 2 * u1 - Rational(t)) +
                   mono(s + 2 * t + 3 * lu1 + 5 * lu2, second);
        }
        case 28: {
            const long s1 = get("s1"), s2 = get("s2"), t1 = get("t1"), t2 = get("t2");
            return mono(s1 + s2 + 2 * t1, 1) + mono(s1 + s2 + 2 * t2, 1) +
                   mono(s1 + s2 + 2 * t1 + 2 * t2, -1);
        }
        default:
            throw UnknownClass("unreachable class id");
    }
}

} // namespace wilson
