#include "wilson/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>
#include <set>

namespace wilson {

namespace {

struct Box {
    Vec lo, hi; // inclusive square-base range
    bool contains(Vec s) const {
        return s.x >= lo.x && s.x <= hi.x && s.y >= lo.y && s.y <= hi.y;
    }
    long width() const { return hi.x - lo.x + 1; }
    long height() const { return hi.y - lo.y + 1; }
};

// Bounding box of the loop's squares, expanded by `margin`.  A loop edge at
// vertex coordinates [x, x+1] touches squares with bases x-1 and x, so the
// square bbox is [min_vertex - 1, max_vertex] before expansion.
Box working_box(const Loop& l, long margin) {
    Vec lo{0, 0}, hi{0, 0};
    if (!l.empty()) {
        lo = hi = l.base();
        for (const Vec& v : l.vertices()) {
            lo.x = std::min(lo.x, v.x);
            lo.y = std::min(lo.y, v.y);
            hi.x = std::max(hi.x, v.x);
            hi.y = std::max(hi.y, v.y);
        }
    }
    return Box{{lo.x - 1 - margin, lo.y - 1 - margin}, {hi.x + margin, hi.y + margin}};
}

} // namespace

std::map<Vec, long> height_field(const Loop& l) {
    std::map<Vec, long> h;
    if (l.empty()) return h;
    const Box box = working_box(l, 0);
    const auto mult = edge_multiplicities(l);
    auto count = [&](Edge e) {
        auto it = mult.find(e);
        return it == mult.end() ? 0L : it->second;
    };
    for (long y = box.lo.y; y <= box.hi.y; ++y) {
        long acc = 0; // value west of the box is 0
        for (long x = box.lo.x; x <= box.hi.x; ++x) {
            // Step east across the dual edge between squares (x-1, y) and
            // (x, y), i.e. across the primal edge from (x, y) to (x, y+1).
            // A northward traversal crosses right-to-left (+1), a southward
            // one left-to-right (-1).
            acc += count(Edge{{x, y}, Dir::N}) - count(Edge{{x, y + 1}, Dir::S});
            if (acc != 0) h.emplace(Vec{x, y}, acc);
        }
        assert(acc + count(Edge{{box.hi.x + 1, y}, Dir::N}) -
                   count(Edge{{box.hi.x + 1, y + 1}, Dir::S}) ==
               0);
    }
    return h;
}

std::map<Vec, long> height_field_columnwise(const Loop& l) {
    std::map<Vec, long> h;
    if (l.empty()) return h;
    const Box box = working_box(l, 0);
    const auto mult = edge_multiplicities(l);
    auto count = [&](Edge e) {
        auto it = mult.find(e);
        return it == mult.end() ? 0L : it->second;
    };
    for (long x = box.lo.x; x <= box.hi.x; ++x) {
        long acc = 0; // value south of the box is 0
        for (long y = box.lo.y; y <= box.hi.y; ++y) {
            // Step north across the primal edge from (x, y) to (x+1, y).
            // A westward traversal crosses right-to-left (+1).
            acc += count(Edge{{x + 1, y}, Dir::W}) - count(Edge{{x, y}, Dir::E});
            if (acc != 0) h.emplace(Vec{x, y}, acc);
        }
    }
    return h;
}

long winding_ray(const Loop& l, Vec square) {
    // Cast a ray east from the square centre (square.x + 1/2, square.y + 1/2):
    // it pierces the vertical primal edges from (x, square.y) to
    // (x, square.y + 1) for x > square.x.  Walking east, each northward edge
    // crossed raises the field by one and each southward edge lowers it; the
    // field is zero at infinity, so the square's value is the negated sum.
    long w = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
        const Edge e = l.edge(i);
        if (e.dir == Dir::N && e.tail.y == square.y && e.tail.x > square.x) w -= 1;
        if (e.dir == Dir::S && e.tail.y == square.y + 1 && e.tail.x > square.x) w += 1;
    }
    return w;
}

long traversal_count(const Loop& l, const PlaquetteAssignment& k, const Edge& e) {
    long n = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l.edge(i) == e) ++n;
    }
    for (const Plaquette& p : plaquettes_containing(e)) n += k.count(p);
    return n;
}

namespace {

// All positively oriented edges that the loop or the assignment's plaquette
// boundaries can touch.
std::set<Edge> relevant_edges(const Loop& l, const PlaquetteAssignment& k) {
    std::set<Edge> es;
    for (std::size_t i = 0; i < l.size(); ++i) es.insert(l.edge(i).positive_form());
    for (const auto& [p, n] : k.counts()) {
        for (const Edge& e : plaquette_word(p)) es.insert(e.positive_form());
    }
    return es;
}

} // namespace

bool is_balanced(const Loop& l, const PlaquetteAssignment& k) {
    const auto mult = edge_multiplicities(l);
    auto loop_count = [&](const Edge& e) {
        auto it = mult.find(e);
        return it == mult.end() ? 0L : it->second;
    };
    for (const Edge& e : relevant_edges(l, k)) {
        long fwd = loop_count(e);
        long bwd = loop_count(e.reversed());
        for (const Plaquette& p : plaquettes_containing(e)) fwd += k.count(p);
        for (const Plaquette& p : plaquettes_containing(e.reversed())) bwd += k.count(p);
        if (fwd != bwd) return false;
    }
    return true;
}

bool is_balanced_via_height(const Loop& l, const PlaquetteAssignment& k) {
    // Adding a positive plaquette raises the net boundary circulation of its
    // square by one; balance forces the per-square signed excess of the
    // assignment to cancel the loop's winding exactly.
    std::map<Vec, long> excess;
    for (const auto& [p, n] : k.counts()) excess[p.base] += p.positive ? n : -n;
    std::map<Vec, long> h = height_field(l);
    for (const auto& [s, v] : h) {
        if (excess[s] != -v) return false;
        excess.erase(s);
    }
    for (const auto& [s, v] : excess) {
        if (v != 0) return false;
    }
    return true;
}

LoopGeometry analyze_loop(const Loop& l, long margin) {
    assert(margin >= 2);
    LoopGeometry g;
    const Box box = working_box(l, margin);
    g.box_min = box.lo;
    g.box_max = box.hi;
    g.height = height_field(l);

    const long W = box.width(), H = box.height();
    auto idx = [&](Vec s) { return (s.y - box.lo.y) * W + (s.x - box.lo.x); };
    auto square_of = [&](long i) { return Vec{box.lo.x + i % W, box.lo.y + i / W}; };

    const auto mult = edge_multiplicities(l);
    auto count = [&](Edge e) {
        auto it = mult.find(e);
        return it == mult.end() ? 0L : it->second;
    };
    // Crossing weight of the dual edge between adjacent squares a and b:
    // traversals of the shared primal edge in either direction.
    auto weight = [&](Vec a, Vec b) -> long {
        if (b < a) std::swap(a, b); // symmetric; normalize to b east/north of a
        if (b.x == a.x + 1 && b.y == a.y) {
            Edge e{{a.x + 1, a.y}, Dir::N};
            return count(e) + count(e.reversed());
        }
        if (b.x == a.x && b.y == a.y + 1) {
            Edge e{{a.x, a.y + 1}, Dir::E};
            return count(e) + count(e.reversed());
        }
        assert(false && "weight of non-adjacent squares");
        return 0;
    };

    // Distance to infinity: Dijkstra seeded from the box rim.  Rim squares
    // sit beyond the loop's bounding box (margin >= 2), so they reach
    // infinity crossing nothing, and travel between rim squares outside the
    // box is free; seeding every rim square at 0 models both.
    const long INF = std::numeric_limits<long>::max();
    std::vector<long> dist(static_cast<std::size_t>(W * H), INF);
    using QE = std::pair<long, long>; // (distance, index)
    std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
    for (long i = 0; i < W * H; ++i) {
        const Vec s = square_of(i);
        if (s.x == box.lo.x || s.x == box.hi.x || s.y == box.lo.y || s.y == box.hi.y) {
            dist[static_cast<std::size_t>(i)] = 0;
            pq.emplace(0, i);
        }
    }
    const Vec nbr[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > dist[static_cast<std::size_t>(u)]) continue;
        const Vec su = square_of(u);
        for (const Vec& dv : nbr) {
            const Vec sv = su + dv;
            if (!box.contains(sv)) continue;
            const long v = idx(sv);
            const long nd = du + weight(su, sv);
            if (nd < dist[static_cast<std::size_t>(v)]) {
                dist[static_cast<std::size_t>(v)] = nd;
                pq.emplace(nd, v);
            }
        }
    }
    for (long i = 0; i < W * H; ++i) {
        if (dist[static_cast<std::size_t>(i)] != 0) {
            g.distance.emplace(square_of(i), dist[static_cast<std::size_t>(i)]);
        }
    }

    // Regions: flood fill across uncrossed dual edges.  Everything reachable
    // from the rim is the exterior.
    std::vector<int> comp(static_cast<std::size_t>(W * H), -1);
    auto flood = [&](long start, int c) {
        std::vector<long> stack{start};
        comp[static_cast<std::size_t>(start)] = c;
        while (!stack.empty()) {
            const long u = stack.back();
            stack.pop_back();
            const Vec su = square_of(u);
            for (const Vec& dv : nbr) {
                const Vec sv = su + dv;
                if (!box.contains(sv)) continue;
                const long v = idx(sv);
                if (comp[static_cast<std::size_t>(v)] < 0 && weight(su, sv) == 0) {
                    comp[static_cast<std::size_t>(v)] = c;
                    stack.push_back(v);
                }
            }
        }
    };
    flood(idx(box.lo), 0); // rim is connected; lo corner is on it
    int next = 1;
    for (long i = 0; i < W * H; ++i) {
        if (comp[static_cast<std::size_t>(i)] < 0) flood(i, next++);
    }
    g.regions.resize(static_cast<std::size_t>(next));
    for (long i = 0; i < W * H; ++i) {
        g.regions[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])].squares.push_back(
            square_of(i));
    }
    for (int c = 0; c < next; ++c) {
        Region& r = g.regions[static_cast<std::size_t>(c)];
        std::sort(r.squares.begin(), r.squares.end());
        r.area = static_cast<long>(r.squares.size());
        r.exterior = (c == 0);
        r.h = height_at(g, r.squares.front());
        r.d = distance_at(g, r.squares.front());
        for (const Vec& s : r.squares) {
            assert(height_at(g, s) == r.h && "winding must be constant per region");
            assert(distance_at(g, s) == r.d && "crossing distance must be constant per region");
        }
        assert(std::abs(r.h) <= r.d);
        if (r.exterior) {
            assert(r.h == 0 && r.d == 0);
        } else {
            g.support_area += r.area;
        }
    }
    // interior regions sorted by first square, exterior last
    std::sort(g.regions.begin(), g.regions.end(), [](const Region& a, const Region& b) {
        if (a.exterior != b.exterior) return b.exterior;
        return a.squares.front() < b.squares.front();
    });
    return g;
}

long height_at(const LoopGeometry& g, Vec square) {
    auto it = g.height.find(square);
    return it == g.height.end() ? 0 : it->second;
}

long distance_at(const LoopGeometry& g, Vec square) {
    auto it = g.distance.find(square);
    return it == g.distance.end() ? 0 : it->second;
}

} // namespace wilson
