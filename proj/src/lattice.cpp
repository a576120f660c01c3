#include "wilson/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace wilson {

Vec step(Dir d) {
    switch (d) {
        case Dir::E: return {1, 0};
        case Dir::N: return {0, 1};
        case Dir::W: return {-1, 0};
        case Dir::S: return {0, -1};
    }
    return {};
}

Dir reverse_dir(Dir d) {
    return static_cast<Dir>((static_cast<int>(d) + 2) % 4);
}

char dir_char(Dir d) {
    static constexpr char c[4] = {'E', 'N', 'W', 'S'};
    return c[static_cast<int>(d)];
}

char move_char(Dir d) {
    static constexpr char c[4] = {'R', 'U', 'L', 'D'};
    return c[static_cast<int>(d)];
}

Dir dir_from_move(char c) {
    switch (c) {
        case 'R': return Dir::E;
        case 'U': return Dir::N;
        case 'L': return Dir::W;
        case 'D': return Dir::S;
        default: throw ParseError(std::string("unknown move character '") + c + "'");
    }
}

Dir rotate90(Dir d) {
    return static_cast<Dir>((static_cast<int>(d) + 1) % 4);
}

bool is_positive_dir(Dir d) {
    return d == Dir::E || d == Dir::N;
}

std::array<Edge, 4> plaquette_word(const Plaquette& p) {
    const Vec b = p.base;
    if (p.positive) {
        return {Edge{b, Dir::N},
                Edge{{b.x, b.y + 1}, Dir::E},
                Edge{{b.x + 1, b.y + 1}, Dir::S},
                Edge{{b.x + 1, b.y}, Dir::W}};
    }
    return {Edge{b, Dir::E},
            Edge{{b.x + 1, b.y}, Dir::N},
            Edge{{b.x + 1, b.y + 1}, Dir::W},
            Edge{{b.x, b.y + 1}, Dir::S}};
}

std::array<Plaquette, 2> plaquettes_containing(const Edge& e) {
    const Vec v = e.tail;
    switch (e.dir) {
        case Dir::N: return {Plaquette{v, true}, Plaquette{{v.x - 1, v.y}, false}};
        case Dir::S: return {Plaquette{{v.x - 1, v.y - 1}, true}, Plaquette{{v.x, v.y - 1}, false}};
        case Dir::E: return {Plaquette{{v.x, v.y - 1}, true}, Plaquette{v, false}};
        case Dir::W: return {Plaquette{{v.x - 1, v.y}, true}, Plaquette{{v.x - 1, v.y - 1}, false}};
    }
    return {};
}

Vec rotate90(Vec v) { return {-v.y, v.x}; }

Edge rotate90(const Edge& e) { return Edge{rotate90(e.tail), rotate90(e.dir)}; }

Plaquette rotate90(const Plaquette& p) {
    // The square [b, b+1]^2 maps to the square with lower-left corner
    // (-b.y-1, b.x); a quarter turn preserves orientation.
    return Plaquette{{-p.base.y - 1, p.base.x}, p.positive};
}

Loop::Loop(Vec base, std::vector<Dir> word) : base_(base), word_(std::move(word)) {
    if (word_.empty()) {
        base_ = {};   // the null loop has no location
        return;
    }
    verts_.reserve(word_.size());
    Vec at = base_;
    for (Dir d : word_) {
        verts_.push_back(at);
        at = at + step(d);
    }
    if (at != base_) {
        throw NotClosed("loop word does not return to its base vertex");
    }
}

Loop Loop::from_moves(Vec origin, std::string_view moves) {
    std::vector<Dir> word;
    word.reserve(moves.size());
    for (char c : moves) {
        if (c == ' ') continue;
        word.push_back(dir_from_move(c));
    }
    return Loop(origin, std::move(word));
}

Loop Loop::from_vertices(const std::vector<Vec>& vs) {
    if (vs.empty()) return Loop{};
    if (vs.front() != vs.back()) {
        throw NotClosed("vertex list must end where it starts");
    }
    std::vector<Dir> word;
    word.reserve(vs.size() - 1);
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        const Vec d = vs[i + 1] - vs[i];
        if (d == Vec{1, 0}) word.push_back(Dir::E);
        else if (d == Vec{0, 1}) word.push_back(Dir::N);
        else if (d == Vec{-1, 0}) word.push_back(Dir::W);
        else if (d == Vec{0, -1}) word.push_back(Dir::S);
        else {
            std::ostringstream os;
            os << "vertices " << i << " -> " << (i + 1) << " are not lattice neighbours";
            throw NonAdjacentStep(os.str());
        }
    }
    return Loop(vs.front(), std::move(word));
}

std::string Loop::moves() const {
    std::string s;
    s.reserve(word_.size());
    for (Dir d : word_) s.push_back(move_char(d));
    return s;
}

Loop Loop::rotated_to(std::size_t i) const {
    if (empty() || i == 0) return *this;
    assert(i < word_.size());
    std::vector<Dir> w;
    w.reserve(word_.size());
    w.insert(w.end(), word_.begin() + static_cast<long>(i), word_.end());
    w.insert(w.end(), word_.begin(), word_.begin() + static_cast<long>(i));
    return Loop(verts_[i], std::move(w));
}

Loop Loop::translated(Vec by) const {
    Loop out = *this;
    out.base_ = base_ + by;
    for (Vec& v : out.verts_) v = v + by;
    return out;
}

Loop Loop::wound(long n) const {
    assert(n >= 1);
    std::vector<Dir> w;
    w.reserve(word_.size() * static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) w.insert(w.end(), word_.begin(), word_.end());
    return Loop(base_, std::move(w));
}

Loop rotate90(const Loop& l) {
    std::vector<Dir> w;
    w.reserve(l.size());
    for (Dir d : l.word()) w.push_back(rotate90(d));
    return Loop(rotate90(l.base()), std::move(w));
}

namespace {

bool backtracks(Dir a, Dir b) { return b == reverse_dir(a); }

} // namespace

Loop remove_backtracks(const Loop& l) {
    std::vector<Dir> w(l.word().begin(), l.word().end());
    std::vector<Vec> v(l.vertices().begin(), l.vertices().end());
    bool changed = true;
    while (changed && !w.empty()) {
        changed = false;
        const std::size_t n = w.size();
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = (i + 1) % n;
            if (backtracks(w[i], w[j])) {
                if (j > i) {
                    w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
                    v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i) + 2);
                } else {
                    // wrap-around pair (last, first)
                    w.erase(w.begin());
                    w.pop_back();
                    v.erase(v.begin());
                    v.pop_back();
                }
                changed = true;
                break;
            }
        }
    }
    if (w.empty()) return Loop{};
    return Loop(v.front(), std::move(w));
}

Loop remove_backtrack_at(const Loop& l, std::size_t i) {
    const std::size_t n = l.size();
    assert(n >= 2 && i < n);
    const std::size_t j = (i + 1) % n;
    assert(backtracks(l.word()[i], l.word()[j]));
    std::vector<Dir> w(l.word().begin(), l.word().end());
    std::vector<Vec> v(l.vertices().begin(), l.vertices().end());
    if (j > i) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i) + 2);
    } else {
        w.erase(w.begin());
        w.pop_back();
        v.erase(v.begin());
        v.pop_back();
    }
    if (w.empty()) return Loop{};
    return Loop(v.front(), std::move(w));
}

std::map<Edge, long> edge_multiplicities(const Loop& l) {
    std::map<Edge, long> m;
    for (std::size_t i = 0; i < l.size(); ++i) ++m[l.edge(i)];
    return m;
}

long PlaquetteAssignment::count(const Plaquette& p) const {
    auto it = counts_.find(p);
    return it == counts_.end() ? 0 : it->second;
}

void PlaquetteAssignment::add(const Plaquette& p, long n) {
    if (n == 0) return;
    auto [it, inserted] = counts_.try_emplace(p, 0);
    it->second += n;
    area_ += n;
    assert(it->second >= 0 && "assignment counts must stay non-negative");
    if (it->second == 0) counts_.erase(it);
}

PlaquetteAssignment PlaquetteAssignment::translated(Vec by) const {
    PlaquetteAssignment out;
    for (const auto& [p, n] : counts_) out.add(Plaquette{p.base + by, p.positive}, n);
    return out;
}

PlaquetteAssignment rotate90(const PlaquetteAssignment& k) {
    PlaquetteAssignment out;
    for (const auto& [p, n] : k.counts()) out.add(rotate90(p), n);
    return out;
}

namespace {

void append_long(std::string& s, long v) {
    char buf[24];
    const int len = std::snprintf(buf, sizeof buf, "%ld", v);
    s.append(buf, static_cast<std::size_t>(len));
}

// Serialize (loop rotated to start at edge r, assignment) after translating
// everything so the rotation's start vertex sits at the origin.
std::string key_candidate(const Loop& l, const PlaquetteAssignment& k, std::size_t r) {
    const std::size_t n = l.size();
    std::string s;
    s.reserve(n + 16 * k.support_size() + 2);
    for (std::size_t i = 0; i < n; ++i) s.push_back(dir_char(l.word()[(r + i) % n]));
    s.push_back('|');
    const Vec off = n == 0 ? Vec{} : l.vertices()[r];
    // counts_ is ordered by (base, sign); translation preserves that order.
    for (const auto& [p, c] : k.counts()) {
        append_long(s, p.base.x - off.x);
        s.push_back(',');
        append_long(s, p.base.y - off.y);
        s.push_back(p.positive ? '+' : '-');
        append_long(s, c);
        s.push_back(';');
    }
    return s;
}

} // namespace

CanonicalForm canonical_form(const Loop& l, const PlaquetteAssignment& k) {
    const std::size_t n = l.size();
    if (n == 0) {
        // Anchor a loopless assignment at its first support square.
        const Vec off = k.zero() ? Vec{} : k.counts().begin()->first.base;
        PlaquetteAssignment shifted = k.translated({-off.x, -off.y});
        std::string key = key_candidate(l, shifted, 0);
        return {std::move(key), Loop{}, std::move(shifted)};
    }
    // Find the rotations whose direction word is lexicographically minimal,
    // then take the smallest full serialization among just those.
    std::vector<std::size_t> best_rots{0};
    for (std::size_t r = 1; r < n; ++r) {
        int cmp = 0;
        const std::size_t b = best_rots[0];
        for (std::size_t i = 0; i < n; ++i) {
            const char cr = dir_char(l.word()[(r + i) % n]);
            const char cb = dir_char(l.word()[(b + i) % n]);
            if (cr != cb) {
                cmp = cr < cb ? -1 : 1;
                break;
            }
        }
        if (cmp < 0) {
            best_rots.assign(1, r);
        } else if (cmp == 0) {
            best_rots.push_back(r);
        }
    }
    std::string best;
    std::size_t best_r = best_rots.front();
    for (std::size_t r : best_rots) {
        std::string cand = key_candidate(l, k, r);
        if (best.empty() || cand < best) {
            best = std::move(cand);
            best_r = r;
        }
    }
    const Vec off = l.vertices()[best_r];
    return {std::move(best), l.rotated_to(best_r).translated({-off.x, -off.y}),
            k.translated({-off.x, -off.y})};
}

std::string canonical_key(const Loop& l, const PlaquetteAssignment& k) {
    return canonical_form(l, k).key;
}

} // namespace wilson
