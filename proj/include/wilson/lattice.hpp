#pragma once

#include "wilson/errors.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wilson {

// Lattice site (also used as a plaquette base = lower-left corner of a unit
// square, and as a general integer offset).
struct Vec {
    long x = 0;
    long y = 0;
    auto operator<=>(const Vec&) const = default;
};

inline Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
inline Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }

// Oriented unit directions.  An oriented edge is positive iff its direction
// is E or N; the reverse edge swaps tail/head.
enum class Dir : int { E = 0, N = 1, W = 2, S = 3 };

Vec step(Dir d);
Dir reverse_dir(Dir d);
char dir_char(Dir d);          // 'E', 'N', 'W', 'S'
char move_char(Dir d);         // 'R', 'U', 'L', 'D'
Dir dir_from_move(char c);     // accepts U/D/L/R, throws ParseError otherwise
Dir rotate90(Dir d);           // counter-clockwise quarter turn
bool is_positive_dir(Dir d);

// Oriented lattice edge, stored as (tail vertex, direction).
struct Edge {
    Vec tail;
    Dir dir = Dir::E;
    auto operator<=>(const Edge&) const = default;

    Vec head() const { return tail + step(dir); }
    Edge reversed() const { return Edge{head(), reverse_dir(dir)}; }
    bool positive() const { return is_positive_dir(dir); }
    // Positively oriented representative of the underlying unoriented edge.
    Edge positive_form() const { return positive() ? *this : reversed(); }
};

// Oriented plaquette: the unit square with lower-left corner `base`,
// traversed counter-clockwise in word order N,E,S,W when positive and
// clockwise (E,N,W,S) when negative.  The two orientations are mutual
// inverses.
struct Plaquette {
    Vec base;
    bool positive = true;
    auto operator<=>(const Plaquette&) const = default;

    Plaquette inverse() const { return {base, !positive}; }
};

// Boundary word of a plaquette, starting at its base corner.
std::array<Edge, 4> plaquette_word(const Plaquette& p);

// The two oriented plaquettes whose boundary word traverses `e` with matching
// orientation: always exactly one positive and one negative.
std::array<Plaquette, 2> plaquettes_containing(const Edge& e);

// Rotate the plane a quarter turn counter-clockwise about the origin.
Vec rotate90(Vec v);
Edge rotate90(const Edge& e);
Plaquette rotate90(const Plaquette& p);

// A rooted lattice loop: a base vertex plus a word of unit steps returning to
// the base.  The null loop has an empty word.  Words may repeat edges (loops
// need not be embedded).
class Loop {
public:
    Loop() = default;
    Loop(Vec base, std::vector<Dir> word);

    static Loop from_moves(Vec origin, std::string_view moves);
    static Loop from_vertices(const std::vector<Vec>& vs);

    bool empty() const { return word_.empty(); }
    std::size_t size() const { return word_.size(); }
    Vec base() const { return base_; }
    const std::vector<Dir>& word() const { return word_; }
    // Tail vertex of edge i (vertex 0 is the base).
    const std::vector<Vec>& vertices() const { return verts_; }
    Edge edge(std::size_t i) const { return Edge{verts_[i], word_[i]}; }

    std::string moves() const;   // word as U/D/L/R characters

    Loop rotated_to(std::size_t i) const;   // cyclic shift: edge i becomes edge 0
    Loop translated(Vec by) const;
    Loop wound(long n) const;               // word repeated n >= 1 times

    bool operator==(const Loop&) const = default;

private:
    Vec base_;
    std::vector<Dir> word_;
    std::vector<Vec> verts_;   // word_.size() entries; verts_[0] == base_
};

Loop rotate90(const Loop& l);

// Erase backtracking pairs (an edge immediately followed by its reverse,
// cyclically) until none remain.  Deterministic: always erases the
// lowest-index pair first.  The reduced cyclic loop is independent of the
// erasure order; only the starting edge can differ.
Loop remove_backtracks(const Loop& l);

// Erase the single backtracking pair at positions (i, i+1 mod n); requires
// that those two edges actually backtrack.  Used to test erasure confluence.
Loop remove_backtrack_at(const Loop& l, std::size_t i);

// Number of times each oriented edge is traversed.
std::map<Edge, long> edge_multiplicities(const Loop& l);

// Finitely supported map from oriented plaquettes to positive counts.
class PlaquetteAssignment {
public:
    PlaquetteAssignment() = default;

    long count(const Plaquette& p) const;
    void add(const Plaquette& p, long n);    // n may be negative; zeros vanish
    long area() const { return area_; }      // total count over both orientations
    bool zero() const { return counts_.empty(); }
    std::size_t support_size() const { return counts_.size(); }

    const std::map<Plaquette, long>& counts() const { return counts_; }

    PlaquetteAssignment translated(Vec by) const;

    bool operator==(const PlaquetteAssignment&) const = default;

private:
    std::map<Plaquette, long> counts_;
    long area_ = 0;
};

PlaquetteAssignment rotate90(const PlaquetteAssignment& k);

// Exact normal form of the pair (loop, assignment) under translation and
// cyclic rotation of the word.  Distinct configurations map to distinct
// strings; translates/rotations map to the same string.
std::string canonical_key(const Loop& l, const PlaquetteAssignment& k);

// The key together with the representative realizing it (loop rotated to the
// minimal word and translated so its base is the origin, assignment shifted
// along).  Edge selection happens on the representative so it is stable
// across all placements of the same configuration.
struct CanonicalForm {
    std::string key;
    Loop loop;
    PlaquetteAssignment assignment;
};
CanonicalForm canonical_form(const Loop& l, const PlaquetteAssignment& k);

} // namespace wilson
