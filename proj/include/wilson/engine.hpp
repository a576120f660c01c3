#pragma once

#include "wilson/canonical.hpp"
#include "wilson/geometry.hpp"
#include "wilson/lattice.hpp"
#include "wilson/rational.hpp"

#include <atomic>
#include <cstdint>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wilson {

// How the recursion picks the edge to expand on (always evaluated on the
// canonical representative, so the choice is deterministic).
enum class Strategy { first, boundary, min_branch };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

// One application of the splitting rule at edge 0 of the loop: a second
// traversal of the same edge splits off the stretch between the two visits; a
// traversal of the reverse edge excises it.  `positive` records which kind.
struct Splitting {
    Loop first;
    Loop second;
    bool positive = false;
};

// Expansion of edge 0 across a plaquette charged in the assignment.  The new
// loop replaces / extends the edge by the plaquette's remaining boundary; the
// plaquette's count drops by one.  `attach` distinguishes plaquettes
// traversing the edge itself (attached, enters negatively in the relation)
// from those traversing its reverse (absorbed, enters positively).
struct Deformation {
    Loop loop;
    Plaquette plaquette;
    bool attach = false;
};

// All splittings of the loop at its edge `at`.
std::vector<Splitting> enumerate_splittings(const Loop& l, std::size_t at);

// All deformations of the loop at its edge `at` under the assignment.
std::vector<Deformation> enumerate_deformations(const Loop& l, std::size_t at,
                                                const PlaquetteAssignment& k);

// All ways to decompose k = k1 + k2 with (l1, k1) and (l2, k2) both balanced.
// Requires (l1 concat l2, k) balanced; per square the admissible counts form
// an interval, so the decompositions form a product of independent ranges.
std::vector<std::pair<PlaquetteAssignment, PlaquetteAssignment>>
balanced_decompositions(const Loop& l1, const Loop& l2, const PlaquetteAssignment& k);

// Index of the edge the strategy expands, given the canonical representative.
std::size_t select_edge(const Loop& l, const PlaquetteAssignment& k, Strategy s);

struct EngineStats {
    std::uint64_t recursion_calls = 0;
    std::uint64_t memo_hits = 0;
};

// Memoized evaluator for the fixed-assignment coefficients and the resulting
// expectation polynomial.  The memo key is the exact translation/rotation
// normal form, so results are shared across all placements of a subloop.
class Engine {
public:
    explicit Engine(Strategy s = Strategy::boundary);

    // Coefficient of the (loop, assignment) pair: 1 on the trivial pair,
    // 0 on unbalanced or degenerate pairs, else the expansion at the
    // strategy-selected edge.
    Rational coefficient(const Loop& l, const PlaquetteAssignment& k);

    // Same, but the root call expands at the given edge of the backtrack-free
    // loop instead of consulting the strategy (recursive calls still use it).
    Rational coefficient_rooted(const Loop& l, const PlaquetteAssignment& k,
                                std::size_t root_edge);

    // Full expectation: sum of coefficient * beta^area over the canonical
    // collection.  The trivial loop yields the constant polynomial 1.
    Polynomial expectation(const Loop& l);
    Polynomial expectation_parallel(const Loop& l, int threads);

    // Per-assignment breakdown (assignment, coefficient) in collection order.
    std::vector<std::pair<PlaquetteAssignment, Rational>> breakdown(const Loop& l);

    Strategy strategy() const { return strategy_; }
    EngineStats stats() const;
    std::size_t memo_entries() const;
    void set_memo_limit(std::size_t limit) { memo_limit_ = limit; } // 0 = none

private:
    struct Measure {
        long area;
        long length;
        bool operator<(const Measure& o) const {
            return area < o.area || (area == o.area && length < o.length);
        }
    };

    Rational eval(const Loop& l, const PlaquetteAssignment& k, const Measure* parent);
    Rational expand(const Loop& canon, const PlaquetteAssignment& k, std::size_t at,
                    Measure self);

    Strategy strategy_;
    std::unordered_map<std::string, Rational> memo_;
    mutable std::shared_mutex memo_mutex_;
    std::size_t memo_limit_ = 0;
    std::atomic<std::uint64_t> calls_{0};
    std::atomic<std::uint64_t> hits_{0};
};

// Convenience wrapper: expectation polynomial with a fresh engine.
Polynomial wilson_expectation(const Loop& l, Strategy s = Strategy::boundary);

} // namespace wilson
