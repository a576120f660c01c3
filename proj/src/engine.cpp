#include "wilson/engine.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace wilson {

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::first: return "first";
        case Strategy::boundary: return "boundary";
        case Strategy::min_branch: return "min_branch";
    }
    return "?";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "first") return Strategy::first;
    if (name == "boundary") return Strategy::boundary;
    if (name == "min_branch") return Strategy::min_branch;
    throw ParseError("unknown strategy '" + name + "'");
}

namespace {

std::vector<Dir> slice(const std::vector<Dir>& w, std::size_t from, std::size_t to) {
    return {w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to)};
}

Loop make_loop(Vec base, std::vector<Dir> word) {
    if (word.empty()) return Loop{};
    return Loop(base, std::move(word));
}

} // namespace

std::vector<Splitting> enumerate_splittings(const Loop& l, std::size_t at) {
    std::vector<Splitting> out;
    if (l.empty()) return out;
    const Loop rot = l.rotated_to(at);
    const Edge e = rot.edge(0);
    const Edge erev = e.reversed();
    const std::size_t n = rot.size();
    const auto& w = rot.word();
    for (std::size_t j = 1; j < n; ++j) {
        if (rot.edge(j) == e) {
            // another traversal of e: keep e plus the outside stretch,
            // split off the stretch between the two visits
            std::vector<Dir> w1{w[0]};
            auto tail = slice(w, j + 1, n);
            w1.insert(w1.end(), tail.begin(), tail.end());
            std::vector<Dir> w2 = slice(w, 1, j);
            w2.push_back(w[j]);
            out.push_back({make_loop(rot.vertices()[0], std::move(w1)),
                           make_loop(rot.vertices()[1 % n], std::move(w2)), true});
        } else if (rot.edge(j) == erev) {
            // a traversal of the reverse edge: excise both visits
            out.push_back({make_loop(j + 1 < n ? rot.vertices()[j + 1] : rot.vertices()[0],
                                     slice(w, j + 1, n)),
                           make_loop(rot.vertices()[1 % n], slice(w, 1, j)), false});
        }
    }
    return out;
}

std::vector<Deformation> enumerate_deformations(const Loop& l, std::size_t at,
                                                const PlaquetteAssignment& k) {
    std::vector<Deformation> out;
    if (l.empty()) return out;
    const Loop rot = l.rotated_to(at);
    const Edge e = rot.edge(0);
    const std::size_t n = rot.size();
    const auto& w = rot.word();
    const std::vector<Dir> pi1 = slice(w, 1, n);

    // absorbed: plaquettes traversing the reverse edge; the edge is replaced
    // by the rest of the plaquette boundary
    for (const Plaquette& q : plaquettes_containing(e.reversed())) {
        if (k.count(q) < 1) continue;
        const auto qw = plaquette_word(q);
        std::size_t pos = 4;
        for (std::size_t i = 0; i < 4; ++i) {
            if (qw[i] == e.reversed()) pos = i;
        }
        assert(pos < 4);
        std::vector<Dir> word;
        word.reserve(n + 2);
        for (std::size_t i = 1; i < 4; ++i) word.push_back(qw[(pos + i) % 4].dir);
        word.insert(word.end(), pi1.begin(), pi1.end());
        out.push_back({make_loop(e.tail, std::move(word)), q, false});
    }

    // attached: plaquettes traversing the edge itself; their boundary is
    // spliced in after the edge, which is then traversed again
    for (const Plaquette& q : plaquettes_containing(e)) {
        if (k.count(q) < 1) continue;
        const auto qw = plaquette_word(q);
        std::size_t pos = 4;
        for (std::size_t i = 0; i < 4; ++i) {
            if (qw[i] == e) pos = i;
        }
        assert(pos < 4);
        std::vector<Dir> word;
        word.reserve(n + 4);
        word.push_back(e.dir);
        for (std::size_t i = 1; i < 4; ++i) word.push_back(qw[(pos + i) % 4].dir);
        word.push_back(e.dir);
        word.insert(word.end(), pi1.begin(), pi1.end());
        out.push_back({make_loop(e.tail, std::move(word)), q, true});
    }
    return out;
}

std::vector<std::pair<PlaquetteAssignment, PlaquetteAssignment>>
balanced_decompositions(const Loop& l1, const Loop& l2, const PlaquetteAssignment& k) {
    std::vector<std::pair<PlaquetteAssignment, PlaquetteAssignment>> out;
    const std::map<Vec, long> h1 = height_field(l1);
    const std::map<Vec, long> h2 = height_field(l2);
    auto at = [](const std::map<Vec, long>& m, Vec s) {
        auto it = m.find(s);
        return it == m.end() ? 0L : it->second;
    };
    std::set<Vec> squares;
    for (const auto& [p, n] : k.counts()) squares.insert(p.base);
    for (const auto& [s, v] : h1) squares.insert(s);
    for (const auto& [s, v] : h2) squares.insert(s);

    // Per square, balance pins the signed excess of each part: the part-1
    // positive count x ranges over an interval and everything else follows.
    struct Range {
        Vec s;
        long delta; // x - (negative count of part 1)
        long lo, hi;
    };
    std::vector<Range> ranges;
    for (const Vec& s : squares) {
        const long kp = k.count({s, true});
        const long kn = k.count({s, false});
        if (kp - kn != -(at(h1, s) + at(h2, s))) return out; // total not balanced
        const long delta = -at(h1, s);
        const long lo = std::max(0L, delta);
        const long hi = std::min(kp, kn + delta);
        if (lo > hi) return out;
        ranges.push_back({s, delta, lo, hi});
    }
    std::vector<long> x;
    x.reserve(ranges.size());
    for (const Range& r : ranges) x.push_back(r.lo);
    for (;;) {
        PlaquetteAssignment k1, k2;
        for (std::size_t i = 0; i < ranges.size(); ++i) {
            const Range& r = ranges[i];
            k1.add({r.s, true}, x[i]);
            k1.add({r.s, false}, x[i] - r.delta);
            k2.add({r.s, true}, k.count({r.s, true}) - x[i]);
            k2.add({r.s, false}, k.count({r.s, false}) - (x[i] - r.delta));
        }
        out.emplace_back(std::move(k1), std::move(k2));
        std::size_t i = ranges.size();
        while (i > 0) {
            --i;
            if (x[i] < ranges[i].hi) {
                ++x[i];
                for (std::size_t j = i + 1; j < ranges.size(); ++j) x[j] = ranges[j].lo;
                break;
            }
            if (i == 0) return out;
        }
        if (ranges.empty()) return out;
    }
}

namespace {

// Crossings (with multiplicity, both orientations) of loop edges parallel to
// e strictly beyond it along one of the two perpendicular rays.
long ray_crossings(const Loop& l, const Edge& e, bool forward) {
    long n = 0;
    const bool vertical = (e.dir == Dir::N || e.dir == Dir::S);
    // span coordinate of the edge segment
    const long a = vertical ? e.tail.x : std::min(e.tail.x, e.head().x);
    const long b = vertical ? std::min(e.tail.y, e.head().y) : e.tail.y;
    for (std::size_t i = 0; i < l.size(); ++i) {
        const Edge f = l.edge(i);
        const bool fvert = (f.dir == Dir::N || f.dir == Dir::S);
        if (fvert != vertical) continue;
        const long fa = fvert ? f.tail.x : std::min(f.tail.x, f.head().x);
        const long fb = fvert ? std::min(f.tail.y, f.head().y) : f.tail.y;
        if (vertical) {
            if (fb != b) continue;
            if (forward ? fa > a : fa < a) ++n;
        } else {
            if (fa != a) continue;
            if (forward ? fb > b : fb < b) ++n;
        }
    }
    return n;
}

} // namespace

std::size_t select_edge(const Loop& l, const PlaquetteAssignment& k, Strategy s) {
    assert(!l.empty());
    if (s == Strategy::first) return 0;
    std::size_t best = 0;
    long best_score = -1;
    for (std::size_t i = 0; i < l.size(); ++i) {
        long score = 0;
        if (s == Strategy::boundary) {
            const Edge e = l.edge(i);
            score = std::min(ray_crossings(l, e, true), ray_crossings(l, e, false));
        } else {
            const Edge e = l.edge(i);
            const Edge erev = e.reversed();
            for (std::size_t j = 0; j < l.size(); ++j) {
                if (j == i) continue;
                if (l.edge(j) == e || l.edge(j) == erev) ++score;
            }
            for (const Plaquette& q : plaquettes_containing(e)) {
                if (k.count(q) >= 1) ++score;
            }
            for (const Plaquette& q : plaquettes_containing(erev)) {
                if (k.count(q) >= 1) ++score;
            }
        }
        if (best_score < 0 || score < best_score) {
            best_score = score;
            best = i;
        }
    }
    return best;
}

Engine::Engine(Strategy s) : strategy_(s) {
    // global entry cap honored by every engine; explicit set_memo_limit
    // overrides it afterwards
    if (const char* cap = std::getenv("WILSON_MEMO_LIMIT")) {
        memo_limit_ = std::strtoull(cap, nullptr, 10);
    }
}

EngineStats Engine::stats() const {
    return {calls_.load(std::memory_order_relaxed), hits_.load(std::memory_order_relaxed)};
}

std::size_t Engine::memo_entries() const {
    std::shared_lock lock(memo_mutex_);
    return memo_.size();
}

Rational Engine::coefficient(const Loop& l, const PlaquetteAssignment& k) {
    return eval(l, k, nullptr);
}

Rational Engine::coefficient_rooted(const Loop& l, const PlaquetteAssignment& k,
                                    std::size_t root_edge) {
    const Loop red = remove_backtracks(l);
    const Measure self{k.area(), static_cast<long>(red.size())};
    if (red.empty()) return k.zero() ? Rational(1) : Rational(0);
    if (k.zero()) return 0;
    if (!is_balanced(red, k)) return 0;
    assert(root_edge < red.size());
    return expand(red, k, root_edge, self);
}

Rational Engine::eval(const Loop& l_in, const PlaquetteAssignment& k, const Measure* parent) {
    calls_.fetch_add(1, std::memory_order_relaxed);
    const Loop l = remove_backtracks(l_in);
    const Measure self{k.area(), static_cast<long>(l.size())};
    if (parent != nullptr) {
        assert(self < *parent && "recursion measure must strictly decrease");
    }
    if (l.empty()) return k.zero() ? Rational(1) : Rational(0);
    if (k.zero()) return 0;
    if (!is_balanced(l, k)) return 0;

    CanonicalForm cf = canonical_form(l, k);
    {
        std::shared_lock lock(memo_mutex_);
        auto it = memo_.find(cf.key);
        if (it != memo_.end()) {
            hits_.fetch_add(1, std::memory_order_relaxed);
            return it->second;
        }
    }
    const std::size_t at = select_edge(cf.loop, cf.assignment, strategy_);
    Rational val = expand(cf.loop, cf.assignment, at, self);
    {
        std::unique_lock lock(memo_mutex_);
        auto it = memo_.find(cf.key);
        if (it != memo_.end()) {
            // another thread got here first; results must agree
            assert(it->second == val);
            return it->second;
        }
        if (memo_limit_ != 0 && memo_.size() >= memo_limit_) {
            std::ostringstream os;
            os << "memo table reached its cap of " << memo_limit_ << " entries";
            throw MemoLimitExceeded(os.str());
        }
        memo_.emplace(std::move(cf.key), val);
    }
    return val;
}

Rational Engine::expand(const Loop& canon, const PlaquetteAssignment& k, std::size_t at,
                        Measure self) {
    Rational acc = 0;
    for (const Splitting& s : enumerate_splittings(canon, at)) {
        for (auto& [k1, k2] : balanced_decompositions(s.first, s.second, k)) {
            Rational a = eval(s.first, k1, &self);
            if (a == 0) continue;
            Rational b = eval(s.second, k2, &self);
            if (b == 0) continue;
            if (s.positive) {
                acc -= a * b;
            } else {
                acc += a * b;
            }
        }
    }
    for (const Deformation& d : enumerate_deformations(canon, at, k)) {
        PlaquetteAssignment rest = k;
        rest.add(d.plaquette, -1);
        Rational t = eval(d.loop, rest, &self);
        if (d.attach) {
            acc -= t;
        } else {
            acc += t;
        }
    }
    return acc;
}

Polynomial Engine::expectation(const Loop& l) {
    const Loop red = remove_backtracks(l);
    if (red.empty()) return Polynomial::monomial(0, 1);
    const CanonicalCollection cc = canonical_collection(red);
    Polynomial out;
    for (const PlaquetteAssignment& k : cc.all) {
        out.add_term(k.area(), coefficient(red, k));
    }
    return out;
}

Polynomial Engine::expectation_parallel(const Loop& l, int threads) {
    const Loop red = remove_backtracks(l);
    if (red.empty()) return Polynomial::monomial(0, 1);
    const CanonicalCollection cc = canonical_collection(red);
    const std::size_t m = cc.all.size();
    const std::size_t nthreads =
        std::min<std::size_t>(std::max(1, threads), m);
    std::vector<Rational> coeffs(m);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= m) return;
            try {
                coeffs[i] = coefficient(red, cc.all[i]);
            } catch (...) {
                std::lock_guard<std::mutex> g(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    Polynomial out;
    for (std::size_t i = 0; i < m; ++i) out.add_term(cc.all[i].area(), coeffs[i]);
    return out;
}

std::vector<std::pair<PlaquetteAssignment, Rational>> Engine::breakdown(const Loop& l) {
    std::vector<std::pair<PlaquetteAssignment, Rational>> out;
    const Loop red = remove_backtracks(l);
    if (red.empty()) return out;
    const CanonicalCollection cc = canonical_collection(red);
    out.reserve(cc.all.size());
    for (const PlaquetteAssignment& k : cc.all) {
        out.emplace_back(k, coefficient(red, k));
    }
    return out;
}

Polynomial wilson_expectation(const Loop& l, Strategy s) {
    Engine e(s);
    return e.expectation(l);
}

} // namespace wilson
