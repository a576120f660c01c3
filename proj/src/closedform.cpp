#include "wilson/closedform.hpp"

#include <cassert>
#include <cmath>

namespace wilson {

Rational winding_coefficient(long n, long a) {
    assert(n >= 1 && a >= 1);
    if (a == 1) return n == 1 ? 1 : 0; // the area-1 binomial degenerates
    Rational r(binomial(n * a - 2, n - 1), Int(n));
    return (n % 2 == 0) ? -r : r;
}

std::vector<Rational> peeled_winding_coefficients(long a, long n_max) {
    assert(a >= 1 && n_max >= 0);
    const std::size_t N = static_cast<std::size_t>(n_max);
    // cur[n] holds the coefficient at the current area; table[n][m] the
    // auxiliary values while one more unit of area is absorbed.
    std::vector<Rational> cur(N + 1, Rational(0));
    cur[0] = 1;
    if (N >= 1) cur[1] = 1; // area 1: only the single winding survives
    for (long b = 2; b <= a; ++b) {
        std::vector<Rational> prev = cur;
        std::vector<std::vector<Rational>> table(N + 1);
        for (std::size_t n = 1; n <= N; ++n) {
            table[n].assign(n + 1, Rational(0));
            table[n][0] = prev[n];
            for (std::size_t m = 1; m <= n; ++m) {
                Rational v = table[n][m - 1];
                for (std::size_t i = 1; i < m; ++i) {
                    v -= cur[i] * table[n - i][m - i];
                }
                table[n][m] = v;
            }
            cur[n] = table[n][n]; // diagonal entry is the new coefficient
        }
    }
    return cur;
}

FormalSeries FormalSeries::operator+(const FormalSeries& o) const {
    assert(order() == o.order());
    FormalSeries r(order());
    for (std::size_t i = 0; i < order(); ++i) r[i] = c_[i] + o[i];
    return r;
}

FormalSeries FormalSeries::operator-(const FormalSeries& o) const {
    assert(order() == o.order());
    FormalSeries r(order());
    for (std::size_t i = 0; i < order(); ++i) r[i] = c_[i] - o[i];
    return r;
}

FormalSeries FormalSeries::operator*(const FormalSeries& o) const {
    assert(order() == o.order());
    FormalSeries r(order());
    for (std::size_t i = 0; i < order(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < order(); ++j) {
            if (o[j] == 0) continue;
            r[i + j] += c_[i] * o[j];
        }
    }
    return r;
}

FormalSeries FormalSeries::pow(long k) const {
    assert(k >= 0);
    FormalSeries r(order());
    r[0] = 1;
    for (long i = 0; i < k; ++i) r = r * (*this);
    return r;
}

bool FormalSeries::is_zero() const {
    for (const Rational& v : c_) {
        if (v != 0) return false;
    }
    return true;
}

FormalSeries series_identity_residual(long a, std::size_t order) {
    assert(a >= 1 && order >= 1);
    FormalSeries c(order);
    c[0] = 1;
    for (std::size_t n = 1; n < order; ++n) {
        c[n] = winding_coefficient(static_cast<long>(n), a);
    }
    FormalSeries t(order);
    if (order > 1) t[1] = 1;
    return c.pow(a) - c.pow(a - 1) - t;
}

Rational levy_bracket(long n, const Rational& alpha) {
    assert(n >= 1);
    Rational acc = 0;
    Rational pw = 1;       // (-alpha)^k
    Int fact = 1;          // k!
    Rational npow(1, Int(n)); // n^(k-1)
    for (long k = 0; k <= n - 1; ++k) {
        if (k > 0) {
            pw *= -alpha;
            fact *= k;
            npow *= n;
        }
        acc += pw / fact * npow * binomial(n, k + 1);
    }
    return acc;
}

double levy_continuum(long n, double alpha) {
    const Rational a(alpha); // exact binary-to-rational conversion
    return static_cast<double>(levy_bracket(n, a)) *
           std::exp(-static_cast<double>(n) * alpha / 2.0);
}

} // namespace wilson
