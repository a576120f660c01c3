#pragma once

#include "wilson/rational.hpp"

#include <vector>

namespace wilson {

// Coefficient of the n-fold winding of a simple loop of area a:
//   (-1)^(n+1) / n * C(n*a - 2, n - 1),
// which degenerates to [n == 1] when a = 1.  Requires n >= 1, a >= 1.
Rational winding_coefficient(long n, long a);

// The same numbers through the area-peeling recurrence, computed for
// n = 0 .. n_max (entry 0 is the conventional 1).  Grows the area one unit at
// a time from the a = 1 base, lowering an auxiliary index m = n..1 at each
// area with the convolution correction.
std::vector<Rational> peeled_winding_coefficients(long a, long n_max);

// Truncated power series in t with exact coefficients, degree < order.
class FormalSeries {
public:
    explicit FormalSeries(std::size_t order) : c_(order, Rational(0)) {}

    std::size_t order() const { return c_.size(); }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }

    FormalSeries operator+(const FormalSeries& o) const;
    FormalSeries operator-(const FormalSeries& o) const;
    FormalSeries operator*(const FormalSeries& o) const;
    FormalSeries pow(long k) const;
    bool is_zero() const;

private:
    std::vector<Rational> c_;
};

// Residual of the defining functional equation of the winding generating
// function C(t) = 1 + sum_n winding_coefficient(n, a) t^n:
//   C^a - C^(a-1) - t,
// truncated past degree `order` - 1.  Identically zero for every a >= 1.
FormalSeries series_identity_residual(long a, std::size_t order);

// Exact bracket of the continuum (area -> alpha) winding coefficient:
//   sum_{k=0}^{n-1} (-alpha)^k / k! * n^(k-1) * C(n, k+1),
// so the continuum value is bracket * exp(-n * alpha / 2).
Rational levy_bracket(long n, const Rational& alpha);

// Continuum winding coefficient at real alpha > 0.
double levy_continuum(long n, double alpha);

} // namespace wilson
