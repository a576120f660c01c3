#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace wilson {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// exact binomial coefficient; zero for k < 0 or k > n (n >= 0 assumed)
Int binomial(long n, long k);

// polynomial in beta with exact rational coefficients, sparse by exponent.
// zero coefficients are never stored.
class Polynomial {
  public:
    Polynomial() = default;
    static Polynomial monomial(long exponent, Rational coeff);

    void add_term(long exponent, const Rational& coeff);
    const std::map<long, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    // evaluate at a rational point, exactly
    Rational evaluate(const Rational& beta) const;
    double evaluate(double beta) const;

    // "3*beta^9" / "beta^3 - beta^5" / "0"; coefficients printed as
    // integers or num/den fractions, exponents descending? -> ascending
    std::string to_string() const;

  private:
    std::map<long, Rational> terms_;
};

}  // namespace wilson
