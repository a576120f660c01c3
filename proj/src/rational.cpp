#include "wilson/rational.hpp"

#include <sstream>

namespace wilson {

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact: product of j consecutive integers divides by j!
    }
    return r;
}

Polynomial Polynomial::monomial(long exponent, Rational coeff) {
    Polynomial p;
    p.add_term(exponent, coeff);
    return p;
}

void Polynomial::add_term(long exponent, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

Rational Polynomial::evaluate(const Rational& beta) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational pw = 1;
        for (long i = 0; i < e; ++i) pw *= beta;
        acc += c * pw;
    }
    return acc;
}

double Polynomial::evaluate(double beta) const {
    double acc = 0;
    for (const auto& [e, c] : terms_)
        acc += static_cast<double>(c) * std::pow(beta, static_cast<double>(e));
    return acc;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && e != 0;
        if (!unit) {
            os << numerator(a);
            if (denominator(a) != 1) os << "/" << denominator(a);
            if (e != 0) os << "*";
        }
        if (e != 0) {
            os << "beta";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace wilson
