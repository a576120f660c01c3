#include "wilson/spectral.hpp"

#include "wilson/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <sstream>

namespace wilson {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kHuge = 1e300;

// log |t_n| for t_n = winding_coefficient(n, a) * beta^(n a), valid at real n
// so the tail machinery can integrate and differentiate it:
//   |t_n| = C(n a - 2, n - 1) / n * |beta|^(n a)
//         = exp(lgamma(na-1) - lgamma(n) - lgamma(na-n) - log n + na log|beta|).
// Beyond n ~ 1e4 the three lgamma values cancel to a result many orders
// smaller than themselves, so the difference is expanded symbolically with
// Stirling's series: the linear parts collapse into n log q (q the growth
// ratio, exactly representable) and everything left is O(log n).
double log_moment_magnitude(double n, long a, double abs_beta) {
    const double da = static_cast<double>(a);
    const double na = n * da;
    if (n < 1e4) {
        return std::lgamma(na - 1.0) - std::lgamma(n) - std::lgamma(na - n) -
               std::log(n) + na * std::log(abs_beta);
    }
    const double log_q = std::log((da - 1.0) * std::pow(da / (da - 1.0), da) *
                                  std::pow(abs_beta, da));
    const double z1 = na - 1.0, z3 = n * (da - 1.0);
    const double stirling_tail = 1.0 / (12.0 * z1) - 1.0 / (360.0 * z1 * z1 * z1) -
                                 (1.0 / (12.0 * n) - 1.0 / (360.0 * n * n * n)) -
                                 (1.0 / (12.0 * z3) - 1.0 / (360.0 * z3 * z3 * z3));
    return n * log_q - 1.5 * std::log(n) - 1.5 * std::log(da) +
           0.5 * std::log(da - 1.0) - 0.5 * std::log(2.0 * kPi) + 1.0 +
           (na - 1.5) * std::log1p(-1.0 / na) + stirling_tail;
}

double moment_magnitude(double n, long a, double abs_beta) {
    if (abs_beta == 0.0) return 0.0;
    return std::exp(log_moment_magnitude(n, a, abs_beta));
}

// t_n itself; sign (-1)^(n+1) from the coefficient, beta^(n a) from the power.
double moment(long n, long a, double beta) {
    double m = moment_magnitude(static_cast<double>(n), a, std::abs(beta));
    if (n % 2 == 0) m = -m;
    if (beta < 0 && (n * a) % 2 != 0) m = -m;
    return m;
}

// Adaptive Simpson with an absolute tolerance.
double simpson(const std::function<double(double)>& f, double lo, double hi, double flo,
               double fmid, double fhi, double whole, double tol, int depth) {
    const double mid = (lo + hi) / 2.0;
    const double fl = f((lo + mid) / 2.0), fr = f((mid + hi) / 2.0);
    const double left = (mid - lo) / 6.0 * (flo + 4.0 * fl + fmid);
    const double right = (hi - mid) / 6.0 * (fmid + 4.0 * fr + fhi);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return simpson(f, lo, mid, flo, fl, fmid, left, tol / 2.0, depth - 1) +
           simpson(f, mid, hi, fmid, fr, fhi, right, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double mid = (lo + hi) / 2.0;
    const double flo = f(lo), fmid = f(mid), fhi = f(hi);
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    return simpson(f, lo, hi, flo, fmid, fhi, whole, tol, 48);
}

// Tail sum_{n > M} g(n) z^n with |z| = 1 after M direct terms: Abel summation
// by parts leaves forward differences that shrink like (k/n)^k near the
// convergence boundary, each round paying a factor 1/|1-z|.  The computed
// differences bottom out at the rounding noise 2^k g eps, which the same
// 1/|1-z| factors then amplify, so the expansion is truncated like an
// asymptotic series: stop as soon as a term fails to shrink.
std::complex<double> tail_by_parts(long M, long a, double abs_beta,
                                   const std::complex<double>& z) {
    constexpr int K = 8;
    double g[K + 1];
    for (int i = 0; i <= K; ++i) {
        g[i] = moment_magnitude(static_cast<double>(M + 1 + i), a, abs_beta);
    }
    // forward differences in place: after pass k, g[i] = delta^k g(M+1+i)
    std::complex<double> acc = 0.0;
    const std::complex<double> zM1 = std::pow(z, static_cast<double>(M + 1));
    std::complex<double> factor = zM1 / (1.0 - z);
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k < K; ++k) {
        const double mag = std::abs(factor) * std::abs(g[0]);
        if (mag > prev) break; // the differences hit their noise floor
        acc += factor * g[0];
        if (mag < 1e-18) break;
        prev = mag;
        factor *= z / (1.0 - z);
        for (int i = 0; i + k < K; ++i) g[i] = g[i + 1] - g[i];
    }
    return acc;
}

// g, g' and g'' at t, from central differences of the log magnitude (whose
// own scale is O(1), so the differences stay clean where exp(L) would cancel).
struct MagnitudeJet {
    double g = 0.0, g1 = 0.0, g2 = 0.0;
};
MagnitudeJet magnitude_jet(double t, long a, double abs_beta) {
    const double mid = log_moment_magnitude(t, a, abs_beta);
    if (!(mid > -700.0)) return {}; // underflow region: the jet is exactly 0
    const double h = std::max(0.5, 1e-6 * t);
    const double lo = log_moment_magnitude(t - h, a, abs_beta);
    const double hi = log_moment_magnitude(t + h, a, abs_beta);
    const double l1 = (hi - lo) / (2.0 * h);
    const double l2 = (hi - 2.0 * mid + lo) / (h * h);
    MagnitudeJet jet;
    jet.g = std::exp(mid);
    jet.g1 = l1 * jet.g;
    jet.g2 = (l2 + l1 * l1) * jet.g;
    return jet;
}

// 8-point Gauss-Legendre nodes on [-1, 1]: ample for ~1e-13 relative accuracy
// on segments capped to a third of t, a quarter oscillation period, and a
// bounded decay drop.
constexpr double kGaussNode[4] = {0.18343464249564980, 0.52553240991632899,
                                  0.79666647741362674, 0.96028985649753623};
constexpr double kGaussWeight[4] = {0.36268378337836198, 0.31370664587788729,
                                    0.22238103445337447, 0.10122853629037626};

// Tail sum_{n > M} g(n) cos(n theta) for |theta| << 1 (the near-singular
// window, where summation by parts loses to its own noise): midpoint
// Euler-Maclaurin against the integral
//   I = integral_{M+1/2}^inf g(t) cos(t theta) dt,
// so the tail is I + h'(M+1/2)/24 with h(t) = g(t) cos(t theta).  The head of
// I, up to t theta = 1000, is composite Gauss quadrature with the step
// limited by the three length scales in play (geometry t, oscillation
// 1/theta, decay 1/|log q|); it stops early once the remaining mass, at most
// 2 t g(t) since q <= 1, cannot matter.  Past t theta = 1000 the integral is
// reduced by parts into boundary terms, leaving an error below
// |g''(C)|/theta^3, which vanishes with theta for C = 1000/theta.
double tail_oscillatory(long M, long a, double abs_beta, double theta) {
    const double T = static_cast<double>(M) + 0.5;
    const double th = std::abs(theta);
    const double q = moment_growth_ratio(a, abs_beta);
    const double decay_step = q < 1.0 ? 4.0 / -std::log(q) : kHuge;
    const double phase_step = th > 0.0 ? (kPi / 2.0) / th : kHuge;
    const double C = std::min(std::max(1000.0 / th, T), kHuge);
    double integral = 0.0;
    double t = T;
    bool reached_end = t >= C;
    while (!reached_end) {
        if (2.0 * t * moment_magnitude(t, a, abs_beta) < 1e-17) break;
        const double hi = std::min(t + std::min({t / 3.0, phase_step, decay_step}), C);
        const double mid = (t + hi) / 2.0, half = (hi - t) / 2.0;
        for (int i = 0; i < 4; ++i) {
            for (double s : {-half * kGaussNode[i], half * kGaussNode[i]}) {
                integral += kGaussWeight[i] * half *
                            moment_magnitude(mid + s, a, abs_beta) * std::cos((mid + s) * th);
            }
        }
        t = hi;
        reached_end = t >= C;
    }
    if (reached_end) {
        const MagnitudeJet at_c = magnitude_jet(C, a, abs_beta);
        const double s = std::sin(C * th), c = std::cos(C * th);
        integral += -at_c.g * s / th - at_c.g1 * c / (th * th) +
                    at_c.g2 * s / (th * th * th);
    }
    const MagnitudeJet at_t = magnitude_jet(T, a, abs_beta);
    const double hprime = at_t.g1 * std::cos(T * th) - th * at_t.g * std::sin(T * th);
    return integral + hprime / 24.0;
}

} // namespace

double moment_growth_ratio(long a, double beta) {
    if (a == 1) return 0.0;
    const double da = static_cast<double>(a);
    return (da - 1.0) * std::pow(da / (da - 1.0), da) * std::pow(std::abs(beta), da);
}

double spectral_density_series(long a, double beta, double x, double tol) {
    if (a < 1) throw OutOfRegime("area must be at least 1");
    if (a == 1) {
        return (1.0 + 2.0 * beta * std::cos(x)) / (2.0 * kPi);
    }
    if (std::abs(beta) > 0.5) {
        std::ostringstream os;
        os << "series evaluation needs |beta| <= 1/2 when the area exceeds 1, got " << beta;
        throw OutOfRegime(os.str());
    }
    const double q = moment_growth_ratio(a, beta);
    assert(q <= 1.0 + 1e-12);
    double acc = 0.0;
    if (q <= 0.999) {
        // successive magnitudes shrink by at least q, so the tail after n is
        // bounded by |t_{n+1}| / (1 - q)
        for (long n = 1;; ++n) {
            acc += moment(n, a, beta) * std::cos(static_cast<double>(n) * x);
            const double tail =
                moment_magnitude(static_cast<double>(n + 1), a, std::abs(beta)) / (1.0 - q);
            if (tail < tol * kPi) break;
            assert(n < 200000 && "series summation failed to converge");
        }
        return (1.0 + 2.0 * acc) / (2.0 * kPi);
    }
    // Boundary sliver (growth ratio ~ 1, reachable only at area 2 with
    // |beta| ~ 1/2): direct terms plus an explicit analytic tail.  With
    // t_n = -sigma^n |t_n| the series is -Re sum |t_n| z^n over z = sigma e^{ix}.
    double sigma = -1.0;
    if (beta < 0 && a % 2 != 0) sigma = 1.0;
    const std::complex<double> z = sigma * std::exp(std::complex<double>(0.0, x));
    const double separation = std::abs(1.0 - z);
    const long M = 6000;
    for (long n = 1; n <= M; ++n) {
        acc += moment(n, a, beta) * std::cos(static_cast<double>(n) * x);
    }
    // With M |1-z| >= 600 the by-parts terms shrink fast enough to beat their
    // noise floor; closer to the singular angle switch to the integral tail,
    // which carries the phase exactly.
    double tail;
    if (separation > 0.1) {
        tail = -tail_by_parts(M, a, std::abs(beta), z).real();
    } else {
        tail = -tail_oscillatory(M, a, std::abs(beta), std::arg(z));
    }
    return (1.0 + 2.0 * (acc + tail)) / (2.0 * kPi);
}

double spectral_density_closed(long a, double beta, double x) {
    switch (a) {
        case 1:
            return (1.0 + 2.0 * beta * std::cos(x)) / (2.0 * kPi);
        case 2: {
            // 1 + 8 b^2 cos x + 16 b^4 and 1 + 4 b^2 cos x, rearranged into
            // sums of nonnegative pieces: the naive forms cancel
            // catastrophically near the band edge x = pi at |beta| = 1/2.
            const double b2 = beta * beta;
            const double c2 = std::cos(x / 2.0) * std::cos(x / 2.0);
            const double inner = (1.0 - 4.0 * b2) * (1.0 - 4.0 * b2) + 16.0 * b2 * c2;
            const double outer =
                ((1.0 - 4.0 * b2) + 8.0 * b2 * c2 + std::sqrt(inner)) / 2.0;
            if (outer < -1e-12) {
                throw NonRealClosedForm("area-2 outer radical went negative");
            }
            return std::sqrt(std::max(0.0, outer)) / (2.0 * kPi);
        }
        case 3: {
            if (beta < 0.0) {
                throw UnsupportedClosedForm("area-3 closed form needs beta >= 0");
            }
            const std::complex<double> i(0.0, 1.0);
            const double amp = 1.5 * std::sqrt(3.0) * std::pow(beta, 1.5);
            const std::complex<double> v =
                -1.0 + 2.0 * std::cosh((2.0 / 3.0) * std::asinh(amp * std::exp(-i * (x / 2.0)))) +
                2.0 * std::cosh((2.0 / 3.0) * std::asinh(amp * std::exp(i * (x / 2.0))));
            if (std::abs(v.imag()) > 1e-10) {
                std::ostringstream os;
                os << "area-3 closed form returned imaginary part " << v.imag();
                throw NonRealClosedForm(os.str());
            }
            return v.real() / (6.0 * kPi);
        }
        default: {
            std::ostringstream os;
            os << "no closed-form density for area " << a;
            throw UnsupportedClosedForm(os.str());
        }
    }
}

double spectral_mass(long a, double beta, double tol) {
    std::function<double(double)> f;
    if (a == 1 || a == 2 || a == 3) {
        f = [a, beta](double x) { return spectral_density_closed(a, beta, x); };
    } else {
        f = [a, beta, tol](double x) { return spectral_density_series(a, beta, x, tol / 100.0); };
    }
    // split at pi, where the density can lose smoothness at the regime edge
    return integrate(f, 0.0, kPi, tol / 2.0) + integrate(f, kPi, 2.0 * kPi, tol / 2.0);
}

} // namespace wilson
