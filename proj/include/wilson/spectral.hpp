#pragma once

namespace wilson {

// Ratio bounding successive moment magnitudes |t_{n+1}| / |t_n| from above
// for t_n = winding_coefficient(n, a) * beta^(n*a):
//   (a - 1) * (a / (a - 1))^a * |beta|^a   (0 for a == 1).
// At most 1 inside |beta| <= 1/2, with equality only at a = 2, |beta| = 1/2.
double moment_growth_ratio(long a, double beta);

// Spectral density from its cosine series
//   f(x) = (1 + 2 * sum_{n>=1} t_n cos(n x)) / (2 pi).
// Finite for a = 1; otherwise requires |beta| <= 1/2.  Direct summation with
// a geometric tail bound when the growth ratio is comfortably below 1; near
// the boundary the tail is evaluated analytically (summation by parts away
// from the singular angle, Euler-Maclaurin at it).
double spectral_density_series(long a, double beta, double x, double tol = 1e-12);

// Closed forms, available for a in {1, 2, 3}.
double spectral_density_closed(long a, double beta, double x);

// Total mass over one period [0, 2 pi), adaptive quadrature; uses the closed
// form when available, the series otherwise.
double spectral_mass(long a, double beta, double tol = 1e-9);

} // namespace wilson
