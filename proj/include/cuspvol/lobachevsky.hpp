#pragma once

#include <numbers>

namespace cuspvol {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kDefaultTol = 1e-12;
inline constexpr double kCompareTol = 1e-9;

struct LobResult {
    double value = 0.0;
    long terms_used = 0;
    double est_error = 0.0;
};

// Representative of x modulo pi in [0, pi).
double reduce_angle(double x);

// Lobachevsky function via the Clausen power series on [0, pi/2] with a
// geometric tail bound; oddness and pi-periodicity are applied first.
LobResult lob(double x, double tol = kDefaultTol);

inline double L(double x) { return lob(x).value; }

// Plain Fourier partial sum (1/2) sum_{r<=N} sin(2rx)/r^2 with N from the
// 1/(2N) tail bound, capped at max_terms.
LobResult lob_fourier(double x, double tol, long max_terms = 10'000'000);

// Adaptive quadrature of -int_0^x log|2 sin t| dt, x in [0, pi].
double lob_integral_oracle(double x, double tol = kDefaultTol);

// |(1/k) L(kx) - sum_{r<k} L(x + r pi/k)|
double distribution_residual(int k, double x);

}  // namespace cuspvol
