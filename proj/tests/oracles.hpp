#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

// -int_0^x log|2 sin t| dt on [0, pi/2] with the log t singularity split off, extended by symmetry.
inline double lobachevsky(double x) {
    x = std::fmod(x, pi);
    if (x < 0.0) x += pi;
    if (x > pi / 2.0) return -lobachevsky(pi - x);
    if (x == 0.0) return 0.0;
    const auto smooth = [](double t) { return t == 0.0 ? std::log(2.0) : std::log(2.0 * std::sin(t) / t); };
    const double part = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(smooth, 0.0, x, 15, 1e-15);
    return -part - (x * std::log(x) - x);
}

// Partial Fourier sum in long double with an explicit term count.
inline double fourier(double x, long terms) {
    long double s = 0.0L;
    for (long r = terms; r >= 1; --r) s += std::sin(2.0L * r * x) / (static_cast<long double>(r) * r);
    return static_cast<double>(s / 2.0L);
}

// Determinant by Gaussian elimination with partial pivoting.
inline double det(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    double d = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        if (a[p][c] == 0.0) return 0.0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

// Cyclic Jacobi rotations on a symmetric matrix.
inline std::vector<double> eigenvalues(std::vector<std::vector<double>> a, int sweeps = 100) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
    return out;
}

inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int k = 0; k < 300; ++k) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Orthoscheme volume evaluated straight from the four Lobachevsky terms.
inline double orthoscheme(double a, double b) {
    return 0.25 * (lobachevsky(pi / 2.0 + a - b) - lobachevsky(pi / 2.0 + a + b) + 2.0 * lobachevsky(b));
}

}  // namespace oracle
