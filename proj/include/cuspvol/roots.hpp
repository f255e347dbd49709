#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

#include <boost/math/tools/roots.hpp>

#include "cuspvol/errors.hpp"

namespace cuspvol {

inline constexpr double kRootTol = 1e-12;

// Bracketed bisection; the bracket must straddle a sign change.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, double tol = kRootTol) {
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0)) throw InvalidRegime("bisection bracket has no sign change");
    std::uintmax_t max_iter = 200;
    const auto done = [tol](double a, double b) { return std::abs(b - a) <= tol; };
    const auto [a, b] = boost::math::tools::bisect(f, lo, hi, done, max_iter);
    return 0.5 * (a + b);
}

}  // namespace cuspvol
