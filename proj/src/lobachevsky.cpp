#include "cuspvol/lobachevsky.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cuspvol/errors.hpp"

namespace cuspvol {
namespace {

constexpr int kMaxClausenTerms = 64;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// zeta(2n) / (n (2n+1)) for n = 1..kMaxClausenTerms
const std::array<double, kMaxClausenTerms + 1>& clausen_coefficients() {
    static const auto table = [] {
        std::array<double, kMaxClausenTerms + 1> c{};
        for (int n = 1; n <= kMaxClausenTerms; ++n) {
            const double zeta = std::riemann_zeta(2.0 * n);
            c[n] = zeta / (n * (2.0 * n + 1.0));
        }
        return c;
    }();
    return table;
}

void require_finite(double x) {
    if (!std::isfinite(x)) throw DomainError("Lobachevsky argument is not finite");
}

void require_tol(double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
}

// x -> (sign, r) with L(x) = sign * L(r), r in [0, pi/2].
std::pair<double, double> fold(double x) {
    const double r = std::remainder(x, kPi);
    return {r < 0.0 ? -1.0 : 1.0, std::abs(r)};
}

}  // namespace

double reduce_angle(double x) {
    require_finite(x);
    double r = std::fmod(x, kPi);
    if (r < 0.0) r += kPi;
    if (r >= kPi) r = 0.0;
    return r;
}

LobResult lob(double x, double tol) {
    require_finite(x);
    require_tol(tol);
    const auto [sign, r] = fold(x);
    if (r == 0.0) return {0.0, 0, 0.0};

    const auto& c = clausen_coefficients();
    const double q = (r / kPi) * (r / kPi);
    double sum = r - r * std::log(2.0 * r);
    double magnitude = std::abs(r) + std::abs(r * std::log(2.0 * r));
    double power = r;
    long n = 0;
    double tail = 0.0;
    while (n < kMaxClausenTerms) {
        ++n;
        power *= q;
        const double term = c[n] * power;
        sum += term;
        magnitude += term;
        const double next = (n < kMaxClausenTerms ? c[n + 1] : c[n]) * power * q;
        tail = next / (1.0 - q);
        if (tail <= 0.5 * tol && tail <= kEps * std::abs(sum)) break;
    }
    const double rounding = 4.0 * kEps * magnitude;
    return {sign * sum, n, tail + rounding};
}

LobResult lob_fourier(double x, double tol, long max_terms) {
    require_finite(x);
    require_tol(tol);
    if (max_terms < 1) throw DomainError("max_terms must be positive");
    const auto [sign, r] = fold(x);
    const double budget = tol - 16.0 * kEps;
    const double wanted = budget > 0.0 ? std::ceil(1.0 / (2.0 * budget)) : static_cast<double>(max_terms);
    const long n = wanted >= static_cast<double>(max_terms) ? max_terms : static_cast<long>(wanted);
    double sum = 0.0;
    for (long k = n; k >= 1; --k) {
        const double kk = static_cast<double>(k);
        sum += std::sin(2.0 * kk * r) / (kk * kk);
    }
    const double tail = 1.0 / (2.0 * static_cast<double>(n));
    return {sign * 0.5 * sum, n, tail + 16.0 * kEps};
}

double lob_integral_oracle(double x, double tol) {
    require_finite(x);
    require_tol(tol);
    if (x < 0.0 || x > kPi) throw DomainError("quadrature oracle expects x in [0, pi]");
    if (x == 0.0) return 0.0;

    using boost::math::quadrature::gauss_kronrod;
    const auto smooth = [](double t) { return std::log(2.0) + std::log(std::sin(t) / t); };
    const auto log_antiderivative = [](double t) { return t > 0.0 ? t * std::log(t) - t : 0.0; };
    const double rel = std::max(tol * 1e-2, 1e-15);

    const double m = std::min(x, kPi / 2.0);
    double integral = log_antiderivative(m) + gauss_kronrod<double, 31>::integrate(smooth, 0.0, m, 20, rel);
    if (x > kPi / 2.0) {
        const double a = kPi - x;
        const double b = kPi / 2.0;
        integral += log_antiderivative(b) - log_antiderivative(a);
        if (b > a) integral += gauss_kronrod<double, 31>::integrate(smooth, a, b, 20, rel);
    }
    return -integral;
}

double distribution_residual(int k, double x) {
    if (k <= 0) throw DomainError("distribution formula needs k >= 1");
    require_finite(x);
    const double lhs = L(k * x) / k;
    double rhs = 0.0;
    for (int r = 0; r < k; ++r) rhs += L(x + r * kPi / k);
    return std::abs(lhs - rhs);
}

}  // namespace cuspvol
