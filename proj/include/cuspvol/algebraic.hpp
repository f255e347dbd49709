#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

namespace cuspvol {

// Element of Q(sqrt2, sqrt3, sqrt5) over the basis
// {1, sqrt2, sqrt3, sqrt5, sqrt6, sqrt10, sqrt15, sqrt30}.
class AlgebraicNumber {
public:
    using Rational = boost::rational<std::int64_t>;
    static constexpr std::array<int, 8> kRadicands{1, 2, 3, 5, 6, 10, 15, 30};

    AlgebraicNumber() = default;
    AlgebraicNumber(Rational r);  // NOLINT(google-explicit-constructor)
    AlgebraicNumber(std::int64_t n) : AlgebraicNumber(Rational(n)) {}  // NOLINT

    // coeff * sqrt(radicand); radicand must be one of kRadicands.
    static AlgebraicNumber sqrt_of(int radicand, Rational coeff = 1);

    // -2cos(pi/m) for m in {2,3,4,5,6}; m == 0 encodes infinity (value -2).
    static std::optional<AlgebraicNumber> minus_two_cos_pi_over(int m);

    const Rational& coeff(int basis_index) const { return coeffs_.at(basis_index); }

    AlgebraicNumber operator-() const;
    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a.coeffs_ == b.coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_rational_integer() const;
    double to_double() const;
    std::string to_string() const;

private:
    std::array<Rational, 8> coeffs_{};
};

}  // namespace cuspvol
