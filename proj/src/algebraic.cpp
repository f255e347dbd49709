#include "cuspvol/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cuspvol/errors.hpp"

namespace cuspvol {
namespace {

// Basis index <-> bitmask over the primes (2, 3, 5).
constexpr std::array<int, 8> kMaskOfIndex{0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
constexpr std::array<int, 3> kPrimes{2, 3, 5};

int index_of_mask(int mask) {
    const auto it = std::find(kMaskOfIndex.begin(), kMaskOfIndex.end(), mask);
    return static_cast<int>(it - kMaskOfIndex.begin());
}

std::int64_t prime_product(int mask) {
    std::int64_t p = 1;
    for (int b = 0; b < 3; ++b)
        if (mask & (1 << b)) p *= kPrimes[b];
    return p;
}

std::string rational_text(const AlgebraicNumber::Rational& r) {
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) out << '/' << r.denominator();
    return out.str();
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(Rational r) { coeffs_[0] = r; }

AlgebraicNumber AlgebraicNumber::sqrt_of(int radicand, Rational coeff) {
    const auto it = std::find(kRadicands.begin(), kRadicands.end(), radicand);
    if (it == kRadicands.end()) throw DomainError("radicand outside Q(sqrt2, sqrt3, sqrt5) basis");
    AlgebraicNumber a;
    a.coeffs_[it - kRadicands.begin()] = coeff;
    return a;
}

std::optional<AlgebraicNumber> AlgebraicNumber::minus_two_cos_pi_over(int m) {
    switch (m) {
        case 0: return AlgebraicNumber(-2);
        case 2: return AlgebraicNumber(0);
        case 3: return AlgebraicNumber(-1);
        case 4: return sqrt_of(2, -1);
        case 5: return AlgebraicNumber(Rational(-1, 2)) + sqrt_of(5, Rational(-1, 2));
        case 6: return sqrt_of(3, -1);
        default: return std::nullopt;
    }
}

AlgebraicNumber AlgebraicNumber::operator-() const {
    AlgebraicNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber r;
    for (int i = 0; i < 8; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber r;
    for (int i = 0; i < 8; ++i) {
        if (a.coeffs_[i].numerator() == 0) continue;
        for (int j = 0; j < 8; ++j) {
            if (b.coeffs_[j].numerator() == 0) continue;
            const int mi = kMaskOfIndex[i];
            const int mj = kMaskOfIndex[j];
            const auto scale = prime_product(mi & mj);
            r.coeffs_[index_of_mask(mi ^ mj)] += a.coeffs_[i] * b.coeffs_[j] * AlgebraicNumber::Rational(scale);
        }
    }
    return r;
}

bool AlgebraicNumber::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.numerator() == 0; });
}

bool AlgebraicNumber::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.numerator() == 0; });
}

bool AlgebraicNumber::is_rational_integer() const { return is_rational() && coeffs_[0].denominator() == 1; }

double AlgebraicNumber::to_double() const {
    double v = 0.0;
    for (int i = 0; i < 8; ++i) v += boost::rational_cast<double>(coeffs_[i]) * std::sqrt(double(kRadicands[i]));
    return v;
}

std::string AlgebraicNumber::to_string() const {
    std::string out;
    for (int i = 0; i < 8; ++i) {
        const Rational& c = coeffs_[i];
        if (c.numerator() == 0) continue;
        const bool negative = c.numerator() < 0;
        const Rational mag = boost::abs(c);
        std::string term;
        if (i == 0) {
            term = rational_text(mag);
        } else {
            if (mag.numerator() != 1) term += std::to_string(mag.numerator());
            term += "√" + std::to_string(kRadicands[i]);
            if (mag.denominator() != 1) term += "/" + std::to_string(mag.denominator());
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace cuspvol
