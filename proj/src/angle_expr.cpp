#include "cuspvol/angle_expr.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "cuspvol/errors.hpp"
#include "cuspvol/lobachevsky.hpp"

namespace cuspvol {
namespace {

class AngleParser {
public:
    explicit AngleParser(std::string_view text) : text_(text) {}

    double parse() {
        skip_space();
        double sign = 1.0;
        if (peek() == '-') {
            sign = -1.0;
            ++pos_;
            skip_space();
        }
        double value = 0.0;
        if (at_pi()) {
            value = pi_term(1.0);
        } else {
            const double number = decimal();
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
                if (!at_pi()) throw ParseError("expected 'pi' after '*'", pos_);
                value = pi_term(number);
            } else {
                value = number;
            }
        }
        skip_space();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return sign * value;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_pi() const { return text_.substr(pos_, 2) == "pi" || text_.substr(pos_, 2) == "\xCF\x80"; }

    double pi_term(double multiplier) {
        pos_ += 2;
        skip_space();
        double value = multiplier * kPi;
        if (peek() == '/') {
            ++pos_;
            skip_space();
            const double den = decimal();
            if (den == 0.0) throw ParseError("division by zero", pos_);
            value /= den;
        }
        return value;
    }

    double decimal() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                                       text_[pos_] == 'e' || text_[pos_] == 'E' ||
                                       ((text_[pos_] == '-' || text_[pos_] == '+') && pos_ > start &&
                                        (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
            ++pos_;
        if (pos_ == start) throw ParseError("expected a number or 'pi'", start);
        const std::string token(text_.substr(start, pos_ - start));
        double value = 0.0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || end != token.data() + token.size()) throw ParseError("malformed number '" + token + "'", start);
        return value;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

double parse_angle(std::string_view text) { return AngleParser(text).parse(); }

}  // namespace cuspvol
