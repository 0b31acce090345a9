#ifndef GALID_POLY_PARSE_HPP
#define GALID_POLY_PARSE_HPP

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "galid/int_poly.hpp"

namespace galid {

/// Parse failure with the offending position (0-based) in the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class PolyScanner {
public:
    explicit PolyScanner(const std::string& text) : s_(text) {}

    IntPoly parse() {
        skip_ws();
        if (done()) throw ParseError("empty polynomial", 0);
        if (s_.find(',') != std::string::npos) return parse_comma_list();
        return parse_expression();
    }

private:
    IntPoly parse_comma_list() {
        std::vector<BigInt> desc;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = s_.find(',', start);
            std::string tok = s_.substr(start, comma == std::string::npos ? comma : comma - start);
            desc.push_back(parse_integer_token(tok, start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return IntPoly::from_descending(std::move(desc));
    }

    BigInt parse_integer_token(const std::string& tok, std::size_t offset) {
        std::size_t i = 0;
        while (i < tok.size() && std::isspace(static_cast<unsigned char>(tok[i]))) ++i;
        std::size_t j = tok.size();
        while (j > i && std::isspace(static_cast<unsigned char>(tok[j - 1]))) --j;
        if (i == j) throw ParseError("empty coefficient", offset + i);
        std::size_t k = i;
        if (tok[k] == '+' || tok[k] == '-') ++k;
        if (k == j) throw ParseError("sign without digits", offset + k);
        for (std::size_t t = k; t < j; ++t)
            if (!std::isdigit(static_cast<unsigned char>(tok[t])))
                throw ParseError("non-integer coefficient", offset + t);
        return BigInt(tok.substr(i, j - i));
    }

    IntPoly parse_expression() {
        std::map<int, BigInt> terms; // exponent -> coefficient sum
        bool first = true;
        while (true) {
            skip_ws();
            if (done()) {
                if (first) throw ParseError("empty polynomial", pos_);
                break;
            }
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-' between terms", pos_);
            }
            auto [coeff, exponent] = parse_term();
            terms[exponent] += sign * coeff;
            first = false;
        }
        int max_e = terms.empty() ? -1 : terms.rbegin()->first;
        std::vector<BigInt> coeffs(static_cast<std::size_t>(max_e + 1));
        for (const auto& [e, k] : terms) coeffs[static_cast<std::size_t>(e)] = k;
        return IntPoly(std::move(coeffs));
    }

    std::pair<BigInt, int> parse_term() {
        skip_ws();
        if (done()) throw ParseError("expected a term", pos_);
        BigInt coeff = 1;
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_number();
            saw_number = true;
            skip_ws();
            if (!done() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (done() || peek() != 'x')
                    throw ParseError("expected 'x' after '*'", pos_);
            }
        }
        if (!done() && peek() == 'x') {
            ++pos_;
            int exponent = 1;
            skip_ws();
            if (!done() && peek() == '^') {
                ++pos_;
                skip_ws();
                if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("expected an exponent after '^'", pos_);
                BigInt e = parse_number();
                if (e > 64) throw ParseError("exponent too large", pos_);
                exponent = e.convert_to<int>();
            }
            return {coeff, exponent};
        }
        if (!saw_number)
            throw ParseError("expected a coefficient or 'x'", pos_);
        return {coeff, 0};
    }

    BigInt parse_number() {
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return BigInt(s_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool done() const noexcept { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses either a descending comma list of coefficients ("1,0,0,-2") or an
/// expression in x ("x^3 - 2"). Duplicate-exponent terms are summed.
inline IntPoly parse_poly(const std::string& text) {
    return detail::PolyScanner(text).parse();
}

/// Canonical expression form: descending powers, unit coefficients elided,
/// " + " / " - " separators. parse_poly round-trips it.
inline std::string to_expression_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = p.degree(); e >= 0; --e) {
        const BigInt& k = p.coeff(static_cast<std::size_t>(e));
        if (k == 0) continue;
        const BigInt mag = abs(k);
        if (first) {
            if (k < 0) os << "-";
            first = false;
        } else {
            os << (k < 0 ? " - " : " + ");
        }
        if (e == 0 || mag != 1) os << mag.str();
        if (e >= 1) os << "x";
        if (e >= 2) os << "^" << e;
    }
    return os.str();
}

} // namespace galid

#endif // GALID_POLY_PARSE_HPP
