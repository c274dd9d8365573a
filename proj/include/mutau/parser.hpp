#ifndef MUTAU_PARSER_HPP
#define MUTAU_PARSER_HPP

#include <cctype>
#include <string>

#include "mutau/polynomial.hpp"

namespace mutau {

// Recursive-descent parser for the polynomial grammar:
//
//   expression := ['-'|'+'] term (('+'|'-') term)*
//   term       := factor (('*'|'/') factor)*
//   factor     := primary ('^' nat)?
//   primary    := integer | variable | 't' | '(' expression ')'
//
// Whitespace-insensitive; implicit multiplication is rejected. Division is
// only defined by coefficient-level (x-free) expressions; an x-variable in a
// denominator is DivisionNotAllowed. 't' names the field parameter in Qt and
// Ft:<p> fields.
template <class F>
class PolyParser {
  public:
    PolyParser(std::string text, RingP<F> ring) : text_(std::move(text)), ring_(std::move(ring)) {}

    Poly<F> parse() {
        skip_ws();
        Poly<F> p = expression();
        skip_ws();
        if (pos_ < text_.size())
            throw SyntaxError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_ + 1);
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Poly<F> expression() {
        bool neg = false;
        char c = peek();
        if (c == '-' || c == '+') {
            neg = c == '-';
            ++pos_;
        }
        Poly<F> acc = term();
        if (neg) acc = -acc;
        while (true) {
            c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly<F> term() {
        Poly<F> acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '/') {
                std::size_t at = ++pos_;
                Poly<F> d = factor();
                if (!d.is_constant())
                    throw DivisionNotAllowedError(
                        "only coefficients may appear in a denominator (position " +
                        std::to_string(at) + ")");
                if (d.is_zero()) throw DivisionByZeroError("division by zero in input");
                acc = acc.scaled(inverse(d.lc()));
            } else {
                break;
            }
        }
        return acc;
    }

    Poly<F> factor() {
        Poly<F> base = primary();
        if (peek() == '^') {
            std::size_t at = ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError("exponent must be a non-negative integer", at + 1);
            std::uint64_t e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
                if (e > 100000) throw SyntaxError("exponent too large", at + 1);
                ++pos_;
            }
            Poly<F> acc = Poly<F>::constant(base.ring(), base.ring()->field.one());
            // power by squaring
            Poly<F> sq = base;
            while (e) {
                if (e & 1) acc = acc * sq;
                e >>= 1;
                if (e) sq = sq * sq;
            }
            return acc;
        }
        return base;
    }

    Poly<F> primary() {
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Poly<F> p = expression();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_ + 1);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return Poly<F>::constant(ring_, ring_->field.from_bigint(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                name += text_[pos_];
                ++pos_;
            }
            int idx = ring_->var_index(name);
            if (idx >= 0) {
                Exp m(ring_->vars.size(), 0);
                m[static_cast<std::size_t>(idx)] = 1;
                return Poly<F>::monomial(ring_, ring_->field.one(), std::move(m));
            }
            if constexpr (F::has_parameter) {
                if (name == "t") return Poly<F>::constant(ring_, ring_->field.parameter());
            }
            throw UnknownVariableError("unknown variable '" + name + "' (position " +
                                       std::to_string(at + 1) + ")");
        }
        if (c == '\0') throw SyntaxError("unexpected end of input", text_.size() + 1);
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", at + 1);
    }

    std::string text_;
    RingP<F> ring_;
    std::size_t pos_ = 0;
};

template <class F>
Poly<F> parse_polynomial(const std::string& text, const RingP<F>& ring) {
    return PolyParser<F>(text, ring).parse();
}

}  // namespace mutau

#endif
