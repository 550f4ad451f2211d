// Recursive-descent parser for the polynomial text grammar.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*     '/' requires a constant rhs
//   factor := ('-' | '+')* atom ('^' digits)?
//   atom   := digits | identifier | '(' expr ')'
//
// parse_poly(print(p)) == p is a fixed point; every error carries the
// character position it was raised at.

#pragma once

#include "quadrica/mpoly.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace quadrica {

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, const std::optional<std::vector<std::string>>& allowed)
        : text_(text) {
        if (allowed) {
            allowed_.emplace();
            allowed_->insert(allowed->begin(), allowed->end());
        }
    }

    MPoly run() {
        MPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
    std::optional<std::set<std::string>> allowed_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw validation_error("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MPoly parse_expr() {
        MPoly acc = parse_term();
        for (;;) {
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else return acc;
        }
    }

    MPoly parse_term() {
        MPoly acc = parse_factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * parse_factor();
            } else if (eat('/')) {
                size_t at = pos_;
                MPoly d = parse_factor();
                if (!d.is_constant()) {
                    pos_ = at;
                    fail("division only by nonzero rational literals");
                }
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero literal");
                }
                acc = acc / d.constant_value();
            } else {
                return acc;
            }
        }
    }

    MPoly parse_factor() {
        bool neg = false;
        for (;;) {
            if (eat('-')) neg = !neg;
            else if (eat('+')) continue;
            else break;
        }
        MPoly base = parse_atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                pos_ = at;
                fail("exponent must be a nonnegative integer literal");
            }
            base = base.pow(int(parse_digits()));
        }
        return neg ? -base : base;
    }

    MPoly parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return MPoly::constant(Rat(parse_digits()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (allowed_ && !allowed_->count(name)) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return MPoly::variable(name);
        }
        if (c == '(') {
            ++pos_;
            MPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        fail("expected a literal, variable or '('");
    }

    Int parse_digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Int(text_.substr(start, pos_ - start));
    }
};

}  // namespace detail

// Parses `text` into an expanded polynomial.  When `variables` is given it
// both restricts admissible identifiers and fixes the ambient variable set
// (unused names still count as variables of the result).
inline MPoly parse_poly(const std::string& text,
                        const std::optional<std::vector<std::string>>& variables = std::nullopt) {
    MPoly p = detail::PolyParser(text, variables).run();
    if (variables) p = p + MPoly::zero(*variables);
    return p;
}

inline std::string print_poly(const MPoly& p) { return p.str(); }

}  // namespace quadrica
