#include "holoprove/poly_format.hpp"

#include "holoprove/error.hpp"

#include <cctype>

namespace holoprove {

namespace {

std::string term_body(const Rational& magnitude, int power, char var) {
    if (power == 0) return to_string(magnitude);
    std::string s;
    if (magnitude != 1) s = to_string(magnitude) + "*";
    s += var;
    if (power > 1) s += "^" + std::to_string(power);
    return s;
}

}  // namespace

std::string format(const UPoly& p, PolyStyle style) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    auto emit = [&](int i) {
        const Rational c = p.coeff(i);
        if (c == 0) return;
        const bool negative = c < 0;
        const std::string body = term_body(abs(c), i, p.var());
        if (first) {
            out += negative ? "-" + body : body;
            first = false;
        } else if (style.spaced) {
            out += negative ? " - " : " + ";
            out += body;
        } else {
            out += negative ? "-" : "+";
            out += body;
        }
    };
    if (style.order == TermOrder::Descending) {
        for (int i = p.degree(); i >= 0; --i) emit(i);
    } else {
        for (int i = 0; i <= p.degree(); ++i) emit(i);
    }
    return out;
}

std::string format(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int j = p.degree_w(); j >= 0; --j) {
        const UPoly c = p.coeff(j);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + format(c, {TermOrder::Ascending, true}) + ")";
        if (j >= 1) out += "*w";
        if (j >= 2) out += "^" + std::to_string(j);
    }
    return out;
}

namespace {

// Recursive-descent parser over Q[z, w]:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := primary (('^' | '**') integer)?
//   primary:= integer | variable | '(' expr ')'
class PolyParser {
public:
    PolyParser(std::string_view text, char zname, bool allow_w)
        : text_(text), zname_(zname), allow_w_(allow_w) {}

    BiPoly parse() {
        skip_ws();
        if (at_end()) fail("empty polynomial");
        BiPoly v = expr();
        skip_ws();
        if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(0, msg + " at column " + std::to_string(pos_ + 1) + " in '" +
                                std::string(text_) + "'");
    }

    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    bool peek_power() {
        skip_ws();
        return text_.substr(pos_, 1) == "^" || text_.substr(pos_, 2) == "**";
    }

    BiPoly expr() {
        BiPoly acc = term();
        for (;;) {
            if (accept("+")) {
                acc += term();
            } else if (accept("-")) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    BiPoly term() {
        BiPoly acc = unary();
        for (;;) {
            skip_ws();
            if (peek_power()) fail("misplaced power");
            if (accept("*")) {
                acc = acc * unary();
            } else if (accept("/")) {
                BiPoly d = unary();
                if (d.degree_w() != 0 || d.degree_z() != 0) fail("division by a non-constant");
                acc *= Rational(1) / d.coeff(0, 0);
            } else {
                return acc;
            }
        }
    }

    BiPoly unary() {
        if (accept("-")) return -unary();
        if (accept("+")) return unary();
        return power();
    }

    BiPoly power() {
        BiPoly base = primary();
        if (accept("**") || accept("^")) {
            skip_ws();
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            if (pos_ - start > 4) fail("exponent too large");
            const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
            BiPoly result(UPoly::constant(1));
            for (int i = 0; i < e; ++i) result = result * base;
            return result;
        }
        return base;
    }

    BiPoly primary() {
        skip_ws();
        if (at_end()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            BiPoly v = expr();
            if (!accept(")")) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return BiPoly(UPoly::constant(Rational(Integer(std::string(text_.substr(start, pos_ - start))))));
        }
        if (c == zname_) {
            ++pos_;
            return BiPoly(UPoly::variable('z'));
        }
        if (allow_w_ && c == 'w') {
            ++pos_;
            return BiPoly::w();
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    char zname_;
    bool allow_w_;
};

}  // namespace

UPoly parse_upoly(std::string_view text, char var) {
    BiPoly p = PolyParser(text, var, false).parse();
    return p.coeff(0).with_var(var);
}

BiPoly parse_bipoly(std::string_view text) { return PolyParser(text, 'z', true).parse(); }

}  // namespace holoprove
