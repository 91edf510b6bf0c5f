#include "pv/algebra/parser.hpp"

#include <cctype>
#include <sstream>

#include "pv/algebra/errors.hpp"

namespace pv {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RatFunc run() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
        return r;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc r = term();
        while (true) {
            if (accept('+')) {
                r += term();
            } else if (accept('-')) {
                r -= term();
            } else {
                return r;
            }
        }
    }

    RatFunc term() {
        RatFunc r = unary();
        while (true) {
            if (accept('*')) {
                r *= unary();
            } else if (accept('/')) {
                RatFunc d = unary();
                if (d.is_zero()) throw SyntaxError("division by zero", pos_);
                r /= d;
            } else {
                return r;
            }
        }
    }

    RatFunc unary() {
        bool neg = false;
        while (true) {
            if (accept('-')) {
                neg = !neg;
            } else if (accept('+')) {
                // no-op
            } else {
                break;
            }
        }
        RatFunc r = power();
        return neg ? -r : r;
    }

    RatFunc power() {
        RatFunc base = atom();
        if (accept('^')) {
            skip_ws();
            bool neg = accept('-');
            long e = integer_literal();
            if (neg && base.is_zero()) throw SyntaxError("zero to a negative power", pos_);
            return base.pow(neg ? -static_cast<int>(e) : static_cast<int>(e));
        }
        return base;
    }

    long integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError("expected integer", pos_);
        if (pos_ - start > 9) throw SyntaxError("integer exponent too large", start);
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    RatFunc atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            Integer v(std::string(text_.substr(start, pos_ - start)), 10);
            return RatFunc(Rational(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto sym = symbol_from_name(name);
            if (!sym) throw UnknownSymbol(name, start);
            return RatFunc::variable(*sym);
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }
};

std::string rational_str(const Rational& r) { return r.get_str(); }

void print_monomial_body(std::ostream& os, const Monomial& m, const Rational& abs_coeff) {
    bool coeff_printed = false;
    if (m.is_unit() || abs_coeff != 1) {
        os << rational_str(abs_coeff);
        coeff_printed = true;
    }
    bool first = true;
    for (int i = 0; i < kNumSymbols; ++i) {
        int e = m.e[i];
        if (e == 0) continue;
        if (coeff_printed || !first) os << '*';
        os << symbol_name(static_cast<Sym>(i));
        if (e != 1) os << '^' << e;
        first = false;
        coeff_printed = true;
    }
}

void print_poly_impl(std::ostream& os, const Poly& p, bool compact) {
    if (p.is_zero()) {
        os << '0';
        return;
    }
    bool first = true;
    // descending monomial order
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Rational& c = it->second;
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            if (compact) {
                os << (sgn(c) < 0 ? "-" : "+");
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
            }
        }
        print_monomial_body(os, it->first, abs(c));
        first = false;
    }
}

} // namespace

RatFunc parse(std::string_view text) { return Parser(text).run(); }

Center parse_center(std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (text.substr(b, e - b) == "inf") return Center::infinity();
    return Center::at(parse(text));
}

std::string print(const Poly& p, bool compact) {
    std::ostringstream os;
    print_poly_impl(os, p, compact);
    return os.str();
}

std::string print(const RatFunc& r, bool compact) {
    if (r.is_polynomial()) return print(r.num(), compact);
    std::ostringstream os;
    os << '(';
    print_poly_impl(os, r.num(), compact);
    os << ")/(";
    print_poly_impl(os, r.den(), compact);
    os << ')';
    return os.str();
}

std::string print(const Center& c, bool compact) {
    if (c.at_infinity) return "inf";
    return print(c.value, compact);
}

} // namespace pv
