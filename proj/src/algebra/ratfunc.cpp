#include "pv/algebra/ratfunc.hpp"

#include <cassert>

#include "pv/algebra/errors.hpp"

namespace pv {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroFunction();
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    if (!den_.is_constant() && !num_.is_constant()) {
        Poly g = Poly::gcd(num_, den_);
        if (!(g.is_constant())) {
            auto n = Poly::try_divide_exact(num_, g);
            auto d = Poly::try_divide_exact(den_, g);
            assert(n && d);
            num_ = *n;
            den_ = *d;
        }
    } else if (num_.is_constant() && !den_.is_constant()) {
        // only a common monomial is possible, and num has none
    }
    Rational c = den_.normalizing_content();
    if (c != 1) {
        Rational inv = Rational(1) / c;
        den_ = den_.times(inv);
        num_ = num_.times(inv);
    }
}

Rational RatFunc::as_rational() const {
    if (!is_rational_constant()) throw NotInstantiated("expected a rational constant");
    return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZeroFunction();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(int k) const {
    if (k == 0) return RatFunc(1);
    if (k < 0) {
        if (is_zero()) throw DivisionByZeroFunction();
        RatFunc inv;
        inv.num_ = den_;
        inv.den_ = num_;
        inv.canonicalize();
        return inv.pow(-k);
    }
    RatFunc r;
    r.num_ = num_.pow(static_cast<unsigned>(k));
    r.den_ = den_.pow(static_cast<unsigned>(k));
    r.canonicalize(); // canonical up to sign normalization of the denominator
    return r;
}

RatFunc RatFunc::derivative(Sym s) const {
    if (!contains(s)) return RatFunc(0);
    Poly n = num_.derivative(s) * den_ - num_ * den_.derivative(s);
    Poly d = den_ * den_;
    return RatFunc(std::move(n), std::move(d));
}

RatFunc RatFunc::substitute(Sym s, const RatFunc& g) const {
    if (!contains(s)) return *this;
    if (g.is_polynomial() && g.den().constant_value() == 1) {
        Poly n = num_.substitute(s, g.num());
        Poly d = den_.substitute(s, g.num());
        if (d.is_zero()) throw DenominatorVanishes();
        return RatFunc(std::move(n), std::move(d));
    }
    // r(g) = sum a_i gn^i gd^(K-i) / sum b_j gn^j gd^(K-j) with K common.
    auto an = num_.coefficients_in(s);
    auto bd = den_.coefficients_in(s);
    std::size_t K = std::max(an.size(), bd.size());
    auto lift = [&](const std::vector<Poly>& cs) {
        Poly acc;
        Poly gn_pow(Rational(1));
        std::vector<Poly> gd_pows(K);
        Poly gp(Rational(1));
        for (std::size_t i = 0; i < K; ++i) {
            gd_pows[K - 1 - i] = gp;
            gp = gp * g.den();
        }
        for (std::size_t i = 0; i < K; ++i) {
            if (i < cs.size() && !cs[i].is_zero()) acc += cs[i] * gn_pow * gd_pows[i];
            gn_pow = gn_pow * g.num();
        }
        return acc;
    };
    Poly n = lift(an);
    Poly d = lift(bd);
    if (d.is_zero()) throw DenominatorVanishes();
    return RatFunc(std::move(n), std::move(d));
}

namespace {

RatFunc eval_poly(const Poly& p, const std::map<Sym, RatFunc>& assign) {
    RatFunc acc(0);
    for (const auto& [m, c] : p.terms()) {
        RatFunc term{Rational(c)};
        for (int i = 0; i < kNumSymbols; ++i) {
            int e = m.e[i];
            if (e == 0) continue;
            Sym s = static_cast<Sym>(i);
            auto it = assign.find(s);
            RatFunc base = (it != assign.end()) ? it->second : RatFunc::variable(s);
            term *= base.pow(e);
        }
        acc += term;
    }
    return acc;
}

} // namespace

RatFunc RatFunc::substitute_many(const std::map<Sym, RatFunc>& assign) const {
    RatFunc d = eval_poly(den_, assign);
    if (d.is_zero()) throw DenominatorVanishes();
    return eval_poly(num_, assign) / d;
}

RatFunc sqrt_exact(const RatFunc& r) {
    if (r.is_zero()) return RatFunc(0);
    // Split num = c * N with N integer-primitive, positive leading coefficient.
    Rational c = r.num().normalizing_content();
    Poly n_prim = r.num().times(Rational(1) / c);
    auto c_root = rational_sqrt(c);
    if (!c_root) throw NotAPerfectSquare("constant factor " + to_string(c));
    auto n_root = n_prim.sqrt();
    if (!n_root) throw NotAPerfectSquare("numerator");
    auto d_root = r.den().sqrt();
    if (!d_root) throw NotAPerfectSquare("denominator");
    RatFunc s(n_root->times(*c_root), *d_root);
    // Canonical sign: positive leading numerator coefficient.
    if (sign(s.num().leading_coefficient()) < 0) s = -s;
    return s;
}

} // namespace pv
