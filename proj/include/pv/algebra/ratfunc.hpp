#ifndef PV_ALGEBRA_RATFUNC_HPP
#define PV_ALGEBRA_RATFUNC_HPP

#include <map>
#include <optional>
#include <string>

#include "pv/algebra/poly.hpp"

namespace pv {

// Element of the field of rational functions in the fixed symbols, kept in
// canonical form: gcd(num, den) = 1 and the denominator is an integer
// polynomial with content 1 and positive leading coefficient. Equal values
// therefore compare equal structurally.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}
    explicit RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}
    RatFunc(Poly num, Poly den);

    static RatFunc variable(Sym s) { return RatFunc(Poly::variable(s)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_rational_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational as_rational() const; // throws NotInstantiated unless constant

    bool contains(Sym s) const { return num_.contains(s) || den_.contains(s); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b); // throws DivisionByZeroFunction
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(int k) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc derivative(Sym s) const;

    // Composition *this with s <- g; throws DenominatorVanishes if the
    // composed denominator is identically zero.
    RatFunc substitute(Sym s, const RatFunc& g) const;

    // Simultaneous substitution (needed when the assignments permute symbols).
    RatFunc substitute_many(const std::map<Sym, RatFunc>& assign) const;

private:
    void canonicalize();

    Poly num_;
    Poly den_{Rational(1)};
};

// Exact square root in the field, canonical sign (positive leading numerator
// coefficient); throws NotAPerfectSquare if none exists.
RatFunc sqrt_exact(const RatFunc& r);

inline RatFunc operator+(const RatFunc& a, long b) { return a + RatFunc(b); }
inline RatFunc operator+(long a, const RatFunc& b) { return RatFunc(a) + b; }
inline RatFunc operator-(const RatFunc& a, long b) { return a - RatFunc(b); }
inline RatFunc operator-(long a, const RatFunc& b) { return RatFunc(a) - b; }
inline RatFunc operator*(const RatFunc& a, long b) { return a * RatFunc(b); }
inline RatFunc operator*(long a, const RatFunc& b) { return RatFunc(a) * b; }
inline RatFunc operator/(const RatFunc& a, long b) { return a / RatFunc(b); }
inline RatFunc operator/(long a, const RatFunc& b) { return RatFunc(a) / b; }

} // namespace pv

#endif
