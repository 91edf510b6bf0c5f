#ifndef PV_ALGEBRA_POLY_HPP
#define PV_ALGEBRA_POLY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pv/algebra/rational.hpp"
#include "pv/algebra/symbols.hpp"

namespace pv {

// Exponent vector over the fixed symbol table. Comparison is lexicographic
// with Sym index 0 most significant; this is the global monomial order.
struct Monomial {
    std::array<std::int16_t, kNumSymbols> e{};

    auto operator<=>(const Monomial&) const = default;

    int deg(Sym s) const { return e[static_cast<int>(s)]; }
    int total_degree() const {
        int d = 0;
        for (auto v : e) d += v;
        return d;
    }
    bool is_unit() const {
        for (auto v : e)
            if (v != 0) return false;
        return true;
    }
    bool divides(const Monomial& other) const {
        for (int i = 0; i < kNumSymbols; ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }
    Monomial times(const Monomial& other) const {
        Monomial r;
        for (int i = 0; i < kNumSymbols; ++i) r.e[i] = static_cast<std::int16_t>(e[i] + other.e[i]);
        return r;
    }
    Monomial divided_by(const Monomial& other) const {
        Monomial r;
        for (int i = 0; i < kNumSymbols; ++i) r.e[i] = static_cast<std::int16_t>(e[i] - other.e[i]);
        return r;
    }
    static Monomial unit() { return Monomial{}; }
    static Monomial var(Sym s, int k = 1) {
        Monomial m;
        m.e[static_cast<int>(s)] = static_cast<std::int16_t>(k);
        return m;
    }
};

// Sparse multivariate polynomial with rational coefficients, stored as
// monomial -> coefficient with no zero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c) : Poly(Rational(c)) {}

    static Poly variable(Sym s, int power = 1);
    static Poly monomial(const Monomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Only valid when is_constant(); zero polynomial yields 0.
    Rational constant_value() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Leading data w.r.t. the global monomial order.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    int deg(Sym s) const;
    int total_degree() const;
    bool contains(Sym s) const;
    // Smallest-index symbol occurring, if any.
    std::optional<Sym> min_symbol() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly times(const Rational& c) const;
    Poly pow(unsigned k) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly derivative(Sym s) const;

    // Coefficients as polynomials in the remaining symbols, dense in s
    // (index = exponent; size = deg(s)+1; zero polynomial -> empty vector).
    std::vector<Poly> coefficients_in(Sym s) const;
    static Poly from_coefficients_in(Sym s, const std::vector<Poly>& coeffs);

    // Composition: replace s by g.
    Poly substitute(Sym s, const Poly& g) const;

    // The positive rational c such that (*this)/c has integer coefficients
    // with content 1 and positive leading coefficient. Zero polynomial -> 1.
    Rational normalizing_content() const;

    // Exact quotient if b divides a, std::nullopt otherwise. b must be nonzero.
    static std::optional<Poly> try_divide_exact(const Poly& a, const Poly& b);

    // Multivariate gcd, normalized integer-primitive with positive leading
    // coefficient. gcd(0,0) = 0.
    static Poly gcd(const Poly& a, const Poly& b);

    // Exact polynomial square root, if one exists.
    std::optional<Poly> sqrt() const;

    void add_term(const Monomial& m, const Rational& c);

private:
    std::map<Monomial, Rational> terms_;
};

} // namespace pv

#endif
