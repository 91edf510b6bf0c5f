#ifndef PV_ALGEBRA_RATIONAL_HPP
#define PV_ALGEBRA_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace pv {

// Arbitrary-precision rational scalar. All arithmetic in the project is exact.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

// gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); the result is nonnegative.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    Integer gn, dl;
    mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(dl.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rational r(gn, dl);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (mpz_perfect_square_p(r.get_num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(r.get_den().get_mpz_t()) == 0) return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
    return Rational(n, d);
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace pv

#endif
