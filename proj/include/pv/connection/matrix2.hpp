#ifndef PV_CONNECTION_MATRIX2_HPP
#define PV_CONNECTION_MATRIX2_HPP

#include "pv/algebra/errors.hpp"
#include "pv/algebra/ratfunc.hpp"

namespace pv {

struct Matrix2 {
    RatFunc e11, e12, e21, e22;

    static Matrix2 identity() { return {RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(1)}; }
    static Matrix2 zero() { return {}; }
    static Matrix2 diag(const RatFunc& a, const RatFunc& d) { return {a, RatFunc(0), RatFunc(0), d}; }

    RatFunc det() const { return e11 * e22 - e12 * e21; }
    RatFunc trace() const { return e11 + e22; }

    Matrix2 operator+(const Matrix2& o) const {
        return {e11 + o.e11, e12 + o.e12, e21 + o.e21, e22 + o.e22};
    }
    Matrix2 operator-(const Matrix2& o) const {
        return {e11 - o.e11, e12 - o.e12, e21 - o.e21, e22 - o.e22};
    }
    Matrix2 operator*(const Matrix2& o) const {
        return {e11 * o.e11 + e12 * o.e21, e11 * o.e12 + e12 * o.e22,
                e21 * o.e11 + e22 * o.e21, e21 * o.e12 + e22 * o.e22};
    }
    Matrix2 scaled(const RatFunc& c) const { return {e11 * c, e12 * c, e21 * c, e22 * c}; }

    Matrix2 inverse() const {
        RatFunc d = det();
        if (d.is_zero()) throw SingularGauge();
        return {e22 / d, -e12 / d, -e21 / d, e11 / d};
    }

    Matrix2 derivative(Sym s) const {
        return {e11.derivative(s), e12.derivative(s), e21.derivative(s), e22.derivative(s)};
    }

    Matrix2 substitute(Sym s, const RatFunc& g) const {
        return {e11.substitute(s, g), e12.substitute(s, g), e21.substitute(s, g), e22.substitute(s, g)};
    }

    bool operator==(const Matrix2& o) const = default;
};

} // namespace pv

#endif
