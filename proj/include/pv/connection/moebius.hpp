#ifndef PV_CONNECTION_MOEBIUS_HPP
#define PV_CONNECTION_MOEBIUS_HPP

#include "pv/algebra/errors.hpp"
#include "pv/algebra/laurent.hpp"
#include "pv/algebra/ratfunc.hpp"

namespace pv {

// x -> (a x + b)/(c x + d) with coefficients free of the base variable.
struct MoebiusMap {
    RatFunc a, b, c, d;

    MoebiusMap(RatFunc a_, RatFunc b_, RatFunc c_, RatFunc d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if ((a * d - b * c).is_zero()) throw SingularGauge();
    }

    static MoebiusMap identity() { return {RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(1)}; }

    MoebiusMap inverse() const { return {d, -b, -c, a}; }

    RatFunc as_ratfunc(Sym v) const {
        RatFunc num = a * RatFunc::variable(v) + b;
        RatFunc den = c * RatFunc::variable(v) + d;
        return num / den;
    }

    // Df(x) = (ad - bc)/(cx + d)^2
    RatFunc derivative_at(const RatFunc& x) const {
        RatFunc den = c * x + d;
        return (a * d - b * c) / (den * den);
    }

    // Image of a point of P^1.
    Center apply(const Center& p) const {
        if (p.at_infinity) {
            if (c.is_zero()) return Center::infinity();
            return Center::at(a / c);
        }
        RatFunc den = c * p.value + d;
        if (den.is_zero()) return Center::infinity();
        return Center::at((a * p.value + b) / den);
    }
};

} // namespace pv

#endif
