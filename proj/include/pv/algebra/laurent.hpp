#ifndef PV_ALGEBRA_LAURENT_HPP
#define PV_ALGEBRA_LAURENT_HPP

#include <map>
#include <optional>

#include "pv/algebra/errors.hpp"
#include "pv/algebra/ratfunc.hpp"

namespace pv {

// An expansion center: a finite value (free of the expansion variable) or
// the point at infinity.
struct Center {
    bool at_infinity = false;
    RatFunc value;

    static Center infinity() { return Center{true, RatFunc(0)}; }
    static Center at(const RatFunc& v) { return Center{false, v}; }
    static Center at(long v) { return Center{false, RatFunc(v)}; }

    bool operator==(const Center& o) const {
        return at_infinity == o.at_infinity && (at_infinity || value == o.value);
    }
};

// Truncated Laurent expansion of a rational function. Coefficients are free
// of the expansion variable. At infinity the expansion is in the local
// coordinate 1/v (an order-k coefficient multiplies v^-k there).
struct LaurentExpansion {
    Sym variable;
    Center center;
    std::map<int, RatFunc> coefficients;
    int min_order = 0;
    int max_order_computed = -1;
    bool zero = false;

    RatFunc coefficient(int order) const {
        auto it = coefficients.find(order);
        return it == coefficients.end() ? RatFunc(0) : it->second;
    }
};

// Raised by limit() (and friends) when the function has a genuine pole at
// the requested point; carries the principal part.
struct PoleObstruction : AlgebraError {
    std::map<int, RatFunc> principal_part; // negative orders only
    PoleObstruction(std::map<int, RatFunc> pp, const std::string& what)
        : AlgebraError(what), principal_part(std::move(pp)) {}
};

// Exact Laurent expansion of r in v about `center`, with coefficients for all
// orders from the true minimal order up to max_order (inclusive).
LaurentExpansion laurent(const RatFunc& r, Sym v, const Center& center, int max_order);

// Order of vanishing of r at the point (pole order is negative); the zero
// function returns std::nullopt.
std::optional<int> order_at(const RatFunc& r, Sym v, const Center& center);

// Coefficient of (v-center)^-1 of the function r; at infinity, the residue of
// the 1-form r dv (local coordinate u = 1/v, Jacobian -du/u^2).
RatFunc residue(const RatFunc& r, Sym v, const Center& center);

// Value of r at the point if finite, otherwise throws PoleObstruction with
// the principal part.
RatFunc limit(const RatFunc& r, Sym v, const Center& center);

} // namespace pv

#endif
