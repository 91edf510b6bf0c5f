#include "pv/algebra/laurent.hpp"

#include <cassert>

namespace pv {

namespace {

// Shift r so that the expansion point sits at v = 0.
RatFunc recenter(const RatFunc& r, Sym v, const Center& center) {
    if (center.at_infinity) {
        return r.substitute(v, RatFunc(Poly(Rational(1)), Poly::variable(v)));
    }
    if (center.value.is_zero()) return r;
    if (center.value.contains(v)) throw AlgebraError("expansion center must be free of the variable");
    return r.substitute(v, RatFunc::variable(v) + center.value);
}

} // namespace

LaurentExpansion laurent(const RatFunc& r, Sym v, const Center& center, int max_order) {
    LaurentExpansion ex;
    ex.variable = v;
    ex.center = center;
    ex.max_order_computed = max_order;
    if (r.is_zero()) {
        ex.zero = true;
        return ex;
    }
    RatFunc s = recenter(r, v, center);

    auto ncoeffs = s.num().coefficients_in(v);
    auto dcoeffs = s.den().coefficients_in(v);
    auto first_nonzero = [](const std::vector<Poly>& cs) {
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (!cs[i].is_zero()) return static_cast<int>(i);
        return -1;
    };
    int k = first_nonzero(ncoeffs);
    int m = first_nonzero(dcoeffs);
    assert(k >= 0 && m >= 0);
    ex.min_order = k - m;
    if (max_order < ex.min_order) return ex;

    // Taylor coefficients of (sum n_{k+i} v^i) / (sum d_{m+i} v^i) at v = 0.
    int want = max_order - ex.min_order; // indices 0..want
    const RatFunc d0{Poly(dcoeffs[static_cast<std::size_t>(m)])};
    std::vector<RatFunc> c(static_cast<std::size_t>(want) + 1, RatFunc(0));
    for (int j = 0; j <= want; ++j) {
        std::size_t nj = static_cast<std::size_t>(k + j);
        RatFunc acc = nj < ncoeffs.size() ? RatFunc(Poly(ncoeffs[nj])) : RatFunc(0);
        for (int i = 1; i <= j; ++i) {
            std::size_t di = static_cast<std::size_t>(m + i);
            if (di >= dcoeffs.size() || dcoeffs[di].is_zero()) continue;
            acc -= RatFunc(Poly(dcoeffs[di])) * c[static_cast<std::size_t>(j - i)];
        }
        c[static_cast<std::size_t>(j)] = acc / d0;
    }
    for (int j = 0; j <= want; ++j) {
        if (!c[static_cast<std::size_t>(j)].is_zero())
            ex.coefficients.emplace(ex.min_order + j, c[static_cast<std::size_t>(j)]);
    }
    return ex;
}

std::optional<int> order_at(const RatFunc& r, Sym v, const Center& center) {
    if (r.is_zero()) return std::nullopt;
    RatFunc s = recenter(r, v, center);
    auto first_nonzero = [](const std::vector<Poly>& cs) {
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (!cs[i].is_zero()) return static_cast<int>(i);
        return -1;
    };
    auto nc = s.num().coefficients_in(v);
    auto dc = s.den().coefficients_in(v);
    return first_nonzero(nc) - first_nonzero(dc);
}

RatFunc residue(const RatFunc& r, Sym v, const Center& center) {
    if (center.at_infinity) {
        // Res_inf r dv = -[coefficient of u^1 in r(1/u)] with u the local coordinate.
        LaurentExpansion ex = laurent(r, v, center, 1);
        return -ex.coefficient(1);
    }
    LaurentExpansion ex = laurent(r, v, center, -1);
    return ex.coefficient(-1);
}

RatFunc limit(const RatFunc& r, Sym v, const Center& center) {
    LaurentExpansion ex = laurent(r, v, center, 0);
    if (!ex.zero && ex.min_order < 0) {
        std::map<int, RatFunc> pp;
        for (const auto& [ord, c] : ex.coefficients) {
            if (ord < 0) pp.emplace(ord, c);
        }
        throw PoleObstruction(std::move(pp), "pole obstructs the limit");
    }
    return ex.coefficient(0);
}

} // namespace pv
