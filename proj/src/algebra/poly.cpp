#include "pv/algebra/poly.hpp"

#include <algorithm>
#include <cassert>

#include "pv/algebra/errors.hpp"

namespace pv {

Poly::Poly(const Rational& c) {
    if (sgn(c) != 0) terms_.emplace(Monomial::unit(), c);
}

Poly Poly::variable(Sym s, int power) {
    Poly p;
    if (power == 0) return Poly(Rational(1));
    p.terms_.emplace(Monomial::var(s, power), Rational(1));
    return p;
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
    Poly p;
    if (sgn(c) != 0) p.terms_.emplace(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

const Monomial& Poly::leading_monomial() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

const Rational& Poly::leading_coefficient() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

int Poly::deg(Sym s) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg(s));
    return d;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

bool Poly::contains(Sym s) const {
    for (const auto& [m, c] : terms_)
        if (m.deg(s) > 0) return true;
    return false;
}

std::optional<Sym> Poly::min_symbol() const {
    int best = kNumSymbols;
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < best; ++i) {
            if (m.e[i] > 0) {
                best = i;
                break;
            }
        }
    }
    if (best == kNumSymbols) return std::nullopt;
    return static_cast<Sym>(best);
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma.times(mb), ca * cb);
        }
    }
    return r;
}

Poly Poly::times(const Rational& c) const {
    Poly r;
    if (sgn(c) == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly result(Rational(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        base = (k >>= 1) ? base * base : base;
    }
    return result;
}

Poly Poly::derivative(Sym s) const {
    Poly r;
    const int idx = static_cast<int>(s);
    for (const auto& [m, c] : terms_) {
        int k = m.e[idx];
        if (k == 0) continue;
        Monomial d = m;
        d.e[idx] = static_cast<std::int16_t>(k - 1);
        r.add_term(d, c * k);
    }
    return r;
}

std::vector<Poly> Poly::coefficients_in(Sym s) const {
    std::vector<Poly> out;
    if (is_zero()) return out;
    out.resize(static_cast<std::size_t>(deg(s)) + 1);
    const int idx = static_cast<int>(s);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        int k = rest.e[idx];
        rest.e[idx] = 0;
        out[static_cast<std::size_t>(k)].add_term(rest, c);
    }
    return out;
}

Poly Poly::from_coefficients_in(Sym s, const std::vector<Poly>& coeffs) {
    Poly r;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        r += coeffs[k] * Poly::variable(s, static_cast<int>(k));
    }
    return r;
}

Poly Poly::substitute(Sym s, const Poly& g) const {
    if (!contains(s)) return *this;
    auto coeffs = coefficients_in(s);
    Poly r;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        r = r * g + *it;
    }
    return r;
}

Rational Poly::normalizing_content() const {
    if (is_zero()) return Rational(1);
    Rational g(0);
    for (const auto& [m, c] : terms_) g = rational_gcd(g, c);
    if (sgn(leading_coefficient()) < 0) g = -g;
    return g;
}

std::optional<Poly> Poly::try_divide_exact(const Poly& a, const Poly& b) {
    assert(!b.is_zero());
    Poly rem = a;
    Poly quot;
    const Monomial& lmb = b.leading_monomial();
    const Rational& lcb = b.leading_coefficient();
    while (!rem.is_zero()) {
        const Monomial& lmr = rem.leading_monomial();
        if (!lmb.divides(lmr)) return std::nullopt;
        Monomial m = lmr.divided_by(lmb);
        Rational c = rem.leading_coefficient() / lcb;
        Poly step = Poly::monomial(m, c);
        quot += step;
        rem -= step * b;
    }
    return quot;
}

namespace {

// Pseudo-remainder of a by b in the variable s: lc(b)^(da-db+1) * a mod b.
Poly pseudo_remainder(const Poly& a, const Poly& b, Sym s) {
    auto ac = a.coefficients_in(s);
    auto bc = b.coefficients_in(s);
    int da = static_cast<int>(ac.size()) - 1;
    int db = static_cast<int>(bc.size()) - 1;
    assert(db >= 0);
    if (da < db) return a;
    const Poly& lcb = bc.back();
    std::vector<Poly> r = ac;
    for (int k = da; k >= db; --k) {
        Poly rk = r[static_cast<std::size_t>(k)];
        for (int i = 0; i <= k; ++i) {
            if (i >= k - db && !rk.is_zero()) {
                // r_i = lcb * r_i - rk * b_{i-(k-db)}
                r[static_cast<std::size_t>(i)] =
                    lcb * r[static_cast<std::size_t>(i)] - rk * bc[static_cast<std::size_t>(i - (k - db))];
            } else {
                r[static_cast<std::size_t>(i)] = lcb * r[static_cast<std::size_t>(i)];
            }
        }
        r[static_cast<std::size_t>(k)] = Poly();
    }
    r.resize(static_cast<std::size_t>(db));
    return Poly::from_coefficients_in(s, r);
}

// gcd of the coefficients of p viewed in the variable s.
Poly content_in(const Poly& p, Sym s) {
    Poly g;
    for (const auto& c : p.coefficients_in(s)) {
        if (c.is_zero()) continue;
        g = Poly::gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

Poly normalize_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    return p.times(Rational(1) / p.normalizing_content());
}

// Per-variable minimum exponents over all terms.
Monomial monomial_content(const Poly& p) {
    Monomial m;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        if (first) {
            m = mono;
            first = false;
        } else {
            for (int i = 0; i < kNumSymbols; ++i) m.e[i] = std::min(m.e[i], mono.e[i]);
        }
    }
    return m;
}

Poly shift_down(const Poly& p, const Monomial& m) {
    if (m.is_unit()) return p;
    Poly r;
    for (const auto& [mono, c] : p.terms()) r.add_term(mono.divided_by(m), c);
    return r;
}

// Evaluate an integer-coefficient polynomial at v = xi (Horner).
Poly eval_at_integer(const Poly& p, Sym v, const Integer& xi) {
    auto coeffs = p.coefficients_in(v);
    Poly acc;
    Rational rxi{xi};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc.times(rxi) + *it;
    }
    return acc;
}

Integer max_abs_numerator(const Poly& p) {
    Integer m = 0;
    for (const auto& [mono, c] : p.terms()) {
        Integer a = abs(c.get_num());
        if (a > m) m = a;
    }
    return m;
}

// Balanced remainder in (-xi/2, xi/2] applied to every integer coefficient;
// also outputs (p - digits)/xi, which is exact.
Poly symmetric_digit(const Poly& p, const Integer& xi, Poly& quotient) {
    Poly digit;
    quotient = Poly();
    Integer half = xi / 2;
    for (const auto& [mono, c] : p.terms()) {
        Integer n = c.get_num(); // integral coefficients only on this path
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), xi.get_mpz_t());
        if (r > half) r -= xi;
        if (sgn(r) != 0) digit.add_term(mono, Rational(r));
        Integer q = (n - r) / xi;
        if (sgn(q) != 0) quotient.add_term(mono, Rational(q));
    }
    return digit;
}

// Heuristic gcd on integer-coefficient polynomials: evaluate the chosen
// variable at a large integer, recurse, lift the result xi-adically and
// verify by exact division. Returns nullopt when the attempts fail.
std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b, int depth = 0) {
    if (depth > kNumSymbols + 2) return std::nullopt;
    auto va = a.min_symbol();
    auto vb = b.min_symbol();
    if (!va && !vb) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.constant_value().get_num().get_mpz_t(),
                b.constant_value().get_num().get_mpz_t());
        return Poly(Rational(g));
    }
    Sym v = !va ? *vb : (!vb ? *va : static_cast<Sym>(std::min(static_cast<int>(*va), static_cast<int>(*vb))));

    Integer ma = max_abs_numerator(a);
    Integer mb = max_abs_numerator(b);
    Integer xi = 2 * (ma < mb ? ma : mb) + 2;
    if (xi < 4) xi = 4;

    for (int attempt = 0; attempt < 6; ++attempt, xi = xi * 3 + 1) {
        Poly ea = eval_at_integer(a, v, xi);
        Poly eb = eval_at_integer(b, v, xi);
        if (ea.is_zero() || eb.is_zero()) continue;
        auto g0 = heuristic_gcd(ea, eb, depth + 1);
        if (!g0) continue;
        // xi-adic lift of g0 into a polynomial in v
        Poly g = *g0;
        Poly lifted;
        int i = 0;
        bool ok = true;
        while (!g.is_zero()) {
            if (i > 64) {
                ok = false;
                break;
            }
            Poly quot;
            Poly digit = symmetric_digit(g, xi, quot);
            lifted += digit * Poly::variable(v, i);
            g = quot;
            ++i;
        }
        if (!ok || lifted.is_zero()) continue;
        lifted = lifted.times(Rational(1) / lifted.normalizing_content());
        if (Poly::try_divide_exact(a, lifted) && Poly::try_divide_exact(b, lifted)) {
            return lifted;
        }
    }
    return std::nullopt;
}

} // namespace

Poly Poly::gcd(const Poly& a_in, const Poly& b_in) {
    if (a_in.is_zero()) return normalize_primitive(b_in);
    if (b_in.is_zero()) return normalize_primitive(a_in);

    // Common monomial factor out front; it is cheap and very common.
    Monomial ca_m = monomial_content(a_in);
    Monomial cb_m = monomial_content(b_in);
    Monomial common;
    for (int i = 0; i < kNumSymbols; ++i) common.e[i] = std::min(ca_m.e[i], cb_m.e[i]);

    Poly a = normalize_primitive(shift_down(a_in, ca_m));
    Poly b = normalize_primitive(shift_down(b_in, cb_m));

    auto sa = a.min_symbol();
    auto sb = b.min_symbol();
    Poly mono_part = Poly::monomial(common, Rational(1));
    if (!sa || !sb) return mono_part; // one side is now constant
    if (a == b) return mono_part * a;
    if (a == -b) return mono_part * normalize_primitive(a);

    if (auto h = heuristic_gcd(a, b)) {
        return mono_part * normalize_primitive(*h);
    }

    Sym v = static_cast<Sym>(std::min(static_cast<int>(*sa), static_cast<int>(*sb)));

    Poly ca = content_in(a, v);
    Poly cb = content_in(b, v);
    Poly c = Poly::gcd(ca, cb);
    auto pa_opt = try_divide_exact(a, ca);
    auto pb_opt = try_divide_exact(b, cb);
    assert(pa_opt && pb_opt);
    Poly pa = *pa_opt;
    Poly pb = *pb_opt;

    if (pa.deg(v) < pb.deg(v)) std::swap(pa, pb);
    if (pb.deg(v) == 0) {
        // pb is the primitive part of a polynomial with v-degree 0, hence a unit.
        return mono_part * normalize_primitive(c);
    }

    // Subresultant polynomial remainder sequence on the primitive parts.
    Poly g(Rational(1));
    Poly h(Rational(1));
    while (true) {
        int delta = pa.deg(v) - pb.deg(v);
        Poly rem = pseudo_remainder(pa, pb, v);
        if (rem.is_zero()) break;
        if (rem.deg(v) == 0) {
            pb = Poly(Rational(1));
            break;
        }
        pa = pb;
        // divisor = g * h^delta
        Poly divisor = g;
        for (int i = 0; i < delta; ++i) divisor = divisor * h;
        auto next = try_divide_exact(rem, divisor);
        assert(next);
        pb = *next;
        g = pa.coefficients_in(v).back();
        // h = g^delta * h^(1-delta), exact in the subresultant scheme
        if (delta == 0) {
            // h unchanged
        } else {
            Poly gd = g.pow(static_cast<unsigned>(delta));
            if (delta == 1) {
                h = gd;
            } else {
                Poly hd = h.pow(static_cast<unsigned>(delta - 1));
                auto hh = try_divide_exact(gd, hd);
                assert(hh);
                h = *hh;
            }
        }
    }

    Poly pp = pb;
    Poly cont = content_in(pp, v);
    auto prim = try_divide_exact(pp, cont);
    assert(prim);
    return mono_part * normalize_primitive(c * (*prim));
}

std::optional<Poly> Poly::sqrt() const {
    if (is_zero()) return Poly();
    const Monomial& lm = leading_monomial();
    for (int i = 0; i < kNumSymbols; ++i) {
        if (lm.e[i] % 2 != 0) return std::nullopt;
    }
    auto lc_root = rational_sqrt(leading_coefficient());
    if (!lc_root) return std::nullopt;
    Monomial half;
    for (int i = 0; i < kNumSymbols; ++i) half.e[i] = static_cast<std::int16_t>(lm.e[i] / 2);

    // Leading-term long division: maintain root with remainder N - root^2;
    // the next term of the root is lt(N - root^2) / (2 lt(root)).
    Poly root = Poly::monomial(half, *lc_root);
    Poly rem = *this - root * root;
    const Rational two_lc = 2 * (*lc_root);
    std::size_t guard = 64 + 8 * term_count() * term_count();
    while (!rem.is_zero()) {
        if (guard-- == 0) return std::nullopt;
        const Monomial& lmr = rem.leading_monomial();
        if (!half.divides(lmr)) return std::nullopt;
        Monomial m = lmr.divided_by(half);
        if (!(m < half)) return std::nullopt;
        Poly term = Poly::monomial(m, rem.leading_coefficient() / two_lc);
        rem -= root * term.times(Rational(2)) + term * term;
        root += term;
    }
    if (root * root == *this) return root;
    return std::nullopt;
}

} // namespace pv
