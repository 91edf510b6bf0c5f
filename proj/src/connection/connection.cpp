#include "pv/connection/connection.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "pv/algebra/parser.hpp"

namespace pv {

bool same_point(const Center& a, const Center& b) {
    return a == b;
}

Connection normal_form(const SpectralParams& params, const ModuliPoint& pt) {
    const RatFunc x = RatFunc::variable(Sym::x);
    const RatFunc& k0 = params.kappa0;
    const RatFunc& k1 = params.kappa1;
    const RatFunc rho = params.rho();
    const RatFunc& t = pt.t;
    const RatFunc& q = pt.q;
    const RatFunc& p = pt.p_hat;

    RatFunc xm1 = x - 1;
    RatFunc qm1 = q - 1;
    RatFunc khat = p * p / (q * qm1 * qm1) +
                   (k0 * qm1 * qm1 + (k1 - 1) * q * qm1 - t * q) * p / (q * qm1 * qm1) +
                   rho * q + p / qm1;

    Connection c;
    c.base_var = Sym::x;
    c.degree = 2;
    c.matrix.e11 = RatFunc(0);
    c.matrix.e12 = 1 / (xm1 * xm1) - 1 / xm1 + 1 / x;
    c.matrix.e21 = -rho * x + p / (x - q) + khat;
    c.matrix.e22 = t / (xm1 * xm1) - k1 / xm1 - k0 / x - 1 / (x - q);
    c.polar_divisor = {{Center::at(0), 1}, {Center::at(1), 2}, {Center::at(q), 1}, {Center::infinity(), 1}};
    return c;
}

Matrix2 infinity_chart_matrix(const Connection& conn, bool twisted) {
    const Sym v = conn.base_var;
    const RatFunc x = RatFunc::variable(v);
    Matrix2 tw = conn.matrix;
    if (twisted && conn.degree != 0) {
        tw.e12 = tw.e12 * x.pow(conn.degree);
        tw.e21 = tw.e21 * x.pow(-conn.degree);
        tw.e22 = tw.e22 + RatFunc(conn.degree) / x;
    }
    RatFunc inv_x = 1 / x;
    Matrix2 res = tw.substitute(v, inv_x);
    RatFunc jac = -(x * x).pow(-1);
    return res.scaled(jac);
}

namespace {

int max_pole_order(const Matrix2& m, Sym v, const Center& point) {
    int order = 0;
    for (const RatFunc* e : {&m.e11, &m.e12, &m.e21, &m.e22}) {
        auto o = order_at(*e, v, point);
        if (o && *o < 0) order = std::max(order, -*o);
    }
    return order;
}

} // namespace

int pole_order_at(const Connection& conn, const Center& point) {
    if (point.at_infinity) {
        return max_pole_order(infinity_chart_matrix(conn, /*twisted=*/true), conn.base_var, Center::at(0));
    }
    return max_pole_order(conn.matrix, conn.base_var, point);
}

namespace {

std::vector<PolePoint> recompute_divisor(const Connection& conn, const std::vector<Center>& candidates) {
    std::vector<Center> uniq;
    for (const auto& c : candidates) {
        bool seen = false;
        for (const auto& u : uniq) {
            if (same_point(u, c)) {
                seen = true;
                break;
            }
        }
        if (!seen) uniq.push_back(c);
    }
    std::vector<PolePoint> out;
    for (const auto& c : uniq) {
        int o = pole_order_at(conn, c);
        if (o > 0) out.push_back({c, o});
    }
    return out;
}

} // namespace

int det_degree_shift(const Matrix2& phi, Sym base_var) {
    RatFunc d = phi.det();
    if (d.is_zero()) throw SingularGauge();
    return d.num().deg(base_var) - d.den().deg(base_var);
}

Connection gauge(const Connection& conn, const Matrix2& phi, const std::vector<Center>& extra_candidates) {
    RatFunc d = phi.det();
    if (d.is_zero()) throw SingularGauge();
    Matrix2 inv = phi.inverse();
    Matrix2 m = inv * conn.matrix * phi + inv * phi.derivative(conn.base_var);

    Connection out;
    out.base_var = conn.base_var;
    out.degree = conn.degree + det_degree_shift(phi, conn.base_var);
    out.matrix = m;

    std::vector<Center> candidates;
    for (const auto& p : conn.polar_divisor) candidates.push_back(p.point);
    for (const auto& p : extra_candidates) candidates.push_back(p);
    candidates.push_back(Center::infinity());
    out.polar_divisor = recompute_divisor(out, candidates);
    return out;
}

Connection elm(const Connection& conn, const RatFunc& point, int sign) {
    RatFunc x = RatFunc::variable(conn.base_var);
    Matrix2 phi = sign > 0 ? Matrix2::diag(x - point, RatFunc(1))
                           : Matrix2::diag(RatFunc(1), 1 / (x - point));
    return gauge(conn, phi, {Center::at(point)});
}

Connection change_coordinate(const Connection& conn, const MoebiusMap& f, std::optional<Sym> new_var) {
    Sym nv = new_var.value_or(conn.base_var);
    if (nv != conn.base_var) {
        for (const RatFunc* e : {&conn.matrix.e11, &conn.matrix.e12, &conn.matrix.e21, &conn.matrix.e22}) {
            if (e->contains(nv)) throw AlgebraError("target variable already occurs in the connection");
        }
    }
    MoebiusMap g = f.inverse();
    RatFunc gx = g.as_ratfunc(nv);
    RatFunc jac = g.derivative_at(RatFunc::variable(nv));

    Connection out;
    out.base_var = nv;
    out.degree = conn.degree;
    out.matrix = conn.matrix.substitute(conn.base_var, gx).scaled(jac);
    for (const auto& p : conn.polar_divisor) {
        out.polar_divisor.push_back({f.apply(p.point), p.order});
    }
    return out;
}

Matrix2 residual_matrix(const Connection& conn, const Center& point) {
    const Sym v = conn.base_var;
    if (point.at_infinity) {
        Matrix2 m = infinity_chart_matrix(conn, /*twisted=*/false);
        Center zero = Center::at(0);
        return {residue(m.e11, v, zero), residue(m.e12, v, zero), residue(m.e21, v, zero),
                residue(m.e22, v, zero)};
    }
    return {residue(conn.matrix.e11, v, point), residue(conn.matrix.e12, v, point),
            residue(conn.matrix.e21, v, point), residue(conn.matrix.e22, v, point)};
}

std::map<int, Matrix2> principal_part(const Connection& conn, const Center& point) {
    const Sym v = conn.base_var;
    Matrix2 m = point.at_infinity ? infinity_chart_matrix(conn, /*twisted=*/false) : conn.matrix;
    Center at = point.at_infinity ? Center::at(0) : point;
    int n = max_pole_order(m, v, at);
    std::map<int, Matrix2> out;
    if (n == 0) return out;
    LaurentExpansion l11 = laurent(m.e11, v, at, -1);
    LaurentExpansion l12 = laurent(m.e12, v, at, -1);
    LaurentExpansion l21 = laurent(m.e21, v, at, -1);
    LaurentExpansion l22 = laurent(m.e22, v, at, -1);
    for (int k = 1; k <= n; ++k) {
        out.emplace(k, Matrix2{l11.coefficient(-k), l12.coefficient(-k), l21.coefficient(-k),
                               l22.coefficient(-k)});
    }
    return out;
}

RatFunc spectral_difference(const Connection& conn, const Center& point) {
    int order = point.at_infinity
                    ? max_pole_order(infinity_chart_matrix(conn, /*twisted=*/false), conn.base_var,
                                     Center::at(0))
                    : pole_order_at(conn, point);
    if (order == 0) return RatFunc(0);
    if (order == 1) {
        Matrix2 r = residual_matrix(conn, point);
        RatFunc disc = r.trace() * r.trace() - 4 * r.det();
        return sqrt_exact(disc);
    }
    if (order == 2) {
        Matrix2 m = point.at_infinity ? infinity_chart_matrix(conn, /*twisted=*/false) : conn.matrix;
        Center at = point.at_infinity ? Center::at(0) : point;
        RatFunc R = m.trace() * m.trace() - 4 * m.det();
        LaurentExpansion ex = laurent(R, conn.base_var, at, -3);
        RatFunc c4 = ex.coefficient(-4);
        RatFunc c3 = ex.coefficient(-3);
        if (c4.is_zero()) throw AlgebraError("degenerate leading spectral coefficient");
        return -c3 / (2 * sqrt_exact(c4));
    }
    throw AlgebraError("spectral difference implemented for pole order <= 2");
}

RatFunc node_spectral_sq(const Connection& conn, const Center& point) {
    Matrix2 m = point.at_infinity ? infinity_chart_matrix(conn, /*twisted=*/false) : conn.matrix;
    Center at = point.at_infinity ? Center::at(0) : point;
    RatFunc R = m.trace() * m.trace() - 4 * m.det();
    LaurentExpansion ex = laurent(R, conn.base_var, at, 0);
    if (ex.zero || ex.min_order >= -2) return ex.coefficient(-2);
    if (ex.min_order >= -4) {
        RatFunc c4 = ex.coefficient(-4);
        RatFunc c3 = ex.coefficient(-3);
        if (c4.is_zero()) throw AlgebraError("degenerate leading spectral coefficient");
        return c3 * c3 / (4 * c4);
    }
    throw AlgebraError("node spectral data implemented for R-pole order <= 4");
}

RatFunc fuchs_sum(const Connection& conn, int degE) {
    RatFunc sum(0);
    for (const auto& p : conn.polar_divisor) {
        sum += residual_matrix(conn, p.point).trace();
        if (p.point.at_infinity) sum -= RatFunc(degE);
    }
    return sum;
}

bool genericity_check(const SpectralParams& params) {
    Rational k0 = params.kappa0.as_rational();
    Rational k1 = params.kappa1.as_rational();
    Rational kinf = params.kappaInf.as_rational();
    for (const Rational* k : {&k0, &k1, &kinf}) {
        if (is_integer(*k)) return false;
    }
    for (int s0 : {-1, 1}) {
        for (int s1 : {-1, 1}) {
            for (int sinf : {-1, 1}) {
                Rational sum = s0 * k0 + s1 * k1 + sinf * kinf;
                if (is_integer(sum)) return false;
            }
        }
    }
    return true;
}

std::string serialize(const Connection& conn) {
    std::ostringstream os;
    os << "base=" << symbol_name(conn.base_var) << " degree=" << conn.degree << " poles=";
    bool first = true;
    for (const auto& p : conn.polar_divisor) {
        if (!first) os << ',';
        os << print(p.point, /*compact=*/true) << '^' << p.order;
        first = false;
    }
    os << '\n';
    os << print(conn.matrix.e11, true) << '\n';
    os << print(conn.matrix.e12, true) << '\n';
    os << print(conn.matrix.e21, true) << '\n';
    os << print(conn.matrix.e22, true) << '\n';
    return os.str();
}

Connection deserialize_connection(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw AlgebraError("empty connection text");
    Connection conn;

    auto field = [&](const std::string& key) -> std::string {
        auto pos = header.find(key + "=");
        if (pos == std::string::npos) throw AlgebraError("missing field " + key);
        pos += key.size() + 1;
        auto end = header.find(' ', pos);
        if (end == std::string::npos) end = header.size();
        return header.substr(pos, end - pos);
    };

    auto base = symbol_from_name(field("base"));
    if (!base) throw AlgebraError("bad base variable");
    conn.base_var = *base;
    conn.degree = std::stoi(field("degree"));
    std::string poles = field("poles");
    std::size_t pos = 0;
    while (pos < poles.size()) {
        auto comma = poles.find(',', pos);
        if (comma == std::string::npos) comma = poles.size();
        std::string tok = poles.substr(pos, comma - pos);
        auto caret = tok.rfind('^');
        if (caret == std::string::npos) throw AlgebraError("bad pole token " + tok);
        Center c = parse_center(tok.substr(0, caret));
        int order = std::stoi(tok.substr(caret + 1));
        conn.polar_divisor.push_back({c, order});
        pos = comma + 1;
    }

    std::string line;
    RatFunc* entries[4] = {&conn.matrix.e11, &conn.matrix.e12, &conn.matrix.e21, &conn.matrix.e22};
    for (auto* e : entries) {
        if (!std::getline(is, line)) throw AlgebraError("truncated connection text");
        *e = parse(line);
    }
    return conn;
}

RatFunc expand_rho(const RatFunc& r) {
    SpectralParams p;
    return r.substitute(Sym::rho, p.rho());
}

Matrix2 expand_rho(const Matrix2& m) {
    return {expand_rho(m.e11), expand_rho(m.e12), expand_rho(m.e21), expand_rho(m.e22)};
}

} // namespace pv
