#ifndef PV_CONNECTION_CONNECTION_HPP
#define PV_CONNECTION_CONNECTION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pv/algebra/laurent.hpp"
#include "pv/connection/matrix2.hpp"
#include "pv/connection/moebius.hpp"

namespace pv {

struct PolePoint {
    Center point;
    int order;
};

struct SpectralParams {
    RatFunc kappa0 = RatFunc::variable(Sym::k0);
    RatFunc kappa1 = RatFunc::variable(Sym::k1);
    RatFunc kappaInf = RatFunc::variable(Sym::kinf);

    // ((k0 + k1 - 1)^2 - kinf^2) / 4
    RatFunc rho() const {
        RatFunc m = kappa0 + kappa1 - 1;
        return (m * m - kappaInf * kappaInf) / 4;
    }
};

struct ModuliPoint {
    RatFunc t = RatFunc::variable(Sym::t);
    RatFunc q = RatFunc::variable(Sym::q);
    RatFunc p_hat = RatFunc::variable(Sym::phat);
};

// A rank-2 meromorphic connection on P^1, stored as the coefficient matrix of
// d(base_var) in the affine chart of base_var. The vector bundle is modeled
// as O + O(degree) with the twist carried by the second frame vector, so the
// chart at infinity is diag(1, x^degree)-conjugated before the coordinate
// flip x -> 1/x.
struct Connection {
    Sym base_var = Sym::x;
    int degree = 0;
    Matrix2 matrix;
    std::vector<PolePoint> polar_divisor;
};

// The normal form on O + O(2) with polar divisor [0] + 2[1] + [q] + [inf].
Connection normal_form(const SpectralParams& params, const ModuliPoint& pt);

// Connection matrix in the chart at infinity (z = 1/x with the -dz/z^2
// Jacobian, entries as functions of the base variable reused as z). With
// `twisted` the diag(1, x^degree) bundle twist is applied first; pole-order
// bookkeeping at infinity uses the twisted chart, residue extraction the
// plain one.
Matrix2 infinity_chart_matrix(const Connection& conn, bool twisted);

// Actual pole order of the connection at a point (0 if holomorphic there).
int pole_order_at(const Connection& conn, const Center& point);

// Gauge action M -> Phi^-1 M Phi + Phi^-1 dPhi/dx. The polar divisor is
// recomputed from the actual orders at the old pole set, the supplied extra
// candidate points, and infinity; the degree tag shifts by the divisor degree
// of det(Phi).
Connection gauge(const Connection& conn, const Matrix2& phi,
                 const std::vector<Center>& extra_candidates = {});

// Elementary transformation in the standard frame (invariant line spanned by
// the first basis vector): gauge by diag(x - p, 1) for sign > 0 and by
// diag(1, 1/(x - p)) for sign < 0.
Connection elm(const Connection& conn, const RatFunc& point, int sign);

// Finite zeros minus finite poles of det(phi) in the base variable; the
// bundle-degree shift of the gauge.
int det_degree_shift(const Matrix2& phi, Sym base_var);

// Coordinate change X = f(x): matrix M(f^-1(X)) * d(f^-1)/dX, polar divisor
// mapped through f. If new_var is given the result is written in that symbol
// (which must not occur in the connection).
Connection change_coordinate(const Connection& conn, const MoebiusMap& f,
                             std::optional<Sym> new_var = std::nullopt);

// Entrywise residue at the point; at infinity in the twisted chart.
Matrix2 residual_matrix(const Connection& conn, const Center& point);

// Principal part coefficients A_k (k = 1..pole order), empty if holomorphic.
std::map<int, Matrix2> principal_part(const Connection& conn, const Center& point);

// kappa^+ - kappa^- at the point, up to the global sqrt_exact sign: for a
// simple pole the square root of tr^2 - 4 det of the residual matrix, for a
// double pole -c3/(2 sqrt(c4)) from R = (tr M)^2 - 4 det M.
RatFunc spectral_difference(const Connection& conn, const Center& point);

// (kappa^+ - kappa^-)^2 read off R = tr^2 - 4 det at the point: the order -2
// coefficient when R has at most a double pole, c3^2/(4 c4) when R has a pole
// of order 4 (or 3 after cancellation of the top term).
RatFunc node_spectral_sq(const Connection& conn, const Center& point);

// Sum of the traces of the residual matrices over the declared polar divisor,
// with the trace at infinity read in the degree-degE chart (a -degE shift of
// the plain trace); equals -degE when the divisor is complete.
RatFunc fuchs_sum(const Connection& conn, int degE);

// True iff the instantiated residual data are generic: no kappa is an
// integer and no signed sum e0 k0 + e1 k1 + einf kinf is an integer.
bool genericity_check(const SpectralParams& params);

// Line-oriented text serialization (header + four expression lines).
std::string serialize(const Connection& conn);
Connection deserialize_connection(const std::string& text);

// Replace the symbol `rho` by ((k0 + k1 - 1)^2 - kinf^2)/4.
RatFunc expand_rho(const RatFunc& r);
Matrix2 expand_rho(const Matrix2& m);

bool same_point(const Center& a, const Center& b);

} // namespace pv

#endif
