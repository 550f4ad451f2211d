// Maps P^1 -> Q^n: the ruled-surface residual of a map on Q against a
// second map into the ambient space, chord-based degree reduction, the
// conic through three rational points of Q, and the symmetric-power
// interpolation residual on an affine quadric.

#pragma once

#include "quadrica/gcd.hpp"
#include "quadrica/qform.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadrica {

inline const std::vector<std::string>& curve_vars() {
    static const std::vector<std::string> v{"s", "t"};
    return v;
}

// A tuple of equal-degree homogeneous polynomials in (s, t), up to scalar;
// extra variables act as parameters.
struct CurveMap {
    std::vector<MPoly> coords;
    std::optional<QuadraticForm> target;

    int degree() const {
        int d = -1;
        for (const auto& c : coords) d = std::max(d, c.degree_in_vars(curve_vars()));
        return d;
    }

    void validate() const {
        if (coords.empty()) throw validation_error("curve map needs coordinates");
        bool nonzero = false;
        int d = degree();
        for (const auto& c : coords) {
            nonzero = nonzero || !c.is_zero();
            if (!c.is_zero() && !c.is_homogeneous_in(curve_vars(), d))
                throw validation_error("curve map coordinates must be homogeneous of one degree");
        }
        if (!nonzero) throw validation_error("curve map is identically zero");
        if (target && target->dim() != coords.size())
            throw validation_error("curve map/target dimension mismatch");
    }

    // exact coordinate vectors at (s,t) = (0,1) and (1,0)
    std::vector<MPoly> value_at_zero() const { return value_at(0, 1); }
    std::vector<MPoly> value_at_infinity() const { return value_at(1, 0); }

    std::vector<MPoly> value_at(const Rat& s, const Rat& t) const {
        std::vector<MPoly> out;
        out.reserve(coords.size());
        for (const auto& c : coords) out.push_back(c.specialize({{"s", s}, {"t", t}}));
        return out;
    }
};

inline bool proportional(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

// The residual section of the ruled surface swept between phi (on Q) and
// psi (into the ambient space):
//
//   R = q(psi) * phi - 2 b_q(phi, psi) * psi,
//
// which satisfies q(R) = q(psi)^2 q(phi) = 0 identically.  Polynomial
// content (agreement points, rulings) is divided out.
inline CurveMap residual_map(const QuadraticForm& q, const CurveMap& phi, const CurveMap& psi) {
    phi.validate();
    psi.validate();
    if (phi.coords.size() != q.dim() || psi.coords.size() != q.dim())
        throw validation_error("residual_map: dimension mismatch");
    if (!q.apply(phi.coords).is_zero())
        throw math_error("not_on_quadric", "residual_map: phi does not lie on the quadric");
    if (proportional(phi.coords, psi.coords))
        throw math_error("proportional_maps", "residual_map: phi and psi are proportional");

    MPoly qpsi = q.apply(psi.coords);
    MPoly b = q.polar(phi.coords, psi.coords);
    std::vector<MPoly> r(q.dim());
    for (size_t i = 0; i < q.dim(); ++i)
        r[i] = qpsi * phi.coords[i] - Rat(2) * b * psi.coords[i];

    bool all_zero = true;
    for (const auto& c : r) all_zero = all_zero && c.is_zero();
    if (all_zero)
        throw math_error("zero_residual",
                         "residual_map: both sections lie on Q along rulings; the residual "
                         "consists of rulings only");

    CurveMap out{content_and_primitive(r).primitive, q};
    out.validate();
    return out;
}

// Degree reduction d -> d-2 along the chord through phi(0) and phi(inf):
// psi(s,t) = t*phi(0) + s*phi(inf) agrees with phi at both endpoints as an
// exact vector, so the residual drops degree by 4 against the raw d+2.
inline CurveMap degree_reduce(const QuadraticForm& q, const CurveMap& phi) {
    phi.validate();
    int d = phi.degree();
    if (d < 3) throw validation_error("degree_reduce needs degree >= 3");
    auto p0 = phi.value_at_zero();
    auto pinf = phi.value_at_infinity();
    if (proportional(p0, pinf))
        throw math_error("coincident_endpoints",
                         "degree_reduce: phi(0) and phi(inf) are projectively equal");
    MPoly s = MPoly::variable("s"), t = MPoly::variable("t");
    std::vector<MPoly> chord(q.dim());
    for (size_t i = 0; i < q.dim(); ++i) chord[i] = t * p0[i] + s * pinf[i];
    CurveMap psi{chord, std::nullopt};
    CurveMap out = residual_map(q, phi, psi);
    if (out.degree() > d - 2)
        throw internal_error("degree_reduce: expected degree drop did not happen");
    return out;
}

// The restriction of q to the plane spanned by three rational points of Q
// is a conic through the three coordinate points; it is parametrized from
// the first one by the pencil of lines.  With A = 2b(p0,p1), B = 2b(p0,p2),
// C = 2b(p1,p2) the composed map, normalized so that (1:0), (0:1), (1:1)
// land on p0, p1, p2, is
//
//   (lam : mu : nu) = (C s(s-t) : -B t(s-t) : A st).
inline CurveMap conic_through_three_points(const QuadraticForm& q,
                                           const std::vector<Rat>& p0,
                                           const std::vector<Rat>& p1,
                                           const std::vector<Rat>& p2) {
    size_t n = q.dim();
    if (p0.size() != n || p1.size() != n || p2.size() != n)
        throw validation_error("conic_through_three_points: dimension mismatch");
    for (const auto* p : {&p0, &p1, &p2})
        if (q.apply_numeric(*p) != 0)
            throw math_error("not_on_quadric", "conic_through_three_points: point not on Q");

    QMat span{p0, p1, p2};
    if (qmat_rank(span) < 3)
        throw math_error("collinear_points", "conic_through_three_points: points are collinear");

    Rat A = 2 * q.polar_numeric(p0, p1);
    Rat B = 2 * q.polar_numeric(p0, p2);
    Rat C = 2 * q.polar_numeric(p1, p2);
    if (A == 0 && B == 0 && C == 0)
        throw math_error("plane_in_quadric",
                         "conic_through_three_points: the spanned plane lies inside Q");
    if (A == 0 || B == 0 || C == 0)
        throw math_error("singular_conic",
                         "conic_through_three_points: the plane section is a line pair");

    MPoly s = MPoly::variable("s"), t = MPoly::variable("t");
    MPoly lam = C * (s * (s - t));
    MPoly mu = (-B) * (t * (s - t));
    MPoly nu = A * (s * t);
    std::vector<MPoly> coords(n);
    for (size_t i = 0; i < n; ++i)
        coords[i] = lam * p0[i] + mu * p1[i] + nu * p2[i];
    CurveMap out{content_and_primitive(coords).primitive, q};
    out.validate();
    if (!q.apply(out.coords).is_zero())
        throw internal_error("conic_through_three_points: output left the quadric");
    return out;
}

struct SymPowerResidual {
    std::vector<MPoly> interpolant;  // g_1(t), ..., g_n(t), degree <= d-1
    MPoly residual;                  // q(g(t), t) / prod (t - t_i), degree <= d-2
    std::vector<Rat> anchor0;        // g(0)
    std::vector<Rat> anchor1;        // g(1)
};

// Interpolates d points of the affine quadric {q(x_1..x_n, t) = 0} (given
// with pairwise distinct t-coordinates) by a polynomial graph of degree
// <= d-1, and divides q on the graph by prod (t - t_i) exactly; the
// quotient tracks the residual intersections of the graph with Q.
inline SymPowerResidual sym_power_residual(const MPoly& q_affine,
                                           const std::vector<std::string>& x_names,
                                           const std::string& t_name,
                                           const std::vector<std::vector<Rat>>& points) {
    size_t n = x_names.size();
    size_t d = points.size();
    if (d < 2) throw validation_error("sym_power_residual needs at least 2 points");
    for (const auto& p : points)
        if (p.size() != n + 1)
            throw validation_error("sym_power_residual: points need " + std::to_string(n + 1) +
                                   " coordinates (x..., t)");
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
            if (points[i][n] == points[j][n])
                throw math_error("repeated_t", "sym_power_residual: repeated t-coordinate");
    for (const auto& p : points) {
        std::map<std::string, Rat> at;
        for (size_t k = 0; k < n; ++k) at[x_names[k]] = p[k];
        at[t_name] = p[n];
        if (q_affine.eval(at) != 0)
            throw math_error("not_on_quadric", "sym_power_residual: point not on the quadric");
    }

    MPoly t = MPoly::variable(t_name);

    // Lagrange basis
    std::vector<MPoly> lagrange(d, MPoly::constant(1));
    for (size_t i = 0; i < d; ++i) {
        Rat denom = 1;
        for (size_t j = 0; j < d; ++j) {
            if (j == i) continue;
            lagrange[i] = lagrange[i] * (t - MPoly::constant(points[j][n]));
            denom *= points[i][n] - points[j][n];
        }
        lagrange[i] = lagrange[i] / denom;
    }

    SymPowerResidual out;
    out.interpolant.resize(n);
    for (size_t k = 0; k < n; ++k) {
        MPoly g;
        for (size_t i = 0; i < d; ++i) g = g + points[i][k] * lagrange[i];
        out.interpolant[k] = g;
    }

    std::map<std::string, MPoly> repl;
    for (size_t k = 0; k < n; ++k) repl[x_names[k]] = out.interpolant[k];
    MPoly on_graph = q_affine.substitute(repl);
    if (on_graph.is_zero())
        throw math_error("graph_in_quadric", "sym_power_residual: graph lies inside the quadric");

    MPoly prod = MPoly::constant(1);
    for (const auto& p : points) prod = prod * (t - MPoly::constant(p[n]));
    auto quotient = on_graph.try_divide(prod);
    if (!quotient)
        throw internal_error("sym_power_residual: interpolation residue not divisible");
    out.residual = *quotient;

    for (size_t k = 0; k < n; ++k) {
        out.anchor0.push_back(out.interpolant[k].eval({{t_name, Rat(0)}}));
        out.anchor1.push_back(out.interpolant[k].eval({{t_name, Rat(1)}}));
    }
    return out;
}

// Residual numerology on a degree-4 del Pezzo surface: a reduced curve of
// degree d and arithmetic genus p_a is linked inside |O_S(2)| to one of
// degree 8-d and genus 4-d+p_a, provided the restriction series fits:
// h^0(O_S(2)|_C) = 2d+1-p_a <= h^0(O_S(2)) = 13.
inline std::pair<long, long> dp4_residual(long d, long p_a) {
    if (2 * d + 1 - p_a > 13)
        throw validation_error("dp4_residual requires 2d + 1 - p_a <= 13");
    return {8 - d, 4 - d + p_a};
}

}  // namespace quadrica
