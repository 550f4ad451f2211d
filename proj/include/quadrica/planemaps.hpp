// Quadratic maps P^2 -> P^{n+1}: symbolic verification against a target
// quadric, every explicit constructor (conic/surface/unprojection/cone/
// quadruple plane/projected Veronese/Veronese/sphere/deformations), and
// classification by the geometry of the Veronese projection.

#pragma once

#include "quadrica/gcd.hpp"
#include "quadrica/qform.hpp"

#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace quadrica {

inline const std::vector<std::string>& plane_vars() {
    static const std::vector<std::string> v{"u", "v", "w"};
    return v;
}

// Order of the quadratic monomial basis used throughout: the coefficient
// matrix of a map, the projection center, and the SymMatrix3 pairing all
// refer to this ordering.
inline const std::vector<Exponents>& quad_monomials() {
    static const std::vector<Exponents> m{
        {2, 0, 0},  // u^2
        {0, 2, 0},  // v^2
        {0, 0, 2},  // w^2
        {1, 1, 0},  // uv
        {0, 1, 1},  // vw
        {1, 0, 1},  // uw
    };
    return m;
}

struct QuadraticMap {
    std::vector<MPoly> coords;  // homogeneous degree 2 in (u,v,w)
    std::optional<QuadraticForm> target;

    void validate() const {
        if (coords.empty()) throw validation_error("quadratic map needs coordinates");
        bool nonzero = false;
        for (const auto& c : coords) {
            nonzero = nonzero || !c.is_zero();
            if (!c.is_zero() && !c.is_homogeneous_in(plane_vars(), 2))
                throw validation_error(
                    "quadratic map coordinates must be homogeneous of degree 2 in (u,v,w)");
        }
        if (!nonzero) throw validation_error("quadratic map is identically zero");
        if (target && target->dim() != coords.size())
            throw validation_error("quadratic map/target dimension mismatch");
    }

    std::set<std::string> parameters() const {
        std::set<std::string> out;
        for (const auto& c : coords) {
            auto sup = c.support_vars();
            out.insert(sup.begin(), sup.end());
        }
        for (const auto& v : plane_vars()) out.erase(v);
        return out;
    }

    // Coefficient rows in the quad_monomials() basis; entries may involve
    // parameters.
    PMat coefficient_matrix() const {
        PMat rows;
        for (const auto& c : coords) {
            auto groups = c.collect(plane_vars());
            std::vector<MPoly> row(6, MPoly());
            for (const auto& [e, cof] : groups) {
                bool found = false;
                for (size_t k = 0; k < 6 && !found; ++k) {
                    if (e == quad_monomials()[k]) {
                        row[k] = cof;
                        found = true;
                    }
                }
                if (!found && !cof.is_zero())
                    throw validation_error("coordinate is not quadratic in (u,v,w)");
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }

    std::vector<Rat> evaluate(const Rat& u, const Rat& v, const Rat& w) const {
        std::vector<Rat> out;
        out.reserve(coords.size());
        for (const auto& c : coords) out.push_back(c.eval({{"u", u}, {"v", v}, {"w", w}}));
        return out;
    }
};

// Exact check that q(h_0, ..., h_{n+1}) expands to the zero polynomial in
// (u, v, w) and every parameter.
inline bool verify_on_quadric(const QuadraticForm& q, const QuadraticMap& phi) {
    phi.validate();
    if (q.dim() != phi.coords.size())
        throw validation_error("verify_on_quadric: dimension mismatch");
    return q.apply(phi.coords).is_zero();
}

namespace detail {

// Deterministic specialization values for parameters, nonzero rationals.
inline std::map<std::string, Rat> specialization(const std::set<std::string>& params,
                                                 std::mt19937_64& rng) {
    std::map<std::string, Rat> out;
    std::uniform_int_distribution<int> dist(-11, 11);
    for (const auto& p : params) {
        int x = 0;
        while (x == 0 || x == 1 || x == -1) x = dist(rng);
        out[p] = Rat(x);
    }
    return out;
}

inline QMat specialize_matrix(const PMat& m, const std::map<std::string, Rat>& at) {
    QMat out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (const auto& e : m[i]) out[i].push_back(e.specialize(at).constant_value());
    return out;
}

}  // namespace detail

constexpr std::uint64_t kDefaultClassifySeed = 0x716d617073ULL;  // arbitrary fixed default

// Rank of the span of the coordinates inside the 6-dimensional space of
// quadrics.  Parameters are specialized at three seeded pseudo-random
// rational points; the span over the parameter field is at least the
// specialized rank, so the maximum is reported.
inline int span_dimension(const QuadraticMap& phi, std::uint64_t seed = kDefaultClassifySeed) {
    phi.validate();
    PMat m = phi.coefficient_matrix();
    auto params = phi.parameters();
    if (params.empty()) return int(qmat_rank(detail::specialize_matrix(m, {})));
    std::mt19937_64 rng(seed);
    size_t best = 0;
    for (int round = 0; round < 3; ++round) {
        auto at = detail::specialization(params, rng);
        best = std::max(best, qmat_rank(detail::specialize_matrix(m, at)));
    }
    return int(best);
}

struct MapClass {
    std::string label;  // point, line-image, conic-image, quadruple-plane,
                        // quadric-cone-image, smooth-quadric-image, cubic-scroll,
                        // projected-veronese, smooth-projection-V1, veronese,
                        // k4-other, parameter-dependent
    int span_dim = 0;
    std::optional<int> center_rank;  // span_dim == 5 stratification
    std::optional<int> kernel_rank;  // span_dim == 4 stratification
    std::uint64_t seed = kDefaultClassifySeed;
};

namespace detail {

// quadratic monomial index -> symmetric 3x3 slot, per the x_ij pairing
// (x00, x11, x22, x01, x12, x02) <-> (u^2, v^2, w^2, uv, vw, uw)
inline QMat center_matrix(const std::vector<Rat>& z) {
    return {{z[0], z[3], z[5]}, {z[3], z[1], z[4]}, {z[5], z[4], z[2]}};
}

inline MapClass classify_numeric(const QMat& coeffs, std::uint64_t seed) {
    MapClass out;
    out.seed = seed;
    QMat reduced = coeffs;
    std::vector<size_t> pivots;
    size_t rank = qmat_rref(reduced, nullptr, &pivots);
    out.span_dim = int(rank);

    // canonical basis of the span from the reduced rows
    std::vector<MPoly> basis;
    for (size_t r = 0; r < rank; ++r) {
        MPoly b;
        for (size_t k = 0; k < 6; ++k) {
            if (reduced[r][k] == 0) continue;
            b = b + MPoly::monomial(plane_vars(), quad_monomials()[k], reduced[r][k]);
        }
        basis.push_back(b);
    }

    switch (rank) {
        case 1:
            out.label = "point";
            return out;
        case 2:
            out.label = "line-image";
            return out;
        case 3: {
            PMat jac(3, std::vector<MPoly>(3));
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = 0; j < 3; ++j)
                    jac[i][j] = basis[i].derivative(plane_vars()[j]);
            out.label = pmat_det(jac).is_zero() ? "conic-image" : "quadruple-plane";
            return out;
        }
        case 4: {
            // kernel of Sym^2(span) -> quartics, a 10 -> 15 linear map
            std::vector<std::pair<size_t, size_t>> pairs;
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = i; j < 4; ++j) pairs.emplace_back(i, j);
            std::vector<Exponents> quartics;
            for (int a = 0; a <= 4; ++a)
                for (int b = 0; a + b <= 4; ++b) quartics.push_back({a, b, 4 - a - b});
            QMat sys(pairs.size(), std::vector<Rat>(quartics.size(), 0));
            for (size_t r = 0; r < pairs.size(); ++r) {
                MPoly prod = basis[pairs[r].first] * basis[pairs[r].second];
                for (const auto& [e, c] : prod.collect(plane_vars())) {
                    for (size_t qq = 0; qq < quartics.size(); ++qq)
                        if (quartics[qq] == e) sys[r][qq] = c.constant_value();
                }
            }
            // a kernel element is a combination of the product rows that
            // expands to the zero quartic: the left nullspace of sys
            auto kernel = qmat_nullspace(qmat_transpose(sys));
            if (kernel.size() != 1) {
                out.label = "k4-other";
                out.kernel_rank = 0;
                return out;
            }
            // kernel generator as a quadric in the span coordinates
            QMat gram(4, std::vector<Rat>(4, 0));
            for (size_t r = 0; r < pairs.size(); ++r) {
                auto [i, j] = pairs[r];
                if (i == j) gram[i][i] = kernel[0][r];
                else gram[i][j] = gram[j][i] = kernel[0][r] / 2;
            }
            int krank = int(qmat_rank(gram));
            out.kernel_rank = krank;
            if (krank == 4) out.label = "smooth-quadric-image";
            else if (krank == 3) out.label = "quadric-cone-image";
            else out.label = "k4-other";
            return out;
        }
        case 5: {
            auto ns = qmat_nullspace(coeffs);
            if (ns.size() != 1) throw internal_error("rank-5 map without a projection point");
            int crank = int(qmat_rank(center_matrix(ns[0])));
            out.center_rank = crank;
            if (crank == 1) out.label = "cubic-scroll";
            else if (crank == 2) out.label = "projected-veronese";
            else out.label = "smooth-projection-V1";
            return out;
        }
        case 6:
            out.label = "veronese";
            return out;
        default:
            throw internal_error("empty span in classify");
    }
}

}  // namespace detail

// Veronese-projection classification.  Symbolic parameters are specialized
// at three seeded points; diverging answers are reported rather than
// resolved ("parameter-dependent").
inline MapClass classify(const QuadraticMap& phi, std::uint64_t seed = kDefaultClassifySeed) {
    phi.validate();
    PMat m = phi.coefficient_matrix();
    auto params = phi.parameters();
    if (params.empty()) return detail::classify_numeric(detail::specialize_matrix(m, {}), seed);
    std::mt19937_64 rng(seed);
    std::optional<MapClass> agreed;
    for (int round = 0; round < 3; ++round) {
        auto at = detail::specialization(params, rng);
        MapClass got = detail::classify_numeric(detail::specialize_matrix(m, at), seed);
        if (!agreed) {
            agreed = got;
        } else if (agreed->label != got.label || agreed->span_dim != got.span_dim ||
                   agreed->center_rank != got.center_rank ||
                   agreed->kernel_rank != got.kernel_rank) {
            MapClass out;
            out.label = "parameter-dependent";
            out.seed = seed;
            return out;
        }
    }
    return *agreed;
}

// ---------------------------------------------------------------------
// explicit constructors

namespace detail {

inline void require_linear(const MPoly& l, const char* who) {
    if (l.is_zero() || !l.is_homogeneous_in(plane_vars(), 1))
        throw validation_error(std::string(who) + ": expected a nonzero linear form in (u,v,w)");
}

}  // namespace detail

// (l1 l2 : a l1^2 : a^{-1} l2^2) onto x^2 - yz.  For a symbolic nonzero
// parameter the map is returned scaled by a (same projective map); numeric
// parameters use the literal formula.
inline QuadraticMap construct_conic_map(const MPoly& l1, const MPoly& l2, const MPoly& alpha) {
    detail::require_linear(l1, "construct_conic_map");
    detail::require_linear(l2, "construct_conic_map");
    if (alpha.is_zero()) throw validation_error("construct_conic_map: alpha must be nonzero");
    QuadraticForm target = QuadraticForm::from_polynomial(
        parse_poly("x^2-y*z", std::vector<std::string>{"x", "y", "z"}), {"x", "y", "z"});
    std::vector<MPoly> coords;
    if (alpha.is_constant()) {
        Rat a = alpha.constant_value();
        coords = {l1 * l2, alpha * l1 * l1, (l2 * l2) / a};
    } else {
        coords = {alpha * l1 * l2, alpha * alpha * l1 * l1, l2 * l2};
    }
    return {coords, target};
}

inline QuadraticMap construct_conic_map(const MPoly& l1, const MPoly& l2, const Rat& alpha) {
    return construct_conic_map(l1, l2, MPoly::constant(alpha));
}

// (l1 l3 + a l2 l4 : l1 l4 + l2 l3 : l1^2 - a l2^2 : l3^2 - a l4^2) onto
// x^2 - a y^2 - zt.
inline QuadraticMap construct_surface_map(const MPoly& l1, const MPoly& l2, const MPoly& l3,
                                          const MPoly& l4, const MPoly& a) {
    for (const MPoly* l : {&l1, &l2, &l3, &l4})
        if (!l->is_zero()) detail::require_linear(*l, "construct_surface_map");
    std::vector<MPoly> coords{l1 * l3 + a * l2 * l4, l1 * l4 + l2 * l3, l1 * l1 - a * l2 * l2,
                              l3 * l3 - a * l4 * l4};
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y"), z = MPoly::variable("z"),
          tt = MPoly::variable("t");
    QuadraticForm target =
        QuadraticForm::from_polynomial(x * x - a * y * y - z * tt, {"x", "y", "z", "t"});
    return {coords, target};
}

// Unprojection from a rational point p of Q along an injective linear map
// L: P^2 -> P^{n+1}:  Phi = q(L) p - 2 b_q(p, L) L, which lies on Q since
// q(Phi) = q(L)^2 q(p).
inline QuadraticMap construct_unprojection(const QuadraticForm& q, const std::vector<MPoly>& p,
                                           const std::vector<MPoly>& L) {
    size_t n = q.dim();
    if (p.size() != n || L.size() != n)
        throw validation_error("construct_unprojection: dimension mismatch");
    if (!q.apply(p).is_zero())
        throw math_error("not_on_quadric", "construct_unprojection: p is not on Q");
    for (const auto& l : L)
        if (!l.is_zero()) detail::require_linear(l, "construct_unprojection");
    // injectivity: the linear forms must span a 3-dimensional space
    {
        PMat rows;
        for (const auto& l : L) {
            std::vector<MPoly> row(3);
            for (const auto& [e, c] : l.collect(plane_vars()))
                for (size_t k = 0; k < 3; ++k)
                    if (e[k] == 1) row[k] = c;
            rows.push_back(row);
        }
        bool numeric = pmat_is_numeric(rows);
        size_t rk = 0;
        if (numeric) {
            rk = qmat_rank(pmat_to_qmat(rows));
        } else {
            std::mt19937_64 rng(kDefaultClassifySeed);
            std::set<std::string> params;
            for (const auto& row : rows)
                for (const auto& e : row) {
                    auto s = e.support_vars();
                    params.insert(s.begin(), s.end());
                }
            rk = qmat_rank(detail::specialize_matrix(rows, detail::specialization(params, rng)));
        }
        if (rk < 3)
            throw math_error("degenerate_projection", "construct_unprojection: L is not injective");
    }
    MPoly qL = q.apply(L);
    MPoly b = q.polar(p, L);
    std::vector<MPoly> coords(n);
    for (size_t i = 0; i < n; ++i) coords[i] = qL * p[i] - Rat(2) * b * L[i];
    return {coords, q};
}

// Conic map plus an arbitrary quadratic third... fourth slot, landing on the
// cone over x^2 - yz inside P^3.
inline QuadraticMap construct_quadric_cone_map(const MPoly& l1, const MPoly& l2,
                                               const MPoly& alpha, const MPoly& h3) {
    QuadraticMap base = construct_conic_map(l1, l2, alpha);
    if (!h3.is_zero() && !h3.is_homogeneous_in(plane_vars(), 2))
        throw validation_error("construct_quadric_cone_map: h3 must be quadratic in (u,v,w)");
    std::vector<MPoly> coords = base.coords;
    coords.push_back(h3);
    // x^2 - yz in P^3: the last coordinate is free
    PMat gram(4, std::vector<MPoly>(4));
    gram[0][0] = MPoly::constant(1);
    gram[1][2] = gram[2][1] = MPoly::constant(Rat(-1, 2));
    return {coords, QuadraticForm(gram)};
}

// Gradient map of a plane cubic, padded with zeros, onto the split form
// x0x3 + x1x4 + x2x5.
inline QuadraticMap construct_quadruple_plane(const MPoly& cubic) {
    if (cubic.is_zero() || !cubic.is_homogeneous_in(plane_vars(), 3))
        throw validation_error("construct_quadruple_plane: expected a homogeneous cubic");
    std::vector<MPoly> coords;
    for (const auto& v : plane_vars()) coords.push_back(cubic.derivative(v));
    for (int k = 0; k < 3; ++k) coords.push_back(MPoly());
    PMat gram(6, std::vector<MPoly>(6));
    for (int k = 0; k < 3; ++k)
        gram[k][k + 3] = gram[k + 3][k] = MPoly::constant(Rat(1, 2));
    return {coords, QuadraticForm(gram)};
}

// (0 : q : u^2 + a v^2 : w^2 : uw : vw) onto x0x1 + x2x3 - x4^2 - a x5^2.
inline QuadraticMap construct_projected_veronese(const MPoly& a, const MPoly& qpoly) {
    if (qpoly.is_zero() || !qpoly.is_homogeneous_in(plane_vars(), 2))
        throw validation_error("construct_projected_veronese: q must be quadratic in (u,v,w)");
    MPoly u = MPoly::variable("u"), v = MPoly::variable("v"), w = MPoly::variable("w");
    std::vector<MPoly> coords{MPoly(), qpoly, u * u + a * v * v, w * w, u * w, v * w};

    PMat gram(6, std::vector<MPoly>(6));
    gram[0][1] = gram[1][0] = MPoly::constant(Rat(1, 2));
    gram[2][3] = gram[3][2] = MPoly::constant(Rat(1, 2));
    gram[4][4] = MPoly::constant(-1);
    gram[5][5] = -a;
    return {coords, QuadraticForm(gram)};
}

// (u^2 + a w^2 : uv : vw : uw : w^2 : v^2 + b w^2) onto
// Q^4_{a,b} = (x0 x5 = x1^2 + a x2^2 + b x3^2 + ab x4^2).
inline QuadraticMap construct_veronese_q4(const MPoly& a, const MPoly& b) {
    if (a.is_constant() && a.constant_value() == 0)
        throw validation_error("construct_veronese_q4: a must be nonzero");
    if (b.is_constant() && b.constant_value() == 0)
        throw validation_error("construct_veronese_q4: b must be nonzero");
    MPoly u = MPoly::variable("u"), v = MPoly::variable("v"), w = MPoly::variable("w");
    std::vector<MPoly> coords{u * u + a * w * w, u * v, v * w, u * w, w * w, v * v + b * w * w};
    PMat gram(6, std::vector<MPoly>(6));
    gram[0][5] = gram[5][0] = MPoly::constant(Rat(1, 2));
    gram[1][1] = MPoly::constant(-1);
    gram[2][2] = -a;
    gram[3][3] = -b;
    gram[4][4] = -(a * b);
    return {coords, QuadraticForm(gram)};
}

// The same Veronese with a vanishing seventh coordinate, on
// Q^5_{a,b,c} = (x0 x5 = x1^2 + a x2^2 + b x3^2 + ab x4^2 + c x6^2).
inline QuadraticMap construct_veronese_q5(const MPoly& a, const MPoly& b, const MPoly& c) {
    for (const MPoly* x : {&a, &b, &c})
        if (x->is_constant() && x->constant_value() == 0)
            throw validation_error("construct_veronese_q5: parameters must be nonzero");
    QuadraticMap q4 = construct_veronese_q4(a, b);
    std::vector<MPoly> coords = q4.coords;
    coords.push_back(MPoly());
    PMat gram(7, std::vector<MPoly>(7));
    gram[0][5] = gram[5][0] = MPoly::constant(Rat(1, 2));
    gram[1][1] = MPoly::constant(-1);
    gram[2][2] = -a;
    gram[3][3] = -b;
    gram[4][4] = -(a * b);
    gram[6][6] = -c;
    return {coords, QuadraticForm(gram)};
}

// Rational models of the Veronese surface on the euclidean sphere:
// variant 7 on x1^2+...+x5^2 = x0^2, variant 6 on the weighted sphere
// 3x1^2+3x2^2+3x3^2+3x4^2+x5^2 = x0^2 (the irrational scalings of the
// classical unit-sphere formulas are absorbed into the target form).
inline QuadraticMap construct_sphere_veronese(int variant) {
    MPoly u = MPoly::variable("u"), v = MPoly::variable("v"), w = MPoly::variable("w");
    if (variant == 7) {
        std::vector<MPoly> coords{u * u + v * v + Rat(2) * w * w,
                                  Rat(2) * u * v,
                                  Rat(2) * v * w,
                                  Rat(2) * u * w,
                                  Rat(2) * w * w,
                                  u * u - v * v};
        QuadraticForm target = QuadraticForm::diagonal({1, -1, -1, -1, -1, -1});
        return {coords, target};
    }
    if (variant == 6) {
        std::vector<MPoly> coords{u * u + v * v + w * w,
                                  u * v,
                                  v * w,
                                  u * w,
                                  Rat(1, 2) * (u * u - v * v),
                                  Rat(1, 2) * (u * u + v * v - Rat(2) * w * w)};
        QuadraticForm target = QuadraticForm::diagonal({1, -3, -3, -3, -3, -1});
        return {coords, target};
    }
    throw validation_error("construct_sphere_veronese: variant must be 6 or 7");
}

// Families over a parameter t that degenerate at t = 0:
//
//  QP: (u^2 : v^2 : w^2 : t^2 v(v+2w) : t^2 w(w+2u) : t^2 u(u+2v) :
//       t(uv+uw+vw)) on x0x3 + x1x4 + x2x5 - x6^2; a quadruple plane at
//      t = 0, a Veronese surface for t != 0.
//
//  PV: (t^2 q0 : q1 : u^2+av^2 : w^2+t^2 q3 : uw : vw : t q6) on
//      x0x1 + x2x3 - x4^2 - a x5^2 - x6^2, where q1, q6 are binary
//      quadratics in (u,v), q1 coprime to u^2+av^2, and q0, q3 solve
//      q6^2 = q0 q1 + q3 (u^2 + a v^2); a projected Veronese at t = 0.
enum class DeformationFamily { PV, QP };

inline QuadraticMap construct_deformation_qp() {
    MPoly u = MPoly::variable("u"), v = MPoly::variable("v"), w = MPoly::variable("w");
    MPoly t = MPoly::variable("t");
    MPoly t2 = t * t;
    std::vector<MPoly> coords{u * u,
                              v * v,
                              w * w,
                              t2 * (v * v + Rat(2) * v * w),
                              t2 * (w * w + Rat(2) * w * u),
                              t2 * (u * u + Rat(2) * u * v),
                              t * (u * v + u * w + v * w)};
    PMat gram(7, std::vector<MPoly>(7));
    for (int k = 0; k < 3; ++k)
        gram[k][k + 3] = gram[k + 3][k] = MPoly::constant(Rat(1, 2));
    gram[6][6] = MPoly::constant(-1);
    return {coords, QuadraticForm(gram)};
}

inline QuadraticMap construct_deformation_pv(const Rat& a, const MPoly& q1, const MPoly& q6) {
    if (a == 0) throw validation_error("construct_deformation_pv: a must be nonzero");
    std::vector<std::string> uv{"u", "v"};
    for (const MPoly* p : {&q1, &q6}) {
        auto sup = p->support_vars();
        for (const auto& s : sup)
            if (s != "u" && s != "v")
                throw validation_error(
                    "construct_deformation_pv: q1 and q6 must be binary quadratics in (u,v)");
        if (!p->is_zero() && !p->is_homogeneous_in(uv, 2))
            throw validation_error("construct_deformation_pv: q1, q6 must be quadratic");
    }
    MPoly u = MPoly::variable("u"), v = MPoly::variable("v"), w = MPoly::variable("w");
    MPoly conic = u * u + a * v * v;
    if (!mpoly_gcd(q1, conic).is_constant())
        throw math_error("not_coprime",
                         "construct_deformation_pv: q1 shares a factor with u^2 + a v^2");

    // solve q6^2 = q0 q1 + q3 (u^2 + a v^2) for binary quadratics q0, q3:
    // 6 unknown coefficients against the 5 coefficients of a binary quartic
    std::vector<Exponents> q_basis{{2, 0}, {1, 1}, {0, 2}};
    std::vector<MPoly> gens;
    for (const auto& e : q_basis) gens.push_back(MPoly::monomial(uv, e, 1));
    std::vector<MPoly> cols;
    for (const auto& g : gens) cols.push_back(g * q1);
    for (const auto& g : gens) cols.push_back(g * conic);

    std::vector<Exponents> quartics{{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}};
    auto coeffs_of = [&](const MPoly& p) {
        std::vector<Rat> out(quartics.size(), 0);
        for (const auto& [e, c] : p.collect(uv)) {
            for (size_t k = 0; k < quartics.size(); ++k)
                if (quartics[k] == e) out[k] = c.constant_value();
        }
        return out;
    };

    QMat sys(quartics.size(), std::vector<Rat>(cols.size() + 1, 0));
    for (size_t c = 0; c < cols.size(); ++c) {
        auto col = coeffs_of(cols[c]);
        for (size_t r = 0; r < quartics.size(); ++r) sys[r][c] = col[r];
    }
    auto rhs = coeffs_of(q6 * q6);
    for (size_t r = 0; r < quartics.size(); ++r) sys[r][cols.size()] = rhs[r];

    std::vector<size_t> pivots;
    qmat_rref(sys, nullptr, &pivots);
    std::vector<Rat> sol(cols.size(), 0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols.size())
            throw math_error("not_coprime", "construct_deformation_pv: division has no solution");
        sol[pivots[r]] = sys[r][cols.size()];
    }
    MPoly q0, q3;
    for (size_t k = 0; k < 3; ++k) q0 = q0 + sol[k] * gens[k];
    for (size_t k = 0; k < 3; ++k) q3 = q3 + sol[3 + k] * gens[k];

    MPoly t = MPoly::variable("t");
    MPoly t2 = t * t;
    std::vector<MPoly> coords{t2 * q0, q1, conic, w * w + t2 * q3, u * w, v * w, t * q6};
    PMat gram(7, std::vector<MPoly>(7));
    gram[0][1] = gram[1][0] = MPoly::constant(Rat(1, 2));
    gram[2][3] = gram[3][2] = MPoly::constant(Rat(1, 2));
    gram[4][4] = MPoly::constant(-1);
    gram[5][5] = MPoly::constant(-a);
    gram[6][6] = MPoly::constant(-1);
    return {coords, QuadraticForm(gram)};
}

// dim maps_2(P^2, Q^n) >= 6(n+2) - 1 - 15 = 6n - 4.
inline long expected_dimension(long n) {
    if (n < 1) throw validation_error("expected_dimension requires n >= 1");
    return 6 * n - 4;
}

}  // namespace quadrica
