// Veronese-surface machinery: the symmetric-matrix model of P^5, the
// adjugate involution, linkage verifications, the conic <-> quadric
// correspondence, the product-of-conics isomorphism, the double-line locus
// C_{a,b}, and stereographic projection formulas.

#pragma once

#include "quadrica/gcd.hpp"
#include "quadrica/planemaps.hpp"

#include <string>
#include <vector>

namespace quadrica {

// P^5 coordinates (x00, x11, x22, x01, x12, x02) arranged as a symmetric
// 3x3 matrix M; the Veronese surface is rank M <= 1, its secant variety
// det M = 0.
struct SymMatrix3 {
    PMat entries;  // 3x3 symmetric

    SymMatrix3() : entries(3, std::vector<MPoly>(3)) {}

    explicit SymMatrix3(PMat m) : entries(std::move(m)) {
        if (entries.size() != 3 || entries[0].size() != 3)
            throw validation_error("SymMatrix3 needs a 3x3 matrix");
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (entries[i][j] != entries[j][i])
                    throw validation_error("SymMatrix3 must be symmetric");
    }

    // (x00, x11, x22, x01, x12, x02)
    static SymMatrix3 from_p5(const std::vector<MPoly>& x) {
        if (x.size() != 6) throw validation_error("SymMatrix3::from_p5 needs 6 coordinates");
        SymMatrix3 m;
        m.entries = {{x[0], x[3], x[5]}, {x[3], x[1], x[4]}, {x[5], x[4], x[2]}};
        return m;
    }

    static SymMatrix3 from_p5_numeric(const std::vector<Rat>& x) {
        std::vector<MPoly> polys;
        polys.reserve(6);
        for (const Rat& c : x) polys.push_back(MPoly::constant(c));
        return from_p5(polys);
    }

    std::vector<MPoly> to_p5() const {
        return {entries[0][0], entries[1][1], entries[2][2],
                entries[0][1], entries[1][2], entries[0][2]};
    }

    MPoly det() const { return pmat_det(entries); }

    bool is_zero() const {
        for (const auto& row : entries)
            for (const auto& e : row)
                if (!e.is_zero()) return false;
        return true;
    }

    bool operator==(const SymMatrix3& o) const { return entries == o.entries; }

    SymMatrix3 scaled(const MPoly& f) const {
        SymMatrix3 out;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) out.entries[i][j] = f * entries[i][j];
        return out;
    }
};

// Adjugate (cofactor transpose); entries quadratic in the inputs.  On the
// matrix model of P^5 this is the classical Veronese involution:
// sigma(sigma(M)) = det(M) * M.
inline SymMatrix3 sigma(const SymMatrix3& m) {
    const PMat& a = m.entries;
    auto cof = [&](int i, int j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
        int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    };
    SymMatrix3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.entries[j][i] = cof(i, j);
    return out;
}

// Exact matrix rank of a nonzero point of P^5: 1 on the Veronese surface,
// 2 on its secant variety, 3 off it.
inline int veronese_rank_stratum(const SymMatrix3& m) {
    if (m.is_zero()) throw validation_error("veronese_rank_stratum: zero matrix");
    return int(qmat_rank(pmat_to_qmat(m.entries)));
}

// a (x11 x22 - x12^2) + b (x00 x22 - x02^2) + c (x00 x11 - x01^2), a quadric
// on P^5 containing the standard Veronese surface.
inline QuadraticForm quadric_from_conic(const MPoly& a, const MPoly& b, const MPoly& c) {
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw validation_error("quadric_from_conic: all coefficients zero");
    // coordinates (x00, x11, x22, x01, x12, x02)
    PMat g(6, std::vector<MPoly>(6));
    MPoly half = MPoly::constant(Rat(1, 2));
    g[1][2] = g[2][1] = half * a;
    g[0][2] = g[2][0] = half * b;
    g[0][1] = g[1][0] = half * c;
    g[4][4] = -a;
    g[5][5] = -b;
    g[3][3] = -c;
    return QuadraticForm(g);
}

inline const std::vector<std::string>& p5_coordinate_names() {
    static const std::vector<std::string> v{"x00", "x11", "x22", "x01", "x12", "x02"};
    return v;
}

// Substitution x_ij = u_i u_j as a coordinate vector.
inline std::vector<MPoly> standard_veronese() {
    MPoly u = MPoly::variable("u"), v = MPoly::variable("v"), w = MPoly::variable("w");
    return {u * u, v * v, w * w, u * v, v * w, u * w};
}

struct ConicProduct {
    std::vector<MPoly> psi;        // 4 bidegree-(1,1) forms in x, y
    QuadraticForm target;          // bc z0^2 + ac z1^2 + ab z2^2 + z3^2
    std::vector<MPoly> inverse_x;  // first factor, in z
    std::vector<MPoly> inverse_y;  // second factor, in z
};

// The isomorphism C x C -> (bc z0^2 + ac z1^2 + ab z2^2 + z3^2 = 0) for the
// conic C = (a x0^2 + b x1^2 + c x2^2 = 0):
//   psi(x, y) = (x1y2 - x2y1 : -x0y2 + x2y0 : x0y1 - x1y0 :
//                a x0y0 + b x1y1 + c x2y2).
inline ConicProduct conic_product_iso(const MPoly& a, const MPoly& b, const MPoly& c) {
    for (const MPoly* p : {&a, &b, &c})
        if (p->is_constant() && p->constant_value() == 0)
            throw validation_error("conic_product_iso: zero parameter");
    auto X = [](int i) { return MPoly::variable("x" + std::to_string(i)); };
    auto Y = [](int i) { return MPoly::variable("y" + std::to_string(i)); };
    auto Z = [](int i) { return MPoly::variable("z" + std::to_string(i)); };

    ConicProduct out;
    out.psi = {X(1) * Y(2) - X(2) * Y(1), -(X(0) * Y(2)) + X(2) * Y(0),
               X(0) * Y(1) - X(1) * Y(0), a * X(0) * Y(0) + b * X(1) * Y(1) + c * X(2) * Y(2)};

    PMat g(4, std::vector<MPoly>(4));
    g[0][0] = b * c;
    g[1][1] = a * c;
    g[2][2] = a * b;
    g[3][3] = MPoly::constant(1);
    out.target = QuadraticForm(g);

    out.inverse_x = {Z(1) * Z(3) - b * Z(0) * Z(2), -(Z(0) * Z(3)) - a * Z(1) * Z(2),
                     b * Z(0) * Z(0) + a * Z(1) * Z(1)};
    // the y-factor inverse is the x one composed with the swap symmetry of
    // psi (first three coordinates flip sign)
    out.inverse_y = {Z(1) * Z(3) + b * Z(0) * Z(2), -(Z(0) * Z(3)) + a * Z(1) * Z(2),
                     -(b * Z(0) * Z(0) + a * Z(1) * Z(1))};
    return out;
}

// b_q(Phi(p), Phi(u,v,w)): the conic on the source cut by the tangent
// hyperplane of Q at Phi(p).  It is singular at p; generically a line pair
// (rank 2), a double line (rank 1) exactly on the C_{a,b} locus.
inline MPoly tangent_pullback_conic(const QuadraticForm& q, const QuadraticMap& phi,
                                    const std::vector<Rat>& p) {
    phi.validate();
    if (p.size() != 3) throw validation_error("tangent_pullback_conic: p must be a point of P^2");
    if (q.dim() != phi.coords.size())
        throw validation_error("tangent_pullback_conic: dimension mismatch");
    auto at = phi.evaluate(p[0], p[1], p[2]);
    bool zero = true;
    for (const Rat& c : at) zero &= (c == 0);
    if (zero) throw math_error("base_point", "tangent_pullback_conic: Phi(p) = 0");
    std::vector<MPoly> vat;
    vat.reserve(at.size());
    for (const Rat& c : at) vat.push_back(MPoly::constant(c));
    return q.polar(vat, phi.coords);
}

namespace detail {

inline QMat conic_gram_uvw(const MPoly& conic) {
    return QuadraticForm::from_polynomial(conic, plane_vars()).numeric_gram();
}

}  // namespace detail

// The locus C_{a,b} on the source of the Q^4_{a,b} Veronese where the
// tangent-section conic degenerates to a double line.  Computed from the
// 2x2 minors of the Gram matrix of tangent_pullback_conic at a symbolic
// point: their common quadratic factor, asserted proportional to
// b u^2 + a v^2 + ab w^2.
inline MPoly double_line_locus(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw validation_error("double_line_locus: parameters must be nonzero");
    QuadraticMap phi = construct_veronese_q4(MPoly::constant(a), MPoly::constant(b));
    const QuadraticForm& q = *phi.target;

    // symbolic source point (u0, v0, w0)
    std::map<std::string, MPoly> to_p0{{"u", MPoly::variable("u0")},
                                       {"v", MPoly::variable("v0")},
                                       {"w", MPoly::variable("w0")}};
    std::vector<MPoly> phi_p0;
    for (const auto& cpoly : phi.coords) phi_p0.push_back(cpoly.substitute(to_p0));
    MPoly conic = q.polar(phi_p0, phi.coords);

    // Gram entries of the conic in (u,v,w), coefficients in (u0,v0,w0)
    auto groups = conic.collect(plane_vars());
    PMat gram(3, std::vector<MPoly>(3));
    for (const auto& [e, cof] : groups) {
        std::vector<int> idx;
        for (int k = 0; k < 3; ++k)
            for (int r = 0; r < e[k]; ++r) idx.push_back(k);
        if (idx.size() != 2) throw internal_error("tangent conic is not quadratic");
        if (idx[0] == idx[1]) gram[idx[0]][idx[0]] = cof;
        else {
            MPoly half = cof * Rat(1, 2);
            gram[idx[0]][idx[1]] = half;
            gram[idx[1]][idx[0]] = half;
        }
    }

    MPoly locus;
    for (int i0 = 0; i0 < 3; ++i0)
        for (int i1 = i0 + 1; i1 < 3; ++i1)
            for (int j0 = 0; j0 < 3; ++j0)
                for (int j1 = j0 + 1; j1 < 3; ++j1) {
                    MPoly minor = gram[i0][j0] * gram[i1][j1] - gram[i0][j1] * gram[i1][j0];
                    locus = mpoly_gcd(locus, minor);
                }

    MPoly expected = b * MPoly::monomial({"u0"}, {2}, 1) + a * MPoly::monomial({"v0"}, {2}, 1) +
                     a * b * MPoly::monomial({"w0"}, {2}, 1);
    // the gcd is defined up to a rational scalar; require proportionality
    if (locus.is_zero() || !(locus * expected.leading_term().second ==
                             expected * locus.leading_term().second))
        throw math_error("locus_extraction",
                         "double_line_locus: minors do not share the expected quadratic factor; "
                         "raw gcd: " + locus.str());
    // report in plain source coordinates
    return locus.substitute({{"u0", MPoly::variable("u")},
                             {"v0", MPoly::variable("v")},
                             {"w0", MPoly::variable("w")}});
}

// One rational-function coordinate: numerator / denominator.
struct RatFun {
    MPoly numerator;
    MPoly denominator;
};

struct Stereographic {
    std::vector<RatFun> forward;  // (x_1, ..., x_n, z) |-> x_i / (1 + z)
    std::vector<RatFun> inverse;  // x |-> (2 x_i / (1+S), (1-S)/(1+S)), S = sum x_i^2
};

// Stereographic projection of the unit sphere x_1^2+...+x_n^2+z^2 = 1 from
// the south pole, with its rational inverse.
inline Stereographic stereographic(int n) {
    if (n < 1) throw validation_error("stereographic requires n >= 1");
    Stereographic out;
    MPoly z = MPoly::variable("z");
    MPoly one = MPoly::constant(1);
    for (int i = 1; i <= n; ++i)
        out.forward.push_back({MPoly::variable("x" + std::to_string(i)), one + z});
    MPoly sum;
    for (int i = 1; i <= n; ++i) {
        MPoly xi = MPoly::variable("x" + std::to_string(i));
        sum = sum + xi * xi;
    }
    for (int i = 1; i <= n; ++i)
        out.inverse.push_back({Rat(2) * MPoly::variable("x" + std::to_string(i)), one + sum});
    out.inverse.push_back({one - sum, one + sum});
    return out;
}

struct CheckReport {
    std::string check_name;
    bool status = false;
    std::string witness;  // what failed, when it failed
};

// Symbolic verifications of the two linked Veronese parametrizations and of
// the four coordinate planes against the symmetric / non-symmetric minor
// equations.
inline std::vector<CheckReport> linkage_check() {
    std::vector<CheckReport> out;
    MPoly u = MPoly::variable("u"), v = MPoly::variable("v"), w = MPoly::variable("w");

    auto sym_minors = [](const SymMatrix3& M) {
        const PMat& m = M.entries;
        return std::vector<MPoly>{m[0][1] * m[0][1] - m[0][0] * m[1][1],
                                  m[0][2] * m[0][2] - m[0][0] * m[2][2],
                                  m[1][2] * m[1][2] - m[1][1] * m[2][2]};
    };
    auto nonsym_minors = [](const SymMatrix3& M) {
        const PMat& m = M.entries;
        return std::vector<MPoly>{m[0][1] * m[1][2] - m[0][2] * m[1][1],
                                  m[1][2] * m[0][2] - m[0][1] * m[2][2],
                                  m[0][0] * m[1][2] - m[0][1] * m[0][2]};
    };
    auto ellipsoid = [](const SymMatrix3& M) {
        const PMat& m = M.entries;
        return m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2] -
               m[0][0] * m[1][1] - m[0][0] * m[2][2] - m[1][1] * m[2][2];
    };

    SymMatrix3 V(PMat{{u * u, u * v, u * w}, {u * v, v * v, v * w}, {u * w, v * w, w * w}});
    SymMatrix3 Vp(PMat{{u * u, -(u * v), -(u * w)},
                       {-(u * v), v * v, -(v * w)},
                       {-(u * w), -(v * w), w * w}});

    for (auto [name, M] : {std::pair<std::string, SymMatrix3*>{"V_on_symmetric_minors", &V},
                           {"Vprime_on_symmetric_minors", &Vp}}) {
        bool ok = true;
        std::string witness;
        for (const auto& mnr : sym_minors(*M))
            if (!mnr.is_zero()) {
                ok = false;
                witness = mnr.str();
            }
        out.push_back({name, ok, witness});
    }
    for (auto [name, M] : {std::pair<std::string, SymMatrix3*>{"V_on_ellipsoid", &V},
                           {"Vprime_on_ellipsoid", &Vp}}) {
        MPoly e = ellipsoid(*M);
        out.push_back({name, e.is_zero(), e.is_zero() ? "" : e.str()});
    }

    // the four planes cut out by the non-symmetric minors: diagonal
    // matrices and the three coordinate "corner" blocks
    MPoly p = MPoly::variable("p"), r = MPoly::variable("r"), s = MPoly::variable("s");
    MPoly zero;
    std::vector<std::pair<std::string, SymMatrix3>> planes;
    planes.emplace_back("plane_diagonal",
                        SymMatrix3(PMat{{p, zero, zero}, {zero, r, zero}, {zero, zero, s}}));
    planes.emplace_back("plane_block_01",
                        SymMatrix3(PMat{{p, r, zero}, {r, s, zero}, {zero, zero, zero}}));
    planes.emplace_back("plane_block_12",
                        SymMatrix3(PMat{{zero, zero, zero}, {zero, p, r}, {zero, r, s}}));
    planes.emplace_back("plane_block_02",
                        SymMatrix3(PMat{{p, zero, r}, {zero, zero, zero}, {r, zero, s}}));
    for (const auto& [name, M] : planes) {
        bool ok = true;
        std::string witness;
        for (const auto& mnr : nonsym_minors(M))
            if (!mnr.is_zero()) {
                ok = false;
                witness = mnr.str();
            }
        out.push_back({name, ok, witness});
    }
    return out;
}

}  // namespace quadrica
