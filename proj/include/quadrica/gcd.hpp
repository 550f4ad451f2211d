// Polynomial gcd over Q via recursive content reduction and a primitive
// pseudo-remainder sequence in the most significant variable.  Degrees stay
// small here (residual curves, tangent-conic minors), so no subresultant
// tricks are needed.

#pragma once

#include "quadrica/mpoly.hpp"

#include <string>
#include <vector>

namespace quadrica {

namespace detail {

inline MPoly x_coeff(const MPoly& f, const std::string& x, int k) {
    for (const auto& [e, c] : f.collect({x})) {
        if (e[0] == k) return c;
    }
    return MPoly();
}

inline MPoly x_power(const std::string& x, int k) {
    return MPoly::monomial({x}, {k}, 1);
}

inline MPoly pseudo_remainder(MPoly a, const MPoly& b, const std::string& x) {
    int db = b.degree_in(x);
    MPoly lb = x_coeff(b, x, db);
    while (!a.is_zero() && a.degree_in(x) >= db) {
        int da = a.degree_in(x);
        MPoly la = x_coeff(a, x, da);
        a = lb * a - la * x_power(x, da - db) * b;
    }
    return a;
}

}  // namespace detail

inline MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

namespace detail {

// gcd of the coefficients of f viewed in R[x], R the remaining variables.
inline MPoly x_content(const MPoly& f, const std::string& x) {
    MPoly g;
    for (const auto& [e, c] : f.collect({x})) g = mpoly_gcd(g, c);
    return g;
}

}  // namespace detail

// Canonical gcd: primitive integer-coprime coefficients, positive leading
// coefficient under grlex.  gcd(0, 0) = 0; coprime inputs give 1.
inline MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.normalized_primitive();
    if (b.is_zero()) return a.normalized_primitive();
    MPoly f = a.normalized_primitive();
    MPoly g = b.normalized_primitive();
    if (f == g) return f;
    if (f.is_constant() || g.is_constant()) return MPoly::constant(1);

    // main variable: the most significant one appearing in either
    std::string x;
    {
        auto sa = f.support_vars(), sb = g.support_vars();
        sa.insert(sb.begin(), sb.end());
        x = *sa.begin();
    }
    if (f.degree_in(x) == 0 || g.degree_in(x) == 0) {
        // x appears in only one operand: the gcd cannot involve x
        MPoly cf = detail::x_content(f, x);
        MPoly cg = detail::x_content(g, x);
        return mpoly_gcd(cf, cg);
    }

    MPoly cf = detail::x_content(f, x);
    MPoly cg = detail::x_content(g, x);
    auto divide = [](const MPoly& p, const MPoly& d) {
        auto q = p.try_divide(d);
        if (!q) throw internal_error("gcd: content division failed");
        return *q;
    };
    MPoly pf = divide(f, cf);
    MPoly pg = divide(g, cg);

    if (pf.degree_in(x) < pg.degree_in(x)) std::swap(pf, pg);
    while (!pg.is_zero() && pg.degree_in(x) > 0) {
        MPoly r = detail::pseudo_remainder(pf, pg, x);
        pf = pg;
        pg = r.is_zero() ? r : divide(r, detail::x_content(r, x)).normalized_primitive();
    }
    MPoly h = pg.is_zero() ? pf : MPoly::constant(1);
    return (mpoly_gcd(cf, cg) * h).normalized_primitive();
}

struct ContentPrimitive {
    MPoly content;                 // positive rational content times the primitive gcd
    std::vector<MPoly> primitive;  // entries divided by `content`
};

// Removes the common content of a polynomial vector: the positive rational
// content of all coefficients together with the primitive polynomial gcd of
// the entries (positive grlex-leading coefficient).
inline ContentPrimitive content_and_primitive(const std::vector<MPoly>& entries) {
    bool all_zero = true;
    for (const auto& p : entries)
        if (!p.is_zero()) all_zero = false;
    if (all_zero) throw validation_error("content_and_primitive: all entries zero");

    Int gnum = 0;
    Int lden = 1;
    for (const auto& p : entries) {
        for (const auto& [e, c] : p.terms()) {
            gnum = boost::multiprecision::gcd(gnum, int_abs(num(c)));
            lden = boost::multiprecision::lcm(lden, den(c));
        }
    }
    Rat rc(gnum, lden);

    MPoly g;
    for (const auto& p : entries) g = mpoly_gcd(g, p);

    ContentPrimitive out;
    out.content = g * rc;
    for (const auto& p : entries) {
        auto q = p.try_divide(out.content);
        if (!q) throw internal_error("content_and_primitive: inexact division");
        out.primitive.push_back(*q);
    }
    return out;
}

}  // namespace quadrica
