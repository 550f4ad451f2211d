// Hilbert symbols over Q_p and R, Legendre symbols, local squares and the
// Hasse invariant of a numeric form.

#pragma once

#include "quadrica/qform.hpp"

#include <optional>
#include <set>
#include <vector>

namespace quadrica {

// A place of Q: a finite prime, or infinity for the real place.
struct Place {
    std::optional<Int> prime;  // empty = infinite place

    static Place infinity() { return Place{std::nullopt}; }
    static Place at(Int p) {
        if (!is_probable_prime(p)) throw validation_error("not a prime: " + p.str());
        return Place{std::move(p)};
    }
    bool is_infinite() const { return !prime.has_value(); }
    bool operator<(const Place& o) const {
        if (is_infinite() != o.is_infinite()) return o.is_infinite();
        if (is_infinite()) return false;
        return *prime < *o.prime;
    }
    std::string str() const { return is_infinite() ? "inf" : prime->str(); }
};

// Legendre symbol (a/p) for odd prime p, a a unit mod p.
inline int legendre(const Int& a, const Int& p) {
    Int r = pow_mod(a, (p - 1) / 2, p);
    if (r == 0) throw internal_error("legendre: argument not a unit");
    return r == 1 ? 1 : -1;
}

// (a, b)_v = +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over the
// completion at v; computed by the standard valuation/residue formula.
inline int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw validation_error("hilbert_symbol: zero argument");
    if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = *v.prime;
    long alpha = padic_valuation(a, p);
    long beta = padic_valuation(b, p);
    if (p == 2) {
        Int u = padic_unit_mod(a, 2, 8);
        Int w = padic_unit_mod(b, 2, 8);
        auto eps = [](const Int& x) { return ((x - 1) / 2) % 2 != 0; };    // x = 3,7 mod 8
        auto omega = [](const Int& x) { return ((x * x - 1) / 8) % 2 != 0; };  // x = 3,5 mod 8
        bool odd = (eps(u) && eps(w)) ^ (alpha % 2 != 0 && omega(w)) ^ (beta % 2 != 0 && omega(u));
        return odd ? -1 : 1;
    }
    Int u = padic_unit_mod(a, p, p);
    Int w = padic_unit_mod(b, p, p);
    int out = 1;
    if ((alpha % 2 != 0) && (beta % 2 != 0) && ((p - 1) / 2) % 2 != 0) out = -out;
    if (beta % 2 != 0 && legendre(u, p) == -1) out = -out;
    if (alpha % 2 != 0 && legendre(w, p) == -1) out = -out;
    return out;
}

inline int hilbert_symbol(const Rat& a, const Rat& b, const Int& p) {
    return hilbert_symbol(a, b, Place::at(p));
}

// Is x a square in the completion at v?
inline bool is_local_square(const Rat& x, const Place& v) {
    if (x == 0) return true;
    if (v.is_infinite()) return x > 0;
    const Int& p = *v.prime;
    if (padic_valuation(x, p) % 2 != 0) return false;
    if (p == 2) return padic_unit_mod(x, 2, 8) == 1;
    return legendre(padic_unit_mod(x, p, p), p) == 1;
}

// Hasse invariant prod_{i<j} (d_i, d_j)_v over a diagonalization; this is
// independent of the diagonalization chosen.
inline int hasse_invariant(const QuadraticForm& q, const Place& v) {
    if (is_degenerate(q))
        throw math_error("degenerate_form", "hasse invariant requires a nondegenerate form");
    auto d = diagonalize(q).diag;
    int out = 1;
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j) out *= hilbert_symbol(d[i], d[j], v);
    return out;
}

inline int hasse_invariant(const QuadraticForm& q, const Int& p) {
    return hasse_invariant(q, Place::at(p));
}

// 2 together with every odd prime dividing a numerator or denominator of
// some entry of `values`; small enough to cover all places where the local
// invariants of a form with these diagonal entries can be nontrivial.
inline std::set<Place> relevant_places(const std::vector<Rat>& values) {
    std::set<Place> out;
    out.insert(Place::infinity());
    out.insert(Place{Int(2)});
    for (const Rat& x : values) {
        if (x == 0) continue;
        for (const auto& [p, e] : factor(num(x) * den(x)))
            if (p != 2) out.insert(Place{p});
    }
    return out;
}

}  // namespace quadrica
