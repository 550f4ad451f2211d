// Isotropy over Q (Hasse-Minkowski), explicit isotropic vectors by bounded
// enumeration, Witt decomposition and rational equivalence of forms.

#pragma once

#include "quadrica/hilbert.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace quadrica {

// Local isotropy of a nondegenerate diagonal form at one place.
inline bool is_locally_isotropic(const std::vector<Rat>& d, const Place& v) {
    size_t n = d.size();
    if (n <= 1) return false;
    if (v.is_infinite()) {
        bool pos = false, neg = false;
        for (const Rat& x : d) (x > 0 ? pos : neg) = true;
        return pos && neg;
    }
    if (n == 2) return is_local_square(-d[0] * d[1], v);
    Rat disc = 1;
    for (const Rat& x : d) disc *= x;
    int eps = 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) eps *= hilbert_symbol(d[i], d[j], v);
    if (n == 3) return hilbert_symbol(Rat(-1), -disc, v) == eps;
    if (n == 4)
        return !is_local_square(disc, v) || eps == hilbert_symbol(Rat(-1), Rat(-1), v);
    return true;  // rank >= 5 is isotropic over every Q_p
}

// Hasse-Minkowski decision over Q.  Degenerate forms are isotropic (their
// radical provides zeros); for nondegenerate forms the local conditions at
// the real place, 2, and the primes dividing the diagonal suffice.
inline bool is_isotropic(const QuadraticForm& q) {
    if (!q.is_numeric())
        throw validation_error("is_isotropic requires a numeric form");
    if (q.dim() == 0) return false;
    auto diag = diagonalize(q).diag;
    std::vector<Rat> d;
    for (const Rat& x : diag)
        if (x != 0) d.push_back(x);
    if (d.size() < diag.size()) return true;  // degenerate
    size_t n = d.size();
    if (n <= 1) return false;
    if (n == 2) return square_class(-d[0] * d[1]).is_one();
    if (n >= 5) {
        Signature s = signature(q);
        return s.positives > 0 && s.negatives > 0;
    }
    for (const Place& v : relevant_places(d))
        if (!is_locally_isotropic(d, v)) return false;
    return true;
}

namespace detail {

// Integer rescaling of a rational Gram matrix (clears denominators and the
// common integer content).
inline std::vector<std::vector<Int>> integer_gram(const QMat& g) {
    Int l = 1;
    for (const auto& row : g)
        for (const Rat& x : row) l = boost::multiprecision::lcm(l, den(x));
    Int content = 0;
    std::vector<std::vector<Int>> m(g.size(), std::vector<Int>(g.size()));
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) {
            m[i][j] = Int(num(g[i][j]) * (l / den(g[i][j])));
            content = boost::multiprecision::gcd(content, m[i][j]);
        }
    if (content > 1)
        for (auto& row : m)
            for (auto& x : row) x /= content;
    return m;
}

inline Int ivec_height(const std::vector<Int>& v) {
    Int h = 0;
    for (const Int& x : v) h = std::max(h, int_abs(x));
    return h;
}

inline void canonicalize_witness(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
}

inline std::optional<Int> exact_isqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

}  // namespace detail

// Exhaustive search for a primitive integer zero of a numeric form, bounded
// by max-norm `height_cap`.  The first n-1 coordinates are enumerated shell
// by shell and the last one is solved from the quadratic formula, so the
// search space is polynomial in the cap at fixed rank.  The result is the
// lexicographically smallest witness of minimal height, normalized to have
// positive first nonzero coordinate; deterministic.
inline std::vector<Rat> find_isotropic_vector(const QuadraticForm& q, long height_cap = 64) {
    if (!q.is_numeric())
        throw validation_error("find_isotropic_vector requires a numeric form");
    size_t n = q.dim();
    if (n == 0) throw math_error("not_isotropic", "empty form has no nonzero vectors");
    QMat g = q.numeric_gram();

    auto as_rat = [&](const std::vector<Int>& v) {
        std::vector<Rat> out(v.size());
        for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
        return out;
    };

    // analytic shortcuts first: a zero diagonal entry is a witness, and a
    // degenerate form yields a radical direction
    for (size_t i = 0; i < n; ++i) {
        if (g[i][i] == 0) {
            std::vector<Int> e(n, 0);
            e[i] = 1;
            return as_rat(e);
        }
    }
    {
        auto dg = diagonalize(q);
        for (size_t i = 0; i < n; ++i) {
            if (dg.diag[i] == 0) {
                std::vector<Rat> col(n);
                for (size_t r = 0; r < n; ++r) col[r] = dg.transform[r][i];
                return col;
            }
        }
    }
    if (!is_isotropic(q))
        throw math_error("not_isotropic", "form is anisotropic over Q");

    auto m = detail::integer_gram(g);
    const size_t last = n - 1;
    const Int a2 = m[last][last] * 2;  // 2A for the quadratic formula
    const Int cap(height_cap);

    std::vector<Int> best;
    Int best_h = cap + 1;

    std::vector<Int> x(n, 0);
    auto consider = [&](std::vector<Int> v) {
        bool zero = true;
        for (const Int& c : v) zero &= (c == 0);
        if (zero) return;
        detail::canonicalize_witness(v);
        Int h = detail::ivec_height(v);
        if (h > cap) return;
        if (h < best_h || (h == best_h && v < best)) {
            best = std::move(v);
            best_h = h;
        }
    };

    // q(x_0..x_{n-2}, t) = A t^2 + B t + C with A = m[last][last] != 0
    auto scan_prefix = [&]() {
        Int b = 0, c = 0;
        for (size_t i = 0; i < last; ++i) {
            b += m[i][last] * x[i];
            for (size_t j = 0; j < last; ++j) c += m[i][j] * x[i] * x[j];
        }
        b *= 2;
        Int disc = b * b - 2 * a2 * c;
        auto r = detail::exact_isqrt(disc);
        if (!r) return;
        for (int s : {1, -1}) {
            Int numt = -b + s * *r;
            if (numt % a2 != 0) continue;
            std::vector<Int> v = x;
            v[last] = numt / a2;
            consider(std::move(v));
        }
    };

    for (Int shell = 1; shell <= cap; ++shell) {
        if (best_h < shell) break;  // taller prefixes cannot beat the best
        // enumerate prefixes with max-norm exactly `shell`
        auto rec = [&](auto&& self, size_t i, bool pinned) -> void {
            if (i == last) {
                if (pinned) scan_prefix();
                return;
            }
            for (Int v = -shell; v <= shell; ++v) {
                x[i] = v;
                self(self, i + 1, pinned || int_abs(v) == shell);
            }
        };
        rec(rec, 0, false);
    }

    if (best.empty())
        throw math_error("cap_exceeded",
                         "no isotropic vector of height <= " + std::to_string(height_cap) +
                             "; raise the cap");
    return as_rat(best);
}

struct WittDecomposition {
    size_t witt_index = 0;
    QMat transform;                  // S with S^T A S in hyperbolic/kernel block form
    std::vector<Rat> kernel_diagonal;  // anisotropic kernel, diagonalized
};

// Splits off hyperbolic planes until the rest is anisotropic.  For an
// isotropic v, the pairing vector is the first basis vector w with
// b(v, w) != 0, rescaled to b(v, w) = 1 and shifted by w -= q(w)/2 * v.
inline WittDecomposition witt_decompose(const QuadraticForm& q, long height_cap = 64) {
    if (!q.is_numeric()) throw validation_error("witt_decompose requires a numeric form");
    if (is_degenerate(q))
        throw math_error("degenerate_form", "witt decomposition requires a nondegenerate form");

    const size_t n = q.dim();
    const QMat a = q.numeric_gram();

    auto polar = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
        Rat acc = 0;
        for (size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < n; ++j) acc += a[i][j] * x[i] * y[j];
        }
        return acc;
    };

    // ambient-coordinate basis of the current orthogonal complement
    QMat basis = qmat_identity(n);
    std::vector<std::vector<Rat>> hyper;  // v_1, w_1, v_2, w_2, ...

    for (;;) {
        size_t m = basis.size();
        if (m == 0) break;
        // restricted Gram in the current basis
        QMat sub(m, std::vector<Rat>(m));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) sub[i][j] = polar(basis[i], basis[j]);
        QuadraticForm restricted{sub};
        if (!is_isotropic(restricted)) break;

        auto vi = find_isotropic_vector(restricted, height_cap);
        std::vector<Rat> v(n, 0);
        for (size_t k = 0; k < m; ++k)
            for (size_t i = 0; i < n; ++i) v[i] += vi[k] * basis[k][i];

        // first basis vector not orthogonal to v
        size_t wi = m;
        for (size_t k = 0; k < m; ++k) {
            if (polar(v, basis[k]) != 0) {
                wi = k;
                break;
            }
        }
        if (wi == m) throw internal_error("isotropic vector in the radical of a regular form");
        std::vector<Rat> w = basis[wi];
        Rat bw = polar(v, w);
        for (auto& c : w) c /= bw;
        Rat qw = polar(w, w);
        for (size_t i = 0; i < n; ++i) w[i] -= qw / 2 * v[i];

        hyper.push_back(v);
        hyper.push_back(w);

        // project the remaining basis into the orthogonal complement of
        // (v, w), then keep a maximal independent subset
        QMat next;
        for (size_t k = 0; k < m; ++k) {
            std::vector<Rat> u = basis[k];
            Rat cv = polar(u, w), cw = polar(u, v);
            for (size_t i = 0; i < n; ++i) u[i] -= cv * v[i] + cw * w[i];
            bool zero = true;
            for (const Rat& c : u) zero &= (c == 0);
            if (!zero) next.push_back(std::move(u));
        }
        QMat indep, probe;
        for (const auto& row : next) {
            probe.push_back(row);
            QMat t = probe;
            if (qmat_rref(t) == probe.size())
                indep.push_back(row);
            else
                probe.pop_back();
        }
        basis = std::move(indep);
    }

    WittDecomposition out;
    out.witt_index = hyper.size() / 2;

    // diagonalize the anisotropic kernel
    QMat s_cols;  // columns of the final transform
    for (const auto& h : hyper) s_cols.push_back(h);
    if (!basis.empty()) {
        size_t m = basis.size();
        QMat sub(m, std::vector<Rat>(m));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) sub[i][j] = polar(basis[i], basis[j]);
        auto dg = diagonalize(QuadraticForm{sub});
        for (size_t c = 0; c < m; ++c) {
            std::vector<Rat> col(n, 0);
            for (size_t k = 0; k < m; ++k)
                for (size_t i = 0; i < n; ++i) col[i] += dg.transform[k][c] * basis[k][i];
            s_cols.push_back(std::move(col));
            out.kernel_diagonal.push_back(dg.diag[c]);
        }
    }

    out.transform = QMat(n, std::vector<Rat>(n, 0));
    for (size_t c = 0; c < s_cols.size(); ++c)
        for (size_t i = 0; i < n; ++i) out.transform[i][c] = s_cols[c][i];
    return out;
}

// The Gram matrix a Witt decomposition promises: witt_index hyperbolic
// [[0,1],[1,0]] blocks followed by the kernel diagonal.
inline QMat witt_block_gram(const WittDecomposition& w, size_t n) {
    QMat b(n, std::vector<Rat>(n, 0));
    for (size_t k = 0; k < w.witt_index; ++k) {
        b[2 * k][2 * k + 1] = 1;
        b[2 * k + 1][2 * k] = 1;
    }
    for (size_t i = 0; i < w.kernel_diagonal.size(); ++i)
        b[2 * w.witt_index + i][2 * w.witt_index + i] = w.kernel_diagonal[i];
    return b;
}

// Rational equivalence by the complete invariant set: rank, discriminant
// class, signature, and Hasse invariants at every relevant place.
inline bool equivalent_over_Q(const QuadraticForm& q1, const QuadraticForm& q2) {
    if (!q1.is_numeric() || !q2.is_numeric())
        throw validation_error("equivalent_over_Q requires numeric forms");
    if (is_degenerate(q1) || is_degenerate(q2))
        throw math_error("degenerate_form", "equivalence test requires nondegenerate forms");
    if (q1.dim() != q2.dim()) return false;
    if (discriminant(q1) != discriminant(q2)) return false;
    if (!(signature(q1) == signature(q2))) return false;
    auto d1 = diagonalize(q1).diag, d2 = diagonalize(q2).diag;
    std::vector<Rat> all = d1;
    all.insert(all.end(), d2.begin(), d2.end());
    for (const Place& v : relevant_places(all))
        if (hasse_invariant(q1, v) != hasse_invariant(q2, v)) return false;
    return true;
}

// Basis of an (m+1)-dimensional totally isotropic subspace, if the Witt
// index allows one; built from the hyperbolic halves of witt_decompose.
inline std::optional<std::vector<std::vector<Rat>>> totally_isotropic_subspace(
    const QuadraticForm& q, size_t m, long height_cap = 64) {
    auto w = witt_decompose(q, height_cap);
    if (w.witt_index < m + 1) return std::nullopt;
    std::vector<std::vector<Rat>> basis;
    for (size_t k = 0; k <= m; ++k) {
        std::vector<Rat> col(q.dim());
        for (size_t i = 0; i < q.dim(); ++i) col[i] = w.transform[i][2 * k];
        basis.push_back(std::move(col));
    }
    return basis;
}

}  // namespace quadrica
