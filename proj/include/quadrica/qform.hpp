// Quadratic forms as symmetric Gram matrices, q(x) = x^T A x.  Entries are
// polynomials so that parametrized families (Q^4_{a,b} and friends) live in
// the same type as numeric forms; the decision procedures require numeric
// entries and say so.

#pragma once

#include "quadrica/linalg.hpp"
#include "quadrica/parse.hpp"

#include <string>
#include <utility>
#include <vector>

namespace quadrica {

class QuadraticForm {
public:
    QuadraticForm() = default;

    explicit QuadraticForm(PMat gram) : gram_(std::move(gram)) {
        size_t n = gram_.size();
        for (const auto& row : gram_)
            if (row.size() != n) throw validation_error("gram matrix must be square");
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (gram_[i][j] != gram_[j][i])
                    throw validation_error("gram matrix must be symmetric");
    }

    explicit QuadraticForm(const QMat& gram) : QuadraticForm(qmat_to_pmat(gram)) {}

    static QuadraticForm diagonal(const std::vector<Rat>& d) {
        QMat m(d.size(), std::vector<Rat>(d.size(), 0));
        for (size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
        return QuadraticForm(m);
    }

    // Symmetrizes a homogeneous quadratic polynomial in `vars`: the
    // off-diagonal coefficient is split evenly between a_ij and a_ji.
    // Coefficients may involve further (parameter) variables.
    static QuadraticForm from_polynomial(const MPoly& q, const std::vector<std::string>& vars) {
        size_t n = vars.size();
        if (!q.is_homogeneous_in(vars, 2))
            throw validation_error("form polynomial must be homogeneous of degree 2 in " +
                                   std::to_string(n) + " variables");
        PMat gram(n, std::vector<MPoly>(n));
        for (const auto& [e, coeff] : q.collect(vars)) {
            std::vector<size_t> idx;
            for (size_t i = 0; i < n; ++i)
                for (int k = 0; k < e[i]; ++k) idx.push_back(i);
            if (idx.size() != 2) throw internal_error("unexpected monomial degree");
            if (idx[0] == idx[1]) {
                gram[idx[0]][idx[0]] = coeff;
            } else {
                MPoly half = coeff * Rat(1, 2);
                gram[idx[0]][idx[1]] = half;
                gram[idx[1]][idx[0]] = half;
            }
        }
        return QuadraticForm(gram);
    }

    static QuadraticForm from_polynomial(const MPoly& q) {
        auto sup = q.support_vars();
        return from_polynomial(q, {sup.begin(), sup.end()});
    }

    size_t dim() const { return gram_.size(); }
    const PMat& gram() const { return gram_; }

    bool is_numeric() const { return pmat_is_numeric(gram_); }
    QMat numeric_gram() const { return pmat_to_qmat(gram_); }

    // q evaluated on a polynomial vector.
    MPoly apply(const std::vector<MPoly>& x) const {
        if (x.size() != dim())
            throw validation_error("dimension mismatch: form has dimension " +
                                   std::to_string(dim()) + ", vector has " +
                                   std::to_string(x.size()));
        return polar(x, x);
    }

    // Polar bilinear form b_q(x, y) = x^T A y, so b_q(x, x) = q(x).
    MPoly polar(const std::vector<MPoly>& x, const std::vector<MPoly>& y) const {
        if (x.size() != dim() || y.size() != dim())
            throw validation_error("dimension mismatch in polar form");
        MPoly acc;
        for (size_t i = 0; i < dim(); ++i)
            for (size_t j = 0; j < dim(); ++j) {
                if (gram_[i][j].is_zero()) continue;
                acc = acc + gram_[i][j] * x[i] * y[j];
            }
        return acc;
    }

    Rat apply_numeric(const std::vector<Rat>& x) const { return polar_numeric(x, x); }

    Rat polar_numeric(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
        QMat g = numeric_gram();
        if (x.size() != dim() || y.size() != dim())
            throw validation_error("dimension mismatch in polar form");
        Rat acc = 0;
        for (size_t i = 0; i < dim(); ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < dim(); ++j) acc += g[i][j] * x[i] * y[j];
        }
        return acc;
    }

    MPoly det_poly() const { return pmat_det(gram_); }

    // The polynomial q itself in the given coordinate names.
    MPoly polynomial(const std::vector<std::string>& names) const {
        if (names.size() != dim()) throw validation_error("coordinate name count mismatch");
        std::vector<MPoly> x;
        x.reserve(names.size());
        for (const auto& v : names) x.push_back(MPoly::variable(v));
        return apply(x);
    }

    bool operator==(const QuadraticForm& o) const { return gram_ == o.gram_; }

private:
    PMat gram_;
};

struct Signature {
    int positives = 0;
    int negatives = 0;
    bool operator==(const Signature& o) const {
        return positives == o.positives && negatives == o.negatives;
    }
    bool is_definite() const { return positives == 0 || negatives == 0; }
};

struct Diagonalization {
    QMat transform;           // S with S^T A S = diag(d)
    std::vector<Rat> diag;    // zeros, if any, are placed last
};

// Symmetric congruence diagonalization over Q; works for degenerate forms,
// radical directions end up as trailing zeros of the diagonal.
inline Diagonalization diagonalize(const QuadraticForm& q) {
    QMat a = q.numeric_gram();
    size_t n = a.size();
    QMat s = qmat_identity(n);

    auto add_col = [&](size_t dst, size_t src, const Rat& f) {
        // column operation plus the matching row operation keeps a symmetric
        for (size_t i = 0; i < n; ++i) a[i][dst] += f * a[i][src];
        for (size_t j = 0; j < n; ++j) a[dst][j] += f * a[src][j];
        for (size_t i = 0; i < n; ++i) s[i][dst] += f * s[i][src];
    };
    auto swap_cols = [&](size_t i, size_t j) {
        for (size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
        for (size_t c = 0; c < n; ++c) std::swap(a[i][c], a[j][c]);
        for (size_t r = 0; r < n; ++r) std::swap(s[r][i], s[r][j]);
    };

    for (size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            size_t piv = k;
            while (piv < n && a[piv][piv] == 0) ++piv;
            if (piv < n) {
                swap_cols(k, piv);
            } else {
                size_t bi = n, bj = n;
                for (size_t i = k; i < n && bi == n; ++i)
                    for (size_t j = i + 1; j < n; ++j)
                        if (a[i][j] != 0) {
                            bi = i;
                            bj = j;
                            break;
                        }
                if (bi == n) break;  // remaining block is zero: radical
                add_col(bi, bj, 1);  // 2 a_ij lands on the diagonal
                swap_cols(k, bi);
            }
        }
        for (size_t j = k + 1; j < n; ++j) {
            if (a[k][j] == 0) continue;
            add_col(j, k, -a[k][j] / a[k][k]);
        }
    }

    // push zero diagonal entries to the back, stable
    std::vector<Rat> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = a[i][i];
    for (size_t i = 0; i < n; ++i) {
        if (d[i] != 0) continue;
        for (size_t j = i + 1; j < n; ++j) {
            if (d[j] != 0) {
                std::swap(d[i], d[j]);
                for (size_t r = 0; r < n; ++r) std::swap(s[r][i], s[r][j]);
                break;
            }
        }
    }
    return {s, d};
}

inline size_t rank_of(const QuadraticForm& q) { return qmat_rank(q.numeric_gram()); }

inline bool is_degenerate(const QuadraticForm& q) { return rank_of(q) < q.dim(); }

inline Signature signature(const QuadraticForm& q) {
    Signature s;
    for (const Rat& d : diagonalize(q).diag) {
        if (d > 0) ++s.positives;
        else if (d < 0) ++s.negatives;
    }
    return s;
}

// Discriminant det(a_ij) as a square class (numeric forms only).
inline SquareClass discriminant(const QuadraticForm& q) {
    return square_class(qmat_det(q.numeric_gram()));
}

// Symbolic determinant for parametrized forms.
inline MPoly discriminant_poly(const QuadraticForm& q) { return q.det_poly(); }

}  // namespace quadrica
