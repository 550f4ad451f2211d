// Small dense exact linear algebra: rationals for decision procedures,
// polynomial entries where symbolic determinants are needed.  Matrices here
// never exceed a handful of rows, so plain Gaussian elimination over Q is
// the right tool.

#pragma once

#include "quadrica/mpoly.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace quadrica {

template <typename T>
using Mat = std::vector<std::vector<T>>;

using QMat = Mat<Rat>;
using PMat = Mat<MPoly>;

inline QMat qmat_identity(size_t n) {
    QMat m(n, std::vector<Rat>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline QMat qmat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat c(n, std::vector<Rat>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

inline QMat qmat_transpose(const QMat& a) {
    size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    QMat t(m, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

// Congruence transform S^T A S.
inline QMat qmat_congruence(const QMat& a, const QMat& s) {
    return qmat_mul(qmat_transpose(s), qmat_mul(a, s));
}

// Row reduction in place; returns the rank.  `companion`, when non-null,
// receives the same row operations (used for inverses); `pivots` collects
// the pivot column of each pivot row.
inline size_t qmat_rref(QMat& m, QMat* companion = nullptr,
                        std::vector<size_t>* pivots = nullptr) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        if (companion) std::swap((*companion)[piv], (*companion)[rank]);
        Rat inv = Rat(1) / m[rank][col];
        for (size_t j = 0; j < cols; ++j) m[rank][j] *= inv;
        if (companion)
            for (auto& x : (*companion)[rank]) x *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (size_t j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
            if (companion)
                for (size_t j = 0; j < (*companion)[r].size(); ++j)
                    (*companion)[r][j] -= f * (*companion)[rank][j];
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

inline size_t qmat_rank(QMat m) { return qmat_rref(m); }

// Basis of the right nullspace {x : A x = 0}, one vector per column.
inline std::vector<std::vector<Rat>> qmat_nullspace(QMat m) {
    size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<size_t> pivots;
    qmat_rref(m, nullptr, &pivots);
    std::vector<long> pivot_of_col(cols, -1);
    for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = long(r);
    std::vector<std::vector<Rat>> basis;
    for (size_t col = 0; col < cols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<Rat> v(cols, 0);
        v[col] = 1;
        for (size_t c2 = 0; c2 < cols; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = -m[size_t(pivot_of_col[c2])][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rat qmat_det(QMat m) {
    size_t n = m.size();
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = Rat(1) / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] * inv;
            for (size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return det;
}

inline QMat qmat_inverse(const QMat& a) {
    size_t n = a.size();
    QMat m = a, inv = qmat_identity(n);
    if (qmat_rref(m, &inv) != n) throw math_error("singular_matrix", "matrix is not invertible");
    return inv;
}

// Determinant of a polynomial matrix by Laplace expansion memoized over
// column subsets (fine for the 7x7 worst case here).
inline MPoly pmat_det(const PMat& a) {
    size_t n = a.size();
    if (n == 0) return MPoly::constant(1);
    std::map<std::uint64_t, MPoly> memo;
    // minor over rows [n-k, n) and the columns of `mask` (popcount k)
    auto rec = [&](auto&& self, std::uint64_t mask, size_t k) -> MPoly {
        if (k == 0) return MPoly::constant(1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        size_t row = n - k;
        MPoly acc;
        int sign = 1;
        for (size_t col = 0; col < n; ++col) {
            if (!(mask >> col & 1)) continue;
            if (!a[row][col].is_zero())
                acc = acc + (sign > 0 ? a[row][col] : -a[row][col]) *
                                self(self, mask & ~(std::uint64_t(1) << col), k - 1);
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, (std::uint64_t(1) << n) - 1, n);
}

inline bool pmat_is_numeric(const PMat& a) {
    for (const auto& row : a)
        for (const auto& e : row)
            if (!e.is_constant()) return false;
    return true;
}

inline QMat pmat_to_qmat(const PMat& a) {
    QMat out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out[i].reserve(a[i].size());
        for (const auto& e : a[i]) {
            if (!e.is_constant())
                throw validation_error("expected a numeric matrix entry, got '" + e.str() + "'");
            out[i].push_back(e.constant_value());
        }
    }
    return out;
}

inline PMat qmat_to_pmat(const QMat& a) {
    PMat out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (const auto& e : a[i]) out[i].push_back(MPoly::constant(e));
    return out;
}

}  // namespace quadrica
