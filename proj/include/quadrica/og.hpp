// Closed-form orthogonal-Grassmannian data: dimension count, the component
// scheme of the middle OG, the conic pair behind OG(P^1, Q^3), the real
// Veronese family count, and the rank-6 form attached to a rank-5 one.

#pragma once

#include "quadrica/isotropy.hpp"

#include <array>
#include <vector>

namespace quadrica {

// dim OG(m+1, n+2) = (2n - 3m)(m + 1) / 2, defined for 2m <= n.
inline long og_dimension(long m, long n) {
    if (m < 0 || n < 0 || 2 * m > n)
        throw validation_error("og_dimension requires 0 <= 2m <= n");
    return (2 * n - 3 * m) * (m + 1) / 2;
}

// For a nondegenerate form of rank 2r+2, the two geometric components of
// OG(P^r, Q^2r) are swapped by Galois unless (-1)^{r+1} * disc is a square;
// returns that square class (1 means reducible over Q).
inline SquareClass mid_og_component_class(const QuadraticForm& q) {
    size_t n = q.dim();
    if (n % 2 != 0) throw validation_error("mid_og_component_class requires even rank");
    if (is_degenerate(q))
        throw math_error("degenerate_form", "mid_og_component_class requires a nondegenerate form");
    size_t r = n / 2 - 1;
    Rat sgn = (r + 1) % 2 == 0 ? 1 : -1;
    return square_class(sgn * qmat_det(q.numeric_gram()));
}

// The conic pair whose Brauer classes multiply to OG(P^1, Q^3) for the
// diagonal quadric a0 x0^2 + ... + a4 x4^2.
inline std::pair<QuadraticForm, QuadraticForm> og13_conic_pair(const std::array<Rat, 5>& a) {
    for (const Rat& x : a)
        if (x == 0) throw validation_error("og13_conic_pair: zero coefficient");
    QuadraticForm c = QuadraticForm::diagonal({a[0], a[1], a[2]});
    QuadraticForm cprime = QuadraticForm::diagonal({a[0] * a[1] * a[2], -a[3], -a[4]});
    return {c, cprime};
}

// Number of real Veronese families on a quadric of signature (r, s), r >= s:
// the count of (r', s') in {(5,1), (1,5), (3,3)} fitting inside (r, s).
inline int real_veronese_family_count(int r, int s) {
    if (r < s) throw validation_error("real_veronese_family_count expects r >= s");
    if (r + s < 6) throw validation_error("real_veronese_family_count requires rank >= 6");
    int count = 0;
    const int opts[3][2] = {{5, 1}, {1, 5}, {3, 3}};
    for (const auto& o : opts)
        if (o[0] <= r && o[1] <= s) ++count;
    return count;
}

// For nondegenerate q of rank 5, the rank-6 form d z^2 - q with d the
// square-free discriminant representative; never definite, hence always
// isotropic over Q.
inline QuadraticForm g_of_q3(const QuadraticForm& q) {
    if (q.dim() != 5) throw validation_error("g_of_q3 requires a rank-5 form");
    if (is_degenerate(q))
        throw math_error("degenerate_form", "g_of_q3 requires a nondegenerate form");
    Rat d = Rat(discriminant(q).representative);
    QMat g = q.numeric_gram();
    QMat out(6, std::vector<Rat>(6, 0));
    out[0][0] = d;
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) out[i + 1][j + 1] = -g[i][j];
    return QuadraticForm(out);
}

}  // namespace quadrica
