#include "qnash/algebra.hpp"

#include <algorithm>

namespace qnash {

namespace {

// Unit eigenvector of [[a,c],[c,b]] for eigenvalue lam. Of the two closed-form
// candidates (c, lam-a) and (lam-b, c), the larger one is the better
// conditioned; both vanish only in the degenerate case handled by the caller.
Vec2 eigvec_sym2(double a, double b, double c, double lam) {
    Vec2 cand1{c, lam - a};
    Vec2 cand2{lam - b, c};
    Vec2 v = norm_sq(cand1) >= norm_sq(cand2) ? cand1 : cand2;
    double len = norm(v);
    if (len == 0.0) return {1.0, 0.0};
    return (1.0 / len) * v;
}

Vec2 fix_sign(Vec2 v) {
    if (v.x1 != 0.0) return v.x1 < 0.0 ? -v : v;
    return v.x2 < 0.0 ? -v : v;
}

}  // namespace

Eig2 eig_sym2(const Mat2& s) {
    double scale = max_abs(s);
    if (std::abs(s.m12 - s.m21) > 1e-12 * scale) throw NotSymmetric("eig_sym2: matrix not symmetric");

    double a = s.m11, b = s.m22;
    double c = 0.5 * (s.m12 + s.m21);
    double disc = (a - b) * (a - b) + 4.0 * c * c;
    double sd = std::sqrt(disc);

    double lo, hi;
    {
        // Larger-magnitude root first, the other via the determinant.
        double sum = a + b;
        double big = sum >= 0.0 ? 0.5 * (sum + sd) : 0.5 * (sum - sd);
        double other = big != 0.0 ? (a * b - c * c) / big : 0.0;
        lo = std::min(big, other);
        hi = std::max(big, other);
    }

    if (sd <= 1e-12 * std::max(std::abs(lo), std::abs(hi)))
        return {lo, hi, Vec2{1.0, 0.0}, Vec2{0.0, 1.0}};

    Vec2 vhi = eigvec_sym2(a, b, c, hi);
    Vec2 vlo{-vhi.x2, vhi.x1};  // orthogonal complement
    return {lo, hi, fix_sign(vlo), fix_sign(vhi)};
}

Mat4 tensor2(const Mat2& a, const Mat2& b) {
    const double av[2][2] = {{a.m11, a.m12}, {a.m21, a.m22}};
    const double bv[2][2] = {{b.m11, b.m12}, {b.m21, b.m22}};
    std::array<double, 16> r;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < 2; ++j)
                for (int l = 0; l < 2; ++l) r[4 * (2 * i + k) + (2 * j + l)] = av[i][j] * bv[k][l];
    return Mat4(r);
}

}  // namespace qnash
