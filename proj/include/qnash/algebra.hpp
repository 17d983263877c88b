#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace qnash {

// Thrown by eig_sym2 / expectation when the input matrix is not symmetric
// within 1e-12 relative to its max-abs entry.
struct NotSymmetric : std::domain_error {
    using std::domain_error::domain_error;
};

struct Vec2 {
    double x1;
    double x2;

    Vec2(double a, double b) : x1(a), x2(b) {
        if (!(std::isfinite(a) && std::isfinite(b)))
            throw std::invalid_argument("Vec2: non-finite component");
    }

    bool operator==(const Vec2&) const = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
inline Vec2 operator-(Vec2 a) { return {-a.x1, -a.x2}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x1, s * a.x2}; }

inline double dot(Vec2 a, Vec2 b) { return a.x1 * b.x1 + a.x2 * b.x2; }
inline double cross(Vec2 a, Vec2 b) { return a.x1 * b.x2 - a.x2 * b.x1; }
inline double norm_sq(Vec2 a) { return a.x1 * a.x1 + a.x2 * a.x2; }
inline double norm(Vec2 a) { return std::sqrt(norm_sq(a)); }

struct Mat2 {
    double m11, m12;
    double m21, m22;

    Mat2(double a, double b, double c, double d) : m11(a), m12(b), m21(c), m22(d) {
        if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d)))
            throw std::invalid_argument("Mat2: non-finite entry");
    }

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diag(double a, double d) { return {a, 0.0, 0.0, d}; }
    static Mat2 zero() { return {0.0, 0.0, 0.0, 0.0}; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}
inline Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}
inline Mat2 operator*(double s, const Mat2& a) {
    return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
}
inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}
inline Vec2 operator*(const Mat2& a, Vec2 v) {
    return {a.m11 * v.x1 + a.m12 * v.x2, a.m21 * v.x1 + a.m22 * v.x2};
}

inline Mat2 transpose(const Mat2& a) { return {a.m11, a.m21, a.m12, a.m22}; }
inline double trace(const Mat2& a) { return a.m11 + a.m22; }
inline double max_abs(const Mat2& a) {
    return std::max(std::max(std::abs(a.m11), std::abs(a.m12)),
                    std::max(std::abs(a.m21), std::abs(a.m22)));
}

// 4x4 matrix in the tensor basis e1(x)e1, e1(x)e2, e2(x)e1, e2(x)e2 (row-major).
struct Mat4 {
    std::array<double, 16> e;

    explicit Mat4(const std::array<double, 16>& entries) : e(entries) {
        for (double v : e)
            if (!std::isfinite(v)) throw std::invalid_argument("Mat4: non-finite entry");
    }

    static Mat4 zero() { return Mat4(std::array<double, 16>{}); }
    static Mat4 identity() {
        std::array<double, 16> id{};
        for (int i = 0; i < 4; ++i) id[5 * i] = 1.0;
        return Mat4(id);
    }

    double operator()(int i, int j) const { return e[4 * i + j]; }
    double& operator()(int i, int j) { return e[4 * i + j]; }
};

inline Mat4 operator+(const Mat4& a, const Mat4& b) {
    std::array<double, 16> r;
    for (int k = 0; k < 16; ++k) r[k] = a.e[k] + b.e[k];
    return Mat4(r);
}
inline Mat4 operator*(double s, const Mat4& a) {
    std::array<double, 16> r;
    for (int k = 0; k < 16; ++k) r[k] = s * a.e[k];
    return Mat4(r);
}
inline Mat4 operator*(const Mat4& a, const Mat4& b) {
    std::array<double, 16> r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) r[4 * i + j] += a(i, k) * b(k, j);
    return Mat4(r);
}

inline double trace(const Mat4& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }
inline double max_abs(const Mat4& a) {
    double m = 0.0;
    for (double v : a.e) m = std::max(m, std::abs(v));
    return m;
}
inline bool is_symmetric(const Mat4& a, double rel_tol = 1e-12) {
    double tol = rel_tol * max_abs(a);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(a(i, j) - a(j, i)) > tol) return false;
    return true;
}

// Eigen pair of a symmetric 2x2 matrix, eigenvalues ascending, eigenvectors
// unit norm with the first nonzero component nonnegative.
struct Eig2 {
    double lambda1;
    double lambda2;
    Vec2 v1;
    Vec2 v2;
};

// Closed-form symmetric eigendecomposition. Throws NotSymmetric if the
// off-diagonal entries differ by more than 1e-12 relative to the max-abs
// entry. When the eigenvalues coincide within 1e-12 relative, returns the
// canonical basis (1,0), (0,1).
Eig2 eig_sym2(const Mat2& s);

// Kronecker product in the declared basis order.
Mat4 tensor2(const Mat2& a, const Mat2& b);

}  // namespace qnash
