#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "qnash/algebra.hpp"
#include "test_util.hpp"

using namespace qnash;
using qtest::random_mat2;
using qtest::random_symmetric;

namespace {

void check_mat2_eq(const Mat2& a, const Mat2& b, double tol) {
    CHECK(std::abs(a.m11 - b.m11) <= tol);
    CHECK(std::abs(a.m12 - b.m12) <= tol);
    CHECK(std::abs(a.m21 - b.m21) <= tol);
    CHECK(std::abs(a.m22 - b.m22) <= tol);
}

}  // namespace

TEST_CASE("constructors reject non-finite values") {
    CHECK_THROWS_AS(Vec2(std::nan(""), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Vec2(0.0, std::numeric_limits<double>::infinity()), std::invalid_argument);
    CHECK_THROWS_AS(Mat2(1.0, 2.0, std::nan(""), 4.0), std::invalid_argument);
}

TEST_CASE("mat2 product: identity, involution, hand-multiplied case") {
    std::mt19937_64 gen(11);
    for (int k = 0; k < 20; ++k) {
        Mat2 x = random_mat2(gen);
        Mat2 ix = Mat2::identity() * x;
        CHECK(ix.m11 == x.m11);
        CHECK(ix.m12 == x.m12);
        CHECK(ix.m21 == x.m21);
        CHECK(ix.m22 == x.m22);
    }

    Mat2 swap{0, 1, 1, 0};
    Mat2 sq = swap * swap;
    check_mat2_eq(sq, Mat2::identity(), 0.0);

    Mat2 p = Mat2{1, 2, 3, 4} * Mat2{5, 6, 7, 8};
    check_mat2_eq(p, Mat2{19, 22, 43, 50}, 0.0);
}

TEST_CASE("transpose of a product is the reversed product of transposes") {
    std::mt19937_64 gen(12);
    for (int k = 0; k < 100; ++k) {
        Mat2 a = random_mat2(gen);
        Mat2 b = random_mat2(gen);
        check_mat2_eq(transpose(a * b), transpose(b) * transpose(a), 0.0);
    }
}

TEST_CASE("eig_sym2 frozen cases") {
    SUBCASE("identity hits the degenerate branch") {
        Eig2 e = eig_sym2(Mat2::identity());
        CHECK(e.lambda1 == 1.0);
        CHECK(e.lambda2 == 1.0);
        CHECK(e.v1.x1 == 1.0);
        CHECK(e.v1.x2 == 0.0);
        CHECK(e.v2.x1 == 0.0);
        CHECK(e.v2.x2 == 1.0);
    }
    SUBCASE("diagonal") {
        Eig2 e = eig_sym2(Mat2::diag(3, 5));
        CHECK(e.lambda1 == doctest::Approx(3.0).epsilon(1e-14));
        CHECK(e.lambda2 == doctest::Approx(5.0).epsilon(1e-14));
        CHECK(e.v1.x1 == doctest::Approx(1.0));
        CHECK(std::abs(e.v1.x2) <= 1e-15);
        CHECK(std::abs(e.v2.x1) <= 1e-15);
        CHECK(e.v2.x2 == doctest::Approx(1.0));
    }
    SUBCASE("[[2,1],[1,2]]: characteristic polynomial l^2 - 4l + 3") {
        Eig2 e = eig_sym2(Mat2{2, 1, 1, 2});
        double r = std::sqrt(0.5);
        CHECK(e.lambda1 == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(e.lambda2 == doctest::Approx(3.0).epsilon(1e-14));
        CHECK(e.v1.x1 == doctest::Approx(r).epsilon(1e-14));
        CHECK(e.v1.x2 == doctest::Approx(-r).epsilon(1e-14));
        CHECK(e.v2.x1 == doctest::Approx(r).epsilon(1e-14));
        CHECK(e.v2.x2 == doctest::Approx(r).epsilon(1e-14));
    }
}

TEST_CASE("eig_sym2 rejects asymmetric input") {
    CHECK_THROWS_AS(eig_sym2(Mat2{1, 0.1, 0.2, 1}), NotSymmetric);
}

TEST_CASE("eig_sym2 reconstruction, ordering and sign conventions") {
    std::mt19937_64 gen(13);
    for (int k = 0; k < 1000; ++k) {
        Mat2 s = random_symmetric(gen);
        Eig2 e = eig_sym2(s);
        double tol = 1e-10 * (1.0 + max_abs(s));

        CHECK(e.lambda1 <= e.lambda2);
        CHECK(norm(s * e.v1 - e.lambda1 * e.v1) <= tol);
        CHECK(norm(s * e.v2 - e.lambda2 * e.v2) <= tol);
        CHECK(std::abs(norm(e.v1) - 1.0) <= 1e-12);
        CHECK(std::abs(norm(e.v2) - 1.0) <= 1e-12);
        CHECK(std::abs(dot(e.v1, e.v2)) <= 1e-12);
        for (Vec2 v : {e.v1, e.v2}) {
            CHECK(!(v.x1 < 0.0));
            if (v.x1 == 0.0) CHECK(v.x2 >= 0.0);
        }
    }
}

TEST_CASE("eig_sym2 degenerate multiples of the identity") {
    for (double c : {2.0, -3.5, 0.0, 1e-8}) {
        Eig2 e = eig_sym2(Mat2::diag(c, c));
        CHECK(e.lambda1 == c);
        CHECK(e.v1.x1 == 1.0);
        CHECK(e.v2.x2 == 1.0);
    }
}

TEST_CASE("tensor2 frozen cases") {
    Mat4 id = tensor2(Mat2::identity(), Mat2::identity());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(id(i, j) == (i == j ? 1.0 : 0.0));

    Mat4 pp = tensor2(Mat2::diag(1, 0), Mat2::diag(1, 0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(pp(i, j) == (i == 0 && j == 0 ? 1.0 : 0.0));
}

TEST_CASE("projector tensor picks out the e1(x)e2 slot") {
    auto proj = [](double g) {
        double cg = std::cos(g), sg = std::sin(g);
        return Mat2{cg * cg, cg * sg, cg * sg, sg * sg};
    };
    Mat4 h = tensor2(proj(0.0), proj(std::numbers::pi / 2.0));
    CHECK(h(1, 1) == doctest::Approx(1.0).epsilon(1e-14));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(i == 1 && j == 1)) CHECK(std::abs(h(i, j)) <= 1e-15);
}

TEST_CASE("tensor2 mixed-product property") {
    std::mt19937_64 gen(15);
    for (int k = 0; k < 200; ++k) {
        Mat2 a = random_mat2(gen), b = random_mat2(gen);
        Mat2 c = random_mat2(gen), d = random_mat2(gen);
        Mat4 lhs = tensor2(a, b) * tensor2(c, d);
        Mat4 rhs = tensor2(a * c, b * d);
        double tol = 1e-12 * (1.0 + max_abs(lhs));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(std::abs(lhs(i, j) - rhs(i, j)) <= tol);
    }
}
