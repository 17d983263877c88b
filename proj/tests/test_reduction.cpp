#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "qnash/reduction.hpp"
#include "test_util.hpp"

using namespace qnash;
using qtest::random_angles;
using qtest::random_coeffs;
using qtest::random_strategies;
using qtest::uniform;

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

TEST_CASE("mat_m cases and closed forms") {
    Mat2 m = mat_m(kPi / 4.0);
    double r = kSqrt2 / 2.0;
    CHECK(m.m11 == doctest::Approx(r).epsilon(1e-15));
    CHECK(m.m12 == doctest::Approx(-r).epsilon(1e-15));
    CHECK(m.m21 == doctest::Approx(r).epsilon(1e-15));
    CHECK(m.m22 == doctest::Approx(r).epsilon(1e-15));
    CHECK(max_abs(transpose(m) * m - Mat2::identity()) <= 1e-15);  // orthogonal here

    Mat2 s = mat_m(kPi / 2.0);
    CHECK(std::abs(s.m11) <= 1e-15);
    CHECK(s.m12 == doctest::Approx(-1.0));
    CHECK(s.m22 == doctest::Approx(1.0));

    std::mt19937_64 gen(31);
    for (int k = 0; k < 300; ++k) {
        double gamma = uniform(gen, 0.0, kPi);
        Mat2 mg = mat_m(gamma);
        double det = mg.m11 * mg.m22 - mg.m12 * mg.m21;
        CHECK(std::abs(det - std::sin(2.0 * gamma)) <= 1e-14);

        Mat2 mmt = mg * transpose(mg);
        double c2 = std::cos(2.0 * gamma);
        CHECK(std::abs(mmt.m11 - 1.0) <= 1e-15);
        CHECK(std::abs(mmt.m22 - 1.0) <= 1e-15);
        CHECK(std::abs(mmt.m12 - c2) <= 1e-15);
        CHECK(std::abs(mmt.m21 - c2) <= 1e-15);
    }
}

TEST_CASE("reduce on the frozen games") {
    SUBCASE("symmetric coefficients wipe out omega") {
        ReducedGame rg = reduce({1, 1, 1, 1}, {0.9, 0.4});
        CHECK(rg.omega.x1 == 0.0);
        CHECK(rg.omega.x2 == 0.0);
        CHECK(norm(rg.u) == 0.0);
        CHECK(norm(rg.v) == 0.0);
        CHECK(rg.delta == 0.0);
    }
    SUBCASE("c = (1,0,2,3) at theta = tau = pi/4") {
        ReducedGame rg = reduce({1, 0, 2, 3}, {kPi / 4.0, kPi / 4.0});
        CHECK(rg.omega.x1 == 1.0);
        CHECK(rg.omega.x2 == 3.0);
        CHECK(rg.n == 3.0);
        CHECK(rg.m == 3.0);
        CHECK(rg.trC == 6.0);
        CHECK(rg.delta == 24.0);
        CHECK(max_abs(rg.A - Mat2::diag(3, 3)) <= 1e-14);
        CHECK(rg.u.x1 == doctest::Approx(2.0 * kSqrt2).epsilon(1e-14));
        CHECK(rg.u.x2 == doctest::Approx(kSqrt2).epsilon(1e-14));
        CHECK(norm(rg.u - rg.v) <= 1e-15);
    }
    SUBCASE("c = (0,0.5,1,0.5) at theta = tau = pi/4") {
        ReducedGame rg = reduce({0, 0.5, 1, 0.5}, {kPi / 4.0, kPi / 4.0});
        CHECK(rg.omega.x1 == 1.0);
        CHECK(rg.omega.x2 == 0.0);
        CHECK(rg.n == 1.0);
        CHECK(rg.m == 1.0);
        CHECK(rg.delta == -1.0);
        CHECK(max_abs(rg.A - Mat2::identity()) <= 1e-14);
    }
}

TEST_CASE("reduced data reproducible from the stored parameters") {
    std::mt19937_64 gen(32);
    for (int k = 0; k < 300; ++k) {
        PayCoefficients c = random_coeffs(gen);
        AngularParams ang = random_angles(gen);
        ReducedGame rg = reduce(c, ang);
        Mat2 mt = mat_m(rg.theta), mtau = mat_m(rg.tau);
        Mat2 a2 = transpose(mt) * Mat2::diag(rg.n, rg.m) * mtau;
        double tol = 1e-12 * (1.0 + max_abs(rg.A));
        CHECK(max_abs(rg.A - a2) <= tol);
        CHECK(norm(rg.u - transpose(mt) * rg.omega) <= tol);
        CHECK(norm(rg.v - transpose(mtau) * rg.omega) <= tol);
    }
}

TEST_CASE("torus points must be unit length") {
    CHECK_THROWS_AS(TorusPoint({0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(TorusPoint({0.0, 0.0}), std::invalid_argument);
    CHECK_NOTHROW(TorusPoint({std::cos(1.3), std::sin(1.3)}));
}

TEST_CASE("to_torus closed form") {
    TorusPoint x = to_torus(0.0, kPi / 4.0);
    CHECK(x.v.x1 == doctest::Approx(kSqrt2 / 2.0).epsilon(1e-14));
    CHECK(x.v.x2 == doctest::Approx(-kSqrt2 / 2.0).epsilon(1e-14));

    TorusPoint e1 = to_torus(0.35, 0.70);
    CHECK(e1.v.x1 == 1.0);
    CHECK(e1.v.x2 == 0.0);

    CHECK_THROWS_AS(to_torus(0.3, 0.0), SingularAngle);
    CHECK_THROWS_AS(to_torus(0.3, kPi / 2.0), SingularAngle);
}

TEST_CASE("to_torus matches the solved linear system") {
    // Guard against a mis-derived closed form: solve 2p - e = M x by Cramer
    // from the probability parametrization directly.
    std::mt19937_64 gen(33);
    for (int k = 0; k < 2000; ++k) {
        double theta = uniform(gen, 0.05, kPi / 2.0 - 0.05);
        double alpha = uniform(gen, 0.0, 2.0 * kPi);
        double rhs1 = 2.0 * std::cos(alpha) * std::cos(alpha) - 1.0;
        double rhs2 = 2.0 * std::cos(alpha - theta) * std::cos(alpha - theta) - 1.0;
        double ct = std::cos(theta), st = std::sin(theta);
        double det = 2.0 * ct * st;
        double x1 = (rhs1 * st + rhs2 * st) / det;
        double x2 = (rhs2 * ct - rhs1 * ct) / det;
        TorusPoint x = to_torus(alpha, theta);
        CHECK(std::abs(x.v.x1 - x1) <= 1e-10);
        CHECK(std::abs(x.v.x2 - x2) <= 1e-10);
    }
}

TEST_CASE("from_torus cases, bounds and round trip") {
    auto [p1, p2] = from_torus(TorusPoint{{1.0, 0.0}}, kPi / 4.0);
    CHECK(p1 == doctest::Approx((kSqrt2 / 2.0 + 1.0) / 2.0).epsilon(1e-14));
    CHECK(p2 == doctest::Approx((kSqrt2 / 2.0 + 1.0) / 2.0).epsilon(1e-14));

    auto [q1, q2] = from_torus(TorusPoint{{0.0, 1.0}}, kPi / 4.0);
    CHECK(q1 == doctest::Approx((1.0 - kSqrt2 / 2.0) / 2.0).epsilon(1e-14));
    CHECK(q2 == doctest::Approx((1.0 + kSqrt2 / 2.0) / 2.0).epsilon(1e-14));

    std::mt19937_64 gen(34);
    for (int k = 0; k < 2000; ++k) {
        double theta = uniform(gen, 0.05, kPi / 2.0 - 0.05);
        double alpha = uniform(gen, 0.0, 2.0 * kPi);
        auto [r1, r2] = from_torus(to_torus(alpha, theta), theta);
        CHECK(r1 >= 0.0);
        CHECK(r1 <= 1.0);
        CHECK(r2 >= 0.0);
        CHECK(r2 <= 1.0);
        CHECK(std::abs(r1 - std::cos(alpha) * std::cos(alpha)) <= 1e-12);
        CHECK(std::abs(r2 - std::cos(alpha - theta) * std::cos(alpha - theta)) <= 1e-12);
    }
}

TEST_CASE("g_payoff on the frozen unique game") {
    ReducedGame rg = reduce({1, 0, 2, 3}, {kPi / 4.0, kPi / 4.0});
    double inv = 1.0 / std::sqrt(5.0);
    TorusPoint x{{2.0 * inv, inv}};
    CHECK(g_payoff(rg, x, x) == doctest::Approx(-3.0).epsilon(1e-13));

    ReducedGame ones = reduce({1, 1, 1, 1}, {0.8, 0.3});
    std::mt19937_64 gen(35);
    for (int k = 0; k < 100; ++k) {
        TorusPoint a = TorusPoint::from_angle(uniform(gen, 0.0, 2.0 * kPi));
        TorusPoint b = TorusPoint::from_angle(uniform(gen, 0.0, 2.0 * kPi));
        CHECK(g_payoff(ones, a, b) == doctest::Approx(-dot(a.v, ones.A * b.v)).epsilon(1e-14));
    }
}

TEST_CASE("reduction identity ties the two payoff routes together") {
    std::mt19937_64 gen(36);
    for (int k = 0; k < 10000; ++k) {
        PayCoefficients c = random_coeffs(gen);
        AngularParams ang = random_angles(gen);
        StrategyAngles s = random_strategies(gen);
        ReducedGame rg = reduce(c, ang);
        double g = g_payoff(rg, to_torus(s.alpha, ang.theta), to_torus(s.beta, ang.tau));
        double via_probs = payoff_closed_form(c, probabilities(s, ang));
        double via_operator = expectation(build_pay_operator(c, ang), s);
        double tol = 1e-10 * (1.0 + c.total());
        CHECK(std::abs(4.0 * via_probs - g - rg.trC) <= tol);
        CHECK(std::abs(4.0 * via_operator - g - rg.trC) <= tol);
    }
}

TEST_CASE("symmetrize on the frozen games") {
    SUBCASE("unique game") {
        SymReducedGame sym = symmetrize(reduce({1, 0, 2, 3}, {kPi / 4.0, kPi / 4.0}));
        CHECK(sym.z.x1 == doctest::Approx(2.0 * kSqrt2).epsilon(1e-14));
        CHECK(sym.z.x2 == doctest::Approx(kSqrt2).epsilon(1e-14));
        CHECK(norm(sym.z) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-14));
        CHECK(sym.alpha_eig == doctest::Approx(3.0).epsilon(1e-13));
    }
    SUBCASE("dual game") {
        SymReducedGame sym = symmetrize(reduce({0, 0.5, 1, 0.5}, {kPi / 4.0, kPi / 4.0}));
        CHECK(sym.z.x1 == doctest::Approx(kSqrt2 / 2.0).epsilon(1e-14));
        CHECK(sym.z.x2 == doctest::Approx(-kSqrt2 / 2.0).epsilon(1e-14));
        CHECK(norm(sym.z) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(sym.alpha_eig == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(symmetrize(reduce({1, 1, 1, 1}, {kPi / 4.0, kPi / 4.0})), ZeroOmega);
        CHECK_THROWS_AS(symmetrize(reduce({1, 0, 2, 3}, {0.7, 0.9})), AnglesDiffer);
    }
}

TEST_CASE("equal angles give a symmetric PSD reduced matrix") {
    std::mt19937_64 gen(37);
    for (int k = 0; k < 500; ++k) {
        PayCoefficients c = random_coeffs(gen);
        double theta = uniform(gen, 0.05, kPi / 2.0 - 0.05);
        ReducedGame rg = reduce(c, {theta, theta});
        CHECK(std::abs(rg.A.m12 - rg.A.m21) <= 1e-12 * (1.0 + max_abs(rg.A)));
        Eig2 e = eig_sym2(rg.A);
        CHECK(e.lambda1 >= -1e-12 * max_abs(rg.A));
    }
}

TEST_CASE("scaling the coefficients scales the reduced data") {
    std::mt19937_64 gen(38);
    for (int k = 0; k < 100; ++k) {
        PayCoefficients c = random_coeffs(gen);
        AngularParams ang = random_angles(gen);
        ReducedGame rg = reduce(c, ang);
        TorusPoint x = TorusPoint::from_angle(uniform(gen, 0.0, 2.0 * kPi));
        TorusPoint y = TorusPoint::from_angle(uniform(gen, 0.0, 2.0 * kPi));
        double g = g_payoff(rg, x, y);
        for (double s : {0.1, 3.0, 40.0}) {
            PayCoefficients sc{s * c.c1, s * c.c2, s * c.c3, s * c.c4};
            ReducedGame srg = reduce(sc, ang);
            double rel = 1e-12 * (1.0 + s * (1.0 + max_abs(rg.A)));
            CHECK(max_abs(srg.A - s * rg.A) <= rel);
            CHECK(norm(srg.u - s * rg.u) <= rel);
            CHECK(norm(srg.v - s * rg.v) <= rel);
            CHECK(std::abs(g_payoff(srg, x, y) - s * g) <= 1e-9 * (1.0 + s * std::abs(g)));
            // delta is cubic in the scale: n and m carry one factor, the
            // squared omega components two more
            CHECK(std::abs(srg.delta - s * s * s * rg.delta) <=
                  1e-9 * (1.0 + std::abs(s * s * s * rg.delta)));
        }
    }
}

TEST_CASE("z is an eigenvector of A at the eigen-angle") {
    std::mt19937_64 gen(39);
    int kept = 0, tries = 0;
    while (kept < 300) {
        REQUIRE(++tries < 100000);
        PayCoefficients c = random_coeffs(gen);
        EigenAngleResult ea = eigen_angle(c);
        if (ea.status != EigenAngleStatus::Found) continue;
        ++kept;
        SymReducedGame sym = symmetrize(reduce(c, {ea.theta_star, ea.theta_star}));
        CHECK(norm(sym.A * sym.z - sym.alpha_eig * sym.z) <=
              1e-9 * (1.0 + max_abs(sym.A)) * norm(sym.z));
    }
}
