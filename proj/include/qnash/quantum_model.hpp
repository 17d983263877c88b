#pragma once

#include "qnash/algebra.hpp"

namespace qnash {

// The four nonnegative payoffs of the game, plus the derived quantities that
// drive the whole analysis: a = (c1,c2), b = (c3,c4), omega = b - a,
// n = c1 + c3, m = c2 + c4, C = diag(n, m) and the determinant
// delta = n*omega2^2 - m*omega1^2.
struct PayCoefficients {
    double c1, c2, c3, c4;

    PayCoefficients(double v1, double v2, double v3, double v4) : c1(v1), c2(v2), c3(v3), c4(v4) {
        for (double v : {v1, v2, v3, v4}) {
            if (!std::isfinite(v)) throw std::invalid_argument("PayCoefficients: non-finite value");
            if (v < 0.0) throw std::invalid_argument("PayCoefficients: coefficients must be nonnegative");
        }
    }

    Vec2 a() const { return {c1, c2}; }
    Vec2 b() const { return {c3, c4}; }
    Vec2 omega() const { return {c3 - c1, c4 - c2}; }
    double n() const { return c1 + c3; }
    double m() const { return c2 + c4; }
    double total() const { return c1 + c2 + c3 + c4; }
    Mat2 c_matrix() const { return Mat2::diag(n(), m()); }
    double delta() const {
        Vec2 w = omega();
        return n() * w.x2 * w.x2 - m() * w.x1 * w.x1;
    }
};

// Rotation angles of the second projector pair, both strictly inside (0, pi/2).
struct AngularParams {
    double theta;
    double tau;

    AngularParams(double th, double ta) : theta(th), tau(ta) {
        constexpr double half_pi = 1.5707963267948966;
        if (!(th > 0.0 && th < half_pi)) throw std::invalid_argument("theta must lie in (0, pi/2)");
        if (!(ta > 0.0 && ta < half_pi)) throw std::invalid_argument("tau must lie in (0, pi/2)");
    }
};

struct StrategyAngles {
    double alpha;
    double beta;

    StrategyAngles(double al, double be) : alpha(al), beta(be) {
        if (!(std::isfinite(al) && std::isfinite(be)))
            throw std::invalid_argument("StrategyAngles: non-finite angle");
    }
};

// Probabilities of the four pure strategies per player; the complements are
// pinned by p1 + p3 = 1, p2 + p4 = 1 (same for q).
struct ProbabilityProfile {
    double p1, p2, p3, p4;
    double q1, q2, q3, q4;

    static ProbabilityProfile from_leading(double p1, double p2, double q1, double q2) {
        return {p1, p2, 1.0 - p1, 1.0 - p2, q1, q2, 1.0 - q1, 1.0 - q2};
    }

    bool valid(double tol = 1e-9) const {
        for (double v : {p1, p2, p3, p4, q1, q2, q3, q4})
            if (!(v >= -tol && v <= 1.0 + tol)) return false;
        return std::abs(p1 + p3 - 1.0) <= tol && std::abs(p2 + p4 - 1.0) <= tol &&
               std::abs(q1 + q3 - 1.0) <= tol && std::abs(q2 + q4 - 1.0) <= tol;
    }

  private:
    ProbabilityProfile(double a1, double a2, double a3, double a4, double b1, double b2, double b3,
                       double b4)
        : p1(a1), p2(a2), p3(a3), p4(a4), q1(b1), q2(b2), q3(b3), q4(b4) {}
};

// Rank-1 projector onto (cos gamma, sin gamma).
Mat2 projector(double gamma);

// Assembles H = c3 A1(x)B3 + c1 A3(x)B1 + c4 A2(x)B4 + c2 A4(x)B2 with
// A1 = projector(0), A2 = projector(theta), A3 = I - A1, A4 = I - A2 and the
// B family built the same way from tau.
Mat4 build_pay_operator(const PayCoefficients& c, const AngularParams& ang);

// p1 = cos^2(alpha), p2 = cos^2(alpha - theta), q1 = cos^2(beta),
// q2 = cos^2(beta - tau); complements filled in.
ProbabilityProfile probabilities(const StrategyAngles& s, const AngularParams& ang);

// Average payoff c3 p1 q3 + c1 p3 q1 + c4 p2 q4 + c2 p4 q2.
// Always within [0, c1+c2+c3+c4]. Throws if prob violates its invariants.
double payoff_closed_form(const PayCoefficients& c, const ProbabilityProfile& prob);

// Quadratic form of h at the product vector (cos a, sin a)(x)(cos b, sin b).
// Independent route cross-checked against payoff_closed_form. Throws NotSymmetric.
double expectation(const Mat4& h, const StrategyAngles& s);

}  // namespace qnash
