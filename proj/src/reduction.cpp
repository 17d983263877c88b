#include "qnash/reduction.hpp"

#include <algorithm>

namespace qnash {

namespace {

void require_invertible(double theta) {
    if (std::abs(std::sin(2.0 * theta)) <= 1e-12)
        throw SingularAngle("angle makes M singular (sin 2*gamma = 0)");
}

}  // namespace

Mat2 mat_m(double gamma) {
    double cg = std::cos(gamma);
    double sg = std::sin(gamma);
    return {cg, -sg, cg, sg};
}

ReducedGame reduce(const PayCoefficients& c, const AngularParams& ang) {
    Mat2 mt = mat_m(ang.theta);
    Mat2 mtau = mat_m(ang.tau);
    Mat2 cm = c.c_matrix();
    Vec2 w = c.omega();
    return ReducedGame{
        transpose(mt) * cm * mtau,  // A
        transpose(mt) * w,          // u
        transpose(mtau) * w,        // v
        w,
        c.n(),
        c.m(),
        c.n() + c.m(),
        ang.theta,
        ang.tau,
        c.delta(),
    };
}

TorusPoint to_torus(double alpha, double theta) {
    require_invertible(theta);
    return TorusPoint::from_angle(2.0 * alpha - theta);
}

std::pair<double, double> from_torus(const TorusPoint& x, double theta) {
    require_invertible(theta);
    Vec2 p = mat_m(theta) * x.v;
    auto half = [](double t) { return std::clamp(0.5 * (t + 1.0), 0.0, 1.0); };
    return {half(p.x1), half(p.x2)};
}

double g_payoff(const ReducedGame& rg, const TorusPoint& x, const TorusPoint& y) {
    return -dot(x.v, rg.A * y.v) + dot(x.v, rg.u) - dot(rg.v, y.v);
}

SymReducedGame symmetrize(const ReducedGame& rg) {
    if (std::abs(rg.theta - rg.tau) > 1e-12)
        throw AnglesDiffer("symmetrize: theta and tau differ");
    if (rg.omega.x1 == 0.0 && rg.omega.x2 == 0.0)
        throw ZeroOmega("symmetrize: omega is zero");
    Vec2 z = transpose(mat_m(rg.theta)) * rg.omega;
    double alpha_eig = dot(rg.A * z, z) / norm_sq(z);
    return SymReducedGame{rg.A, z, rg.trC, alpha_eig};
}

}  // namespace qnash
