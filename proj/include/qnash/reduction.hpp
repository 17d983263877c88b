#pragma once

#include <utility>

#include "qnash/quantum_model.hpp"

namespace qnash {

struct SingularAngle : std::domain_error {
    using std::domain_error::domain_error;
};
struct AnglesDiffer : std::domain_error {
    using std::domain_error::domain_error;
};
struct ZeroOmega : std::domain_error {
    using std::domain_error::domain_error;
};

// A strategy on the reduced game's unit circle.
struct TorusPoint {
    Vec2 v;

    explicit TorusPoint(Vec2 p) : v(p) {
        if (std::abs(norm(p) - 1.0) > 1e-12)
            throw std::invalid_argument("TorusPoint: vector must be unit length");
    }

    static TorusPoint from_angle(double phi) { return TorusPoint{{std::cos(phi), std::sin(phi)}}; }
    double angle() const { return std::atan2(v.x2, v.x1); }

    bool operator==(const TorusPoint&) const = default;
};

// The classical game on the torus: payoff g(x,y) = -<x,Ay> + <x,u> - <v,y>
// with A = M_theta^T C M_tau, u = M_theta^T omega, v = M_tau^T omega.
struct ReducedGame {
    Mat2 A;
    Vec2 u;
    Vec2 v;
    Vec2 omega;
    double n;
    double m;
    double trC;   // n + m
    double theta;
    double tau;
    double delta;  // n*omega2^2 - m*omega1^2
};

// Symmetric specialization at theta = tau: z = M^T omega, A = M^T C M is
// symmetric PSD, alpha_eig = <Az,z>/|z|^2.
struct SymReducedGame {
    Mat2 A;
    Vec2 z;
    double trC;
    double alpha_eig;
};

// M_gamma = [[cos g, -sin g], [cos g, sin g]]; det = sin 2g.
Mat2 mat_m(double gamma);

ReducedGame reduce(const PayCoefficients& c, const AngularParams& ang);

// Unit point solving 2p(alpha) = M_theta x + e; closed form
// x = (cos(2*alpha - theta), sin(2*alpha - theta)). Throws SingularAngle when
// |sin 2*theta| <= 1e-12 (M_theta not invertible).
TorusPoint to_torus(double alpha, double theta);

// Inverse map back to the leading probabilities (p1, p2) = (M_theta x + e)/2,
// clamped to [0,1]. Throws SingularAngle as above.
std::pair<double, double> from_torus(const TorusPoint& x, double theta);

double g_payoff(const ReducedGame& rg, const TorusPoint& x, const TorusPoint& y);

// Requires theta = tau within 1e-12 (AnglesDiffer) and omega != 0 (ZeroOmega).
SymReducedGame symmetrize(const ReducedGame& rg);

}  // namespace qnash
