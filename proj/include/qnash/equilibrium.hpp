#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "qnash/reduction.hpp"

namespace qnash {

// Witness that (x, y) satisfies the equilibrium criterion
// -Ay + u = lambda x, A^T x + v = mu y with lambda, mu >= 0.
struct EquilibriumCertificate {
    TorusPoint x;
    TorusPoint y;
    double lambda;
    double mu;
    double residual_x;  // ||-Ay + u - lambda x||
    double residual_y;  // ||A^T x + v - mu y||
    double game_value_g;
    double game_value_h;  // (g + trC) / 4
};

enum class RejectionReason { NegativeLambda, NegativeMu, NotCollinearX, NotCollinearY };

struct Rejection {
    RejectionReason reason;
    double value;  // offending residual or multiplier
};

using CriterionResult = std::variant<EquilibriumCertificate, Rejection>;

// Evaluates the criterion at (x, y). Collinearity is checked before the sign
// of the multipliers; residual tolerance 1e-9*(1+||A||_max), sign slack
// 1e-12*(1+||A||_max).
CriterionResult check_criterion(const ReducedGame& rg, const TorusPoint& x, const TorusPoint& y);

enum class EigenAngleStatus { Found, Degenerate, NoEigenAngle };

struct EigenAngleResult {
    EigenAngleStatus status;
    double theta_star;  // meaningful only when status == Found
    double cos2theta;   // the ratio (m-n)*w1*w2/delta, meaningful unless Degenerate
};

// Solves cos 2*theta = (m-n)*omega1*omega2/delta for the only angle at which
// an eigenequilibrium can exist. Degenerate when delta = 0; NoEigenAngle when
// |cos 2*theta| >= 1 (the angular interval is open, so the endpoints are out).
EigenAngleResult eigen_angle(const PayCoefficients& c);

// True iff omega is an eigenvector of both C M_gamma M_gamma^T matrices
// (gamma = theta, tau) within relative residual 1e-9. Throws ZeroOmega.
bool common_eigen_check(const PayCoefficients& c, double theta, double tau);

enum class GameTag {
    NoOmega,
    Degenerate,
    NoEigenAngle,
    NotCommonEigenvector,
    UniqueEigen,
    DualEigen,
    HypothesisFailed,
};

const char* to_string(GameTag tag);
const char* to_string(RejectionReason reason);

// Outcome of the analytic pipeline. The optional fields are populated as far
// as the pipeline got; UniqueEigen carries one certificate, DualEigen two
// (the second one on the degenerate side x = -z/|z|).
struct GameClassification {
    GameTag tag;
    Vec2 omega;
    double n;
    double m;
    double trC;
    double delta;
    std::optional<double> theta_star;
    std::optional<SymReducedGame> sym;
    std::optional<double> s;       // <Az, z>
    std::optional<double> z_cube;  // |z|^3
    std::vector<EquilibriumCertificate> certificates;
};

// The full classification pipeline: omega = 0, degeneracy, eigen-angle,
// common-eigenvector verification, then the comparison of <Az,z> against
// |z|^3 that separates the unique, dual and hypothesis-failed regimes.
GameClassification solve(const PayCoefficients& c);

inline double game_value(const EquilibriumCertificate& cert, double trC) {
    return (cert.game_value_g + trC) / 4.0;
}

}  // namespace qnash
