#include "qnash/equilibrium.hpp"

namespace qnash {

CriterionResult check_criterion(const ReducedGame& rg, const TorusPoint& x, const TorusPoint& y) {
    double scale = 1.0 + max_abs(rg.A);
    double tol_res = 1e-9 * scale;
    double tol_sign = 1e-12 * scale;

    Vec2 rx = rg.u - rg.A * y.v;             // -Ay + u
    double lambda = dot(rx, x.v);
    double residual_x = norm(rx - lambda * x.v);

    Vec2 ry = transpose(rg.A) * x.v + rg.v;  // A^T x + v
    double mu = dot(ry, y.v);
    double residual_y = norm(ry - mu * y.v);

    if (residual_x > tol_res) return Rejection{RejectionReason::NotCollinearX, residual_x};
    if (residual_y > tol_res) return Rejection{RejectionReason::NotCollinearY, residual_y};
    if (lambda < -tol_sign) return Rejection{RejectionReason::NegativeLambda, lambda};
    if (mu < -tol_sign) return Rejection{RejectionReason::NegativeMu, mu};

    double g = g_payoff(rg, x, y);
    return EquilibriumCertificate{x, y, lambda, mu, residual_x, residual_y, g, (g + rg.trC) / 4.0};
}

EigenAngleResult eigen_angle(const PayCoefficients& c) {
    double delta = c.delta();
    if (delta == 0.0) return {EigenAngleStatus::Degenerate, 0.0, 0.0};
    Vec2 w = c.omega();
    double t = (c.m() - c.n()) * w.x1 * w.x2 / delta;
    if (std::abs(t) >= 1.0) return {EigenAngleStatus::NoEigenAngle, 0.0, t};
    return {EigenAngleStatus::Found, 0.5 * std::acos(t), t};
}

bool common_eigen_check(const PayCoefficients& c, double theta, double tau) {
    Vec2 w = c.omega();
    if (w.x1 == 0.0 && w.x2 == 0.0) throw ZeroOmega("common_eigen_check: omega is zero");
    double wn = norm(w);
    for (double gamma : {theta, tau}) {
        // C M M^T = [[n, n cos 2g], [m cos 2g, m]]
        double c2 = std::cos(2.0 * gamma);
        Mat2 e{c.n(), c.n() * c2, c.m() * c2, c.m()};
        Vec2 ew = e * w;
        Vec2 resid = ew - (dot(ew, w) / norm_sq(w)) * w;
        if (norm(resid) > 1e-9 * (1.0 + max_abs(e)) * wn) return false;
    }
    return true;
}

const char* to_string(GameTag tag) {
    switch (tag) {
        case GameTag::NoOmega: return "NoOmega";
        case GameTag::Degenerate: return "Degenerate";
        case GameTag::NoEigenAngle: return "NoEigenAngle";
        case GameTag::NotCommonEigenvector: return "NotCommonEigenvector";
        case GameTag::UniqueEigen: return "UniqueEigen";
        case GameTag::DualEigen: return "DualEigen";
        case GameTag::HypothesisFailed: return "HypothesisFailed";
    }
    return "?";
}

const char* to_string(RejectionReason reason) {
    switch (reason) {
        case RejectionReason::NegativeLambda: return "NegativeLambda";
        case RejectionReason::NegativeMu: return "NegativeMu";
        case RejectionReason::NotCollinearX: return "NotCollinearX";
        case RejectionReason::NotCollinearY: return "NotCollinearY";
    }
    return "?";
}

GameClassification solve(const PayCoefficients& c) {
    GameClassification out{
        GameTag::NoOmega, c.omega(), c.n(), c.m(), c.n() + c.m(), c.delta(), {}, {}, {}, {}, {}};

    if (out.omega.x1 == 0.0 && out.omega.x2 == 0.0) return out;  // no equilibrium can exist

    EigenAngleResult ea = eigen_angle(c);
    if (ea.status == EigenAngleStatus::Degenerate) {
        out.tag = GameTag::Degenerate;
        return out;
    }
    if (ea.status == EigenAngleStatus::NoEigenAngle) {
        out.tag = GameTag::NoEigenAngle;
        return out;
    }
    out.theta_star = ea.theta_star;

    if (!common_eigen_check(c, ea.theta_star, ea.theta_star)) {
        // Algebraically impossible at the derived angle; kept as a guard.
        out.tag = GameTag::NotCommonEigenvector;
        return out;
    }

    ReducedGame rg = reduce(c, AngularParams{ea.theta_star, ea.theta_star});
    SymReducedGame sym = symmetrize(rg);
    out.sym = sym;

    double zlen = norm(sym.z);
    double s = dot(sym.A * sym.z, sym.z);
    double cube = zlen * zlen * zlen;
    out.s = s;
    out.z_cube = cube;
    double tol_cmp = 1e-9 * (1.0 + max_abs(sym.A)) * cube;

    TorusPoint zhat{(1.0 / zlen) * sym.z};
    TorusPoint zneg{-1.0 / zlen * sym.z};

    auto certify = [&](const TorusPoint& x, const TorusPoint& y) {
        CriterionResult r = check_criterion(rg, x, y);
        if (const auto* cert = std::get_if<EquilibriumCertificate>(&r)) return *cert;
        throw std::logic_error("solve: constructed eigenequilibrium rejected by criterion");
    };

    if (std::abs(s - cube) <= tol_cmp) {
        out.tag = GameTag::DualEigen;
        out.certificates.push_back(certify(zhat, zhat));
        out.certificates.push_back(certify(zneg, zhat));
    } else if (s < cube) {
        out.tag = GameTag::UniqueEigen;
        out.certificates.push_back(certify(zhat, zhat));
    } else {
        out.tag = GameTag::HypothesisFailed;
    }
    return out;
}

}  // namespace qnash
