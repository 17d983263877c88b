#include "qnash/quantum_model.hpp"

namespace qnash {

Mat2 projector(double gamma) {
    double cg = std::cos(gamma);
    double sg = std::sin(gamma);
    return {cg * cg, cg * sg, cg * sg, sg * sg};
}

Mat4 build_pay_operator(const PayCoefficients& c, const AngularParams& ang) {
    Mat2 id = Mat2::identity();
    Mat2 a1 = projector(0.0);
    Mat2 a2 = projector(ang.theta);
    Mat2 a3 = id - a1;
    Mat2 a4 = id - a2;
    Mat2 b1 = projector(0.0);
    Mat2 b2 = projector(ang.tau);
    Mat2 b3 = id - b1;
    Mat2 b4 = id - b2;
    return c.c3 * tensor2(a1, b3) + c.c1 * tensor2(a3, b1) + c.c4 * tensor2(a2, b4) +
           c.c2 * tensor2(a4, b2);
}

ProbabilityProfile probabilities(const StrategyAngles& s, const AngularParams& ang) {
    auto sq = [](double v) { return v * v; };
    double p1 = sq(std::cos(s.alpha));
    double p2 = sq(std::cos(s.alpha - ang.theta));
    double q1 = sq(std::cos(s.beta));
    double q2 = sq(std::cos(s.beta - ang.tau));
    return ProbabilityProfile::from_leading(p1, p2, q1, q2);
}

double payoff_closed_form(const PayCoefficients& c, const ProbabilityProfile& prob) {
    if (!prob.valid()) throw std::invalid_argument("payoff_closed_form: invalid probability profile");
    return c.c3 * prob.p1 * prob.q3 + c.c1 * prob.p3 * prob.q1 + c.c4 * prob.p2 * prob.q4 +
           c.c2 * prob.p4 * prob.q2;
}

double expectation(const Mat4& h, const StrategyAngles& s) {
    if (!is_symmetric(h)) throw NotSymmetric("expectation: pay operator not symmetric");
    double ca = std::cos(s.alpha), sa = std::sin(s.alpha);
    double cb = std::cos(s.beta), sb = std::sin(s.beta);
    double w[4] = {ca * cb, ca * sb, sa * cb, sa * sb};
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        double row = 0.0;
        for (int j = 0; j < 4; ++j) row += h(i, j) * w[j];
        acc += w[i] * row;
    }
    return acc;
}

}  // namespace qnash
