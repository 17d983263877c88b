#pragma once

#include <vector>

#include "qnash/equilibrium.hpp"

namespace qnash {

struct GridSpec {
    int resolution;
    double epsilon;

    GridSpec(int n, double eps) : resolution(n), epsilon(eps) {
        if (n < 8) throw std::invalid_argument("GridSpec: resolution must be >= 8");
        if (!(std::isfinite(eps) && eps >= 0.0))
            throw std::invalid_argument("GridSpec: epsilon must be finite and >= 0");
    }
};

// First-order payoff variation over one grid step, safety factor 10.
inline double default_epsilon(double total_payoff, int resolution) {
    return 10.0 * total_payoff * (6.283185307179586 / resolution);
}

// A grid pair where neither player can improve by more than epsilon by
// deviating to any other grid point.
struct OracleEquilibrium {
    int ix;
    int iy;
    TorusPoint x;
    TorusPoint y;
    double g_value;
    double gap_x;  // max over grid x' of g(x',y) - g(x,y)
    double gap_y;  // max over grid y' of g(x,y) - g(x,y')

    bool operator==(const OracleEquilibrium&) const = default;
};

// Connected component of hits under torus grid adjacency. The representative
// is the member with the smallest exact-criterion residual (ties to the
// lowest (ix,iy)), i.e. the best equilibrium candidate inside the epsilon
// plateau rather than an arbitrary plateau member.
struct OracleCluster {
    OracleEquilibrium representative;
    int size;

    bool operator==(const OracleCluster&) const = default;
};

struct GridNashResult {
    std::vector<OracleEquilibrium> hits;     // sorted by (ix, iy)
    std::vector<OracleCluster> clusters;     // sorted by representative (ix, iy)

    bool operator==(const GridNashResult&) const = default;
};

// Grid point x(phi_k), phi_k = 2*pi*k/N, maximizing g(x, y); ties broken by
// the smallest k.
TorusPoint best_response_x(const ReducedGame& rg, const TorusPoint& y, int resolution);

// Exhaustive epsilon-equilibrium scan. grid_nash partitions the row loops
// across OpenMP workers; grid_nash_serial is the plain-loop reference. The
// two are bit-identical: every cell value comes from the same expression and
// results are assembled in index order regardless of the partitioning.
GridNashResult grid_nash(const ReducedGame& rg, const GridSpec& spec);
GridNashResult grid_nash_serial(const ReducedGame& rg, const GridSpec& spec);

// True iff no grid deviation improves either player's objective by more than
// spec.epsilon at the certificate's (x, y).
bool verify_certificate(const ReducedGame& rg, const EquilibriumCertificate& cert,
                        const GridSpec& spec);

}  // namespace qnash
