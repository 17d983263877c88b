#include "qnash/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <tuple>
#include <unordered_map>

namespace qnash {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Precomputed grid and per-column data. Player 1 maximizes g, player 2
// minimizes it; for a fixed column y_j the payoff is an affine function of x:
// g(x_i, y_j) = <x_i, u - A y_j> - <v, y_j>.
struct GridTables {
    int n;
    std::vector<double> cosv, sinv;  // grid points
    std::vector<double> w1, w2;      // w_j = u - A y_j
    std::vector<double> d;           // d_j = <v, y_j>
};

GridTables build_tables(const ReducedGame& rg, int n) {
    GridTables t;
    t.n = n;
    t.cosv.resize(n);
    t.sinv.resize(n);
    t.w1.resize(n);
    t.w2.resize(n);
    t.d.resize(n);
    for (int k = 0; k < n; ++k) {
        double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        t.cosv[k] = std::cos(phi);
        t.sinv[k] = std::sin(phi);
    }
    for (int j = 0; j < n; ++j) {
        t.w1[j] = rg.u.x1 - (rg.A.m11 * t.cosv[j] + rg.A.m12 * t.sinv[j]);
        t.w2[j] = rg.u.x2 - (rg.A.m21 * t.cosv[j] + rg.A.m22 * t.sinv[j]);
        t.d[j] = rg.v.x1 * t.cosv[j] + rg.v.x2 * t.sinv[j];
    }
    return t;
}

// The one expression both implementations evaluate; bit-identical output
// depends on every cell going through here.
inline double cell(const GridTables& t, int i, int j) {
    return t.cosv[i] * t.w1[j] + t.sinv[i] * t.w2[j] - t.d[j];
}

struct RawHit {
    int j;
    double g, gap_x, gap_y;
};

// Residual of the exact equilibrium criterion at a grid pair; the cluster
// representative minimizes this, so it is the best equilibrium candidate
// inside the epsilon plateau rather than an arbitrary plateau member.
double criterion_residual(const ReducedGame& rg, Vec2 x, Vec2 y) {
    Vec2 rx = rg.u - rg.A * y;
    double lambda = dot(rx, x);
    Vec2 ry = transpose(rg.A) * x + rg.v;
    double mu = dot(ry, y);
    return norm(rx - lambda * x) + norm(ry - mu * y);
}

GridNashResult assemble(const ReducedGame& rg, const GridTables& t,
                        const std::vector<std::vector<RawHit>>& rows) {
    GridNashResult out;
    for (int i = 0; i < t.n; ++i)
        for (const RawHit& h : rows[i])
            out.hits.push_back(OracleEquilibrium{
                i, h.j, TorusPoint{{t.cosv[i], t.sinv[i]}}, TorusPoint{{t.cosv[h.j], t.sinv[h.j]}},
                h.g, h.gap_x, h.gap_y});

    // Union-find over the hit set; adjacency wraps around the torus.
    const int n = t.n;
    std::unordered_map<long long, int> index;
    index.reserve(out.hits.size() * 2);
    for (size_t k = 0; k < out.hits.size(); ++k)
        index.emplace(static_cast<long long>(out.hits[k].ix) * n + out.hits[k].iy,
                      static_cast<int>(k));

    std::vector<int> parent(out.hits.size());
    for (size_t k = 0; k < parent.size(); ++k) parent[k] = static_cast<int>(k);
    auto find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    };

    constexpr int kForwardNeighbors[4][2] = {{0, 1}, {1, -1}, {1, 0}, {1, 1}};
    for (size_t k = 0; k < out.hits.size(); ++k) {
        for (auto [di, dj] : kForwardNeighbors) {
            long long ni = (out.hits[k].ix + di) % n;
            long long nj = (out.hits[k].iy + dj + n) % n;
            auto it = index.find(ni * n + nj);
            if (it != index.end()) unite(static_cast<int>(k), it->second);
        }
    }

    std::unordered_map<int, int> cluster_of_root;
    std::vector<double> best_residual;
    for (size_t k = 0; k < out.hits.size(); ++k) {
        int root = find(static_cast<int>(k));
        const OracleEquilibrium& h = out.hits[k];
        double res = criterion_residual(rg, h.x.v, h.y.v);
        auto [it, inserted] = cluster_of_root.emplace(root, static_cast<int>(out.clusters.size()));
        if (inserted) {
            out.clusters.push_back(OracleCluster{h, 1});
            best_residual.push_back(res);
            continue;
        }
        OracleCluster& cl = out.clusters[it->second];
        ++cl.size;
        const OracleEquilibrium& r = cl.representative;
        if (std::tuple(res, h.ix, h.iy) < std::tuple(best_residual[it->second], r.ix, r.iy)) {
            cl.representative = h;
            best_residual[it->second] = res;
        }
    }
    std::sort(out.clusters.begin(), out.clusters.end(), [](const auto& a, const auto& b) {
        return std::tuple(a.representative.ix, a.representative.iy) <
               std::tuple(b.representative.ix, b.representative.iy);
    });
    return out;
}

}  // namespace

TorusPoint best_response_x(const ReducedGame& rg, const TorusPoint& y, int resolution) {
    if (resolution < 8) throw std::invalid_argument("best_response_x: resolution must be >= 8");
    Vec2 w = rg.u - rg.A * y.v;
    int best = 0;
    double best_val = w.x1;  // k = 0 is (1, 0)
    for (int k = 1; k < resolution; ++k) {
        double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(resolution);
        double val = std::cos(phi) * w.x1 + std::sin(phi) * w.x2;
        if (val > best_val) {
            best_val = val;
            best = k;
        }
    }
    return TorusPoint::from_angle(kTwoPi * static_cast<double>(best) /
                                  static_cast<double>(resolution));
}

GridNashResult grid_nash_serial(const ReducedGame& rg, const GridSpec& spec) {
    const int n = spec.resolution;
    const double eps = spec.epsilon;
    GridTables t = build_tables(rg, n);

    std::vector<double> colmax(n), rowmin(n);
    for (int j = 0; j < n; ++j) {
        double best = cell(t, 0, j);
        for (int i = 1; i < n; ++i) best = std::max(best, cell(t, i, j));
        colmax[j] = best;
    }
    for (int i = 0; i < n; ++i) {
        double worst = cell(t, i, 0);
        for (int j = 1; j < n; ++j) worst = std::min(worst, cell(t, i, j));
        rowmin[i] = worst;
    }

    std::vector<std::vector<RawHit>> rows(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double g = cell(t, i, j);
            double gap_x = colmax[j] - g;
            double gap_y = g - rowmin[i];
            if (gap_x <= eps && gap_y <= eps) rows[i].push_back(RawHit{j, g, gap_x, gap_y});
        }
    }
    return assemble(rg, t, rows);
}

GridNashResult grid_nash(const ReducedGame& rg, const GridSpec& spec) {
    const int n = spec.resolution;
    const double eps = spec.epsilon;
    GridTables t = build_tables(rg, n);

    std::vector<double> colmax(n), rowmin(n);
    // Inner loops stay in index order so each reduction matches the serial
    // scan exactly; only the outer loop is partitioned.
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) {
        double best = cell(t, 0, j);
        for (int i = 1; i < n; ++i) best = std::max(best, cell(t, i, j));
        colmax[j] = best;
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        double worst = cell(t, i, 0);
        for (int j = 1; j < n; ++j) worst = std::min(worst, cell(t, i, j));
        rowmin[i] = worst;
    }

    std::vector<std::vector<RawHit>> rows(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double g = cell(t, i, j);
            double gap_x = colmax[j] - g;
            double gap_y = g - rowmin[i];
            if (gap_x <= eps && gap_y <= eps) rows[i].push_back(RawHit{j, g, gap_x, gap_y});
        }
    }
    return assemble(rg, t, rows);
}

bool verify_certificate(const ReducedGame& rg, const EquilibriumCertificate& cert,
                        const GridSpec& spec) {
    const int n = spec.resolution;
    Vec2 wx = rg.u - rg.A * cert.y.v;
    double d = dot(rg.v, cert.y.v);
    double g_c = dot(cert.x.v, wx) - d;

    double best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        best = std::max(best, std::cos(phi) * wx.x1 + std::sin(phi) * wx.x2 - d);
    }
    if (best - g_c > spec.epsilon) return false;

    // g(x_c, y) = <x_c, u> - <y, A^T x_c + v>
    Vec2 wy = transpose(rg.A) * cert.x.v + rg.v;
    double e0 = dot(cert.x.v, rg.u);
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        worst = std::min(worst, e0 - (std::cos(phi) * wy.x1 + std::sin(phi) * wy.x2));
    }
    return g_c - worst <= spec.epsilon;
}

}  // namespace qnash
