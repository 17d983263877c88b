#include "qnash/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace qnash {

namespace {

using nlohmann::json;

constexpr int kDefaultOracleResolution = 3600;
constexpr int kDefaultLandscapeResolution = 360;

std::string fmt(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string fmt12(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt(Vec2 v) { return "[" + fmt(v.x1) + ", " + fmt(v.x2) + "]"; }

double get_number(const json& j, const char* key) {
    if (!j.at(key).is_number()) throw SpecError(std::string("'") + key + "' must be a number");
    return j.at(key).get<double>();
}

GameSpecFile parse_spec(const json& j) {
    if (!j.is_object()) throw SpecError("spec file must contain a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key != "c" && key != "theta" && key != "tau" && key != "grid")
            throw SpecError("unknown key '" + key + "'");
    }

    if (!j.contains("c") || !j.at("c").is_array()) throw SpecError("'c' must be an array of numbers");
    const json& carr = j.at("c");
    if (carr.size() != 4) throw SpecError("expected 4 coefficients");
    double cv[4];
    for (int k = 0; k < 4; ++k) {
        if (!carr[k].is_number()) throw SpecError("'c' must be an array of numbers");
        cv[k] = carr[k].get<double>();
        if (cv[k] < 0.0) throw SpecError("coefficients must be nonnegative");
    }

    bool has_theta = j.contains("theta");
    bool has_tau = j.contains("tau");
    if (has_theta != has_tau) throw SpecError("theta and tau must be given together");
    std::optional<AngularParams> angles;
    if (has_theta) {
        double th = get_number(j, "theta");
        double ta = get_number(j, "tau");
        constexpr double half_pi = std::numbers::pi / 2.0;
        if (!(th > 0.0 && th < half_pi)) throw SpecError("theta must lie in (0, pi/2)");
        if (!(ta > 0.0 && ta < half_pi)) throw SpecError("tau must lie in (0, pi/2)");
        angles.emplace(th, ta);
    }

    std::optional<int> resolution;
    std::optional<double> epsilon;
    if (j.contains("grid")) {
        const json& g = j.at("grid");
        if (!g.is_object()) throw SpecError("'grid' must be an object");
        for (const auto& [key, value] : g.items()) {
            if (key != "resolution" && key != "epsilon")
                throw SpecError("unknown grid key '" + key + "'");
        }
        if (g.contains("resolution")) {
            if (!g.at("resolution").is_number_integer() || g.at("resolution").get<long long>() < 8)
                throw SpecError("grid.resolution must be an integer >= 8");
            resolution = g.at("resolution").get<int>();
        }
        if (g.contains("epsilon")) {
            double eps = get_number(g, "epsilon");
            if (eps < 0.0) throw SpecError("grid.epsilon must be a number >= 0");
            epsilon = eps;
        }
    }

    return GameSpecFile{PayCoefficients{cv[0], cv[1], cv[2], cv[3]}, angles, resolution, epsilon};
}

std::optional<GameSpecFile> load_or_report(const std::string& path, std::ostream& err) {
    try {
        return load_game_spec(path);
    } catch (const SpecError& e) {
        err << "error: " << e.what() << "\n";
        return std::nullopt;
    }
}

void print_header(std::ostream& out, const char* command) {
    out << "qnash " << kVersion << "\n";
    out << "command: " << command << "\n";
}

void print_input(std::ostream& out, const GameSpecFile& spec) {
    out << "input:\n";
    out << "  c: [" << fmt(spec.c.c1) << ", " << fmt(spec.c.c2) << ", " << fmt(spec.c.c3) << ", "
        << fmt(spec.c.c4) << "]\n";
    out << "  theta: " << (spec.angles ? fmt(spec.angles->theta) : "none") << "\n";
    out << "  tau: " << (spec.angles ? fmt(spec.angles->tau) : "none") << "\n";
    if (!spec.grid_resolution && !spec.grid_epsilon) {
        out << "  grid: none\n";
    } else {
        out << "  grid: {";
        if (spec.grid_resolution) {
            out << "resolution: " << *spec.grid_resolution;
            if (spec.grid_epsilon) out << ", ";
        }
        if (spec.grid_epsilon) out << "epsilon: " << fmt(*spec.grid_epsilon);
        out << "}\n";
    }
}

void print_analysis(std::ostream& out, const GameSpecFile& spec, const GameClassification& cls) {
    out << "derived:\n";
    out << "  omega: " << fmt(cls.omega) << "\n";
    out << "  n: " << fmt(cls.n) << "\n";
    out << "  m: " << fmt(cls.m) << "\n";
    out << "  trC: " << fmt(cls.trC) << "\n";
    out << "  delta: " << fmt(cls.delta) << "\n";
    if (cls.delta != 0.0) out << "  cos2theta: " << fmt(eigen_angle(spec.c).cos2theta) << "\n";
    out << "classification: " << to_string(cls.tag) << "\n";
    if (cls.theta_star) out << "theta_star: " << fmt(*cls.theta_star) << "\n";
    if (cls.sym) {
        out << "z: " << fmt(cls.sym->z) << "\n";
        out << "alpha_eig: " << fmt(cls.sym->alpha_eig) << "\n";
    }
    if (cls.s) out << "s: " << fmt(*cls.s) << "\n";
    if (cls.z_cube) out << "z_cubed: " << fmt(*cls.z_cube) << "\n";
    out << "certificates: " << cls.certificates.size() << "\n";
    for (size_t k = 0; k < cls.certificates.size(); ++k) {
        const EquilibriumCertificate& cert = cls.certificates[k];
        out << "certificate " << k + 1 << ":\n";
        out << "  x: " << fmt(cert.x.v) << "\n";
        out << "  y: " << fmt(cert.y.v) << "\n";
        out << "  lambda: " << fmt(cert.lambda) << "\n";
        out << "  mu: " << fmt(cert.mu) << "\n";
        out << "  residual_x: " << fmt(cert.residual_x) << "\n";
        out << "  residual_y: " << fmt(cert.residual_y) << "\n";
        out << "  g: " << fmt(cert.game_value_g) << "\n";
        out << "  H: " << fmt(cert.game_value_h) << "\n";
    }
}

void print_timing(std::ostream& out, std::chrono::steady_clock::time_point start) {
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    out << "timing_ms: " << buf << "\n";
}

double toroidal_distance(double a, double b) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double d = std::fmod(std::abs(a - b), two_pi);
    return std::min(d, two_pi - d);
}

bool near_certificate(const OracleEquilibrium& rep, const EquilibriumCertificate& cert, int n) {
    double bound = 2.0 * (2.0 * std::numbers::pi / n);
    return toroidal_distance(rep.x.angle(), cert.x.angle()) <= bound &&
           toroidal_distance(rep.y.angle(), cert.y.angle()) <= bound;
}

// Oracle-versus-analytic verdict. Comparable when the analytic tag predicts
// the full equilibrium set at the angles the oracle ran with: NoOmega rules
// out equilibria at any angles, UniqueEigen/DualEigen pin them at theta_star.
// Each certificate must be matched by exactly one cluster; any unmatched
// cluster must fail the exact criterion re-check (epsilon-plateau artifact).
std::string agreement_verdict(const GameClassification& cls, const ReducedGame& rg, int resolution,
                              const GridNashResult& result,
                              const std::vector<bool>& recheck_pass) {
    bool comparable =
        cls.tag == GameTag::NoOmega ||
        ((cls.tag == GameTag::UniqueEigen || cls.tag == GameTag::DualEigen) && cls.theta_star &&
         std::abs(rg.theta - *cls.theta_star) <= 1e-12 && std::abs(rg.tau - *cls.theta_star) <= 1e-12);
    if (!comparable) return "n/a";

    std::vector<bool> matched(result.clusters.size(), false);
    for (const EquilibriumCertificate& cert : cls.certificates) {
        int count = 0;
        int idx = -1;
        for (size_t k = 0; k < result.clusters.size(); ++k) {
            if (near_certificate(result.clusters[k].representative, cert, resolution)) {
                ++count;
                idx = static_cast<int>(k);
            }
        }
        if (count != 1 || matched[idx]) return "no";
        matched[idx] = true;
    }
    for (size_t k = 0; k < result.clusters.size(); ++k)
        if (!matched[k] && recheck_pass[k]) return "no";
    return "yes";
}

}  // namespace

GameSpecFile load_game_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot read '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("invalid spec file: ") + e.what());
    }
    return parse_spec(j);
}

int cmd_solve(const std::string& path, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    std::optional<GameSpecFile> spec = load_or_report(path, err);
    if (!spec) return kExitInputError;

    GameClassification cls = solve(spec->c);

    print_header(out, "solve");
    print_input(out, *spec);
    print_analysis(out, *spec, cls);
    print_timing(out, start);
    return kExitOk;
}

int cmd_oracle(const std::string& path, std::optional<int> resolution,
               std::optional<double> epsilon, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    std::optional<GameSpecFile> spec = load_or_report(path, err);
    if (!spec) return kExitInputError;

    GameClassification cls = solve(spec->c);

    std::optional<AngularParams> angles = spec->angles;
    if (!angles && cls.theta_star) angles.emplace(*cls.theta_star, *cls.theta_star);
    if (!angles) {
        err << "error: angles underdetermined (classification " << to_string(cls.tag)
            << "); supply theta and tau in the spec file\n";
        return kExitAngleUnderdetermined;
    }

    int n = resolution.value_or(spec->grid_resolution.value_or(kDefaultOracleResolution));
    double eps = epsilon.value_or(spec->grid_epsilon.value_or(default_epsilon(spec->c.total(), n)));
    std::optional<GridSpec> gs;
    try {
        gs.emplace(n, eps);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    ReducedGame rg = reduce(spec->c, *angles);
    GridNashResult result = grid_nash(rg, *gs);

    std::vector<bool> recheck_pass;
    std::vector<std::string> recheck_text;
    for (const OracleCluster& cl : result.clusters) {
        CriterionResult r = check_criterion(rg, cl.representative.x, cl.representative.y);
        if (std::holds_alternative<EquilibriumCertificate>(r)) {
            recheck_pass.push_back(true);
            recheck_text.push_back("pass");
        } else {
            recheck_pass.push_back(false);
            recheck_text.push_back(std::string("fail ") + to_string(std::get<Rejection>(r).reason));
        }
    }

    print_header(out, "oracle");
    print_input(out, *spec);
    print_analysis(out, *spec, cls);
    out << "oracle:\n";
    out << "  theta: " << fmt(angles->theta) << "\n";
    out << "  tau: " << fmt(angles->tau) << "\n";
    out << "  resolution: " << n << "\n";
    out << "  epsilon: " << fmt(eps) << "\n";
    out << "  raw_hits: " << result.hits.size() << "\n";
    out << "  clusters: " << result.clusters.size() << "\n";
    for (size_t k = 0; k < result.clusters.size(); ++k) {
        const OracleCluster& cl = result.clusters[k];
        const OracleEquilibrium& rep = cl.representative;
        out << "  cluster " << k + 1 << ":\n";
        out << "    index: [" << rep.ix << ", " << rep.iy << "]\n";
        out << "    x: " << fmt(rep.x.v) << "\n";
        out << "    y: " << fmt(rep.y.v) << "\n";
        out << "    g: " << fmt(rep.g_value) << "\n";
        out << "    gap_x: " << fmt(rep.gap_x) << "\n";
        out << "    gap_y: " << fmt(rep.gap_y) << "\n";
        out << "    size: " << cl.size << "\n";
        out << "    recheck: " << recheck_text[k] << "\n";
    }
    out << "  agreement: " << agreement_verdict(cls, rg, n, result, recheck_pass) << "\n";
    print_timing(out, start);
    return kExitOk;
}

int cmd_landscape(const std::string& path, std::optional<int> resolution,
                  const std::optional<std::string>& out_path, std::ostream& out,
                  std::ostream& err) {
    std::optional<GameSpecFile> spec = load_or_report(path, err);
    if (!spec) return kExitInputError;

    GameClassification cls = solve(spec->c);
    std::optional<AngularParams> angles = spec->angles;
    if (!angles && cls.theta_star) angles.emplace(*cls.theta_star, *cls.theta_star);
    if (!angles) {
        err << "error: angles underdetermined (classification " << to_string(cls.tag)
            << "); supply theta and tau in the spec file\n";
        return kExitAngleUnderdetermined;
    }

    int n = resolution.value_or(spec->grid_resolution.value_or(kDefaultLandscapeResolution));
    if (n < 8) {
        err << "error: resolution must be >= 8\n";
        return kExitInputError;
    }

    ReducedGame rg = reduce(spec->c, *angles);

    std::ofstream file;
    if (out_path) {
        file.open(*out_path);
        if (!file) {
            err << "error: cannot open output file '" << *out_path << "'\n";
            return kExitIoError;
        }
    }
    std::ostream& sink = out_path ? static_cast<std::ostream&>(file) : out;

    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<TorusPoint> grid;
    grid.reserve(n);
    for (int k = 0; k < n; ++k) grid.push_back(TorusPoint::from_angle(two_pi * k / n));

    sink << "phi_x,phi_y,g,H\n";
    for (int kx = 0; kx < n; ++kx) {
        double phi_x = two_pi * kx / n;
        for (int ky = 0; ky < n; ++ky) {
            double phi_y = two_pi * ky / n;
            double g = g_payoff(rg, grid[kx], grid[ky]);
            sink << fmt12(phi_x) << "," << fmt12(phi_y) << "," << fmt12(g) << ","
                 << fmt12((g + rg.trC) / 4.0) << "\n";
        }
    }
    sink.flush();
    if (!sink) {
        err << "error: failed writing landscape output\n";
        return kExitIoError;
    }
    return kExitOk;
}

}  // namespace qnash
