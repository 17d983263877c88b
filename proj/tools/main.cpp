#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qnash/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Analytic Nash classification and brute-force verification for torus games"};
    app.require_subcommand(1);

    std::string path;
    std::optional<int> resolution;
    std::optional<double> epsilon;
    std::optional<std::string> out_path;

    CLI::App* solve = app.add_subcommand("solve", "classify the game analytically");
    solve->add_option("spec", path, "game spec file (JSON)")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive grid equilibrium search");
    oracle->add_option("spec", path, "game spec file (JSON)")->required();
    oracle->add_option("--resolution", resolution, "grid points per circle (>= 8)");
    oracle->add_option("--epsilon", epsilon, "equilibrium slack (payoff units)");

    CLI::App* landscape = app.add_subcommand("landscape", "dump the payoff surface as CSV");
    landscape->add_option("spec", path, "game spec file (JSON)")->required();
    landscape->add_option("--resolution", resolution, "grid points per circle (>= 8)");
    landscape->add_option("--out", out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return qnash::kExitInputError;
    }

    if (solve->parsed()) return qnash::cmd_solve(path, std::cout, std::cerr);
    if (oracle->parsed()) return qnash::cmd_oracle(path, resolution, epsilon, std::cout, std::cerr);
    return qnash::cmd_landscape(path, resolution, out_path, std::cout, std::cerr);
}
