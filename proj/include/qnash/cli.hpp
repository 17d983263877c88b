#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qnash/oracle.hpp"

namespace qnash {

inline constexpr const char* kVersion = "0.1.0";

// Exit code contract shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitAngleUnderdetermined = 3;
inline constexpr int kExitIoError = 4;

// Parsed game specification file: four nonnegative coefficients, optional
// angular parameters (both or neither) and an optional grid block.
struct GameSpecFile {
    PayCoefficients c;
    std::optional<AngularParams> angles;
    std::optional<int> grid_resolution;
    std::optional<double> grid_epsilon;
};

struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Loads and validates a spec file. Throws SpecError with a diagnostic.
GameSpecFile load_game_spec(const std::string& path);

int cmd_solve(const std::string& path, std::ostream& out, std::ostream& err);

int cmd_oracle(const std::string& path, std::optional<int> resolution,
               std::optional<double> epsilon, std::ostream& out, std::ostream& err);

int cmd_landscape(const std::string& path, std::optional<int> resolution,
                  const std::optional<std::string>& out_path, std::ostream& out,
                  std::ostream& err);

}  // namespace qnash
