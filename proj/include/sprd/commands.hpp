#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sprd/config.hpp"

namespace sprd::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kNumericFailure = 2 };

/// Flag values as given on the command line; unset fields fall back to the
/// config file or the built-in example.
struct Options {
    std::optional<std::string> config_path;
    bool builtin_example = false;
    std::optional<double> epsilon;
    std::optional<int> N;
    std::optional<int> M;
    std::optional<std::string> axis;
    std::optional<int> fixed_N;
    std::optional<int> fixed_M;
    std::vector<int> refine;
    std::vector<double> epsilons;
    std::optional<std::string> what;
    std::optional<std::string> format;
    std::optional<std::string> out;
    int jobs = 0;
    bool strict_compat = false;
};

/// Residual magnitude above which corner compatibility counts as violated.
inline constexpr double kCompatibilityTolerance = 1e-6;
/// Lattice density used by `solve` and `validate`.
inline constexpr int kValidationDensity = 32;

/// Merges the config file or the built-in example with flag overrides.
/// Throws ConfigError.
RunConfig resolve_config(const Options& opts);

int cmd_solve(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_table(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_validate(const Options& opts, std::ostream& out, std::ostream& err);

}  // namespace sprd::cli
