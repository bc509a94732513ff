#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sprd/analysis.hpp"
#include "sprd/problem.hpp"

namespace sprd {

/// Problem data as expression strings over x and t. Boundary data are
/// evaluated with t as the variable (x fixed at 0 or 1); initial data with x
/// as the variable (t = 0).
struct ProblemSpec {
    std::string a;
    std::string f;
    std::string phi_L;
    std::string phi_R;
    std::string phi_B;
    double epsilon = 0x1p-14;
    double alpha = 0.9;
    double T = 1.0;
};

struct MeshSpec {
    int N = 64;
    int M = 256;
};

struct SweepSpec {
    Axis axis = Axis::Time;
    int fixed = 64;
    std::vector<int> refine_values;
    std::vector<double> epsilons;
};

struct OutputSpec {
    std::string format = "csv";     ///< text | csv
    std::string path;               ///< empty: standard output
    std::string what = "solution";  ///< solution | derivative | table
};

struct RunConfig {
    ProblemSpec problem;
    std::optional<MeshSpec> mesh;
    std::optional<SweepSpec> sweep;
    OutputSpec output;
};

/// Reads and validates a JSON run configuration. Throws ConfigError whose
/// message distinguishes malformed JSON, expression errors (with offset) and
/// invariant violations, naming the offending field.
RunConfig load_config(const std::filesystem::path& path);
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& cfg);

/// Throws ConfigError on any violated RunConfig invariant.
void check_config(const RunConfig& cfg);

/// Compiles the expression strings into a Problem.
Problem build_problem(const ProblemSpec& spec);

/// Expression form of the built-in example problem.
ProblemSpec example_problem_spec(double epsilon = 0x1p-14);

}  // namespace sprd
