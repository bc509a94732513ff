#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sprd/problem.hpp"
#include "sprd/solver.hpp"

namespace sprd {

enum class Axis { Time, Space, Both };

const char* axis_name(Axis axis);
/// Accepts "time", "space", "both"; throws ArgumentError otherwise.
Axis parse_axis(const std::string& name);

/// Bilinear interpolation on the solution's own tensor grid; exact at mesh
/// points. Throws ArgumentError outside [0,1] x [0,T].
double interpolate(const GridSolution& sol, double x, double t);

/// max over coarse nodes of |U_coarse - I(U_fine)| where I is bilinear
/// interpolation on the fine grid. Levels are processed in parallel with an
/// OpenMP max-reduction.
double max_coarse_difference(const GridSolution& coarse, const GridSolution& fine);
/// Single-threaded reference for max_coarse_difference.
double max_coarse_difference_serial(const GridSolution& coarse, const GridSolution& fine);

/// Solves on (N, M) and on the refined grid: (N, 2M) for Time, (2N, M) for
/// Space, (2N, 2M) for Both. Returns max_coarse_difference of the pair, or 0
/// when that is at rounding level (<= 1000 machine epsilon times max|U|).
double two_mesh_difference(const Problem& p, Axis axis, int N, int M);

struct SweepConfig {
    Axis axis = Axis::Time;
    /// N for the time axis, M for the space axis; unused for Both (N = M = r).
    int fixed = 64;
    std::vector<int> refine_values;  ///< strictly doubling, at least 2 entries
    std::vector<double> epsilons;
    Problem problem;
};

/// Throws ArgumentError if refine_values are not strictly doubling, there are
/// fewer than two of them, or no epsilons are given.
void check_sweep_config(const SweepConfig& cfg);

/// Coarse mesh counts (N, M) for one refinement value.
std::pair<int, int> sweep_mesh_counts(const SweepConfig& cfg, int refine_value);

/// 2^-6 ... 2^-14 in steps of 2^-2.
std::vector<double> default_epsilons();

struct TwoMeshReport {
    Axis axis = Axis::Time;
    int fixed = 0;
    std::vector<int> refine_values;
    std::vector<double> epsilons;
    std::vector<std::vector<double>> D_eps;       ///< [epsilon][refinement]
    std::vector<double> D_uniform;                ///< column-wise max of D_eps
    std::vector<std::optional<double>> orders;    ///< log2(D[i]/D[i+1]); empty if a D is 0
    std::optional<double> p_star;                 ///< min of defined orders
    std::vector<std::optional<double>> constants; ///< D[i] r_i^p* / (1 - 2^-p*)
    std::optional<double> C_star;                 ///< max of defined constants
    std::string comparison;                       ///< how coarse and fine grids were compared
};

/// Fills D_uniform, orders, p_star, constants and C_star from D_eps.
TwoMeshReport summarize(Axis axis, int fixed, std::vector<int> refine_values, std::vector<double> epsilons,
                        std::vector<std::vector<double>> D_eps);

/// Every (epsilon, refinement) cell is an independent pair of solves; cells
/// run on an OpenMP team of `jobs` threads (0 = OpenMP default).
TwoMeshReport run_sweep(const SweepConfig& cfg, int jobs = 0);
/// Single-threaded reference for run_sweep.
TwoMeshReport run_sweep_serial(const SweepConfig& cfg);

/// Aligned table in the layout of the classical two-mesh tables.
void write_report_text(std::ostream& os, const TwoMeshReport& report);
/// CSV "epsilon,refinement,D_eps" followed by D, p, C, p_star and C_star rows.
void write_report_csv(std::ostream& os, const TwoMeshReport& report);

/// Scientific notation with a 0.ddd mantissa, e.g. 0.266E-01.
std::string format_mantissa_sci(double v);

}  // namespace sprd
