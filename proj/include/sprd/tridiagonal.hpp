#pragma once

#include <vector>

namespace sprd {

/// Row i reads lower[i-1] u[i-1] + diag[i] u[i] + upper[i] u[i+1] = rhs[i].
struct TridiagonalSystem {
    std::vector<double> lower;  ///< n-1 entries
    std::vector<double> diag;   ///< n entries
    std::vector<double> upper;  ///< n-1 entries
    std::vector<double> rhs;    ///< n entries

    explicit TridiagonalSystem(std::size_t n = 0)
        : lower(n ? n - 1 : 0), diag(n), upper(n ? n - 1 : 0), rhs(n) {}

    std::size_t size() const { return diag.size(); }
};

/// Smallest row margin |diag_i| - |lower_{i-1}| - |upper_i| over all rows.
/// Positive iff the system is strictly row diagonally dominant.
double dominance_margin(const TridiagonalSystem& sys);

/// Margin of row i alone.
double row_dominance_margin(const TridiagonalSystem& sys, std::size_t i);

inline bool is_strictly_dominant(const TridiagonalSystem& sys) {
    return dominance_margin(sys) > 0.0;
}

/// Forward elimination and back substitution without pivoting. Throws
/// ArgumentError on inconsistent sizes and NumericError on a zero or
/// non-finite pivot.
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

}  // namespace sprd
