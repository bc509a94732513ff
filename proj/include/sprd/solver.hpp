#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "sprd/mesh.hpp"
#include "sprd/problem.hpp"
#include "sprd/tridiagonal.hpp"

namespace sprd {

/// Dense (N+1) x (M+1) mesh function stored level by level: at(j, k) is the
/// value at (x_j, t_k).
class Grid2 {
public:
    Grid2() = default;
    Grid2(int N, int M, double fill = 0.0)
        : N_(N), M_(M), data_(static_cast<std::size_t>(N + 1) * (M + 1), fill) {}

    int space_intervals() const { return N_; }
    int time_intervals() const { return M_; }

    double& at(int j, int k) { return data_[index(j, k)]; }
    double at(int j, int k) const { return data_[index(j, k)]; }

    std::span<double> level(int k) {
        return {data_.data() + static_cast<std::size_t>(k) * (N_ + 1), static_cast<std::size_t>(N_ + 1)};
    }
    std::span<const double> level(int k) const {
        return {data_.data() + static_cast<std::size_t>(k) * (N_ + 1), static_cast<std::size_t>(N_ + 1)};
    }
    std::span<const double> values() const { return data_; }

private:
    std::size_t index(int j, int k) const {
        return static_cast<std::size_t>(k) * (N_ + 1) + static_cast<std::size_t>(j);
    }

    int N_ = 0;
    int M_ = 0;
    std::vector<double> data_;
};

/// Discrete solution U(x_j, t_k) together with the meshes and problem it was
/// computed from. Immutable.
class GridSolution {
public:
    GridSolution(Problem problem, SpaceMesh space, TimeMesh time, Grid2 values);

    const Problem& problem() const { return problem_; }
    const SpaceMesh& space_mesh() const { return space_; }
    const TimeMesh& time_mesh() const { return time_; }
    const Grid2& values() const { return values_; }
    double operator()(int j, int k) const { return values_.at(j, k); }

private:
    Problem problem_;
    SpaceMesh space_;
    TimeMesh time_;
    Grid2 values_;
};

/// Three-point second difference on a nonuniform stencil:
/// (2/(h_l+h_r)) ((U_next-U_mid)/h_r - (U_mid-U_prev)/h_l).
double second_difference(double u_prev, double u_mid, double u_next, double h_left, double h_right);

/// Linear system for time level t_k given the previous level:
///   row 0:  (1 + 1/h_1) U_0 - (1/h_1) U_1 = phi_L(t_k)
///   row N:  -(1/h_N) U_{N-1} + (1 + 1/h_N) U_N = phi_R(t_k)
///   row j:  U_j/tau - eps delta^2 U_j + a(x_j,t_k) U_j = f(x_j,t_k) + U_prev_j/tau
TridiagonalSystem assemble_time_step(const Problem& p, const SpaceMesh& mesh, double tau, double t_k,
                                     std::span<const double> u_prev);

/// Implicit Euler march from U(x_j,0) = phi_B(x_j). Assembly and solve errors
/// are rethrown with the time level attached.
GridSolution march(const Problem& p, const SpaceMesh& space, const TimeMesh& time);

struct Residuals {
    double interior_max = 0.0;
    double bc_left_max = 0.0;
    double bc_right_max = 0.0;
};

/// Max |L U - f| over interior nodes and |beta U - phi| over boundary nodes,
/// time levels k >= 1.
Residuals discrete_residual(const GridSolution& sol);

/// D+ at j=0, D- at j=N, width-weighted central difference
/// (U_{j+1}-U_{j-1})/(h_j+h_{j+1}) in between.
Grid2 discrete_x_derivative(const GridSolution& sol);

/// CSV "x,t,U" (or the given value column name), rows ordered by k then j,
/// 17 significant digits.
void write_grid_csv(std::ostream& os, const SpaceMesh& space, const TimeMesh& time, const Grid2& grid,
                    const char* value_column);

}  // namespace sprd
