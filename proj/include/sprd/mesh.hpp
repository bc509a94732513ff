#pragma once

#include <iosfwd>
#include <span>
#include <vector>

namespace sprd {

/// Piecewise-uniform Shishkin mesh on [0,1] with N intervals: N/4 on [0,sigma],
/// N/2 on [sigma,1-sigma], N/4 on [1-sigma,1]. Both transition points are mesh
/// points (indices N/4 and 3N/4).
class SpaceMesh {
public:
    SpaceMesh(double epsilon, double alpha, int N);

    int intervals() const { return N_; }
    double sigma() const { return sigma_; }
    double h_layer() const { return h_layer_; }        ///< 4 sigma / N
    double H_interior() const { return H_interior_; }  ///< 2 (1 - 2 sigma) / N
    bool is_uniform() const { return sigma_ == 0.25; }

    std::span<const double> points() const { return points_; }
    double operator[](int j) const { return points_[static_cast<std::size_t>(j)]; }
    /// h_j = x_j - x_{j-1}, for 1 <= j <= N.
    double width(int j) const { return points_[j] - points_[j - 1]; }

private:
    int N_;
    double sigma_;
    double h_layer_;
    double H_interior_;
    std::vector<double> points_;
};

/// Uniform levels t_k = T k / M, k = 0..M.
class TimeMesh {
public:
    TimeMesh(double T, int M);

    int intervals() const { return M_; }
    double final_time() const { return T_; }
    double tau() const { return tau_; }
    std::span<const double> levels() const { return levels_; }
    double operator[](int k) const { return levels_[static_cast<std::size_t>(k)]; }

private:
    int M_;
    double T_;
    double tau_;
    std::vector<double> levels_;
};

/// min(1/4, 2 sqrt(epsilon/alpha) ln N).
double transition_parameter(double epsilon, double alpha, int N);

/// Throws ArgumentError if N is not a multiple of 4 or below 8, or if
/// epsilon/alpha are not positive.
SpaceMesh build_space_mesh(double epsilon, double alpha, int N);
TimeMesh build_time_mesh(double T, int M);

struct LayerValues {
    double BL;  ///< exp(-x sqrt(alpha/epsilon))
    double BR;  ///< BL(1-x)
    double B;   ///< BL + BR
};

LayerValues layer_functions(double x, double epsilon, double alpha);

/// One point per line, 17 significant digits.
void write_points_csv(std::ostream& os, std::span<const double> points);

}  // namespace sprd
