#include "sprd/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "sprd/errors.hpp"

namespace sprd {

namespace {

// Appends count uniform intervals on [from, to]; `from` is assumed already
// present and `to` is written exactly.
void append_uniform(std::vector<double>& pts, double from, double to, int count) {
    for (int i = 1; i < count; ++i) pts.push_back(from + (to - from) * i / count);
    pts.push_back(to);
}

}  // namespace

double transition_parameter(double epsilon, double alpha, int N) {
    return std::min(0.25, 2.0 * std::sqrt(epsilon / alpha) * std::log(static_cast<double>(N)));
}

SpaceMesh::SpaceMesh(double epsilon, double alpha, int N) : N_(N) {
    if (N < 8 || N % 4 != 0) {
        throw ArgumentError("space mesh: N must be divisible by 4 and at least 8 (got " +
                            std::to_string(N) + ")");
    }
    if (!(epsilon > 0.0) || !(alpha > 0.0)) {
        throw ArgumentError("space mesh: epsilon and alpha must be positive");
    }
    sigma_ = transition_parameter(epsilon, alpha, N);
    h_layer_ = 4.0 * sigma_ / N;
    H_interior_ = 2.0 * (1.0 - 2.0 * sigma_) / N;

    const int q = N / 4;
    points_.reserve(static_cast<std::size_t>(N) + 1);
    points_.push_back(0.0);
    append_uniform(points_, 0.0, sigma_, q);
    append_uniform(points_, sigma_, 1.0 - sigma_, 2 * q);
    append_uniform(points_, 1.0 - sigma_, 1.0, q);
}

TimeMesh::TimeMesh(double T, int M) : M_(M), T_(T) {
    if (M < 1) throw ArgumentError("time mesh: M must be at least 1");
    if (!(T > 0.0) || !std::isfinite(T)) throw ArgumentError("time mesh: T must be positive");
    tau_ = T / M;
    levels_.resize(static_cast<std::size_t>(M) + 1);
    for (int k = 0; k <= M; ++k) levels_[k] = T * k / M;
    levels_.back() = T;
}

SpaceMesh build_space_mesh(double epsilon, double alpha, int N) {
    return SpaceMesh(epsilon, alpha, N);
}

TimeMesh build_time_mesh(double T, int M) { return TimeMesh(T, M); }

LayerValues layer_functions(double x, double epsilon, double alpha) {
    const double rate = std::sqrt(alpha / epsilon);
    LayerValues v;
    v.BL = std::exp(-x * rate);
    v.BR = std::exp(-(1.0 - x) * rate);
    v.B = v.BL + v.BR;
    return v;
}

void write_points_csv(std::ostream& os, std::span<const double> points) {
    const auto old = os.precision(17);
    for (double x : points) os << x << '\n';
    os.precision(old);
}

}  // namespace sprd
