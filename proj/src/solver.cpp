#include "sprd/solver.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "sprd/errors.hpp"

namespace sprd {

GridSolution::GridSolution(Problem problem, SpaceMesh space, TimeMesh time, Grid2 values)
    : problem_(std::move(problem)), space_(std::move(space)), time_(std::move(time)),
      values_(std::move(values)) {
    if (values_.space_intervals() != space_.intervals() || values_.time_intervals() != time_.intervals()) {
        throw ArgumentError("GridSolution: grid shape does not match meshes");
    }
}

double second_difference(double u_prev, double u_mid, double u_next, double h_left, double h_right) {
    return (2.0 / (h_left + h_right)) * ((u_next - u_mid) / h_right - (u_mid - u_prev) / h_left);
}

TridiagonalSystem assemble_time_step(const Problem& p, const SpaceMesh& mesh, double tau, double t_k,
                                     std::span<const double> u_prev) {
    const int N = mesh.intervals();
    if (u_prev.size() != static_cast<std::size_t>(N) + 1) {
        throw ArgumentError("assemble_time_step: previous level has wrong length");
    }
    const double eps = p.epsilon;
    TridiagonalSystem sys(static_cast<std::size_t>(N) + 1);

    const double inv_h1 = 1.0 / mesh.width(1);
    sys.diag[0] = 1.0 + inv_h1;
    sys.upper[0] = -inv_h1;
    sys.rhs[0] = evaluate_field(p.phi_L, "phi_L", t_k);

    for (int j = 1; j < N; ++j) {
        const double hl = mesh.width(j);
        const double hr = mesh.width(j + 1);
        const double x = mesh[j];
        const double a = evaluate_field(p.a, "a", x, t_k);
        const double f = evaluate_field(p.f, "f", x, t_k);
        sys.lower[j - 1] = -2.0 * eps / (hl * (hl + hr));
        sys.upper[j] = -2.0 * eps / (hr * (hl + hr));
        sys.diag[j] = 1.0 / tau + 2.0 * eps / (hl * hr) + a;
        sys.rhs[j] = f + u_prev[j] / tau;
    }

    const double inv_hN = 1.0 / mesh.width(N);
    sys.lower[N - 1] = -inv_hN;
    sys.diag[N] = 1.0 + inv_hN;
    sys.rhs[N] = evaluate_field(p.phi_R, "phi_R", t_k);
    return sys;
}

GridSolution march(const Problem& p, const SpaceMesh& space, const TimeMesh& time) {
    check_parameters(p);
    const int N = space.intervals();
    const int M = time.intervals();
    Grid2 U(N, M);

    auto u0 = U.level(0);
    for (int j = 0; j <= N; ++j) u0[j] = evaluate_field(p.phi_B, "phi_B", space[j]);

    for (int k = 1; k <= M; ++k) {
        const std::string where = "time level k=" + std::to_string(k) + ": ";
        try {
            auto sys = assemble_time_step(p, space, time.tau(), time[k], U.level(k - 1));
            auto u = thomas_solve(sys);
            std::copy(u.begin(), u.end(), U.level(k).begin());
        } catch (const DataEvaluationError& e) {
            throw DataEvaluationError(where + e.what());
        } catch (const NumericError& e) {
            throw NumericError(where + e.what());
        }
    }
    return GridSolution(p, space, time, std::move(U));
}

Residuals discrete_residual(const GridSolution& sol) {
    const auto& p = sol.problem();
    const auto& xm = sol.space_mesh();
    const auto& tm = sol.time_mesh();
    const int N = xm.intervals();
    const int M = tm.intervals();
    const double tau = tm.tau();

    Residuals r;
    for (int k = 1; k <= M; ++k) {
        const double t = tm[k];
        const double left = sol(0, k) - (sol(1, k) - sol(0, k)) / xm.width(1);
        const double right = sol(N, k) + (sol(N, k) - sol(N - 1, k)) / xm.width(N);
        r.bc_left_max = std::fmax(r.bc_left_max, std::fabs(left - evaluate_field(p.phi_L, "phi_L", t)));
        r.bc_right_max = std::fmax(r.bc_right_max, std::fabs(right - evaluate_field(p.phi_R, "phi_R", t)));
        for (int j = 1; j < N; ++j) {
            const double x = xm[j];
            const double lu = (sol(j, k) - sol(j, k - 1)) / tau -
                              p.epsilon * second_difference(sol(j - 1, k), sol(j, k), sol(j + 1, k),
                                                            xm.width(j), xm.width(j + 1)) +
                              evaluate_field(p.a, "a", x, t) * sol(j, k);
            r.interior_max = std::fmax(r.interior_max, std::fabs(lu - evaluate_field(p.f, "f", x, t)));
        }
    }
    return r;
}

Grid2 discrete_x_derivative(const GridSolution& sol) {
    const auto& xm = sol.space_mesh();
    const int N = xm.intervals();
    const int M = sol.time_mesh().intervals();
    Grid2 d(N, M);
    for (int k = 0; k <= M; ++k) {
        d.at(0, k) = (sol(1, k) - sol(0, k)) / xm.width(1);
        for (int j = 1; j < N; ++j) {
            d.at(j, k) = (sol(j + 1, k) - sol(j - 1, k)) / (xm.width(j) + xm.width(j + 1));
        }
        d.at(N, k) = (sol(N, k) - sol(N - 1, k)) / xm.width(N);
    }
    return d;
}

void write_grid_csv(std::ostream& os, const SpaceMesh& space, const TimeMesh& time, const Grid2& grid,
                    const char* value_column) {
    const auto old = os.precision(17);
    os << "x,t," << value_column << '\n';
    for (int k = 0; k <= time.intervals(); ++k) {
        for (int j = 0; j <= space.intervals(); ++j) {
            os << space[j] << ',' << time[k] << ',' << grid.at(j, k) << '\n';
        }
    }
    os.precision(old);
}

}  // namespace sprd
