#pragma once

#include <functional>
#include <string>
#include <utility>

namespace sprd {

/// Pure field over (x, t) in [0,1] x [0,T]. Must be safe to call concurrently.
using ScalarField2 = std::function<double(double x, double t)>;
/// Pure field of one variable (time for boundary data, space for initial data).
using ScalarField1 = std::function<double(double s)>;

/// Initial-boundary value problem
///
///   u_t - epsilon u_xx + a(x,t) u = f(x,t)   on (0,1) x (0,T]
///   u(0,t) - u_x(0,t) = phi_L(t),  u(1,t) + u_x(1,t) = phi_R(t)
///   u(x,0) = phi_B(x)
///
/// with 0 < alpha < a(x,t). Values are immutable once built and may be shared
/// across threads.
struct Problem {
    ScalarField2 a;
    ScalarField2 f;
    ScalarField1 phi_L;
    ScalarField1 phi_R;
    ScalarField1 phi_B;
    double epsilon = 1.0;
    double alpha = 1.0;
    double T = 1.0;

    Problem with_epsilon(double eps) const {
        Problem p = *this;
        p.epsilon = eps;
        return p;
    }
};

/// Throws ArgumentError unless epsilon, alpha and T are positive and finite
/// and every field is set.
void check_parameters(const Problem& p);

/// Evaluates a field and rejects non-finite values with a DataEvaluationError
/// that names the field and the point. Exceptions thrown by the field itself
/// are rewrapped the same way.
double evaluate_field(const ScalarField2& field, const char* name, double x, double t);
double evaluate_field(const ScalarField1& field, const char* name, double s);

struct CornerResiduals {
    double left = 0.0;   ///< phi_B(0) - phi_L(0) - phi_B'(0)
    double right = 0.0;  ///< phi_B(1) - phi_R(0) + phi_B'(1)
};

struct ValidationReport {
    bool positivity_ok = false;
    double min_sampled_a = 0.0;
    std::pair<double, double> min_location{0.0, 0.0};  ///< (x, t)
    CornerResiduals compatibility_residuals;
};

/// Level-0 corner compatibility residuals. phi_B' uses the 3-point one-sided
/// stencil with step h_fd (forward at x=0, backward at x=1). Requires
/// 0 < h_fd < 1/2.
CornerResiduals check_corner_compatibility(const Problem& p, double h_fd = 1e-4);

/// Samples a on the uniform (grid_density+1)^2 lattice over [0,1] x [0,T],
/// checks every other field for finiteness on the same lattice, and fills the
/// corner residuals. grid_density >= 2.
ValidationReport validate_problem(const Problem& p, int grid_density);

/// a = 1+3t, f = e^{3t}, phi_L = phi_R = 1+t^5, phi_B = 1, alpha = 0.9, T = 1.
Problem example_problem(double epsilon = 0x1p-14);

/// a = f = phi_L = phi_R = phi_B = 1 with alpha = 0.5; its exact discrete
/// solution is U = 1.
Problem constant_problem(double epsilon = 0x1p-6);

}  // namespace sprd
