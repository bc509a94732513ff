#include "sprd/problem.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sprd/errors.hpp"

namespace sprd {

namespace {

[[noreturn]] void data_error(const char* name, const std::string& where, const std::string& why) {
    std::ostringstream os;
    os.precision(17);
    os << "field " << name << " at " << where << ": " << why;
    throw DataEvaluationError(os.str());
}

std::string point(double x, double t) {
    std::ostringstream os;
    os.precision(17);
    os << "(x=" << x << ", t=" << t << ")";
    return os.str();
}

std::string point(double s) {
    std::ostringstream os;
    os.precision(17);
    os << "(s=" << s << ")";
    return os.str();
}

}  // namespace

void check_parameters(const Problem& p) {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(p.epsilon)) throw ArgumentError("epsilon must be positive and finite");
    if (!positive(p.alpha)) throw ArgumentError("alpha must be positive and finite");
    if (!positive(p.T)) throw ArgumentError("T must be positive and finite");
    if (!p.a || !p.f || !p.phi_L || !p.phi_R || !p.phi_B) {
        throw ArgumentError("problem has an unset field");
    }
}

double evaluate_field(const ScalarField2& field, const char* name, double x, double t) {
    double v = 0.0;
    try {
        v = field(x, t);
    } catch (const DataEvaluationError&) {
        throw;
    } catch (const std::exception& e) {
        data_error(name, point(x, t), e.what());
    }
    if (!std::isfinite(v)) data_error(name, point(x, t), "non-finite value");
    return v;
}

double evaluate_field(const ScalarField1& field, const char* name, double s) {
    double v = 0.0;
    try {
        v = field(s);
    } catch (const DataEvaluationError&) {
        throw;
    } catch (const std::exception& e) {
        data_error(name, point(s), e.what());
    }
    if (!std::isfinite(v)) data_error(name, point(s), "non-finite value");
    return v;
}

CornerResiduals check_corner_compatibility(const Problem& p, double h_fd) {
    if (!(h_fd > 0.0 && h_fd < 0.5)) throw ArgumentError("h_fd must lie in (0, 1/2)");
    auto B = [&](double x) { return evaluate_field(p.phi_B, "phi_B", x); };
    const double b0 = B(0.0);
    const double b1 = B(1.0);
    const double d0 = (-3.0 * b0 + 4.0 * B(h_fd) - B(2.0 * h_fd)) / (2.0 * h_fd);
    const double d1 = (3.0 * b1 - 4.0 * B(1.0 - h_fd) + B(1.0 - 2.0 * h_fd)) / (2.0 * h_fd);
    CornerResiduals r;
    r.left = b0 - evaluate_field(p.phi_L, "phi_L", 0.0) - d0;
    r.right = b1 - evaluate_field(p.phi_R, "phi_R", 0.0) + d1;
    return r;
}

ValidationReport validate_problem(const Problem& p, int grid_density) {
    if (grid_density < 2) throw ArgumentError("grid_density must be at least 2");
    check_parameters(p);

    ValidationReport report;
    report.min_sampled_a = std::numeric_limits<double>::infinity();
    const double n = grid_density;
    for (int k = 0; k <= grid_density; ++k) {
        const double t = p.T * k / n;
        evaluate_field(p.phi_L, "phi_L", t);
        evaluate_field(p.phi_R, "phi_R", t);
        for (int j = 0; j <= grid_density; ++j) {
            const double x = j / n;
            if (k == 0) evaluate_field(p.phi_B, "phi_B", x);
            evaluate_field(p.f, "f", x, t);
            const double a = evaluate_field(p.a, "a", x, t);
            if (a < report.min_sampled_a) {
                report.min_sampled_a = a;
                report.min_location = {x, t};
            }
        }
    }
    report.positivity_ok = report.min_sampled_a > p.alpha;
    report.compatibility_residuals = check_corner_compatibility(p);
    return report;
}

Problem example_problem(double epsilon) {
    Problem p;
    p.a = [](double, double t) { return 1.0 + 3.0 * t; };
    p.f = [](double, double t) { return std::exp(3.0 * t); };
    p.phi_L = [](double t) { return 1.0 + std::pow(t, 5); };
    p.phi_R = [](double t) { return 1.0 + std::pow(t, 5); };
    p.phi_B = [](double) { return 1.0; };
    p.epsilon = epsilon;
    p.alpha = 0.9;
    p.T = 1.0;
    return p;
}

Problem constant_problem(double epsilon) {
    Problem p;
    p.a = [](double, double) { return 1.0; };
    p.f = [](double, double) { return 1.0; };
    p.phi_L = [](double) { return 1.0; };
    p.phi_R = [](double) { return 1.0; };
    p.phi_B = [](double) { return 1.0; };
    p.epsilon = epsilon;
    p.alpha = 0.5;
    p.T = 1.0;
    return p;
}

}  // namespace sprd
