#include "sprd/tridiagonal.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sprd/errors.hpp"

namespace sprd {

double row_dominance_margin(const TridiagonalSystem& sys, std::size_t i) {
    double off = 0.0;
    if (i > 0) off += std::fabs(sys.lower[i - 1]);
    if (i + 1 < sys.size()) off += std::fabs(sys.upper[i]);
    return std::fabs(sys.diag[i]) - off;
}

double dominance_margin(const TridiagonalSystem& sys) {
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sys.size(); ++i) margin = std::fmin(margin, row_dominance_margin(sys, i));
    return margin;
}

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    const std::size_t n = sys.size();
    if (n == 0) return {};
    if (sys.rhs.size() != n || sys.lower.size() != n - 1 || sys.upper.size() != n - 1) {
        throw ArgumentError("thomas_solve: inconsistent band sizes");
    }

    std::vector<double> c(n);  // modified upper diagonal
    std::vector<double> u(n);

    auto pivot_check = [](double pivot, std::size_t row) {
        if (pivot == 0.0 || !std::isfinite(pivot)) {
            throw NumericError("thomas_solve: zero or non-finite pivot at row " + std::to_string(row));
        }
    };

    double pivot = sys.diag[0];
    pivot_check(pivot, 0);
    c[0] = n > 1 ? sys.upper[0] / pivot : 0.0;
    u[0] = sys.rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = sys.diag[i] - sys.lower[i - 1] * c[i - 1];
        pivot_check(pivot, i);
        c[i] = i + 1 < n ? sys.upper[i] / pivot : 0.0;
        u[i] = (sys.rhs[i] - sys.lower[i - 1] * u[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) u[i] -= c[i] * u[i + 1];

    for (double v : u) {
        if (!std::isfinite(v)) throw NumericError("thomas_solve: non-finite solution");
    }
    return u;
}

}  // namespace sprd
