#include "sprd/analysis.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "sprd/errors.hpp"

namespace sprd {

namespace {

constexpr const char* kComparison =
    "coarse-grid max norm; fine solution bilinearly interpolated to coarse nodes";

// Differences at or below this multiple of max|U| are rounding noise.
constexpr double kRoundoffFloor = 1e3 * std::numeric_limits<double>::epsilon();

struct Bracket {
    int lo;
    double w;  // weight of the upper node
};

Bracket locate(std::span<const double> pts, double q) {
    const int n = static_cast<int>(pts.size()) - 1;
    auto it = std::upper_bound(pts.begin(), pts.end(), q);
    int lo = static_cast<int>(it - pts.begin()) - 1;
    lo = std::clamp(lo, 0, n - 1);
    const double w = (q - pts[lo]) / (pts[lo + 1] - pts[lo]);
    return {lo, w};
}

double blend(const Grid2& g, const Bracket& bx, const Bracket& bt) {
    const double v00 = g.at(bx.lo, bt.lo);
    const double v10 = g.at(bx.lo + 1, bt.lo);
    const double v01 = g.at(bx.lo, bt.lo + 1);
    const double v11 = g.at(bx.lo + 1, bt.lo + 1);
    return (1.0 - bt.w) * ((1.0 - bx.w) * v00 + bx.w * v10) + bt.w * ((1.0 - bx.w) * v01 + bx.w * v11);
}

struct Resampling {
    std::vector<Bracket> xs;
    std::vector<Bracket> ts;
};

Resampling resampling(const GridSolution& coarse, const GridSolution& fine) {
    if (coarse.time_mesh().final_time() != fine.time_mesh().final_time()) {
        throw ArgumentError("two-mesh comparison: final times differ");
    }
    Resampling r;
    for (double x : coarse.space_mesh().points()) r.xs.push_back(locate(fine.space_mesh().points(), x));
    for (double t : coarse.time_mesh().levels()) r.ts.push_back(locate(fine.time_mesh().levels(), t));
    return r;
}

std::string epsilon_label(double eps) {
    int e = 0;
    const double m = std::frexp(eps, &e);
    if (m == 0.5) return "2^" + std::to_string(e - 1);
    std::ostringstream os;
    os << std::setprecision(6) << eps;
    return os.str();
}

std::string fixed_label(const TwoMeshReport& r) {
    switch (r.axis) {
        case Axis::Time: return "fixed N=" + std::to_string(r.fixed);
        case Axis::Space: return "fixed M=" + std::to_string(r.fixed);
        case Axis::Both: return "N=M refined together";
    }
    return {};
}

std::string csv_number(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string significant(double v, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

}  // namespace

const char* axis_name(Axis axis) {
    switch (axis) {
        case Axis::Time: return "time";
        case Axis::Space: return "space";
        case Axis::Both: return "both";
    }
    return "?";
}

Axis parse_axis(const std::string& name) {
    if (name == "time") return Axis::Time;
    if (name == "space") return Axis::Space;
    if (name == "both") return Axis::Both;
    throw ArgumentError("unknown axis '" + name + "' (expected time, space or both)");
}

double interpolate(const GridSolution& sol, double x, double t) {
    const double T = sol.time_mesh().final_time();
    if (!(x >= 0.0 && x <= 1.0) || !(t >= 0.0 && t <= T)) {
        throw ArgumentError("interpolate: point outside [0,1] x [0,T]");
    }
    return blend(sol.values(), locate(sol.space_mesh().points(), x), locate(sol.time_mesh().levels(), t));
}

double max_coarse_difference(const GridSolution& coarse, const GridSolution& fine) {
    const Resampling r = resampling(coarse, fine);
    const int N = coarse.space_mesh().intervals();
    const int M = coarse.time_mesh().intervals();
    const Grid2& U = coarse.values();
    const Grid2& V = fine.values();
    double d = 0.0;
#pragma omp parallel for reduction(max : d) schedule(static)
    for (int k = 0; k <= M; ++k) {
        for (int j = 0; j <= N; ++j) d = std::max(d, std::fabs(U.at(j, k) - blend(V, r.xs[j], r.ts[k])));
    }
    return d;
}

double max_coarse_difference_serial(const GridSolution& coarse, const GridSolution& fine) {
    const Resampling r = resampling(coarse, fine);
    const int N = coarse.space_mesh().intervals();
    const int M = coarse.time_mesh().intervals();
    double d = 0.0;
    for (int k = 0; k <= M; ++k) {
        for (int j = 0; j <= N; ++j) {
            d = std::max(d, std::fabs(coarse(j, k) - blend(fine.values(), r.xs[j], r.ts[k])));
        }
    }
    return d;
}

double two_mesh_difference(const Problem& p, Axis axis, int N, int M) {
    const int fine_N = axis == Axis::Time ? N : 2 * N;
    const int fine_M = axis == Axis::Space ? M : 2 * M;
    const auto coarse = march(p, build_space_mesh(p.epsilon, p.alpha, N), build_time_mesh(p.T, M));
    const auto fine = march(p, build_space_mesh(p.epsilon, p.alpha, fine_N), build_time_mesh(p.T, fine_M));
    const double d = max_coarse_difference(coarse, fine);
    double scale = 0.0;
    for (double v : coarse.values().values()) scale = std::max(scale, std::fabs(v));
    return d <= kRoundoffFloor * scale ? 0.0 : d;
}

void check_sweep_config(const SweepConfig& cfg) {
    if (cfg.refine_values.size() < 2) throw ArgumentError("sweep: need at least two refinement values");
    for (std::size_t i = 0; i + 1 < cfg.refine_values.size(); ++i) {
        if (cfg.refine_values[i + 1] != 2 * cfg.refine_values[i]) {
            throw ArgumentError("sweep: refinement values must double at each step");
        }
    }
    if (cfg.refine_values.front() < 1) throw ArgumentError("sweep: refinement values must be positive");
    if (cfg.epsilons.empty()) throw ArgumentError("sweep: no epsilon values");
    for (double e : cfg.epsilons) {
        if (!(e > 0.0)) throw ArgumentError("sweep: epsilon values must be positive");
    }
    if (cfg.axis != Axis::Both && cfg.fixed < 1) throw ArgumentError("sweep: fixed mesh count must be positive");
    for (int r : cfg.refine_values) {
        auto [N, M] = sweep_mesh_counts(cfg, r);
        if (N < 8 || N % 4 != 0) {
            throw ArgumentError("sweep: space mesh count " + std::to_string(N) +
                                " must be divisible by 4 and at least 8");
        }
        if (M < 1) throw ArgumentError("sweep: time mesh count must be positive");
    }
}

std::pair<int, int> sweep_mesh_counts(const SweepConfig& cfg, int refine_value) {
    switch (cfg.axis) {
        case Axis::Time: return {cfg.fixed, refine_value};
        case Axis::Space: return {refine_value, cfg.fixed};
        case Axis::Both: return {refine_value, refine_value};
    }
    return {0, 0};
}

std::vector<double> default_epsilons() { return {0x1p-6, 0x1p-8, 0x1p-10, 0x1p-12, 0x1p-14}; }

TwoMeshReport summarize(Axis axis, int fixed, std::vector<int> refine_values, std::vector<double> epsilons,
                        std::vector<std::vector<double>> D_eps) {
    TwoMeshReport r;
    r.axis = axis;
    r.fixed = fixed;
    r.refine_values = std::move(refine_values);
    r.epsilons = std::move(epsilons);
    r.D_eps = std::move(D_eps);
    r.comparison = kComparison;

    const std::size_t R = r.refine_values.size();
    r.D_uniform.assign(R, 0.0);
    for (const auto& row : r.D_eps) {
        for (std::size_t i = 0; i < R; ++i) r.D_uniform[i] = std::max(r.D_uniform[i], row[i]);
    }

    for (std::size_t i = 0; i + 1 < R; ++i) {
        const double a = r.D_uniform[i];
        const double b = r.D_uniform[i + 1];
        if (a > 0.0 && b > 0.0) {
            r.orders.emplace_back(std::log2(a / b));
        } else {
            r.orders.emplace_back(std::nullopt);
        }
    }
    for (const auto& o : r.orders) {
        if (o && (!r.p_star || *o < *r.p_star)) r.p_star = *o;
    }

    r.constants.assign(R, std::nullopt);
    if (r.p_star && *r.p_star > 0.0) {
        const double p = *r.p_star;
        const double denom = 1.0 - std::exp2(-p);
        for (std::size_t i = 0; i < R; ++i) {
            const double c = r.D_uniform[i] * std::pow(static_cast<double>(r.refine_values[i]), p) / denom;
            r.constants[i] = c;
            if (!r.C_star || c > *r.C_star) r.C_star = c;
        }
    }
    return r;
}

TwoMeshReport run_sweep(const SweepConfig& cfg, int jobs) {
    check_sweep_config(cfg);
    const int E = static_cast<int>(cfg.epsilons.size());
    const int R = static_cast<int>(cfg.refine_values.size());
    std::vector<std::vector<double>> D(E, std::vector<double>(R, 0.0));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(E) * R);
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int cell = 0; cell < E * R; ++cell) {
        const int e = cell / R;
        const int i = cell % R;
        try {
            auto [N, M] = sweep_mesh_counts(cfg, cfg.refine_values[i]);
            D[e][i] = two_mesh_difference(cfg.problem.with_epsilon(cfg.epsilons[e]), cfg.axis, N, M);
        } catch (...) {
            errors[cell] = std::current_exception();
        }
    }
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
    return summarize(cfg.axis, cfg.fixed, cfg.refine_values, cfg.epsilons, std::move(D));
}

TwoMeshReport run_sweep_serial(const SweepConfig& cfg) {
    check_sweep_config(cfg);
    std::vector<std::vector<double>> D;
    for (double eps : cfg.epsilons) {
        auto& row = D.emplace_back();
        for (int r : cfg.refine_values) {
            auto [N, M] = sweep_mesh_counts(cfg, r);
            row.push_back(two_mesh_difference(cfg.problem.with_epsilon(eps), cfg.axis, N, M));
        }
    }
    return summarize(cfg.axis, cfg.fixed, cfg.refine_values, cfg.epsilons, std::move(D));
}

std::string format_mantissa_sci(double v) {
    if (v == 0.0) return "0.000E+00";
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    const bool negative = v < 0.0;
    const double a = std::fabs(v);
    int exponent = static_cast<int>(std::floor(std::log10(a))) + 1;
    long digits = std::lround(a / std::pow(10.0, exponent - 3));
    if (digits >= 1000) {
        digits = std::lround(static_cast<double>(digits) / 10.0);
        ++exponent;
    } else if (digits < 100) {
        digits *= 10;
        --exponent;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s0.%03ldE%c%02d", negative ? "-" : "", digits, exponent < 0 ? '-' : '+',
                  std::abs(exponent));
    return buf;
}

void write_report_text(std::ostream& os, const TwoMeshReport& r) {
    const std::size_t R = r.refine_values.size();
    constexpr int label_w = 10;
    constexpr int col_w = 12;
    auto cell = [&](const std::string& s) { os << std::setw(col_w) << s; };

    os << "Two-mesh differences, axis=" << axis_name(r.axis) << " (" << fixed_label(r) << ")\n";
    os << std::left << std::setw(label_w) << "epsilon" << std::right << " |";
    for (int v : r.refine_values) cell(std::to_string(v));
    os << '\n' << std::string(label_w + 2 + col_w * R, '-') << '\n';

    for (std::size_t e = 0; e < r.epsilons.size(); ++e) {
        os << std::left << std::setw(label_w) << epsilon_label(r.epsilons[e]) << std::right << " |";
        for (double d : r.D_eps[e]) cell(format_mantissa_sci(d));
        os << '\n';
    }
    os << std::string(label_w + 2 + col_w * R, '-') << '\n';

    os << std::left << std::setw(label_w) << "D^N" << std::right << " |";
    for (double d : r.D_uniform) cell(format_mantissa_sci(d));
    os << '\n' << std::left << std::setw(label_w) << "p^N" << std::right << " |";
    for (const auto& o : r.orders) cell(o ? format_mantissa_sci(*o) : "undef");
    os << '\n' << std::left << std::setw(label_w) << "C^N_p*" << std::right << " |";
    for (const auto& c : r.constants) cell(c ? format_mantissa_sci(*c) : "undef");
    os << '\n' << std::string(label_w + 2 + col_w * R, '-') << '\n';

    const char* var = r.axis == Axis::Time ? "t" : r.axis == Axis::Space ? "x" : "(x,t)";
    os << "Computed " << var << "-order of eps-uniform convergence, p* = "
       << (r.p_star ? significant(*r.p_star, 7) : std::string("undefined (order undefined)")) << '\n';
    os << "Computed eps-uniform error constant, C*_p* = "
       << (r.C_star ? significant(*r.C_star, 7) : std::string("undefined")) << '\n';
    os << "Comparison: " << r.comparison << '\n';
}

void write_report_csv(std::ostream& os, const TwoMeshReport& r) {
    const std::size_t R = r.refine_values.size();
    os << "epsilon,refinement,D_eps\n";
    for (std::size_t e = 0; e < r.epsilons.size(); ++e) {
        for (std::size_t i = 0; i < R; ++i) {
            os << csv_number(r.epsilons[e]) << ',' << r.refine_values[i] << ',' << csv_number(r.D_eps[e][i]) << '\n';
        }
    }
    for (std::size_t i = 0; i < R; ++i) os << "D," << r.refine_values[i] << ',' << csv_number(r.D_uniform[i]) << '\n';
    for (std::size_t i = 0; i < r.orders.size(); ++i) {
        os << "p," << r.refine_values[i] << ',' << (r.orders[i] ? csv_number(*r.orders[i]) : "undefined") << '\n';
    }
    for (std::size_t i = 0; i < R; ++i) {
        os << "C," << r.refine_values[i] << ','
           << (r.constants[i] ? csv_number(*r.constants[i]) : "undefined") << '\n';
    }
    os << "p_star,," << (r.p_star ? csv_number(*r.p_star) : "undefined") << '\n';
    os << "C_star,," << (r.C_star ? csv_number(*r.C_star) : "undefined") << '\n';
}

}  // namespace sprd
