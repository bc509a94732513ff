#include "sprd/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "sprd/analysis.hpp"
#include "sprd/errors.hpp"
#include "sprd/solver.hpp"

namespace sprd::cli {

namespace {

// Sends the rendered output to the configured path, or to `out` if none.
void emit(const OutputSpec& o, std::ostream& out, const std::function<void(std::ostream&)>& render) {
    if (o.path.empty()) {
        render(out);
        return;
    }
    std::ofstream file(o.path);
    if (!file) throw ConfigError("cannot open output file " + o.path);
    render(file);
    if (!file) throw ConfigError("failed writing output file " + o.path);
}

// Runs `body`, mapping library errors onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const ArgumentError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const DataEvaluationError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    }
}

void write_space_separated(std::ostream& os, const SpaceMesh& xs, const TimeMesh& ts, const Grid2& g,
                           const char* column) {
    const auto old = os.precision(17);
    os << std::setw(26) << "x" << std::setw(26) << "t" << std::setw(26) << column << '\n';
    for (int k = 0; k <= ts.intervals(); ++k) {
        for (int j = 0; j <= xs.intervals(); ++j) {
            os << std::setw(26) << xs[j] << std::setw(26) << ts[k] << std::setw(26) << g.at(j, k) << '\n';
        }
    }
    os.precision(old);
}

// Returns false if the problem must not be solved.
bool report_validation(const ValidationReport& v, double alpha, bool strict, std::ostream& err) {
    bool ok = true;
    if (!v.positivity_ok) {
        err << "error: a(x,t) must exceed alpha=" << alpha << "; sampled minimum " << v.min_sampled_a
            << " at (x=" << v.min_location.first << ", t=" << v.min_location.second << ")\n";
        ok = false;
    }
    const auto& r = v.compatibility_residuals;
    if (std::fabs(r.left) > kCompatibilityTolerance || std::fabs(r.right) > kCompatibilityTolerance) {
        err << (strict ? "error" : "warning") << ": corner compatibility violated (left residual " << r.left
            << ", right residual " << r.right << ")\n";
        if (strict) ok = false;
    }
    return ok;
}

}  // namespace

RunConfig resolve_config(const Options& opts) {
    if (opts.config_path && opts.builtin_example) {
        throw ConfigError("--config and --builtin-example are mutually exclusive");
    }
    if (!opts.config_path && !opts.builtin_example) {
        throw ConfigError("either --config PATH or --builtin-example is required");
    }

    RunConfig cfg;
    if (opts.config_path) {
        cfg = load_config(*opts.config_path);
    } else {
        cfg.problem = example_problem_spec();
        cfg.mesh = MeshSpec{64, 256};
        cfg.sweep = SweepSpec{Axis::Time, 64, {32, 64, 128, 256}, default_epsilons()};
    }

    if (opts.epsilon) cfg.problem.epsilon = *opts.epsilon;
    if (opts.N || opts.M) {
        MeshSpec m = cfg.mesh.value_or(MeshSpec{});
        if (opts.N) m.N = *opts.N;
        if (opts.M) m.M = *opts.M;
        cfg.mesh = m;
    }

    const bool sweep_flags = opts.axis || opts.fixed_N || opts.fixed_M || !opts.refine.empty() ||
                             !opts.epsilons.empty();
    if (sweep_flags) {
        SweepSpec s = cfg.sweep.value_or(SweepSpec{Axis::Time, 64, {32, 64, 128, 256}, default_epsilons()});
        if (opts.axis) {
            try {
                const Axis axis = parse_axis(*opts.axis);
                if (axis != s.axis) s.fixed = axis == Axis::Space ? 256 : 64;
                s.axis = axis;
            } catch (const ArgumentError& e) {
                throw ConfigError(std::string("--axis: ") + e.what());
            }
        }
        if (s.axis == Axis::Time) {
            if (opts.N) s.fixed = *opts.N;
            if (opts.fixed_N) s.fixed = *opts.fixed_N;
        } else if (s.axis == Axis::Space) {
            if (opts.M) s.fixed = *opts.M;
            if (opts.fixed_M) s.fixed = *opts.fixed_M;
        }
        if (!opts.refine.empty()) s.refine_values = opts.refine;
        if (!opts.epsilons.empty()) s.epsilons = opts.epsilons;
        cfg.sweep = s;
    }

    if (opts.what) cfg.output.what = *opts.what;
    if (opts.format) cfg.output.format = *opts.format;
    if (opts.out) cfg.output.path = *opts.out;
    check_config(cfg);
    return cfg;
}

int cmd_solve(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        RunConfig cfg = resolve_config(opts);
        if (!cfg.mesh) throw ConfigError("mesh block (N, M) is required for solve");
        if (cfg.output.what == "table") throw ConfigError("output.what=table is produced by the table command");

        const Problem p = build_problem(cfg.problem);
        if (!report_validation(validate_problem(p, kValidationDensity), p.alpha, opts.strict_compat, err)) {
            return static_cast<int>(kConfigError);
        }
        const auto space = build_space_mesh(p.epsilon, p.alpha, cfg.mesh->N);
        const auto time = build_time_mesh(p.T, cfg.mesh->M);
        const auto sol = march(p, space, time);

        const bool derivative = cfg.output.what == "derivative";
        const Grid2 grid = derivative ? discrete_x_derivative(sol) : sol.values();
        const char* column = derivative ? "DxU" : "U";
        emit(cfg.output, out, [&](std::ostream& os) {
            if (cfg.output.format == "csv") {
                write_grid_csv(os, space, time, grid, column);
            } else {
                write_space_separated(os, space, time, grid, column);
            }
        });
        return static_cast<int>(kOk);
    });
}

int cmd_table(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        RunConfig cfg = resolve_config(opts);
        if (!cfg.sweep) throw ConfigError("sweep block is required for table");

        const Problem p = build_problem(cfg.problem);
        if (!report_validation(validate_problem(p, kValidationDensity), p.alpha, opts.strict_compat, err)) {
            return static_cast<int>(kConfigError);
        }
        SweepConfig sc;
        sc.axis = cfg.sweep->axis;
        sc.fixed = cfg.sweep->fixed;
        sc.refine_values = cfg.sweep->refine_values;
        sc.epsilons = cfg.sweep->epsilons;
        sc.problem = p;
        const TwoMeshReport report = run_sweep(sc, opts.jobs);

        // Table output defaults to the aligned layout unless csv was asked for explicitly.
        const bool csv = opts.format ? *opts.format == "csv" : (opts.config_path && cfg.output.format == "csv");
        emit(cfg.output, out, [&](std::ostream& os) {
            if (csv) {
                write_report_csv(os, report);
            } else {
                write_report_text(os, report);
            }
        });
        return static_cast<int>(kOk);
    });
}

int cmd_validate(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        RunConfig cfg = resolve_config(opts);
        const Problem p = build_problem(cfg.problem);
        const ValidationReport v = validate_problem(p, kValidationDensity);
        const auto old = out.precision(17);
        out << "positivity_ok: " << (v.positivity_ok ? "true" : "false") << '\n'
            << "min_sampled_a: " << v.min_sampled_a << " at (x=" << v.min_location.first
            << ", t=" << v.min_location.second << ")\n"
            << "alpha: " << p.alpha << '\n'
            << "compatibility_residual_left: " << v.compatibility_residuals.left << '\n'
            << "compatibility_residual_right: " << v.compatibility_residuals.right << '\n';
        out.precision(old);
        return report_validation(v, p.alpha, opts.strict_compat, err) ? static_cast<int>(kOk)
                                                                       : static_cast<int>(kConfigError);
    });
}

}  // namespace sprd::cli
