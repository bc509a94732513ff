// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed here and are not tuned to results.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sprd/analysis.hpp"
#include "sprd/errors.hpp"
#include "sprd/expr.hpp"
#include "sprd/mesh.hpp"
#include "sprd/solver.hpp"
#include "sprd/tridiagonal.hpp"

using namespace sprd;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "\n      failed: " << what;
        }
    }
};

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

std::string fmt(double v, int prec = 6) {
    std::ostringstream os;
    os.precision(prec);
    os << v;
    return os.str();
}

// Shared by criteria 1 and 2.
void check_table(Outcome& o, Axis axis, int fixed, const std::vector<double>& want_D, double D_tol,
                 double want_p, double p_tol, double want_C, double C_tol, double budget_seconds) {
    SweepConfig cfg;
    cfg.axis = axis;
    cfg.fixed = fixed;
    cfg.refine_values = {32, 64, 128, 256};
    cfg.epsilons = default_epsilons();
    cfg.problem = example_problem();

    const auto start = std::chrono::steady_clock::now();
    const auto r = run_sweep(cfg, 1);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    o.detail << "\n      D^N =";
    for (std::size_t i = 0; i < want_D.size(); ++i) {
        o.detail << ' ' << format_mantissa_sci(r.D_uniform[i]);
        o.require(rel_err(r.D_uniform[i], want_D[i]) <= D_tol,
                  "D^N[" + std::to_string(cfg.refine_values[i]) + "] = " + fmt(r.D_uniform[i]) + " vs " +
                      fmt(want_D[i]) + " (rel err " + fmt(rel_err(r.D_uniform[i], want_D[i]), 3) + " > " +
                      fmt(D_tol) + ")");
    }
    o.require(r.p_star.has_value(), "p* undefined");
    o.require(r.C_star.has_value(), "C* undefined");
    if (r.p_star && r.C_star) {
        o.detail << "\n      p* = " << fmt(*r.p_star, 7) << " (want " << fmt(want_p, 7) << " +- " << p_tol
                 << "), C* = " << fmt(*r.C_star, 7) << " (want " << fmt(want_C, 7) << " +- " << C_tol * 100
                 << "%)";
        o.require(std::fabs(*r.p_star - want_p) <= p_tol, "p* outside tolerance");
        o.require(rel_err(*r.C_star, want_C) <= C_tol, "C* outside tolerance");
    }
    o.detail << "\n      runtime " << fmt(seconds, 3) << " s single-threaded (budget " << budget_seconds << " s)";
    o.require(seconds < budget_seconds, "runtime over budget");
}

Outcome table1() {
    Outcome o;
    check_table(o, Axis::Time, 64, {0.266e-01, 0.134e-01, 0.676e-02, 0.339e-02}, 0.05, 0.9827155, 0.05, 1.620163,
                0.10, 30.0);
    return o;
}

Outcome table2() {
    Outcome o;
    check_table(o, Axis::Space, 256, {0.119e-01, 0.617e-02, 0.258e-02, 0.843e-03}, 0.10, 0.9456793, 0.1,
                0.6552203, 0.25, 120.0);
    return o;
}

struct Corpus {
    std::vector<oracle::RandomProblem> problems;
    std::vector<GridSolution> solutions;
};

const Corpus& random_corpus() {
    static const Corpus corpus = [] {
        Corpus c;
        std::mt19937_64 rng(20260101);
        for (int i = 0; i < 100; ++i) {
            auto rp = oracle::random_nonnegative_problem(rng);
            const auto& p = rp.problem;
            c.solutions.push_back(march(p, build_space_mesh(p.epsilon, p.alpha, rp.N), build_time_mesh(p.T, rp.M)));
            c.problems.push_back(std::move(rp));
        }
        return c;
    }();
    return corpus;
}

Outcome maximum_principle() {
    Outcome o;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < random_corpus().solutions.size(); ++i) {
        const auto& sol = random_corpus().solutions[i];
        const double lo = *std::min_element(sol.values().values().begin(), sol.values().values().end());
        worst = std::min(worst, lo);
        o.require(lo >= -1e-12, "problem " + std::to_string(i) + " has min U = " + fmt(lo));
    }
    o.detail << "\n      100 problems, smallest U = " << fmt(worst);
    return o;
}

Outcome stability() {
    Outcome o;
    double worst_slack = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < random_corpus().solutions.size(); ++i) {
        const auto& sol = random_corpus().solutions[i];
        const auto& p = sol.problem();
        const auto& xm = sol.space_mesh();
        const auto& tm = sol.time_mesh();
        double nL = 0, nR = 0, nB = 0, nf = 0;
        for (int j = 0; j <= xm.intervals(); ++j) nB = std::max(nB, std::fabs(p.phi_B(xm[j])));
        for (int k = 1; k <= tm.intervals(); ++k) {
            nL = std::max(nL, std::fabs(p.phi_L(tm[k])));
            nR = std::max(nR, std::fabs(p.phi_R(tm[k])));
            for (int j = 1; j < xm.intervals(); ++j) nf = std::max(nf, std::fabs(p.f(xm[j], tm[k])));
        }
        const double bound = std::max({nL, nR, nB, nf / p.alpha});
        double umax = 0.0;
        for (double v : sol.values().values()) umax = std::max(umax, std::fabs(v));
        worst_slack = std::min(worst_slack, bound - umax);
        o.require(umax <= bound + 1e-10, "problem " + std::to_string(i) + ": max|U| = " + fmt(umax) +
                                             " > bound " + fmt(bound));
    }
    o.detail << "\n      100 problems, smallest (bound - max|U|) = " << fmt(worst_slack);
    return o;
}

Outcome constants_exact() {
    Outcome o;
    double worst = 0.0;
    int runs = 0;
    for (double eps : {0x1p-2, 0x1p-8, 0x1p-14, 0x1p-20}) {
        for (int N : {8, 16, 64, 256}) {
            for (int M : {1, 8, 64}) {
                const Problem p = constant_problem(eps);
                const auto sol = march(p, build_space_mesh(eps, p.alpha, N), build_time_mesh(p.T, M));
                for (double v : sol.values().values()) worst = std::max(worst, std::fabs(v - 1.0));
                ++runs;
            }
        }
    }
    o.require(worst <= 1e-12, "max |U - 1| = " + fmt(worst));
    o.detail << "\n      " << runs << " (eps, N, M) combinations, max |U - 1| = " << fmt(worst);
    return o;
}

Outcome thomas_vs_dense() {
    Outcome o;
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> size(1, 64);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto sys = oracle::random_dominant_system(rng, size(rng));
        const auto u = thomas_solve(sys);
        const auto v = oracle::dense_solve(sys);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            num = std::max(num, std::fabs(u[i] - v[i]));
            den = std::max(den, std::fabs(v[i]));
        }
        const double rel = den > 0.0 ? num / den : num;
        worst = std::max(worst, rel);
    }
    o.require(worst <= 1e-12, "worst relative discrepancy " + fmt(worst));
    o.detail << "\n      1000 systems, worst relative discrepancy " << fmt(worst);
    return o;
}

Outcome mesh_invariants() {
    Outcome o;
    const double ulp1 = std::numeric_limits<double>::epsilon();
    int meshes = 0;
    for (int e = 2; e <= 20; ++e) {
        const double eps = std::ldexp(1.0, -e);
        for (int N = 8; N <= 256; N *= 2) {
            const double alpha = 0.9;
            const auto m = build_space_mesh(eps, alpha, N);
            const std::string tag = "eps=2^-" + std::to_string(e) + " N=" + std::to_string(N);
            ++meshes;
            o.require(m[0] == 0.0 && m[N] == 1.0, tag + ": endpoints");
            bool increasing = true;
            for (int j = 1; j <= N; ++j) increasing = increasing && m[j] > m[j - 1];
            o.require(increasing, tag + ": not strictly increasing");
            o.require(m[N / 4] == m.sigma() && m[3 * N / 4] == 1.0 - m.sigma(), tag + ": transition points");

            std::vector<double> classes;
            double sum = 0.0;
            for (int j = 1; j <= N; ++j) {
                const double h = m.width(j);
                sum += h;
                const bool seen = std::any_of(classes.begin(), classes.end(),
                                              [&](double c) { return std::fabs(c - h) <= 1e-14; });
                if (!seen) classes.push_back(h);
                const double expected = (j <= N / 4 || j > 3 * N / 4) ? m.h_layer() : m.H_interior();
                o.require(std::fabs(h - expected) <= 1e-14, tag + ": width " + std::to_string(j));
            }
            o.require(std::fabs(sum - 1.0) <= 4 * ulp1, tag + ": widths sum to " + fmt(sum, 17));
            const bool clamped = m.sigma() == 0.25;
            o.require(classes.size() == (clamped ? 1u : 2u),
                      tag + ": " + std::to_string(classes.size()) + " distinct widths");
            if (!clamped) {
                const double bl = layer_functions(m.sigma(), eps, alpha).BL;
                o.require(std::fabs(bl - 1.0 / (double(N) * N)) <= 1e-12, tag + ": B^L(sigma) = " + fmt(bl));
            }
        }
    }
    o.detail << "\n      " << meshes << " meshes checked";
    return o;
}

Outcome layer_localization() {
    Outcome o;
    const Problem p = example_problem(0x1p-14);
    const auto xm = build_space_mesh(p.epsilon, p.alpha, 64);
    const auto sol = march(p, xm, build_time_mesh(p.T, 256));
    const auto d = discrete_x_derivative(sol);
    int arg = 0;
    for (int j = 0; j <= 64; ++j) {
        if (std::fabs(d.at(j, 256)) > std::fabs(d.at(arg, 256))) arg = j;
    }
    o.detail << "\n      max |DxU(., T)| = " << fmt(std::fabs(d.at(arg, 256))) << " at x = " << fmt(xm[arg])
             << ", sigma = " << fmt(xm.sigma());
    o.require(xm[arg] <= xm.sigma() || xm[arg] >= 1.0 - xm.sigma(), "maximum outside the layer regions");
    return o;
}

Outcome expression_corpus() {
    Outcome o;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int round_trip_failures = 0, eval_mismatches = 0, compared = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto any_tree = oracle::random_expr(rng, 6, false);
        if (!(expr::parse(expr::unparse(any_tree)) == any_tree)) ++round_trip_failures;

        const auto ops_tree = oracle::random_expr(rng, 6, true);
        if (!(expr::parse(expr::unparse(ops_tree)) == ops_tree)) ++round_trip_failures;
        const double x = u(rng), t = u(rng);
        const double ref = oracle::reference_eval(ops_tree, x, t);
        try {
            const double got = expr::eval(ops_tree, x, t);
            ++compared;
            if (std::memcmp(&got, &ref, sizeof got) != 0) ++eval_mismatches;
        } catch (const EvalError&) {
            if (std::isfinite(ref)) ++eval_mismatches;
        }
    }
    o.require(round_trip_failures == 0, std::to_string(round_trip_failures) + " round-trip failures");
    o.require(eval_mismatches == 0, std::to_string(eval_mismatches) + " evaluator mismatches");
    o.detail << "\n      2000 round trips, " << compared << " finite evaluations compared bitwise";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"1. Table 1 reproduction (time axis, N=64)", table1},
        {"2. Table 2 reproduction (space axis, M=256)", table2},
        {"3. Discrete maximum principle, 100 random problems", maximum_principle},
        {"4. Discrete stability bound, 100 random problems", stability},
        {"5. Exactness on constants", constants_exact},
        {"6. Thomas vs dense elimination, 1000 systems", thomas_vs_dense},
        {"7. Shishkin mesh invariants", mesh_invariants},
        {"8. Layer localization of DxU at t=T", layer_localization},
        {"9. Expression round-trip and reference evaluator", expression_corpus},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        failures += !o.pass;
        std::printf("[%s] %s%s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.str().c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
