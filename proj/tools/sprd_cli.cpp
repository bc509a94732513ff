// Command-line driver: solve, table, validate.

#include <iostream>

#include "CLI11.hpp"
#include "sprd/commands.hpp"

namespace {

void add_common(CLI::App* cmd, sprd::cli::Options& o) {
    cmd->add_option("--config", o.config_path, "JSON run configuration");
    cmd->add_flag("--builtin-example", o.builtin_example, "use the built-in example problem");
    cmd->add_option("--epsilon", o.epsilon, "perturbation parameter");
    cmd->add_flag("--strict-compat", o.strict_compat, "abort on corner compatibility violation");
    cmd->add_option("--out", o.out, "output path (default: standard output)");
    cmd->add_option("--format", o.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fitted-mesh solver for singularly perturbed parabolic problems with Robin conditions"};
    app.require_subcommand(1);
    sprd::cli::Options o;

    auto* solve = app.add_subcommand("solve", "march one problem and write U or its x-derivative");
    add_common(solve, o);
    solve->add_option("--N", o.N, "space mesh intervals (multiple of 4, >= 8)");
    solve->add_option("--M", o.M, "time mesh intervals");
    solve->add_option("--what", o.what, "solution or derivative")
        ->check(CLI::IsMember({"solution", "derivative"}));

    auto* table = app.add_subcommand("table", "two-mesh convergence table");
    add_common(table, o);
    table->add_option("--axis", o.axis, "time, space or both")->check(CLI::IsMember({"time", "space", "both"}));
    table->add_option("--N,--fixed-N", o.fixed_N, "fixed space intervals for the time axis");
    table->add_option("--M,--fixed-M", o.fixed_M, "fixed time intervals for the space axis");
    table->add_option("--refine", o.refine, "doubling list of mesh counts")->delimiter(',');
    table->add_option("--epsilons", o.epsilons, "epsilon values")->delimiter(',');
    table->add_option("--jobs", o.jobs, "worker threads (0: all available)")->check(CLI::NonNegativeNumber);

    auto* validate = app.add_subcommand("validate", "check positivity of a and corner compatibility");
    add_common(validate, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sprd::cli::kConfigError;
    }

    if (*solve) return sprd::cli::cmd_solve(o, std::cout, std::cerr);
    if (*table) return sprd::cli::cmd_table(o, std::cout, std::cerr);
    return sprd::cli::cmd_validate(o, std::cout, std::cerr);
}
