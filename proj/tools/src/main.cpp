#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "kbp/cli/commands.hpp"
#include "kbp/cli/verify.hpp"

namespace {

using namespace kbp;
using namespace kbp::cli;

void add_solver_flags(CLI::App *cmd, SolverConfig &cfg, std::string &method) {
    cmd->add_option("--method", method, "eig, sdp or both")->check(CLI::IsMember({"eig", "sdp", "both"}));
    cmd->add_option("--trace-target", cfg.trace_target, "trace of the extension (> 0)")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", cfg.certify_tol, "certification tolerance on the clipped value");
    cmd->add_option("--max-iterations", cfg.max_iterations, "SDP iteration cap")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Certify k-block-positivity via the symmetry-reduced extendibility hierarchy"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string method = "eig";

    SolveOptions solve;
    auto *solve_cmd = app.add_subcommand("solve", "Lower bound at level N for one witness");
    solve_cmd->add_option("--k", solve.k, "Schmidt number")->check(CLI::Range(1, 5));
    solve_cmd->add_option("--d", solve.d, "local dimension (isotropic witness)");
    solve_cmd->add_option("--N", solve.N, "extension level")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--isotropic-alpha", solve.isotropic_alpha, "X = I + alpha d |phi_d><phi_d|");
    solve_cmd->add_option("--witness-file", solve.witness_file, "JSON witness {\"d\": n, \"entries\": [[[re, im], ...]]}");
    solve_cmd->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    add_solver_flags(solve_cmd, solve.config, method);

    SweepConfig sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Isotropic-family alpha sweep as CSV");
    sweep_cmd->add_option("--k", sweep.k, "Schmidt number")->check(CLI::Range(1, 5));
    sweep_cmd->add_option("--d", sweep.d, "local dimension");
    sweep_cmd->add_option("--levels", sweep.levels, "extension levels")->delimiter(',');
    sweep_cmd->add_option("--alpha-start", sweep.alpha_start);
    sweep_cmd->add_option("--alpha-end", sweep.alpha_end);
    sweep_cmd->add_option("--alpha-step", sweep.alpha_step);
    sweep_cmd->add_option("--output,-o", sweep.output, "output path (default stdout)");
    std::string sweep_format = "csv";
    sweep_cmd->add_option("--format", sweep_format, "csv, json or text")->check(CLI::IsMember({"text", "json", "csv"}));
    add_solver_flags(sweep_cmd, sweep.config, method);

    int size_k = 2, size_d = 2, size_n = 2;
    auto *sizes_cmd = app.add_subcommand("sizes", "Unreduced size, block sizes and d_lambda");
    sizes_cmd->add_option("--k", size_k)->check(CLI::Range(1, 5));
    sizes_cmd->add_option("--d", size_d)->check(CLI::PositiveNumber);
    sizes_cmd->add_option("--N", size_n)->check(CLI::PositiveNumber);
    sizes_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    RepOptions rep;
    auto *rep_cmd = app.add_subcommand("rep", "Print Delta_lambda of a Coxeter generator");
    rep_cmd->add_option("--shape", rep.shape, "partition, e.g. 3,1")->required();
    rep_cmd->add_option("--k", rep.k)->check(CLI::Range(1, 5));
    rep_cmd->add_option("--d", rep.d)->check(CLI::PositiveNumber);
    rep_cmd->add_option("--N", rep.N)->check(CLI::PositiveNumber);
    rep_cmd->add_option("--generator,-j", rep.generator, "Coxeter label j for (j, j+1); default k");
    rep_cmd->add_flag("--young", rep.young_only, "only the Young orthogonal matrix on classes A and S");
    rep_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    int schur_k = 2, schur_n = 2;
    auto *schur_cmd = app.add_subcommand("schur", "Print the Schur transform on (C^k)^(x)n");
    schur_cmd->add_option("--k", schur_k)->check(CLI::PositiveNumber);
    schur_cmd->add_option("--n", schur_n)->check(CLI::PositiveNumber);
    schur_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::string suite = "all";
    auto *verify_cmd = app.add_subcommand("verify", "Run invariant batteries");
    verify_cmd->add_option("suite", suite, "appendix, twirl, ratio, equality or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        SolveMethod m = parse_method(method);
        solve.config.method = m;
        sweep.config.method = m;
        if (*solve_cmd) {
            solve.format = parse_format(format);
            return cmd_solve(solve, std::cout, std::cerr);
        }
        if (*sweep_cmd) {
            sweep.format = parse_format(sweep_format);
            return cmd_sweep(sweep, std::cout, std::cerr);
        }
        if (*sizes_cmd) {
            return cmd_sizes(size_k, size_d, size_n, parse_format(format), std::cout, std::cerr);
        }
        if (*rep_cmd) {
            rep.format = parse_format(format);
            return cmd_rep(rep, std::cout, std::cerr);
        }
        if (*schur_cmd) {
            return cmd_schur(schur_k, schur_n, parse_format(format), std::cout, std::cerr);
        }
        if (*verify_cmd) {
            return cmd_verify(suite, std::cout, std::cerr);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kExitError;
}
