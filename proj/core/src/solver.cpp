#include "kbp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "kbp/conic.hpp"
#include "kbp/parallel.hpp"
#include "kbp/sym_rep.hpp"
#include "kbp/tolerances.hpp"

namespace kbp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::string to_string(SolveMethod method) {
    switch (method) {
        case SolveMethod::Eig:
            return "eig";
        case SolveMethod::Sdp:
            return "sdp";
        default:
            return "both";
    }
}

SolveMethod parse_method(const std::string &text) {
    if (text == "eig") {
        return SolveMethod::Eig;
    }
    if (text == "sdp") {
        return SolveMethod::Sdp;
    }
    if (text == "both") {
        return SolveMethod::Both;
    }
    throw std::invalid_argument("unknown method '" + text + "' (expected eig, sdp or both)");
}

std::string to_string(BlockStatus status) {
    switch (status) {
        case BlockStatus::Optimal:
            return "optimal";
        case BlockStatus::InfeasibleBlock:
            return "infeasible-block";
        default:
            return "inaccurate";
    }
}

std::string describe(Verdict verdict, int N) {
    if (verdict == Verdict::Certified) {
        return "certified >= 0 at level " + std::to_string(N);
    }
    return "negative lower bound at level " + std::to_string(N) + ": inconclusive for k-block-positivity";
}

BlockResult solve_block_eig(const BlockProblem &p) {
    auto start = Clock::now();
    BlockResult out;
    out.lambda = p.lambda;
    out.method = SolveMethod::Eig;
    Index dim = p.objective.dim();
    std::vector<ComplexMatrix> gens;
    gens.reserve(p.generators.size());
    for (const auto &g : p.generators) {
        gens.push_back(g.matrix);
    }
    ComplexMatrix q = common_fixed_subspace(dim, gens);
    out.residuals.fixed_dim = q.cols();
    if (q.cols() == 0) {
        out.status = BlockStatus::InfeasibleBlock;
        out.raw_minimum = std::numeric_limits<double>::infinity();
        out.message = "empty invariant subspace";
        out.seconds = seconds_since(start);
        return out;
    }
    for (const auto &g : gens) {
        out.residuals.constraint = std::max(out.residuals.constraint, max_abs(g * q - q));
    }
    HermitianOp h = HermitianOp::symmetrized(q.adjoint() * p.objective.matrix() * q);
    EigenDecomposition eig = hermitian_eigs(h);
    double lam = eig.values(0);
    ComplexVector v = eig.vectors.col(0);
    out.residuals.eigen = (h.matrix() * v - lam * v).norm();
    out.raw_minimum = p.trace_target * lam;
    out.status = BlockStatus::Optimal;
    out.seconds = seconds_since(start);
    return out;
}

BlockResult solve_block_sdp(const BlockProblem &p, const SolverConfig &cfg) {
    auto start = Clock::now();
    BlockResult out;
    out.lambda = p.lambda;
    out.method = SolveMethod::Sdp;
    HermitianOp proj = symmetrizer(p.lambda, p.k, p.d, p.N);
    if (proj.trace() < 0.5) {
        out.status = BlockStatus::InfeasibleBlock;
        out.raw_minimum = std::numeric_limits<double>::infinity();
        out.message = "empty invariant subspace";
        out.seconds = seconds_since(start);
        return out;
    }
    SpectraplexProblem problem{p.objective.matrix(), p.trace_target, proj.matrix()};
    AdmmSettings settings;
    settings.max_iterations = cfg.max_iterations;
    settings.feasibility_tol = cfg.feasibility_tol;
    settings.duality_tol = cfg.duality_tol;
    AdmmResult res = solve_spectraplex_admm(problem, settings);
    // Report the objective at the invariant part of the iterate, renormalized to the trace target.
    ComplexMatrix rho = proj.matrix() * res.x * proj.matrix();
    double tr = rho.trace().real();
    if (tr > 0) {
        rho *= p.trace_target / tr;
    }
    out.raw_minimum = p.objective.matrix().cwiseProduct(rho.conjugate()).sum().real();
    for (const auto &g : p.generators) {
        out.residuals.constraint = std::max(out.residuals.constraint, max_abs(g.matrix * res.x - res.x));
    }
    out.residuals.primal = res.primal_residual;
    out.residuals.dual = res.dual_residual;
    out.residuals.iterations = res.iterations;
    out.residuals.fixed_dim = static_cast<Index>(std::lround(proj.trace()));
    out.status = res.status == ConicStatus::Solved ? BlockStatus::Optimal : BlockStatus::Inaccurate;
    out.message = to_string(res.status);
    out.seconds = seconds_since(start);
    return out;
}

SolveReport solve_hierarchy(const WitnessSpec &x, int k, int N, const SolverConfig &cfg) {
    auto start = Clock::now();
    auto shapes = hierarchy_shapes(k, N);
    std::sort(shapes.begin(), shapes.end());
    bool run_eig = cfg.method != SolveMethod::Sdp;
    bool run_sdp = cfg.method != SolveMethod::Eig;
    std::vector<BlockResult> eig_results(shapes.size()), sdp_results(shapes.size());
    parallel_for(
        shapes.size(),
        [&](std::size_t i) {
            BlockProblem p = build_block_problem(x, shapes[i], k, N, cfg.trace_target);
            if (run_eig) {
                eig_results[i] = solve_block_eig(p);
            }
            if (run_sdp) {
                sdp_results[i] = solve_block_sdp(p, cfg);
            }
        },
        cfg.workers);

    SolveReport report;
    report.k = k;
    report.d = x.d;
    report.N = N;
    report.alpha = x.alpha;
    report.trace_target = cfg.trace_target;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < shapes.size(); i++) {
        const BlockResult &primary = run_eig ? eig_results[i] : sdp_results[i];
        if (primary.status != BlockStatus::InfeasibleBlock) {
            best = std::min(best, primary.raw_minimum);
        }
        if (run_eig) {
            report.per_block.push_back(eig_results[i]);
        }
        if (run_sdp) {
            BlockResult sdp = sdp_results[i];
            if (run_eig && eig_results[i].status == BlockStatus::Optimal) {
                double gap = std::abs(sdp.raw_minimum - eig_results[i].raw_minimum);
                if (gap > tol::kValue + cfg.feasibility_tol) {
                    std::ostringstream msg;
                    msg << sdp.message << "; differs from eig by " << gap;
                    sdp.message = msg.str();
                }
            }
            report.per_block.push_back(sdp);
        }
    }
    report.clipped = !(best < 0);
    report.hierarchy_value = std::min(0.0, best);
    report.verdict = report.hierarchy_value >= -cfg.certify_tol ? Verdict::Certified : Verdict::NegativeBound;
    report.wall_time = seconds_since(start);
    return report;
}

OracleResult unreduced_oracle(const WitnessSpec &x, int k, int N) {
    UnreducedProblem u = extend_witness(x, k, N);
    EigenDecomposition sym = hermitian_eigs(u.symmetrizer);
    Index first = 0;
    while (first < sym.values.size() && sym.values(first) < 0.5) {
        first++;
    }
    ComplexMatrix q = sym.vectors.rightCols(sym.values.size() - first);
    OracleResult out;
    out.symmetric_dim = q.cols();
    HermitianOp h = HermitianOp::symmetrized(q.adjoint() * u.objective.matrix() * q);
    out.raw = min_eigenvalue(h);
    out.clipped = std::min(0.0, out.raw);
    return out;
}

}  // namespace kbp
