#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kbp/dense_linalg.hpp"
#include "kbp/reduction.hpp"
#include "kbp/young.hpp"

namespace kbp {

enum class SolveMethod { Eig, Sdp, Both };

std::string to_string(SolveMethod method);
/// Accepts "eig", "sdp", "both"; throws std::invalid_argument otherwise.
SolveMethod parse_method(const std::string &text);

struct SolverConfig {
    SolveMethod method = SolveMethod::Eig;
    double trace_target = 1.0;
    int max_iterations = 20000;
    double feasibility_tol = 1e-8;
    double duality_tol = 1e-8;
    /// A clipped hierarchy value >= -certify_tol certifies the level.
    double certify_tol = 1e-9;
    /// 0 = default_worker_count().
    int workers = 0;
};

enum class BlockStatus { Optimal, InfeasibleBlock, Inaccurate };

std::string to_string(BlockStatus status);

struct BlockResiduals {
    /// max over generators of ||(Delta - I) rho|| (SDP) or ||Delta Q - Q|| (eig).
    double constraint = 0;
    /// ||H v - lambda v|| for the reported eigenpair.
    double eigen = 0;
    double primal = 0;
    double dual = 0;
    int iterations = 0;
    Index fixed_dim = 0;
};

struct BlockResult {
    Partition lambda;
    SolveMethod method = SolveMethod::Eig;
    BlockStatus status = BlockStatus::Optimal;
    /// +infinity for infeasible blocks.
    double raw_minimum = 0;
    BlockResiduals residuals;
    std::string message;
    double seconds = 0;
};

enum class Verdict { Certified, NegativeBound };

std::string describe(Verdict verdict, int N);

struct SolveReport {
    int k = 0;
    int d = 0;
    int N = 0;
    std::optional<double> alpha;
    double trace_target = 1.0;
    /// Sorted by shape; with SolveMethod::Both each shape has an eig entry followed by an sdp entry.
    std::vector<BlockResult> per_block;
    /// min(0, block minima).
    double hierarchy_value = 0;
    /// True when no block minimum is negative, so the value is the clip at 0.
    bool clipped = true;
    Verdict verdict = Verdict::Certified;
    double wall_time = 0;
};

struct OracleResult {
    double raw = 0;
    double clipped = 0;
    Index symmetric_dim = 0;
};

BlockResult solve_block_eig(const BlockProblem &p);
BlockResult solve_block_sdp(const BlockProblem &p, const SolverConfig &cfg);
SolveReport solve_hierarchy(const WitnessSpec &x, int k, int N, const SolverConfig &cfg = {});
/// Minimum of X_{k,N} over the range of the Bose symmetrizer, plus min(0, .).
OracleResult unreduced_oracle(const WitnessSpec &x, int k, int N);

}  // namespace kbp
