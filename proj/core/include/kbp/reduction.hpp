#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kbp/dense_linalg.hpp"
#include "kbp/sym_rep.hpp"
#include "kbp/young.hpp"

namespace kbp {

class WitnessFormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Bipartite Hermitian operator on C^d (x) C^d, Alice index major.
struct WitnessSpec {
    int d = 0;
    HermitianOp matrix;
    std::optional<double> alpha;  // set for the isotropic family
    std::string source;
};

/// Operators of the unreduced level-N problem in the layout
/// [A_aux, B1_aux..BN_aux, A_d, B1_d..BN_d].
struct UnreducedProblem {
    int k = 0;
    int d = 0;
    int N = 0;
    HermitianOp objective;
    HermitianOp symmetrizer;
    /// Joint swaps of adjacent Bob systems (aux and d slots together).
    std::vector<ComplexMatrix> generators;
};

struct BlockProblem {
    Partition lambda;
    int k = 0;
    int d = 0;
    int N = 0;
    std::size_t d_lambda = 0;
    std::size_t a_count = 0;
    HermitianOp objective;
    std::vector<DeltaOperator> generators;
    double trace_target = 1.0;
    /// (N-1) * d_lambda^2 * d^(N+1) scalar equality constraints.
    std::uint64_t scalar_constraint_bound = 0;
};

struct SizeRow {
    Partition lambda;
    std::uint64_t unreduced = 0;
    std::uint64_t block_dim = 0;
    std::uint64_t d_lambda = 0;
};

/// Largest operator dimension the dense unreduced constructions accept.
inline constexpr Index kMaxUnreducedDim = 4100;

ComplexVector max_entangled(int k);
/// Rank-1 antisymmetric projector on (C^k)^{(x)k}. Requires k <= 5.
HermitianOp build_pi_k(int k);

WitnessSpec isotropic_witness(int d, double alpha);
/// Throws WitnessFormatError unless m is d^2 x d^2 and hermitian within tol::kConstraint.
WitnessSpec witness_from_matrix(int d, const ComplexMatrix &m, std::string source = "matrix");
/// JSON object {"d": int, "entries": [[[re, im], ...], ...]}. Throws WitnessFormatError.
WitnessSpec parse_witness_json(std::string_view text, std::string source = "json");
WitnessSpec load_witness_file(const std::filesystem::path &path);
std::string witness_to_json(const WitnessSpec &w);

UnreducedProblem extend_witness(const WitnessSpec &x, int k, int N);

/// Diagrams entering the reduced problem: partitions of N+k-1 with exactly k rows.
std::vector<Partition> hierarchy_shapes(int k, int N);
HermitianOp block_objective(const WitnessSpec &x, const Partition &lambda, int k, int N);
BlockProblem build_block_problem(const WitnessSpec &x, const Partition &lambda, int k, int N,
                                 double trace_target = 1.0);
/// One row per hierarchy shape, in ascending lexicographic order of the shape.
std::vector<SizeRow> size_report(int k, int d, int N);

}  // namespace kbp
