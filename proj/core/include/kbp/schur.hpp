#pragma once

#include <memory>
#include <vector>

#include "kbp/dense_linalg.hpp"
#include "kbp/young.hpp"

namespace kbp {

struct SchurLabel {
    Partition shape;
    int p = 0;  // index into enumerate_syt(shape, k)
    int q = 0;  // index into the weight-ordered U(k) basis
};

/// Orthogonal change of basis on (C^k)^{(x)n}: row (lambda, p, q) is the Schur basis vector in computational coordinates.
/// Shapes appear in ascending lexicographic order, rows are p-major inside a shape.
struct SchurTransform {
    struct ShapeBlock {
        Partition shape;
        Index offset = 0;
        int syt = 0;      // f^lambda
        int unitary = 0;  // dim U_lambda
    };
    int k = 0;
    int n = 0;
    ComplexMatrix matrix;
    std::vector<SchurLabel> row_labels;
    std::vector<ShapeBlock> shapes;
};

/// Largest k^n the dense construction accepts.
inline constexpr Index kMaxSchurDim = 4096;

/// Memoized per (k, n). Throws std::invalid_argument above kMaxSchurDim.
std::shared_ptr<const SchurTransform> schur_transform(int k, int n);

/// Projection onto operators on (C^k)^{(x)n} (x) C^m commuting with U^{(x)n} (x) I_m.
HermitianOp twirl(const HermitianOp &rho, int k, int n, int m);

struct DiagramBlock {
    Partition shape;
    double weight = 0;
    /// Unit trace on C^{f^lambda} (x) C^m, p-major. Zero matrix when weight is 0.
    HermitianOp rho;
};

struct BlockDecomposition {
    int k = 0;
    int n = 0;
    int m = 0;
    std::vector<DiagramBlock> blocks;
};

/// Requires twirl(x) = x within 1e-8; otherwise throws std::invalid_argument naming the residual.
BlockDecomposition extract_blocks(const HermitianOp &twirled, int k, int n, int m);
HermitianOp reassemble(const BlockDecomposition &blocks);

}  // namespace kbp
