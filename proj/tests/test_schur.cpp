#include <random>

#include "gtest/gtest.h"
#include "kbp/schur.hpp"
#include "kbp/sym_rep.hpp"
#include "support/test_support.hpp"

using namespace kbp;
using kbp::testing::haar_unitary;
using kbp::testing::random_density;
using kbp::testing::tensor_power;

namespace {

RealMatrix displayed_t4() {
    double h = 1 / std::sqrt(2.0);
    RealMatrix t(4, 4);
    t << 0, h, -h, 0,
         1, 0, 0, 0,
         0, h, h, 0,
         0, 0, 0, 1;
    return t;
}

RealMatrix displayed_t8() {
    double a = 1 / std::sqrt(2.0), b = 1 / std::sqrt(6.0), c = 1 / std::sqrt(3.0);
    RealMatrix t(8, 8);
    t << 0, 0, a, 0, -a, 0, 0, 0,
         0, 0, 0, a, 0, -a, 0, 0,
         0, 2 * b, -b, 0, -b, 0, 0, 0,
         0, 0, 0, b, 0, b, -2 * b, 0,
         1, 0, 0, 0, 0, 0, 0, 0,
         0, c, c, 0, c, 0, 0, 0,
         0, 0, 0, c, 0, c, c, 0,
         0, 0, 0, 0, 0, 0, 0, 1;
    return t;
}

double row_sign_distance(const ComplexMatrix &t, const RealMatrix &expected) {
    double worst = 0;
    for (Index r = 0; r < t.rows(); r++) {
        RealVector row = t.row(r).real().transpose();
        RealVector e = expected.row(r).transpose();
        worst = std::max(worst, std::min((row - e).cwiseAbs().maxCoeff(), (row + e).cwiseAbs().maxCoeff()));
    }
    return worst + t.imag().cwiseAbs().maxCoeff();
}

/// Block-diagonal expected image of a tensor-slot operator under T.
ComplexMatrix expected_permutation_image(const SchurTransform &t, int j) {
    ComplexMatrix out = ComplexMatrix::Zero(t.matrix.rows(), t.matrix.cols());
    for (const auto &b : t.shapes) {
        ComplexMatrix pi = b.shape.size() > 1 ? ComplexMatrix(young_orthogonal_generator(b.shape, j, t.k).matrix.cast<Complex>())
                                              : identity(1);
        Index size = static_cast<Index>(b.syt) * b.unitary;
        out.block(b.offset, b.offset, size, size) = kron(pi, identity(b.unitary));
    }
    return out;
}

double off_block_and_multiplicity_residual(const SchurTransform &t, const ComplexMatrix &image) {
    double worst = 0;
    Index dim = image.rows();
    ComplexMatrix masked = image;
    for (const auto &b : t.shapes) {
        Index size = static_cast<Index>(b.syt) * b.unitary;
        ComplexMatrix block = image.block(b.offset, b.offset, size, size);
        // Must be I_f (x) U_lambda: equal diagonal sub-blocks, zero off-diagonal sub-blocks.
        ComplexMatrix u = block.topLeftCorner(b.unitary, b.unitary);
        ComplexMatrix expected = kron(identity(b.syt), u);
        worst = std::max(worst, max_abs_diff(block, expected));
        masked.block(b.offset, b.offset, size, size).setZero();
    }
    (void)dim;
    return std::max(worst, max_abs(masked));
}

}  // namespace

TEST(schur_transform, single_factor_is_identity) {
    auto t = schur_transform(2, 1);
    EXPECT_LE(max_abs_diff(t->matrix, identity(2)), 1e-14);
    ASSERT_EQ(t->row_labels.size(), 2u);
    EXPECT_EQ(t->row_labels[0].shape, Partition({1}));
}

TEST(schur_transform, matches_displayed_matrices_up_to_row_sign) {
    EXPECT_LE(row_sign_distance(schur_transform(2, 2)->matrix, displayed_t4()), 1e-12);
    EXPECT_LE(row_sign_distance(schur_transform(2, 3)->matrix, displayed_t8()), 1e-12);
}

TEST(schur_transform, labels_and_multiplicities) {
    for (int k = 2; k <= 3; k++) {
        for (int n = 1; n <= 5; n++) {
            auto t = schur_transform(k, n);
            EXPECT_LE(max_abs_diff(t->matrix * t->matrix.adjoint(), identity(t->matrix.rows())), 1e-10);
            Index total = 0;
            for (const auto &b : t->shapes) {
                EXPECT_EQ(BigInt(b.syt), syt_dim(b.shape));
                EXPECT_EQ(BigInt(b.unitary), unitary_dim(b.shape, k));
                EXPECT_EQ(b.offset, total);
                total += static_cast<Index>(b.syt) * b.unitary;
            }
            EXPECT_EQ(total, t->matrix.rows());
            EXPECT_EQ(static_cast<Index>(t->row_labels.size()), total);
        }
    }
}

TEST(schur_transform, block_diagonalizes_permutations_and_tensor_powers) {
    std::mt19937_64 rng(41);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 3}, {2, 6}, {3, 4}}) {
        auto t = schur_transform(k, n);
        const ComplexMatrix &m = t->matrix;
        for (int j = 1; j < n; j++) {
            ComplexMatrix image = m * natural_perm(k, n, j, j + 1) * m.adjoint();
            EXPECT_LE(max_abs_diff(image, expected_permutation_image(*t, j)), 1e-9) << k << "," << n << " j=" << j;
        }
        // A non-adjacent transposition, as a product of adjacent ones.
        if (n >= 3) {
            ComplexMatrix image = m * natural_perm(k, n, 1, 3) * m.adjoint();
            ComplexMatrix expected = expected_permutation_image(*t, 1) * expected_permutation_image(*t, 2) *
                                     expected_permutation_image(*t, 1);
            EXPECT_LE(max_abs_diff(image, expected), 1e-9);
        }
        for (int trial = 0; trial < 20; trial++) {
            ComplexMatrix u = tensor_power(haar_unitary(k, rng), n);
            EXPECT_LE(off_block_and_multiplicity_residual(*t, m * u * m.adjoint()), 1e-9);
        }
    }
}

TEST(schur_transform, cap_is_enforced) {
    EXPECT_THROW(schur_transform(2, 13), std::invalid_argument);
    EXPECT_THROW(schur_transform(5, 6), std::invalid_argument);
}

TEST(twirl, identity_idempotence_trace_and_commutation) {
    std::mt19937_64 rng(42);
    EXPECT_LE(max_abs_diff(twirl(HermitianOp(identity(8)), 2, 3, 1).matrix(), identity(8)), 1e-12);
    for (auto [k, n, m] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {2, 2, 2}, {2, 3, 2}, {3, 2, 2}}) {
        Index dim = static_cast<Index>(std::pow(k, n)) * m;
        HermitianOp rho = random_density(dim, rng);
        HermitianOp once = twirl(rho, k, n, m);
        HermitianOp twice = twirl(once, k, n, m);
        EXPECT_LE(max_abs_diff(once.matrix(), twice.matrix()), 1e-9);
        EXPECT_NEAR(once.trace(), rho.trace(), 1e-10);
        for (int trial = 0; trial < 20; trial++) {
            ComplexMatrix u = kron(tensor_power(haar_unitary(k, rng), n), identity(m));
            EXPECT_LE(max_abs_diff(u * once.matrix(), once.matrix() * u), 1e-9);
        }
    }
    EXPECT_THROW(twirl(HermitianOp(identity(6)), 2, 2, 1), std::invalid_argument);
}

TEST(twirl, basis_projector_becomes_symmetric_projector) {
    ComplexMatrix e = ComplexMatrix::Zero(4, 4);
    e(0, 0) = 1;
    HermitianOp out = twirl(HermitianOp(e), 2, 2, 1);
    ComplexMatrix sym = (identity(4) + natural_perm(2, 2, 1, 2)) / 2.0;
    EXPECT_LE(max_abs_diff(out.matrix(), sym / 3.0), 1e-12);
}

TEST(twirl, agrees_with_haar_sampling) {
    std::mt19937_64 rng(43);
    const int samples = 100000;
    for (int trial = 0; trial < 3; trial++) {
        HermitianOp rho = random_density(4, rng);
        ComplexMatrix avg = ComplexMatrix::Zero(4, 4);
        for (int s = 0; s < samples; s++) {
            ComplexMatrix u = haar_unitary(2, rng);
            ComplexMatrix uu = kron(u, u);
            avg += uu * rho.matrix() * uu.adjoint();
        }
        avg /= samples;
        EXPECT_LE(max_abs_diff(avg, twirl(rho, 2, 2, 1).matrix()), 2e-2);
    }
}

TEST(extract_blocks, maximally_mixed_weights) {
    auto blocks = extract_blocks(HermitianOp(identity(4) / 4.0), 2, 2, 1);
    ASSERT_EQ(blocks.blocks.size(), 2u);
    EXPECT_EQ(blocks.blocks[0].shape, Partition({1, 1}));
    EXPECT_NEAR(blocks.blocks[0].weight, 0.25, 1e-12);
    EXPECT_EQ(blocks.blocks[1].shape, Partition({2}));
    EXPECT_NEAR(blocks.blocks[1].weight, 0.75, 1e-12);
}

TEST(extract_blocks, recovers_tableau_labeled_blocks) {
    std::mt19937_64 rng(44);
    int m = 2;
    auto t = schur_transform(2, 3);
    // Build a twirl-invariant state in Schur coordinates: w (I_2/2 (x) rho_21) + (1-w) (I_4/4 (x) rho_3).
    HermitianOp rho21 = random_density(2 * m, rng);
    HermitianOp rho3 = random_density(m, rng);
    double w = 0.3;
    BlockDecomposition input{2, 3, m, {{Partition({2, 1}), w, rho21}, {Partition({3}), 1 - w, rho3}}};
    HermitianOp state = reassemble(input);
    EXPECT_NEAR(state.trace(), 1, 1e-12);
    EXPECT_LE(max_abs_diff(twirl(state, 2, 3, m).matrix(), state.matrix()), 1e-9);
    auto out = extract_blocks(state, 2, 3, m);
    ASSERT_EQ(out.blocks.size(), 2u);
    EXPECT_NEAR(out.blocks[0].weight, w, 1e-10);
    EXPECT_LE(max_abs_diff(out.blocks[0].rho.matrix(), rho21.matrix()), 1e-9);
    EXPECT_NEAR(out.blocks[1].weight, 1 - w, 1e-10);
    EXPECT_LE(max_abs_diff(out.blocks[1].rho.matrix(), rho3.matrix()), 1e-9);
    double total = 0;
    for (const auto &b : out.blocks) {
        total += b.weight;
        EXPECT_TRUE(is_psd(b.rho, -1e-9));
        EXPECT_NEAR(b.rho.trace(), 1, 1e-10);
    }
    EXPECT_NEAR(total, 1, 1e-10);
}

TEST(extract_blocks, round_trip_and_single_support) {
    std::mt19937_64 rng(45);
    HermitianOp state = twirl(random_density(16, rng), 2, 3, 2);
    auto blocks = extract_blocks(state, 2, 3, 2);
    EXPECT_LE(max_abs_diff(reassemble(blocks).matrix(), state.matrix()), 1e-9);

    // Antisymmetric projector lives on (1,1) only.
    ComplexMatrix anti = (identity(4) - natural_perm(2, 2, 1, 2)) / 2.0;
    auto single = extract_blocks(HermitianOp(anti), 2, 2, 1);
    EXPECT_NEAR(single.blocks[0].weight, 1, 1e-12);
    EXPECT_EQ(single.blocks[1].weight, 0);
    EXPECT_EQ(max_abs(single.blocks[1].rho.matrix()), 0);
}

TEST(extract_blocks, rejects_non_invariant_input) {
    ComplexMatrix e = ComplexMatrix::Zero(4, 4);
    e(0, 0) = 1;
    EXPECT_THROW(extract_blocks(HermitianOp(e), 2, 2, 1), std::invalid_argument);
}
