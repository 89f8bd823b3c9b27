#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "kbp/dense_linalg.hpp"
#include "kbp/sym_rep.hpp"
#include "support/test_support.hpp"

using namespace kbp;
using kbp::testing::random_complex;
using kbp::testing::random_hermitian;
using kbp::testing::random_unit_vector;

TEST(kron, identities_and_diagonal) {
    EXPECT_EQ(kron(identity(2), identity(3)), identity(6));
    ComplexMatrix z = ComplexMatrix::Zero(2, 2);
    z(0, 0) = 1;
    z(1, 1) = -1;
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected.diagonal() << 1, 1, -1, -1;
    EXPECT_EQ(kron(z, identity(2)), expected);
}

TEST(kron, entry_layout_is_left_major) {
    std::mt19937_64 rng(1);
    ComplexMatrix a = random_complex(2, 3, rng);
    ComplexMatrix b = random_complex(4, 2, rng);
    ComplexMatrix c = kron(a, b);
    ASSERT_EQ(c.rows(), 8);
    ASSERT_EQ(c.cols(), 6);
    for (Index i = 0; i < 2; i++) {
        for (Index j = 0; j < 4; j++) {
            for (Index k = 0; k < 3; k++) {
                for (Index l = 0; l < 2; l++) {
                    EXPECT_EQ(c(i * 4 + j, k * 2 + l), a(i, k) * b(j, l));
                }
            }
        }
    }
}

TEST(kron, associative_and_multiplicative) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; trial++) {
        ComplexMatrix a = random_complex(2, 2, rng);
        ComplexMatrix b = random_complex(2, 2, rng);
        ComplexMatrix c = random_complex(2, 2, rng);
        ComplexMatrix d = random_complex(2, 2, rng);
        EXPECT_LE(max_abs_diff(kron(a, kron(b, c)), kron(kron(a, b), c)), 1e-12);
        EXPECT_LE(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-12);
    }
}

TEST(HermitianOp, rejects_non_hermitian_and_non_square) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1;
    EXPECT_THROW(HermitianOp{m}, std::invalid_argument);
    EXPECT_THROW(HermitianOp{ComplexMatrix::Zero(2, 3)}, std::invalid_argument);
    m(1, 0) = 1;
    EXPECT_NO_THROW(HermitianOp{m});
}

TEST(hermitian_eigs, small_cases) {
    ComplexMatrix diag = ComplexMatrix::Zero(3, 3);
    diag.diagonal() << 3, 1, 2;
    auto e = hermitian_eigs(HermitianOp(diag));
    EXPECT_NEAR(e.values(0), 1, 1e-14);
    EXPECT_NEAR(e.values(1), 2, 1e-14);
    EXPECT_NEAR(e.values(2), 3, 1e-14);

    ComplexMatrix pauli(2, 2);
    pauli << 0, -1, -1, 0;
    auto p = hermitian_eigs(HermitianOp(pauli));
    EXPECT_NEAR(p.values(0), -1, 1e-14);
    EXPECT_NEAR(p.values(1), 1, 1e-14);
}

TEST(hermitian_eigs, reconstruction_of_random_50) {
    std::mt19937_64 rng(3);
    HermitianOp h = random_hermitian(50, rng);
    auto e = hermitian_eigs(h);
    EXPECT_LE(max_abs_diff(e.vectors.adjoint() * e.vectors, identity(50)), 1e-10);
    ComplexMatrix rebuilt = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LE(max_abs_diff(rebuilt, h.matrix()), 1e-10 * 50 * max_abs(h.matrix()));
    for (Index i = 1; i < e.values.size(); i++) {
        EXPECT_LE(e.values(i - 1), e.values(i));
    }
}

TEST(hermitian_eigs, minimum_is_below_rayleigh_quotients) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 5; trial++) {
        HermitianOp h = random_hermitian(12, rng);
        double lo = min_eigenvalue(h);
        double best = std::numeric_limits<double>::infinity();
        for (int s = 0; s < 200; s++) {
            ComplexVector v = random_unit_vector(12, rng);
            best = std::min(best, (v.adjoint() * h.matrix() * v)(0).real());
        }
        EXPECT_GE(best - lo, -1e-12);
    }
}

TEST(common_fixed_subspace, identity_generator_keeps_everything) {
    std::vector<ComplexMatrix> gens{identity(5)};
    ComplexMatrix q = common_fixed_subspace(5, gens);
    EXPECT_EQ(q.cols(), 5);
    EXPECT_LE(max_abs_diff(q.adjoint() * q, identity(5)), 1e-12);
}

TEST(common_fixed_subspace, swap_gives_symmetric_subspace) {
    std::vector<ComplexMatrix> gens{natural_perm(2, 2, 1, 2)};
    ComplexMatrix q = common_fixed_subspace(4, gens);
    EXPECT_EQ(q.cols(), 3);
    EXPECT_LE(max_abs_diff(gens[0] * q, q), 1e-10);
    EXPECT_LE(max_abs_diff(q.adjoint() * q, identity(3)), 1e-10);
}

TEST(common_fixed_subspace, young_generator_eigenvector) {
    std::vector<ComplexMatrix> gens{delta_lambda(Partition({2, 1}), 2, 1, 2, 2).matrix};
    ComplexMatrix q = common_fixed_subspace(2, gens);
    ASSERT_EQ(q.cols(), 1);
    Complex phase = q(0, 0) / std::abs(q(0, 0));
    ComplexVector v = q.col(0) / phase;
    EXPECT_NEAR(v(0).real(), std::sqrt(3.0) / 2, 1e-12);
    EXPECT_NEAR(v(1).real(), 0.5, 1e-12);
    EXPECT_NEAR(std::abs(v(0).imag()) + std::abs(v(1).imag()), 0, 1e-12);
}

TEST(common_fixed_subspace, intersection_of_two_swaps) {
    std::vector<ComplexMatrix> gens{natural_perm(2, 3, 1, 2), natural_perm(2, 3, 2, 3)};
    ComplexMatrix q = common_fixed_subspace(8, gens);
    EXPECT_EQ(q.cols(), 4);
    for (const auto &g : gens) {
        EXPECT_LE(max_abs_diff(g * q, q), 1e-10);
    }
}

TEST(common_fixed_subspace, empty_result_and_errors) {
    ComplexMatrix minus = -identity(3);
    std::vector<ComplexMatrix> gens{minus};
    EXPECT_EQ(common_fixed_subspace(3, gens).cols(), 0);
    std::vector<ComplexMatrix> mismatch{identity(2)};
    EXPECT_THROW(common_fixed_subspace(3, mismatch), std::invalid_argument);
    std::vector<ComplexMatrix> scaled{identity(3) * 2.0};
    EXPECT_THROW(common_fixed_subspace(3, scaled), std::invalid_argument);
    EXPECT_EQ(common_fixed_subspace(4, {}).cols(), 4);
}
