#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "kbp/sym_rep.hpp"

using namespace kbp;

namespace {

double max_diff(const RealMatrix &a, const RealMatrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

RealMatrix mat(std::initializer_list<std::initializer_list<double>> rows) {
    RealMatrix m(rows.size(), rows.begin()->size());
    Index i = 0;
    for (auto r : rows) {
        Index j = 0;
        for (double v : r) {
            m(i, j++) = v;
        }
        i++;
    }
    return m;
}

const double s3 = std::sqrt(3.0);
const double s2 = std::sqrt(2.0);

std::vector<int> compose(const std::vector<int> &a, const std::vector<int> &b) {
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        out[i] = a[b[i]];
    }
    return out;
}

std::vector<int> word_to_perm(const std::vector<int> &word, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int b : word) {
        std::vector<int> s(n);
        std::iota(s.begin(), s.end(), 0);
        std::swap(s[b - 1], s[b]);
        p = compose(p, s);
    }
    return p;
}

// A second reduced word: move each value to its place from the right end.
std::vector<int> right_to_left_word(std::vector<int> p) {
    int n = static_cast<int>(p.size());
    std::vector<int> swaps;
    for (int target = n - 1; target >= 0; target--) {
        int pos = static_cast<int>(std::find(p.begin(), p.end(), target) - p.begin());
        for (int i = pos; i < target; i++) {
            std::swap(p[i], p[i + 1]);
            swaps.push_back(i + 1);
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

}  // namespace

TEST(young_orthogonal_generator, displayed_matrices) {
    EXPECT_LE(max_diff(young_orthogonal_generator(Partition({2, 1}), 2, 2).matrix,
                       mat({{0.5, s3 / 2}, {s3 / 2, -0.5}})),
              1e-12);
    EXPECT_LE(max_diff(young_orthogonal_generator(Partition({2, 2}), 2, 2).matrix,
                       mat({{0.5, s3 / 2}, {s3 / 2, -0.5}})),
              1e-12);
    EXPECT_LE(max_diff(young_orthogonal_generator(Partition({2, 2}), 3, 2).matrix, mat({{-1, 0}, {0, 1}})), 1e-12);
    EXPECT_LE(max_diff(young_orthogonal_generator(Partition({3, 1}), 2, 2).matrix,
                       mat({{0.5, s3 / 2, 0}, {s3 / 2, -0.5, 0}, {0, 0, 1}})),
              1e-12);
    EXPECT_LE(max_diff(young_orthogonal_generator(Partition({3, 1}), 3, 2).matrix,
                       mat({{1, 0, 0}, {0, 1.0 / 3, 2 * s2 / 3}, {0, 2 * s2 / 3, -1.0 / 3}})),
              1e-12);
    EXPECT_THROW(young_orthogonal_generator(Partition({2, 1}), 3, 2), std::invalid_argument);
    EXPECT_THROW(young_orthogonal_generator(Partition({2, 1}), 0, 2), std::invalid_argument);
}

TEST(young_orthogonal_generator, orthogonal_symmetric_involutive_and_braid) {
    for (int n = 2; n <= 8; n++) {
        for (const auto &shape : partitions_at_most(n, n)) {
            int k = shape.rows();
            std::vector<RealMatrix> r;
            for (int j = 1; j < n; j++) {
                r.push_back(young_orthogonal_generator(shape, j, k).matrix);
            }
            Index f = r[0].rows();
            RealMatrix id = RealMatrix::Identity(f, f);
            for (int j = 0; j + 1 < n; j++) {
                EXPECT_LE(max_diff(r[j], r[j].transpose()), 1e-12);
                EXPECT_LE(max_diff(r[j] * r[j], id), 1e-12);
                EXPECT_LE(max_diff(r[j].transpose() * r[j], id), 1e-12);
                if (j + 1 < n - 1) {
                    EXPECT_LE(max_diff(r[j] * r[j + 1] * r[j], r[j + 1] * r[j] * r[j + 1]), 1e-12) << shape.str();
                }
                for (int i = j + 2; i + 1 < n; i++) {
                    EXPECT_LE(max_diff(r[i] * r[j], r[j] * r[i]), 1e-12);
                }
            }
        }
    }
}

TEST(restricted_generator, no_coupling_to_m_class) {
    for (int k = 1; k <= 5; k++) {
        for (int n = k; n <= 9; n++) {
            int N = n - k + 1;
            for (const auto &shape : enumerate_partitions(n, k)) {
                for (int j : coxeter_range(k, N)) {
                    RepMatrix r;
                    ASSERT_NO_THROW(r = restricted_generator(shape, j, k)) << shape.str() << " j=" << j;
                    EXPECT_EQ(static_cast<size_t>(r.matrix.rows()), block_size(shape, k));
                }
            }
        }
    }
}

TEST(restricted_generator, examples) {
    auto full = restricted_generator(Partition({2, 1}), 2, 2);
    EXPECT_LE(max_diff(full.matrix, mat({{0.5, s3 / 2}, {s3 / 2, -0.5}})), 1e-12);
    Partition l({3, 2, 1});
    auto r = restricted_generator(l, 3, 3);
    EXPECT_EQ(r.matrix.rows(), 8);
    auto whole = young_orthogonal_generator(l, 3, 3).matrix;
    ASSERT_EQ(whole.rows(), 16);
    EXPECT_EQ(whole.block(0, 8, 8, 8).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(whole.block(8, 0, 8, 8).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_TRUE(coxeter_range(3, 1).empty());
    EXPECT_THROW(restricted_generator(l, 2, 3), std::invalid_argument);
}

TEST(natural_perm, index_map_and_involution) {
    ComplexMatrix swap = natural_perm(2, 2, 1, 2);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 0) = expected(1, 2) = expected(2, 1) = expected(3, 3) = 1;
    EXPECT_EQ(swap, expected);
    for (int d = 2; d <= 3; d++) {
        ComplexMatrix p = natural_perm(d, 3, 1, 2);
        EXPECT_EQ(p * p, identity(p.rows()));
    }
    ComplexMatrix p = natural_perm(3, 3, 2, 3);
    for (int a = 0; a < 3; a++) {
        for (int b = 0; b < 3; b++) {
            for (int c = 0; c < 3; c++) {
                Index in = a * 9 + b * 3 + c;
                Index out = a * 9 + c * 3 + b;
                EXPECT_EQ(p(out, in), Complex(1));
                EXPECT_EQ(p.col(in).cwiseAbs().sum(), 1.0);
            }
        }
    }
    EXPECT_THROW(natural_perm(2, 3, 2, 2), std::invalid_argument);
    EXPECT_THROW(natural_perm(2, 3, 1, 4), std::invalid_argument);
}

TEST(delta_lambda, displayed_operators) {
    for (int d = 1; d <= 3; d++) {
        auto a = delta_lambda(Partition({2, 1}), 2, d, 2, 2);
        ComplexMatrix e = kron(mat({{0.5, s3 / 2}, {s3 / 2, -0.5}}).cast<Complex>(), natural_perm(d, 3, 2, 3));
        EXPECT_LE(max_abs_diff(a.matrix, e), 1e-12);
        auto b = delta_lambda(Partition({2, 2}), 2, d, 3, 3);
        e = kron(mat({{-1, 0}, {0, 1}}).cast<Complex>(), natural_perm(d, 4, 3, 4));
        EXPECT_LE(max_abs_diff(b.matrix, e), 1e-12);
        auto c = delta_lambda(Partition({3, 1}), 2, d, 3, 2);
        e = kron(mat({{0.5, s3 / 2, 0}, {s3 / 2, -0.5, 0}, {0, 0, 1}}).cast<Complex>(), natural_perm(d, 4, 2, 3));
        EXPECT_LE(max_abs_diff(c.matrix, e), 1e-12);
        EXPECT_TRUE(is_unitary(c.matrix, 1e-10));
        EXPECT_LE(max_abs_diff(c.matrix * c.matrix, identity(c.matrix.rows())), 1e-10);
    }
    EXPECT_THROW(delta_lambda(Partition({2, 2}), 2, 2, 3, 1), std::invalid_argument);
    EXPECT_THROW(delta_lambda(Partition({2, 2}), 2, 2, 3, 4), std::invalid_argument);
}

TEST(reduced_word, reproduces_permutation_and_is_word_independent) {
    std::mt19937_64 rng(11);
    Partition shape({4, 2});  // k = 2, N = 5
    for (int trial = 0; trial < 6; trial++) {
        std::vector<int> perm(5);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto w1 = reduced_word(perm);
        auto w2 = right_to_left_word(perm);
        EXPECT_EQ(word_to_perm(w1, 5), perm);
        EXPECT_EQ(word_to_perm(w2, 5), perm);
        EXPECT_EQ(w1.size(), w2.size());
        ComplexMatrix a = delta_of_word(shape, 2, 1, 5, w1);
        ComplexMatrix b = delta_of_word(shape, 2, 1, 5, w2);
        EXPECT_LE(max_abs_diff(a, b), 1e-12);
    }
}

TEST(delta_of_permutation, is_a_homomorphism) {
    std::mt19937_64 rng(12);
    Partition shape({2, 2});
    for (int trial = 0; trial < 5; trial++) {
        std::vector<int> p(3), q(3);
        std::iota(p.begin(), p.end(), 0);
        std::iota(q.begin(), q.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        std::shuffle(q.begin(), q.end(), rng);
        ComplexMatrix lhs = delta_of_permutation(shape, 2, 2, 3, p) * delta_of_permutation(shape, 2, 2, 3, q);
        ComplexMatrix rhs = delta_of_permutation(shape, 2, 2, 3, compose(p, q));
        EXPECT_LE(max_abs_diff(lhs, rhs), 1e-12);
    }
}

TEST(symmetrizer, examples_and_projector_properties) {
    HermitianOp one = symmetrizer(Partition({1, 1}), 2, 3, 1);
    EXPECT_LE(max_abs_diff(one.matrix(), identity(9)), 1e-14);

    HermitianOp p = symmetrizer(Partition({2, 1}), 2, 1, 2);
    ComplexMatrix expected(2, 2);
    expected << 0.75, s3 / 4, s3 / 4, 0.25;
    EXPECT_LE(max_abs_diff(p.matrix(), expected), 1e-12);
    EXPECT_NEAR(p.trace(), 1.0, 1e-12);

    HermitianOp q = symmetrizer(Partition({2, 2}), 2, 2, 3);
    EXPECT_LE(max_abs_diff(q.matrix() * q.matrix(), q.matrix()), 1e-10);
    auto eig = hermitian_eigenvalues(q);
    double rank = 0;
    for (Index i = 0; i < eig.size(); i++) {
        rank += eig(i) > 0.5 ? 1 : 0;
    }
    EXPECT_NEAR(rank, q.trace(), 1e-8);
    for (int j : coxeter_range(2, 3)) {
        ComplexMatrix g = delta_lambda(Partition({2, 2}), 2, 2, 3, j).matrix;
        EXPECT_LE(max_abs_diff(g * q.matrix(), q.matrix()), 1e-10);
    }
}
