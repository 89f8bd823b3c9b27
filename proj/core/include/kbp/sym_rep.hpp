#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "kbp/dense_linalg.hpp"
#include "kbp/young.hpp"

namespace kbp {

class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Matrix of the adjacent transposition (j, j+1) on a basis of standard tableaux.
struct RepMatrix {
    Partition shape;
    int generator_index = 0;
    RealMatrix matrix;
};

/// Delta_lambda((j, j+1)) acting on C^{d_lambda} (x) (C^d)^{(x)(N+1)}.
struct DeltaOperator {
    Partition shape;
    int k = 0;
    int d = 0;
    int N = 0;
    int generator_index = 0;
    ComplexMatrix matrix;
};

/// Coxeter labels {k, ..., N+k-2}; the label j swaps Bob systems j-k+1 and j-k+2.
std::vector<int> coxeter_range(int k, int N);

/// Young's orthogonal form of (j, j+1), 1 <= j < n, on the enumerate_syt(shape, k) basis.
RepMatrix young_orthogonal_generator(const Partition &shape, int j, int k);

/// Top-left d_lambda block (classes A and S) of young_orthogonal_generator.
/// Requires j in coxeter_range(k, n-k+1) and throws ConsistencyError if the block couples to class M.
RepMatrix restricted_generator(const Partition &shape, int j, int k);

/// Permutation matrix on (C^d)^{(x)slots} swapping tensor factors a < b (1-based, slot 1 most significant).
ComplexMatrix natural_perm(int d, int slots, int a, int b);

DeltaOperator delta_lambda(const Partition &shape, int k, int d, int N, int j);

/// Bubble-sort reduced word of a permutation of {0..N-1} given in one-line notation.
/// The result w satisfies perm = s_{w[0]} s_{w[1]} ... with s_b swapping positions b and b+1 (1-based).
std::vector<int> reduced_word(std::span<const int> perm);

/// Product of delta_lambda generators along a word of Bob transpositions s_b, b in 1..N-1.
ComplexMatrix delta_of_word(const Partition &shape, int k, int d, int N, std::span<const int> word);
ComplexMatrix delta_of_permutation(const Partition &shape, int k, int d, int N, std::span<const int> perm);

/// (1/N!) sum over S_N of Delta_lambda(pi). Requires N <= 8.
HermitianOp symmetrizer(const Partition &shape, int k, int d, int N);

}  // namespace kbp
