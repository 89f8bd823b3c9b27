#pragma once

#include <random>

#include "kbp/dense_linalg.hpp"

namespace kbp::testing {

ComplexMatrix random_complex(Index rows, Index cols, std::mt19937_64 &rng);
HermitianOp random_hermitian(Index dim, std::mt19937_64 &rng);
/// Random density matrix (Wishart-type, unit trace).
HermitianOp random_density(Index dim, std::mt19937_64 &rng);
/// Haar-distributed unitary from the QR of a Ginibre matrix with phase correction.
ComplexMatrix haar_unitary(Index dim, std::mt19937_64 &rng);
ComplexVector random_unit_vector(Index dim, std::mt19937_64 &rng);
/// U (x) U (x) ... (x) U, n factors.
ComplexMatrix tensor_power(const ComplexMatrix &u, int n);

}  // namespace kbp::testing
