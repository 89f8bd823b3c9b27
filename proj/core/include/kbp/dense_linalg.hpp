#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace kbp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Dense Hermitian operator. The hermiticity contract is checked at construction.
class HermitianOp {
   public:
    HermitianOp() = default;
    /// Throws std::invalid_argument if m is not square or not Hermitian within tol::kHermiticity.
    explicit HermitianOp(ComplexMatrix m);

    /// Replaces m by (m + m^dagger)/2. Only for operators that are Hermitian by construction
    /// and carry floating point noise from products, never for external input.
    static HermitianOp symmetrized(const ComplexMatrix &m);

    Index dim() const {
        return m_.rows();
    }
    const ComplexMatrix &matrix() const {
        return m_;
    }
    double trace() const {
        return m_.trace().real();
    }

   private:
    ComplexMatrix m_;
};

class EigenSolverError : public std::runtime_error {
   public:
    EigenSolverError(const std::string &what, int iterations) : std::runtime_error(what), iterations_(iterations) {
    }
    int iterations() const {
        return iterations_;
    }

   private:
    int iterations_;
};

struct EigenDecomposition {
    RealVector values;  // ascending
    ComplexMatrix vectors;
};

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix identity(Index n);

/// Throws EigenSolverError on non-convergence.
EigenDecomposition hermitian_eigs(const HermitianOp &h);
RealVector hermitian_eigenvalues(const HermitianOp &h);
double min_eigenvalue(const HermitianOp &h);

/// Orthonormal basis (columns) of the intersection of ker(g - I) over all generators.
/// With no generators the full standard basis of dimension `dim` is returned.
/// Throws std::invalid_argument on dimension mismatch or a non-unitary generator.
ComplexMatrix common_fixed_subspace(Index dim, std::span<const ComplexMatrix> generators);

bool is_unitary(const ComplexMatrix &u, double tol);
bool is_psd(const HermitianOp &h, double floor);
double max_abs(const ComplexMatrix &m);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace kbp
