#include "kbp/dense_linalg.hpp"

#include <algorithm>
#include <vector>

#include "kbp/tolerances.hpp"

namespace kbp {

namespace {

// Singular values of (g - I)Q below this are treated as exact zeros.
constexpr double kNullThreshold = 1e-8;

}  // namespace

HermitianOp::HermitianOp(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw std::invalid_argument("HermitianOp: matrix is not square");
    }
    double scale = std::max(1.0, max_abs(m_));
    double asym = max_abs_diff(m_, m_.adjoint());
    if (asym > tol::kHermiticity * scale) {
        throw std::invalid_argument("HermitianOp: not hermitian, max |H - H^dagger| = " + std::to_string(asym));
    }
}

HermitianOp HermitianOp::symmetrized(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("HermitianOp: matrix is not square");
    }
    ComplexMatrix h = (m + m.adjoint()) * 0.5;
    return HermitianOp(std::move(h));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); i++) {
        for (Index k = 0; k < a.cols(); k++) {
            out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
        }
    }
    return out;
}

ComplexMatrix identity(Index n) {
    return ComplexMatrix::Identity(n, n);
}

EigenDecomposition hermitian_eigs(const HermitianOp &h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix(), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        // Eigen's tridiagonal QR gives up after 30 sweeps per eigenvalue.
        throw EigenSolverError("hermitian_eigs: no convergence", 30 * static_cast<int>(h.dim()));
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const HermitianOp &h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw EigenSolverError("hermitian_eigenvalues: no convergence", 30 * static_cast<int>(h.dim()));
    }
    return solver.eigenvalues();
}

double min_eigenvalue(const HermitianOp &h) {
    if (h.dim() == 0) {
        throw std::invalid_argument("min_eigenvalue: empty operator");
    }
    return hermitian_eigenvalues(h)(0);
}

namespace {

template <class Matrix>
Matrix fixed_subspace_impl(Index dim, const std::vector<Matrix> &generators) {
    Matrix q = Matrix::Identity(dim, dim);
    for (const auto &g : generators) {
        if (q.cols() == 0) {
            break;
        }
        Matrix m = g * q - q;
        // null(M) = orthogonal complement of range(M^dagger) inside the current subspace.
        Eigen::ColPivHouseholderQR<Matrix> qr(m.adjoint());
        const auto &r = qr.matrixR();
        Index diag = std::min(r.rows(), r.cols());
        Index rank = 0;
        while (rank < diag && std::abs(r(rank, rank)) > kNullThreshold) {
            rank++;
        }
        if (rank == 0) {
            continue;
        }
        Matrix full_q = qr.householderQ();
        q = q * full_q.rightCols(q.cols() - rank);
    }
    return q;
}

}  // namespace

ComplexMatrix common_fixed_subspace(Index dim, std::span<const ComplexMatrix> generators) {
    bool real = true;
    for (const auto &g : generators) {
        if (g.rows() != dim || g.cols() != dim) {
            throw std::invalid_argument("common_fixed_subspace: generator dimension mismatch");
        }
        real = real && g.imag().cwiseAbs().maxCoeff() == 0;
    }
    if (real) {
        // A real generator set has a real fixed subspace; the complex span is its complexification.
        std::vector<RealMatrix> gens;
        for (const auto &g : generators) {
            gens.push_back(g.real());
            if ((gens.back().transpose() * gens.back() - RealMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() >
                tol::kConstraint) {
                throw std::invalid_argument("common_fixed_subspace: generator is not unitary");
            }
        }
        return fixed_subspace_impl(dim, gens).cast<Complex>();
    }
    std::vector<ComplexMatrix> gens(generators.begin(), generators.end());
    for (const auto &g : gens) {
        if (!is_unitary(g, tol::kConstraint)) {
            throw std::invalid_argument("common_fixed_subspace: generator is not unitary");
        }
    }
    return fixed_subspace_impl(dim, gens);
}

bool is_unitary(const ComplexMatrix &u, double tol) {
    if (u.rows() != u.cols()) {
        return false;
    }
    return max_abs_diff(u.adjoint() * u, identity(u.rows())) <= tol;
}

bool is_psd(const HermitianOp &h, double floor) {
    if (h.dim() == 0) {
        return true;
    }
    return min_eigenvalue(h) >= floor;
}

double max_abs(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    return max_abs(a - b);
}

}  // namespace kbp
