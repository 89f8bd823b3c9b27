#pragma once

namespace kbp::tol {

// Maximum |H - H^dagger| entry accepted when constructing a HermitianOp,
// relative to max(1, largest entry magnitude).
inline constexpr double kHermiticity = 1e-12;
// Eigendecomposition reconstruction and orthonormality checks.
inline constexpr double kEigenResidual = 1e-10;
// Invariance constraints, unitarity of generators, witness-file hermiticity.
inline constexpr double kConstraint = 1e-10;
// Comparing optimal values between independent solution paths.
inline constexpr double kValue = 1e-6;

}  // namespace kbp::tol
