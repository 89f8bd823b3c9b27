#pragma once

#include <string>

#include "kbp/dense_linalg.hpp"

namespace kbp {

/// min <C, X>  s.t.  X >= 0,  tr X = trace,  X = P X P
/// with P an orthogonal projector encoding linear invariance constraints.
struct SpectraplexProblem {
    ComplexMatrix cost;
    double trace = 1.0;
    ComplexMatrix projector;
};

struct AdmmSettings {
    int max_iterations = 20000;
    double feasibility_tol = 1e-8;
    double duality_tol = 1e-8;
    double rho = 1.0;
    double relaxation = 1.6;
};

enum class ConicStatus { Solved, MaxIterations };

std::string to_string(ConicStatus status);

struct AdmmResult {
    ConicStatus status = ConicStatus::MaxIterations;
    ComplexMatrix x;  // PSD with the requested trace
    double objective = 0;
    int iterations = 0;
    double primal_residual = 0;  // ||X - P X P||_F at exit
    double dual_residual = 0;
};

/// Euclidean projection of a Hermitian matrix onto {X >= 0, tr X = trace}.
ComplexMatrix project_spectraplex(const ComplexMatrix &v, double trace);

/// Over-relaxed ADMM with adaptive penalty, splitting the PSD/trace set from the invariant subspace.
AdmmResult solve_spectraplex_admm(const SpectraplexProblem &problem, const AdmmSettings &settings);

}  // namespace kbp
