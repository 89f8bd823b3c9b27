#include "kbp/conic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kbp {

std::string to_string(ConicStatus status) {
    switch (status) {
        case ConicStatus::Solved:
            return "solved";
        default:
            return "max-iterations";
    }
}

namespace {

RealVector project_simplex(const RealVector &v, double total) {
    std::vector<double> u(v.data(), v.data() + v.size());
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumsum = 0;
    double theta = 0;
    for (size_t i = 0; i < u.size(); i++) {
        cumsum += u[i];
        double t = (cumsum - total) / static_cast<double>(i + 1);
        if (u[i] - t > 0) {
            theta = t;
        }
    }
    return (v.array() - theta).cwiseMax(0.0);
}

}  // namespace

ComplexMatrix project_spectraplex(const ComplexMatrix &v, double trace) {
    ComplexMatrix h = (v + v.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
    if (eig.info() != Eigen::Success) {
        throw EigenSolverError("project_spectraplex: eigensolver failed", 30 * static_cast<int>(h.rows()));
    }
    RealVector lam = project_simplex(eig.eigenvalues(), trace);
    const ComplexMatrix &u = eig.eigenvectors();
    return u * lam.cast<Complex>().asDiagonal() * u.adjoint();
}

AdmmResult solve_spectraplex_admm(const SpectraplexProblem &problem, const AdmmSettings &settings) {
    Index n = problem.cost.rows();
    if (problem.cost.cols() != n || problem.projector.rows() != n || problem.projector.cols() != n) {
        throw std::invalid_argument("solve_spectraplex_admm: dimension mismatch");
    }
    if (!(problem.trace > 0)) {
        throw std::invalid_argument("solve_spectraplex_admm: trace must be positive");
    }
    const ComplexMatrix &p = problem.projector;
    double scale = std::max(1.0, max_abs(problem.cost));
    ComplexMatrix c = problem.cost / scale;
    double sqrt_n = std::sqrt(static_cast<double>(n));

    double rho = settings.rho;
    ComplexMatrix z = p * (ComplexMatrix::Identity(n, n) * (problem.trace / n)) * p;
    ComplexMatrix u = ComplexMatrix::Zero(n, n);
    ComplexMatrix x = z;
    AdmmResult out;
    for (int it = 1; it <= settings.max_iterations; it++) {
        x = project_spectraplex(z - u - c / rho, problem.trace);
        ComplexMatrix x_hat = settings.relaxation * x + (1 - settings.relaxation) * z;
        ComplexMatrix z_new = p * (x_hat + u) * p;
        z_new = (z_new + z_new.adjoint()) * 0.5;
        u += x_hat - z_new;
        double r_prim = (x - z_new).norm();
        double r_dual = rho * (z_new - z).norm();
        z = std::move(z_new);
        out.iterations = it;
        out.primal_residual = r_prim;
        out.dual_residual = r_dual;
        double eps_prim = settings.feasibility_tol * (sqrt_n + std::max(x.norm(), z.norm()));
        double eps_dual = settings.duality_tol * (sqrt_n + rho * u.norm());
        if (r_prim <= eps_prim && r_dual <= eps_dual) {
            out.status = ConicStatus::Solved;
            break;
        }
        if (it % 10 == 0) {
            if (r_prim > 10 * r_dual) {
                rho *= 2;
                u /= 2;
            } else if (r_dual > 10 * r_prim) {
                rho /= 2;
                u *= 2;
            }
        }
    }
    out.x = x;
    out.objective = (problem.cost.cwiseProduct(x.conjugate())).sum().real();
    out.primal_residual = (x - p * x * p).norm();
    return out;
}

}  // namespace kbp
