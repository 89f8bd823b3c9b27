#include "kbp/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kbp/reduction.hpp"
#include "kbp/schur.hpp"
#include "kbp/shifted_schur.hpp"
#include "kbp/solver.hpp"
#include "kbp/sym_rep.hpp"
#include "kbp/young.hpp"

namespace kbp::cli {

namespace {

std::string sci(double v) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

Check bound_check(std::string name, double worst, double tol) {
    return {std::move(name), worst <= tol, "max residual " + sci(worst) + " (tol " + sci(tol) + ")"};
}

ComplexMatrix random_complex(Index rows, Index cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (Index i = 0; i < rows; i++) {
        for (Index j = 0; j < cols; j++) {
            m(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    return m;
}

HermitianOp random_density(Index dim, std::mt19937_64 &rng) {
    ComplexMatrix a = random_complex(dim, dim, rng);
    ComplexMatrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    return HermitianOp::symmetrized(rho);
}

ComplexMatrix haar_unitary(Index dim, std::mt19937_64 &rng) {
    Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(dim, dim, rng));
    ComplexMatrix q = qr.householderQ();
    for (Index i = 0; i < dim; i++) {
        Complex r = qr.matrixQR()(i, i);
        q.col(i) *= r / std::abs(r);
    }
    return q;
}

ComplexMatrix tensor_power(const ComplexMatrix &u, int n) {
    ComplexMatrix out = identity(1);
    for (int i = 0; i < n; i++) {
        out = kron(out, u);
    }
    return out;
}

RealMatrix rows_of(std::initializer_list<std::initializer_list<double>> rows) {
    RealMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto &r : rows) {
        Index j = 0;
        for (double v : r) {
            m(i, j++) = v;
        }
        i++;
    }
    return m;
}

RealMatrix displayed_t4() {
    double h = 1 / std::sqrt(2.0);
    return rows_of({{0, h, -h, 0}, {1, 0, 0, 0}, {0, h, h, 0}, {0, 0, 0, 1}});
}

RealMatrix displayed_t8() {
    double a = 1 / std::sqrt(2.0), b = 1 / std::sqrt(6.0), c = 1 / std::sqrt(3.0);
    return rows_of({{0, 0, a, 0, -a, 0, 0, 0},
                    {0, 0, 0, a, 0, -a, 0, 0},
                    {0, 2 * b, -b, 0, -b, 0, 0, 0},
                    {0, 0, 0, b, 0, b, -2 * b, 0},
                    {1, 0, 0, 0, 0, 0, 0, 0},
                    {0, c, c, 0, c, 0, 0, 0},
                    {0, 0, 0, c, 0, c, c, 0},
                    {0, 0, 0, 0, 0, 0, 0, 1}});
}

double row_sign_distance(const ComplexMatrix &t, const RealMatrix &expected) {
    if (t.rows() != expected.rows() || t.cols() != expected.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0;
    for (Index r = 0; r < t.rows(); r++) {
        RealVector row = t.row(r).real().transpose();
        RealVector e = expected.row(r).transpose();
        worst = std::max(worst, std::min((row - e).cwiseAbs().maxCoeff(), (row + e).cwiseAbs().maxCoeff()));
    }
    return worst + t.imag().cwiseAbs().maxCoeff();
}

/// Deviation of m from the pattern diag_lambda(I_f (x) U_lambda).
double multiplicity_residual(const SchurTransform &t, const ComplexMatrix &m) {
    double worst = 0;
    ComplexMatrix masked = m;
    for (const auto &b : t.shapes) {
        Index size = static_cast<Index>(b.syt) * b.unitary;
        ComplexMatrix block = m.block(b.offset, b.offset, size, size);
        ComplexMatrix u = block.topLeftCorner(b.unitary, b.unitary);
        worst = std::max(worst, max_abs_diff(block, kron(identity(b.syt), u)));
        masked.block(b.offset, b.offset, size, size).setZero();
    }
    return std::max(worst, max_abs(masked));
}

/// Expected image diag_lambda(pi_lambda(j) (x) I_U).
ComplexMatrix permutation_image(const SchurTransform &t, int j) {
    ComplexMatrix out = ComplexMatrix::Zero(t.matrix.rows(), t.matrix.cols());
    for (const auto &b : t.shapes) {
        ComplexMatrix pi = b.shape.size() > 1 ? ComplexMatrix(young_orthogonal_generator(b.shape, j, t.k).matrix.cast<Complex>())
                                              : identity(1);
        Index size = static_cast<Index>(b.syt) * b.unitary;
        out.block(b.offset, b.offset, size, size) = kron(pi, identity(b.unitary));
    }
    return out;
}

/// Standard fillings of outer/inner counted by adding one box at a time.
long long count_skew_fillings(std::vector<int> &cur, const Partition &outer) {
    bool done = true;
    long long total = 0;
    for (int i = 0; i < outer.rows(); i++) {
        if (cur[i] < outer.row(i)) {
            done = false;
            if (i == 0 || cur[i - 1] > cur[i]) {
                cur[i]++;
                total += count_skew_fillings(cur, outer);
                cur[i]--;
            }
        }
    }
    return done ? 1 : total;
}

long long skew_count_oracle(const Partition &outer, const Partition &inner) {
    if (!outer.contains(inner)) {
        return 0;
    }
    std::vector<int> cur(outer.rows());
    for (int i = 0; i < outer.rows(); i++) {
        cur[i] = inner.row(i);
    }
    return count_skew_fillings(cur, outer);
}

}  // namespace

std::vector<Check> verify_appendix() {
    std::vector<Check> out;
    const double s3 = std::sqrt(3.0);
    RealMatrix y21 = rows_of({{0.5, s3 / 2}, {s3 / 2, -0.5}});
    RealMatrix y22 = rows_of({{-1, 0}, {0, 1}});
    RealMatrix y31 = rows_of({{0.5, s3 / 2, 0}, {s3 / 2, -0.5, 0}, {0, 0, 1}});
    struct Fixture {
        const char *name;
        Partition shape;
        int N, j;
        const RealMatrix &young;
        int slots, a, b;
    };
    Fixture fixtures[] = {
        {"delta (2,1) N=2 generator 2", Partition({2, 1}), 2, 2, y21, 3, 2, 3},
        {"delta (2,2) N=3 generator 3", Partition({2, 2}), 3, 3, y22, 4, 3, 4},
        {"delta (3,1) N=3 generator 2", Partition({3, 1}), 3, 2, y31, 4, 2, 3},
    };
    for (const auto &f : fixtures) {
        double worst = 0;
        for (int d = 2; d <= 3; d++) {
            ComplexMatrix got = delta_lambda(f.shape, 2, d, f.N, f.j).matrix;
            ComplexMatrix expected = kron(f.young.cast<Complex>(), natural_perm(d, f.slots, f.a, f.b));
            worst = std::max(worst, max_abs_diff(got, expected));
        }
        out.push_back(bound_check(f.name, worst, 1e-12));
    }
    out.push_back(bound_check("schur transform k=2 n=2 (rows up to sign)",
                              row_sign_distance(schur_transform(2, 2)->matrix, displayed_t4()), 1e-12));
    out.push_back(bound_check("schur transform k=2 n=3 (rows up to sign)",
                              row_sign_distance(schur_transform(2, 3)->matrix, displayed_t8()), 1e-12));

    std::mt19937_64 rng(101);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
        auto t = schur_transform(k, n);
        const ComplexMatrix &m = t->matrix;
        double perm = 0;
        for (int j = 1; j < n; j++) {
            perm = std::max(perm, max_abs_diff(m * natural_perm(k, n, j, j + 1) * m.adjoint(), permutation_image(*t, j)));
        }
        double unit = 0;
        for (int trial = 0; trial < 20; trial++) {
            ComplexMatrix u = tensor_power(haar_unitary(k, rng), n);
            unit = std::max(unit, multiplicity_residual(*t, m * u * m.adjoint()));
        }
        std::string tag = " k=" + std::to_string(k) + " n=" + std::to_string(n);
        out.push_back(bound_check("block-diagonalizes permutations" + tag, perm, 1e-9));
        out.push_back(bound_check("block-diagonalizes 20 random U^(x)n" + tag, unit, 1e-9));
    }
    return out;
}

std::vector<Check> verify_twirl() {
    std::vector<Check> out;
    std::mt19937_64 rng(202);
    double idem = 0, trace = 0, comm = 0;
    for (auto [k, n, m] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {2, 2, 2}, {2, 3, 2}, {3, 2, 2}}) {
        Index dim = static_cast<Index>(std::pow(k, n)) * m;
        HermitianOp rho = random_density(dim, rng);
        HermitianOp once = twirl(rho, k, n, m);
        idem = std::max(idem, max_abs_diff(once.matrix(), twirl(once, k, n, m).matrix()));
        trace = std::max(trace, std::abs(once.trace() - rho.trace()));
        for (int trial = 0; trial < 20; trial++) {
            ComplexMatrix u = kron(tensor_power(haar_unitary(k, rng), n), identity(m));
            comm = std::max(comm, max_abs_diff(u * once.matrix(), once.matrix() * u));
        }
    }
    out.push_back(bound_check("twirl idempotence", idem, 1e-9));
    out.push_back(bound_check("twirl trace preservation", trace, 1e-9));
    out.push_back(bound_check("twirl commutes with U^(x)n", comm, 1e-9));

    const int samples = 100000;
    double haar = 0;
    for (int trial = 0; trial < 3; trial++) {
        HermitianOp rho = random_density(4, rng);
        ComplexMatrix avg = ComplexMatrix::Zero(4, 4);
        for (int s = 0; s < samples; s++) {
            ComplexMatrix u = haar_unitary(2, rng);
            ComplexMatrix uu = kron(u, u);
            avg.noalias() += uu * rho.matrix() * uu.adjoint();
        }
        avg /= samples;
        haar = std::max(haar, max_abs_diff(avg, twirl(rho, 2, 2, 1).matrix()));
    }
    out.push_back(bound_check("twirl matches Haar sampling (3 states, 1e5 samples, k=2 n=2)", haar, 2e-2));
    return out;
}

std::vector<Check> verify_ratio() {
    std::vector<Check> out;
    int identity_cases = 0, identity_bad = 0, oracle_bad = 0;
    for (int n = 1; n <= 9; n++) {
        for (const Partition &lambda : partitions_at_most(n, n)) {
            BigInt f = syt_dim(lambda);
            for (int k = 1; k <= n; k++) {
                std::vector<Partition> inners{Partition::column(k)};
                if (auto s = Partition::s_inner(k); s && s->size() <= n) {
                    inners.push_back(*s);
                }
                for (const Partition &mu : inners) {
                    BigInt skew = skew_syt_dim({lambda, mu});
                    identity_cases++;
                    if (ratio_skew(lambda, mu) * Rational(f) != Rational(skew)) {
                        identity_bad++;
                    }
                    if (skew != BigInt(skew_count_oracle(lambda, mu))) {
                        oracle_bad++;
                    }
                }
            }
        }
    }
    out.push_back({"ratio_skew * f^lambda = f^(lambda/mu), n <= 9", identity_bad == 0,
                   std::to_string(identity_cases - identity_bad) + "/" + std::to_string(identity_cases) + " exact"});
    out.push_back({"skew dimension against box-by-box enumeration, n <= 9", oracle_bad == 0,
                   std::to_string(oracle_bad) + " mismatches"});

    int closed_cases = 0, closed_bad = 0;
    for (int k = 2; k <= 3; k++) {
        for (int n = k; n <= 9; n++) {
            for (const Partition &lambda : enumerate_partitions(n, k)) {
                long long a = 0, s = 0;
                for (const Tableau &t : enumerate_syt_column_lex(lambda)) {
                    TableauClass c = classify(t, k);
                    a += c == TableauClass::A;
                    s += c == TableauClass::S;
                }
                if (s == 0) {
                    continue;
                }
                closed_cases++;
                if (ratio_a_over_s(lambda, k) != Rational(a, s)) {
                    closed_bad++;
                }
            }
        }
    }
    out.push_back({"closed-form |A|/|S| against class enumeration, k in {2,3}, n <= 9", closed_bad == 0,
                   std::to_string(closed_cases - closed_bad) + "/" + std::to_string(closed_cases) + " exact"});

    Rational example = ratio_a_over_s(Partition({3, 2, 1}), 3);
    out.push_back({"ratio_a_over_s((3,2,1), 3) = 1/3", example == Rational(1, 3), "got " + example.str()});

    std::mt19937_64 rng(303);
    std::uniform_int_distribution<int> draw(1, 1000);
    int bound_cases = 0, bound_bad = 0;
    for (int k = 2; k <= 4; k++) {
        std::vector<Rational> uniform(k, Rational(1, k));
        AsymptoticRatio u = asymptotic_ratio(AsymptoticWeights(uniform));
        bound_cases++;
        bound_bad += (u.within_bound && u.equality && u.value == u.bound) ? 0 : 1;
        for (int trial = 0; trial < 100; trial++) {
            std::vector<int> raw(k);
            int total = 0;
            for (int &r : raw) {
                r = draw(rng);
                total += r;
            }
            std::sort(raw.rbegin(), raw.rend());
            std::vector<Rational> omega;
            for (int r : raw) {
                omega.emplace_back(r, total);
            }
            bool is_uniform = std::all_of(raw.begin(), raw.end(), [&](int r) { return r == raw[0]; });
            AsymptoticRatio res = asymptotic_ratio(AsymptoticWeights(omega));
            bound_cases++;
            bool ok = res.value <= res.bound && res.within_bound && res.equality == is_uniform &&
                      (res.value == res.bound) == is_uniform;
            bound_bad += ok ? 0 : 1;
        }
    }
    out.push_back({"asymptotic ratio <= 1/(k^2-1), equality only at uniform weights, k in {2,3,4}", bound_bad == 0,
                   std::to_string(bound_cases - bound_bad) + "/" + std::to_string(bound_cases) + " weight vectors"});
    return out;
}

std::vector<Check> verify_equality() {
    std::vector<Check> out;
    SolverConfig cfg;
    cfg.method = SolveMethod::Eig;
    struct Case {
        int k, d, N;
    };
    std::mt19937_64 rng(404);
    for (Case c : {Case{2, 2, 1}, Case{2, 2, 2}, Case{2, 2, 3}, Case{2, 3, 1}, Case{2, 3, 2}, Case{3, 2, 1},
                   Case{3, 2, 2}}) {
        std::vector<WitnessSpec> witnesses;
        for (double alpha : {-1.0, -0.5, -0.3}) {
            witnesses.push_back(isotropic_witness(c.d, alpha));
        }
        ComplexMatrix g = random_complex(c.d * c.d, c.d * c.d, rng);
        witnesses.push_back(witness_from_matrix(c.d, (g + g.adjoint()) / 2.0, "random"));
        double worst = 0;
        for (const auto &x : witnesses) {
            double reduced = solve_hierarchy(x, c.k, c.N, cfg).hierarchy_value;
            double oracle = unreduced_oracle(x, c.k, c.N).clipped;
            worst = std::max(worst, std::abs(reduced - oracle));
        }
        out.push_back(bound_check("reduced = unreduced, k=" + std::to_string(c.k) + " d=" + std::to_string(c.d) +
                                      " N=" + std::to_string(c.N),
                                  worst, 1e-6));
    }
    return out;
}

const std::vector<std::string> &verify_suite_names() {
    static const std::vector<std::string> names{"appendix", "twirl", "ratio", "equality", "all"};
    return names;
}

std::vector<Check> run_verify_suite(const std::string &suite) {
    if (suite == "appendix") {
        return verify_appendix();
    }
    if (suite == "twirl") {
        return verify_twirl();
    }
    if (suite == "ratio") {
        return verify_ratio();
    }
    if (suite == "equality") {
        return verify_equality();
    }
    if (suite == "all") {
        std::vector<Check> out;
        for (auto *fn : {verify_appendix, verify_twirl, verify_ratio, verify_equality}) {
            auto part = fn();
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown suite '" + suite + "' (expected appendix, twirl, ratio, equality or all)");
}

bool all_passed(const std::vector<Check> &checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
}

}  // namespace kbp::cli
