#include "kbp/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "kbp/tolerances.hpp"

namespace kbp {

namespace {

Index ipow(Index base, int exp) {
    Index out = 1;
    for (int i = 0; i < exp; i++) {
        out *= base;
    }
    return out;
}

std::uint64_t upow(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; i++) {
        out *= base;
    }
    return out;
}

int permutation_sign(const std::vector<int> &p) {
    int sign = 1;
    for (size_t i = 0; i < p.size(); i++) {
        for (size_t j = i + 1; j < p.size(); j++) {
            if (p[i] > p[j]) {
                sign = -sign;
            }
        }
    }
    return sign;
}

void check_hierarchy_shape(const Partition &lambda, int k, int N) {
    if (lambda.rows() != k || lambda.size() != N + k - 1) {
        throw std::invalid_argument(lambda.str() + " is not a " + std::to_string(k) + "-row partition of " +
                                    std::to_string(N + k - 1));
    }
}

}  // namespace

ComplexVector max_entangled(int k) {
    if (k < 1) {
        throw std::invalid_argument("max_entangled: k must be positive");
    }
    ComplexVector v = ComplexVector::Zero(static_cast<Index>(k) * k);
    for (int i = 0; i < k; i++) {
        v(static_cast<Index>(i) * k + i) = 1.0 / std::sqrt(static_cast<double>(k));
    }
    return v;
}

HermitianOp build_pi_k(int k) {
    if (k < 1 || k > 5) {
        throw std::invalid_argument("build_pi_k: k must lie in 1..5");
    }
    Index dim = ipow(k, k);
    ComplexVector eps = ComplexVector::Zero(dim);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    double norm = 0;
    do {
        Index idx = 0;
        for (int v : perm) {
            idx = idx * k + v;
        }
        eps(idx) = permutation_sign(perm);
        norm += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return HermitianOp::symmetrized(eps * eps.adjoint() / norm);
}

WitnessSpec isotropic_witness(int d, double alpha) {
    if (d < 2) {
        throw std::invalid_argument("isotropic_witness: d must be at least 2");
    }
    ComplexVector phi = max_entangled(d);
    ComplexMatrix x = identity(static_cast<Index>(d) * d) + alpha * d * (phi * phi.adjoint());
    WitnessSpec w{d, HermitianOp::symmetrized(x), alpha, "isotropic"};
    return w;
}

WitnessSpec witness_from_matrix(int d, const ComplexMatrix &m, std::string source) {
    if (d < 1) {
        throw WitnessFormatError("witness: d must be positive");
    }
    Index dim = static_cast<Index>(d) * d;
    if (m.rows() != dim || m.cols() != dim) {
        throw WitnessFormatError("witness: expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                                 " matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    double asym = max_abs_diff(m, m.adjoint());
    if (asym > tol::kConstraint) {
        std::ostringstream msg;
        msg << "witness: matrix is not hermitian (max |X - X^dagger| = " << asym << ")";
        throw WitnessFormatError(msg.str());
    }
    // Input already passed the 1e-10 gate; the symmetrization only removes that residue.
    return {d, HermitianOp::symmetrized(m), std::nullopt, std::move(source)};
}

WitnessSpec parse_witness_json(std::string_view text, std::string source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw WitnessFormatError(std::string("witness: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("entries")) {
        throw WitnessFormatError("witness: expected an object with keys \"d\" and \"entries\"");
    }
    if (!doc["d"].is_number_integer() || doc["d"].get<int>() < 1) {
        throw WitnessFormatError("witness: \"d\" must be a positive integer");
    }
    int d = doc["d"].get<int>();
    const auto &entries = doc["entries"];
    Index dim = static_cast<Index>(d) * d;
    if (!entries.is_array() || static_cast<Index>(entries.size()) != dim) {
        throw WitnessFormatError("witness: \"entries\" must have " + std::to_string(dim) + " rows");
    }
    ComplexMatrix m(dim, dim);
    for (Index i = 0; i < dim; i++) {
        const auto &row = entries[i];
        if (!row.is_array() || static_cast<Index>(row.size()) != dim) {
            throw WitnessFormatError("witness: row " + std::to_string(i) + " must have " + std::to_string(dim) +
                                     " entries");
        }
        for (Index j = 0; j < dim; j++) {
            const auto &z = row[j];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw WitnessFormatError("witness: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") must be [re, im]");
            }
            m(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
        }
    }
    return witness_from_matrix(d, m, std::move(source));
}

WitnessSpec load_witness_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw WitnessFormatError("witness: cannot read " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_witness_json(buf.str(), path.string());
}

std::string witness_to_json(const WitnessSpec &w) {
    nlohmann::json rows = nlohmann::json::array();
    const auto &m = w.matrix.matrix();
    for (Index i = 0; i < m.rows(); i++) {
        nlohmann::json row = nlohmann::json::array();
        for (Index j = 0; j < m.cols(); j++) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    nlohmann::json doc{{"d", w.d}, {"entries", std::move(rows)}};
    return doc.dump();
}

UnreducedProblem extend_witness(const WitnessSpec &x, int k, int N) {
    if (k < 1 || N < 1) {
        throw std::invalid_argument("extend_witness: k and N must be positive");
    }
    int d = x.d;
    Index aux_dim = ipow(k, N + 1);
    Index d_dim = ipow(d, N + 1);
    Index dim = aux_dim * d_dim;
    if (dim > kMaxUnreducedDim) {
        throw std::invalid_argument("extend_witness: unreduced dimension " + std::to_string(dim) +
                                    " exceeds the dense cap " + std::to_string(kMaxUnreducedDim));
    }
    ComplexVector phi = max_entangled(k);
    ComplexMatrix aux = kron(phi * phi.adjoint(), identity(ipow(k, N - 1)));
    ComplexMatrix dpart = kron(x.matrix.matrix(), identity(ipow(d, N - 1)));
    UnreducedProblem out;
    out.k = k;
    out.d = d;
    out.N = N;
    out.objective = HermitianOp::symmetrized(kron(aux, dpart));

    // Digits of an index: aux slots 0..N then d slots 0..N, most significant first.
    auto permuted_index = [&](Index idx, const std::vector<int> &perm) {
        std::vector<Index> aux_digits(N + 1), d_digits(N + 1);
        Index a = idx / d_dim;
        Index b = idx % d_dim;
        for (int s = N; s >= 0; s--) {
            aux_digits[s] = a % k;
            a /= k;
            d_digits[s] = b % d;
            b /= d;
        }
        std::vector<Index> new_aux = aux_digits, new_d = d_digits;
        for (int i = 0; i < N; i++) {
            new_aux[1 + perm[i]] = aux_digits[1 + i];
            new_d[1 + perm[i]] = d_digits[1 + i];
        }
        Index ra = 0, rb = 0;
        for (int s = 0; s <= N; s++) {
            ra = ra * k + new_aux[s];
            rb = rb * d + new_d[s];
        }
        return ra * d_dim + rb;
    };

    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    double order = 0;
    do {
        for (Index idx = 0; idx < dim; idx++) {
            p(permuted_index(idx, perm), idx) += 1.0;
        }
        order += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.symmetrizer = HermitianOp::symmetrized(p / order);

    for (int b = 1; b < N; b++) {
        out.generators.push_back(kron(natural_perm(k, N + 1, b + 1, b + 2), natural_perm(d, N + 1, b + 1, b + 2)));
    }
    return out;
}

std::vector<Partition> hierarchy_shapes(int k, int N) {
    return enumerate_partitions(N + k - 1, k);
}

HermitianOp block_objective(const WitnessSpec &x, const Partition &lambda, int k, int N) {
    check_hierarchy_shape(lambda, k, N);
    std::size_t d_lambda = block_size(lambda, k);
    std::size_t a_count = skew_syt_dim({lambda, Partition::column(k)}).convert_to<std::size_t>();
    ComplexMatrix proj = ComplexMatrix::Zero(d_lambda, d_lambda);
    for (std::size_t i = 0; i < a_count; i++) {
        proj(i, i) = 1;
    }
    ComplexMatrix xn = kron(x.matrix.matrix(), identity(ipow(x.d, N - 1)));
    return HermitianOp(kron(proj, xn));
}

BlockProblem build_block_problem(const WitnessSpec &x, const Partition &lambda, int k, int N, double trace_target) {
    check_hierarchy_shape(lambda, k, N);
    if (!(trace_target > 0)) {
        throw std::invalid_argument("build_block_problem: trace target must be positive");
    }
    BlockProblem p;
    p.lambda = lambda;
    p.k = k;
    p.d = x.d;
    p.N = N;
    p.d_lambda = block_size(lambda, k);
    p.a_count = skew_syt_dim({lambda, Partition::column(k)}).convert_to<std::size_t>();
    p.objective = block_objective(x, lambda, k, N);
    for (int j : coxeter_range(k, N)) {
        p.generators.push_back(delta_lambda(lambda, k, x.d, N, j));
    }
    p.trace_target = trace_target;
    p.scalar_constraint_bound = static_cast<std::uint64_t>(N - 1) * p.d_lambda * p.d_lambda * upow(x.d, N + 1);
    return p;
}

std::vector<SizeRow> size_report(int k, int d, int N) {
    std::vector<SizeRow> rows;
    std::uint64_t unreduced = upow(static_cast<std::uint64_t>(k) * d, N + 1);
    auto shapes = hierarchy_shapes(k, N);
    std::reverse(shapes.begin(), shapes.end());
    for (const auto &lambda : shapes) {
        std::uint64_t d_lambda = block_size(lambda, k);
        rows.push_back({lambda, unreduced, d_lambda * upow(d, N + 1), d_lambda});
    }
    return rows;
}

}  // namespace kbp
