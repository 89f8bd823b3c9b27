#include "kbp/sym_rep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>

namespace kbp {

namespace {

using GeneratorKey = std::tuple<std::vector<int>, int, int>;

std::mutex memo_mutex;
std::map<GeneratorKey, std::shared_ptr<const RealMatrix>> generator_memo;

RealMatrix build_generator(const Partition &shape, int j, int k) {
    auto basis = enumerate_syt(shape, k);
    std::map<std::vector<int>, Index> index_of;
    for (size_t a = 0; a < basis.size(); a++) {
        index_of[basis[a].tableau.column_word()] = static_cast<Index>(a);
    }
    Index n = static_cast<Index>(basis.size());
    RealMatrix m = RealMatrix::Zero(n, n);
    for (Index a = 0; a < n; a++) {
        const Tableau &t = basis[a].tableau;
        Box lo = t.position_of(j);
        Box hi = t.position_of(j + 1);
        if (lo.row == hi.row) {
            m(a, a) = 1;
            continue;
        }
        if (lo.col == hi.col) {
            m(a, a) = -1;
            continue;
        }
        double r = hi.content() - lo.content();
        m(a, a) = 1 / r;
        auto rows = t.rows();
        std::swap(rows[lo.row][lo.col], rows[hi.row][hi.col]);
        Index b = index_of.at(Tableau(shape, rows).column_word());
        m(a, b) = std::sqrt(1 - 1 / (r * r));
    }
    return m;
}

std::shared_ptr<const RealMatrix> cached_generator(const Partition &shape, int j, int k) {
    GeneratorKey key{shape.parts(), j, k};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = generator_memo.find(key);
        if (it != generator_memo.end()) {
            return it->second;
        }
    }
    auto built = std::make_shared<const RealMatrix>(build_generator(shape, j, k));
    std::lock_guard<std::mutex> lock(memo_mutex);
    generator_memo[key] = built;
    return built;
}

void check_coxeter(int k, int N, int j) {
    if (N < 1 || j < k || j > N + k - 2) {
        throw std::invalid_argument("generator " + std::to_string(j) + " is outside Cox_N for k=" +
                                    std::to_string(k) + ", N=" + std::to_string(N));
    }
}

}  // namespace

std::vector<int> coxeter_range(int k, int N) {
    std::vector<int> out;
    for (int j = k; j <= N + k - 2; j++) {
        out.push_back(j);
    }
    return out;
}

RepMatrix young_orthogonal_generator(const Partition &shape, int j, int k) {
    if (j < 1 || j >= shape.size()) {
        throw std::invalid_argument("young_orthogonal_generator: j=" + std::to_string(j) + " out of range for " +
                                    shape.str());
    }
    return {shape, j, *cached_generator(shape, j, k)};
}

RepMatrix restricted_generator(const Partition &shape, int j, int k) {
    check_coxeter(k, shape.size() - k + 1, j);
    auto basis = enumerate_syt(shape, k);
    Index d_lambda = 0;
    while (d_lambda < static_cast<Index>(basis.size()) && basis[d_lambda].cls != TableauClass::M) {
        d_lambda++;
    }
    RepMatrix full = young_orthogonal_generator(shape, j, k);
    Index rest = full.matrix.rows() - d_lambda;
    if (rest > 0) {
        double coupling = full.matrix.block(0, d_lambda, d_lambda, rest).cwiseAbs().maxCoeff();
        coupling = std::max(coupling, full.matrix.block(d_lambda, 0, rest, d_lambda).cwiseAbs().maxCoeff());
        if (coupling != 0) {
            throw ConsistencyError("restricted_generator: A/S block of " + shape.str() + " couples to class M under (" +
                                   std::to_string(j) + "," + std::to_string(j + 1) + ")");
        }
    }
    return {shape, j, full.matrix.topLeftCorner(d_lambda, d_lambda)};
}

ComplexMatrix natural_perm(int d, int slots, int a, int b) {
    if (d < 1 || a < 1 || b > slots || a >= b) {
        throw std::invalid_argument("natural_perm: need 1 <= a < b <= slots");
    }
    Index dim = 1;
    for (int s = 0; s < slots; s++) {
        dim *= d;
    }
    Index stride_a = 1;
    for (int s = a; s < slots; s++) {
        stride_a *= d;
    }
    Index stride_b = 1;
    for (int s = b; s < slots; s++) {
        stride_b *= d;
    }
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    for (Index x = 0; x < dim; x++) {
        Index da = (x / stride_a) % d;
        Index db = (x / stride_b) % d;
        Index y = x + (db - da) * stride_a + (da - db) * stride_b;
        p(y, x) = 1;
    }
    return p;
}

DeltaOperator delta_lambda(const Partition &shape, int k, int d, int N, int j) {
    if (shape.size() != N + k - 1) {
        throw std::invalid_argument("delta_lambda: " + shape.str() + " does not have N+k-1 boxes");
    }
    check_coxeter(k, N, j);
    RepMatrix r = restricted_generator(shape, j, k);
    ComplexMatrix m = kron(r.matrix.cast<Complex>(), natural_perm(d, N + 1, j - k + 2, j - k + 3));
    return {shape, k, d, N, j, std::move(m)};
}

std::vector<int> reduced_word(std::span<const int> perm) {
    std::vector<int> p(perm.begin(), perm.end());
    std::vector<int> swaps;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < p.size(); i++) {
            if (p[i] > p[i + 1]) {
                std::swap(p[i], p[i + 1]);
                swaps.push_back(static_cast<int>(i) + 1);
                changed = true;
            }
        }
    }
    // p s_{b1} ... s_{bm} = id, so p = s_{bm} ... s_{b1}.
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

ComplexMatrix delta_of_word(const Partition &shape, int k, int d, int N, std::span<const int> word) {
    Index dim = static_cast<Index>(block_size(shape, k));
    for (int s = 0; s <= N; s++) {
        dim *= d;
    }
    ComplexMatrix out = identity(dim);
    for (int b : word) {
        out = out * delta_lambda(shape, k, d, N, b + k - 1).matrix;
    }
    return out;
}

ComplexMatrix delta_of_permutation(const Partition &shape, int k, int d, int N, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != N) {
        throw std::invalid_argument("delta_of_permutation: permutation size differs from N");
    }
    auto word = reduced_word(perm);
    return delta_of_word(shape, k, d, N, word);
}

HermitianOp symmetrizer(const Partition &shape, int k, int d, int N) {
    if (N > 8) {
        throw std::invalid_argument("symmetrizer: N > 8 is not enumerable");
    }
    std::vector<ComplexMatrix> gens;
    for (int j : coxeter_range(k, N)) {
        gens.push_back(delta_lambda(shape, k, d, N, j).matrix);
    }
    Index dim = static_cast<Index>(block_size(shape, k));
    for (int s = 0; s <= N; s++) {
        dim *= d;
    }
    // Breadth-first walk of the Cayley graph; each group element is reached once.
    std::vector<int> start(N);
    for (int i = 0; i < N; i++) {
        start[i] = i;
    }
    std::set<std::vector<int>> seen{start};
    std::vector<std::pair<std::vector<int>, ComplexMatrix>> layer{{start, identity(dim)}};
    ComplexMatrix sum = identity(dim);
    while (!layer.empty()) {
        std::vector<std::pair<std::vector<int>, ComplexMatrix>> next;
        for (const auto &[perm, mat] : layer) {
            for (int b = 1; b < N; b++) {
                std::vector<int> p = perm;
                std::swap(p[b - 1], p[b]);
                if (!seen.insert(p).second) {
                    continue;
                }
                ComplexMatrix m = mat * gens[b - 1];
                sum += m;
                next.emplace_back(std::move(p), std::move(m));
            }
        }
        layer = std::move(next);
    }
    double order = static_cast<double>(seen.size());
    return HermitianOp::symmetrized(sum / order);
}

}  // namespace kbp
