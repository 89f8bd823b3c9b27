#include "kbp/schur.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kbp {

namespace {

constexpr double kInvarianceTol = 1e-8;

std::vector<int> digits_of(Index x, int k, int n) {
    std::vector<int> digits(n);
    for (int s = n - 1; s >= 0; s--) {
        digits[s] = static_cast<int>(x % k);
        x /= k;
    }
    return digits;
}

Index index_of(const std::vector<int> &digits, int k) {
    Index x = 0;
    for (int v : digits) {
        x = x * k + v;
    }
    return x;
}

/// Index permutation of the tensor basis swapping slots a and b (0-based).
std::vector<Index> slot_swap(int k, int n, int a, int b) {
    Index dim = 1;
    for (int s = 0; s < n; s++) {
        dim *= k;
    }
    std::vector<Index> out(dim);
    for (Index x = 0; x < dim; x++) {
        auto digits = digits_of(x, k, n);
        std::swap(digits[a], digits[b]);
        out[x] = index_of(digits, k);
    }
    return out;
}

void compositions_rec(int remaining, int parts, std::vector<int> &cur, std::vector<std::vector<int>> &out) {
    if (parts == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int c = remaining; c >= 0; c--) {
        cur.push_back(c);
        compositions_rec(remaining - c, parts - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<int> content_vector(const Tableau &t) {
    std::vector<int> out;
    for (int v = 1; v <= t.shape().size(); v++) {
        out.push_back(t.position_of(v).content());
    }
    return out;
}

/// Joint eigenspaces of the Jucys-Murphy elements X_2..X_n inside one weight space.
class WeightSpaceSplitter {
   public:
    WeightSpaceSplitter(int k, int n, const std::vector<int> &weight) : k_(k), n_(n) {
        Index dim = 1;
        for (int s = 0; s < n; s++) {
            dim *= k;
        }
        for (Index x = 0; x < dim; x++) {
            auto digits = digits_of(x, k, n);
            std::vector<int> counts(k, 0);
            for (int v : digits) {
                counts[v]++;
            }
            if (counts == weight) {
                local_[x] = static_cast<Index>(members_.size());
                members_.push_back(x);
            }
        }
        for (int m = 1; m < n; m++) {
            for (int i = 0; i < m; i++) {
                auto full = slot_swap(k, n, i, m);
                std::vector<Index> local(members_.size());
                for (size_t a = 0; a < members_.size(); a++) {
                    local[a] = local_.at(full[members_[a]]);
                }
                swaps_[{i, m}] = std::move(local);
            }
        }
    }

    const std::vector<Index> &members() const {
        return members_;
    }

    /// Basis of the joint eigenspace with the given contents for X_2..X_n, in weight-space coordinates.
    RealMatrix eigenspace(const std::vector<int> &contents) {
        auto it = cache_.find(contents);
        if (it != cache_.end()) {
            return it->second;
        }
        RealMatrix result;
        if (contents.size() <= 1) {
            result = RealMatrix::Identity(members_.size(), members_.size());
        } else {
            std::vector<int> prefix(contents.begin(), contents.end() - 1);
            RealMatrix b = eigenspace(prefix);
            int m = static_cast<int>(contents.size()) - 1;
            result = restrict_to(b, m, contents.back());
        }
        cache_[contents] = result;
        return result;
    }

   private:
    RealMatrix restrict_to(const RealMatrix &b, int m, int target) {
        if (b.cols() == 0) {
            return b;
        }
        RealMatrix y = RealMatrix::Zero(b.rows(), b.cols());
        for (int i = 0; i < m; i++) {
            const auto &perm = swaps_.at({i, m});
            for (Index r = 0; r < b.rows(); r++) {
                y.row(perm[r]) += b.row(r);
            }
        }
        RealMatrix a = b.transpose() * y;
        a = (a + a.transpose()) * 0.5;
        Eigen::SelfAdjointEigenSolver<RealMatrix> eig(a);
        std::vector<Index> keep;
        for (Index c = 0; c < a.rows(); c++) {
            if (std::abs(eig.eigenvalues()(c) - target) < 0.5) {
                keep.push_back(c);
            }
        }
        RealMatrix out(b.rows(), static_cast<Index>(keep.size()));
        for (size_t c = 0; c < keep.size(); c++) {
            out.col(static_cast<Index>(c)) = b * eig.eigenvectors().col(keep[c]);
        }
        return out;
    }

    int k_;
    int n_;
    std::vector<Index> members_;
    std::map<Index, Index> local_;
    std::map<std::pair<int, int>, std::vector<Index>> swaps_;
    std::map<std::vector<int>, RealMatrix> cache_;
};

void fix_sign(Eigen::Ref<RealVector> v) {
    for (Index i = 0; i < v.size(); i++) {
        if (std::abs(v(i)) > 1e-9) {
            if (v(i) < 0) {
                v = -v;
            }
            return;
        }
    }
}

std::shared_ptr<const SchurTransform> build_schur(int k, int n) {
    Index dim = 1;
    for (int s = 0; s < n; s++) {
        dim *= k;
    }
    auto out = std::make_shared<SchurTransform>();
    out->k = k;
    out->n = n;

    std::vector<std::vector<int>> weights;
    std::vector<int> cur;
    compositions_rec(n, k, cur, weights);
    std::vector<WeightSpaceSplitter> splitters;
    for (const auto &w : weights) {
        splitters.emplace_back(k, n, w);
    }

    auto shapes = partitions_at_most(n, k);
    std::sort(shapes.begin(), shapes.end());
    RealMatrix t(dim, dim);
    Index row = 0;
    for (const auto &shape : shapes) {
        auto basis = enumerate_syt(shape, k);
        int f = static_cast<int>(basis.size());
        std::vector<int> contents = content_vector(basis[0].tableau);

        // Reference tableau: U(k) basis from the weight spaces, highest count of letter 1 first.
        RealMatrix ref(dim, 0);
        for (auto &splitter : splitters) {
            RealMatrix local = splitter.eigenspace(contents);
            if (local.cols() == 0) {
                continue;
            }
            RealMatrix embedded = RealMatrix::Zero(dim, local.cols());
            for (Index r = 0; r < local.rows(); r++) {
                embedded.row(splitter.members()[r]) = local.row(r);
            }
            for (Index c = 0; c < embedded.cols(); c++) {
                fix_sign(embedded.col(c));
            }
            RealMatrix grown(dim, ref.cols() + embedded.cols());
            grown << ref, embedded;
            ref = std::move(grown);
        }
        Index u = ref.cols();
        if (u != unitary_dim(shape, k)) {
            throw std::logic_error("schur_transform: multiplicity mismatch for " + shape.str());
        }

        // Transport along adjacent transpositions: v_{s_j T} = (s_j v_T - v_T / r) / sqrt(1 - 1/r^2).
        std::map<std::vector<int>, int> position;
        for (int p = 0; p < f; p++) {
            position[basis[p].tableau.column_word()] = p;
        }
        std::vector<RealMatrix> vecs(f);
        vecs[0] = ref;
        std::deque<int> queue{0};
        while (!queue.empty()) {
            int p = queue.front();
            queue.pop_front();
            const Tableau &tab = basis[p].tableau;
            for (int j = 1; j < n; j++) {
                Box lo = tab.position_of(j);
                Box hi = tab.position_of(j + 1);
                if (lo.row == hi.row || lo.col == hi.col) {
                    continue;
                }
                auto rows = tab.rows();
                std::swap(rows[lo.row][lo.col], rows[hi.row][hi.col]);
                int target = position.at(Tableau(shape, rows).column_word());
                if (vecs[target].size() != 0) {
                    continue;
                }
                double r = hi.content() - lo.content();
                auto perm = slot_swap(k, n, j - 1, j);
                RealMatrix swapped(dim, u);
                for (Index x = 0; x < dim; x++) {
                    swapped.row(perm[x]) = vecs[p].row(x);
                }
                vecs[target] = (swapped - vecs[p] / r) / std::sqrt(1 - 1 / (r * r));
                queue.push_back(target);
            }
        }

        out->shapes.push_back({shape, row, f, static_cast<int>(u)});
        for (int p = 0; p < f; p++) {
            for (Index q = 0; q < u; q++) {
                t.row(row++) = vecs[p].col(q).transpose();
                out->row_labels.push_back({shape, p, static_cast<int>(q)});
            }
        }
    }
    out->matrix = t.cast<Complex>();
    return out;
}

std::mutex schur_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const SchurTransform>> schur_memo;

void check_dims(const HermitianOp &rho, int k, int n, int m) {
    Index dim = 1;
    for (int s = 0; s < n; s++) {
        dim *= k;
    }
    if (m < 1 || rho.dim() != dim * m) {
        throw std::invalid_argument("twirl: operator dimension " + std::to_string(rho.dim()) + " is not k^n * m");
    }
}

/// Partial trace over the U(k) multiplicity index of one diagram block of sigma (Schur coordinates).
ComplexMatrix reduce_block(const ComplexMatrix &sigma, const SchurTransform::ShapeBlock &b, int m) {
    Index f = b.syt;
    Index u = b.unitary;
    ComplexMatrix r = ComplexMatrix::Zero(f * m, f * m);
    Index base = b.offset * m;
    for (Index p = 0; p < f; p++) {
        for (Index pp = 0; pp < f; pp++) {
            for (Index q = 0; q < u; q++) {
                r.block(p * m, pp * m, m, m) += sigma.block(base + (p * u + q) * m, base + (pp * u + q) * m, m, m);
            }
        }
    }
    return r;
}

/// Places (I_u / u) (x) r back into Schur coordinates, p-major.
void expand_block(ComplexMatrix &sigma, const ComplexMatrix &r, const SchurTransform::ShapeBlock &b, int m) {
    Index f = b.syt;
    Index u = b.unitary;
    Index base = b.offset * m;
    for (Index p = 0; p < f; p++) {
        for (Index pp = 0; pp < f; pp++) {
            for (Index q = 0; q < u; q++) {
                sigma.block(base + (p * u + q) * m, base + (pp * u + q) * m, m, m) =
                    r.block(p * m, pp * m, m, m) / static_cast<double>(u);
            }
        }
    }
}

}  // namespace

std::shared_ptr<const SchurTransform> schur_transform(int k, int n) {
    if (k < 1 || n < 1) {
        throw std::invalid_argument("schur_transform: k and n must be positive");
    }
    Index dim = 1;
    for (int s = 0; s < n; s++) {
        dim *= k;
        if (dim > kMaxSchurDim) {
            throw std::invalid_argument("schur_transform: k^n exceeds " + std::to_string(kMaxSchurDim));
        }
    }
    {
        std::lock_guard<std::mutex> lock(schur_mutex);
        auto it = schur_memo.find({k, n});
        if (it != schur_memo.end()) {
            return it->second;
        }
    }
    auto built = build_schur(k, n);
    std::lock_guard<std::mutex> lock(schur_mutex);
    schur_memo[{k, n}] = built;
    return built;
}

HermitianOp twirl(const HermitianOp &rho, int k, int n, int m) {
    check_dims(rho, k, n, m);
    auto t = schur_transform(k, n);
    ComplexMatrix t_ext = kron(t->matrix, identity(m));
    ComplexMatrix sigma = t_ext * rho.matrix() * t_ext.adjoint();
    ComplexMatrix out = ComplexMatrix::Zero(sigma.rows(), sigma.cols());
    for (const auto &b : t->shapes) {
        expand_block(out, reduce_block(sigma, b, m), b, m);
    }
    return HermitianOp::symmetrized(t_ext.adjoint() * out * t_ext);
}

BlockDecomposition extract_blocks(const HermitianOp &twirled, int k, int n, int m) {
    check_dims(twirled, k, n, m);
    double residual = max_abs_diff(twirl(twirled, k, n, m).matrix(), twirled.matrix());
    if (residual > kInvarianceTol) {
        std::ostringstream msg;
        msg << "extract_blocks: input is not twirl-invariant (residual " << residual << ")";
        throw std::invalid_argument(msg.str());
    }
    auto t = schur_transform(k, n);
    ComplexMatrix t_ext = kron(t->matrix, identity(m));
    ComplexMatrix sigma = t_ext * twirled.matrix() * t_ext.adjoint();
    BlockDecomposition out{k, n, m, {}};
    for (const auto &b : t->shapes) {
        ComplexMatrix r = reduce_block(sigma, b, m);
        double w = r.trace().real();
        DiagramBlock block;
        block.shape = b.shape;
        block.weight = w;
        if (std::abs(w) > 1e-14) {
            block.rho = HermitianOp::symmetrized(r / w);
        } else {
            block.weight = 0;
            block.rho = HermitianOp(ComplexMatrix::Zero(r.rows(), r.cols()));
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

HermitianOp reassemble(const BlockDecomposition &blocks) {
    auto t = schur_transform(blocks.k, blocks.n);
    int m = blocks.m;
    Index dim = t->matrix.rows() * m;
    ComplexMatrix sigma = ComplexMatrix::Zero(dim, dim);
    for (const auto &b : t->shapes) {
        auto it = std::find_if(blocks.blocks.begin(), blocks.blocks.end(),
                               [&](const DiagramBlock &d) { return d.shape == b.shape; });
        if (it == blocks.blocks.end()) {
            continue;
        }
        if (it->rho.dim() != static_cast<Index>(b.syt) * m) {
            throw std::invalid_argument("reassemble: block " + b.shape.str() + " has the wrong dimension");
        }
        expand_block(sigma, it->weight * it->rho.matrix(), b, m);
    }
    ComplexMatrix t_ext = kron(t->matrix, identity(m));
    return HermitianOp::symmetrized(t_ext.adjoint() * sigma * t_ext);
}

}  // namespace kbp
