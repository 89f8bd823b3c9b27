#include "kbp/shifted_schur.hpp"

#include <stdexcept>

namespace kbp {

AsymptoticWeights::AsymptoticWeights(std::vector<Rational> omega) : omega_(std::move(omega)) {
    if (omega_.empty()) {
        throw std::invalid_argument("AsymptoticWeights: empty");
    }
    Rational sum = 0;
    for (size_t i = 0; i < omega_.size(); i++) {
        if (omega_[i] <= 0 || omega_[i] > 1) {
            throw std::invalid_argument("AsymptoticWeights: weights must lie in (0, 1]");
        }
        if (i > 0 && omega_[i] > omega_[i - 1]) {
            throw std::invalid_argument("AsymptoticWeights: weights must be weakly decreasing");
        }
        sum += omega_[i];
    }
    if (sum != 1) {
        throw std::invalid_argument("AsymptoticWeights: weights must sum to 1");
    }
}

Rational falling_factorial(const Rational &x, int m) {
    if (m < 0) {
        throw std::invalid_argument("falling_factorial: negative order");
    }
    Rational out = 1;
    for (int i = 0; i < m; i++) {
        out *= x - i;
    }
    return out;
}

namespace {

struct ReverseFiller {
    const Partition &mu;
    std::span<const Rational> x;
    std::vector<std::vector<int>> grid;
    std::vector<std::pair<int, int>> boxes;
    Rational total = 0;

    ReverseFiller(const Partition &shape, std::span<const Rational> vars) : mu(shape), x(vars) {
        for (int i = 0; i < mu.rows(); i++) {
            grid.emplace_back(mu.row(i), 0);
            for (int j = 0; j < mu.row(i); j++) {
                boxes.emplace_back(i, j);
            }
        }
    }

    void fill(size_t pos, const Rational &weight) {
        if (weight == 0) {
            return;
        }
        if (pos == boxes.size()) {
            total += weight;
            return;
        }
        auto [i, j] = boxes[pos];
        int hi = static_cast<int>(x.size());
        if (j > 0) {
            hi = std::min(hi, grid[i][j - 1]);
        }
        if (i > 0) {
            hi = std::min(hi, grid[i - 1][j] - 1);
        }
        for (int v = hi; v >= 1; v--) {
            grid[i][j] = v;
            fill(pos + 1, weight * (x[v - 1] - (j - i)));
        }
        grid[i][j] = 0;
    }
};

}  // namespace

Rational shifted_schur_eval(const Partition &mu, std::span<const Rational> x) {
    if (static_cast<int>(x.size()) < mu.rows()) {
        throw std::invalid_argument("shifted_schur_eval: fewer variables than rows of mu");
    }
    ReverseFiller filler(mu, x);
    filler.fill(0, Rational(1));
    return filler.total;
}

Rational ratio_skew(const Partition &lambda, const Partition &mu) {
    if (lambda.size() < mu.size()) {
        throw std::invalid_argument("ratio_skew: |lambda| < |mu|");
    }
    int vars = std::max(lambda.rows(), mu.rows());
    std::vector<Rational> x(vars, Rational(0));
    for (int i = 0; i < lambda.rows(); i++) {
        x[i] = lambda.row(i);
    }
    return shifted_schur_eval(mu, x) / falling_factorial(Rational(lambda.size()), mu.size());
}

Rational ratio_a_over_s(const Partition &lambda, int k) {
    if (lambda.rows() != k) {
        throw std::invalid_argument("ratio_a_over_s: " + lambda.str() + " does not have exactly " +
                                    std::to_string(k) + " rows");
    }
    if (k < 2 || lambda.row(0) < 2) {
        throw std::invalid_argument("ratio_a_over_s: S class is empty for " + lambda.str());
    }
    int N = lambda.size() - k + 1;
    auto t = [&](int i) { return Rational(lambda.row(i - 1) + k - i); };
    Rational lk = lambda.row(k - 1);
    Rational prod_all = 1;
    for (int i = 1; i < k; i++) {
        prod_all *= 1 - 1 / t(i);
    }
    Rational den = (N - lk) / lk * prod_all;
    Rational prefix = 1;
    for (int j = 1; j < k; j++) {
        den += Rational(N - 1) / t(j) * prefix;
        prefix *= 1 - 1 / t(j);
    }
    return 1 / den;
}

AsymptoticRatio asymptotic_ratio(const AsymptoticWeights &omega) {
    int k = omega.k();
    if (k < 2) {
        throw std::invalid_argument("asymptotic_ratio: need k >= 2");
    }
    Rational harmonic = 0;
    for (const auto &w : omega.omega()) {
        harmonic += 1 / w;
    }
    AsymptoticRatio out;
    out.value = 1 / (harmonic - 1);
    out.bound = Rational(1, k * k - 1);
    out.within_bound = out.value <= out.bound;
    out.equality = out.value == out.bound;
    return out;
}

}  // namespace kbp
