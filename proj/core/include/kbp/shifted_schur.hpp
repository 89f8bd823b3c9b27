#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kbp/young.hpp"

namespace kbp {

using Rational = boost::multiprecision::cpp_rational;

/// Weights summing to exactly 1, positive and weakly decreasing.
class AsymptoticWeights {
   public:
    /// Throws std::invalid_argument if any weight is outside (0, 1], the sum is not 1,
    /// or the list is not weakly decreasing.
    explicit AsymptoticWeights(std::vector<Rational> omega);
    const std::vector<Rational> &omega() const {
        return omega_;
    }
    int k() const {
        return static_cast<int>(omega_.size());
    }

   private:
    std::vector<Rational> omega_;
};

struct AsymptoticRatio {
    Rational value;
    Rational bound;  // 1/(k^2 - 1)
    bool within_bound = false;
    bool equality = false;
};

Rational falling_factorial(const Rational &x, int m);

/// Sum over reverse semistandard tableaux T of shape mu with entries in 1..|x|
/// of prod (x_{T(box)} - content(box)).
Rational shifted_schur_eval(const Partition &mu, std::span<const Rational> x);

/// s*_mu(lambda) / |lambda|^{falling |mu|} = f^{lambda/mu} / f^lambda.
Rational ratio_skew(const Partition &lambda, const Partition &mu);

/// Closed form for |A| / |S| on a shape with exactly k rows.
/// Throws std::invalid_argument if the row count differs from k or the S class is empty.
Rational ratio_a_over_s(const Partition &lambda, int k);

/// 1 / (sum_j 1/omega_j - 1), compared against 1/(k^2 - 1). Requires k >= 2.
AsymptoticRatio asymptotic_ratio(const AsymptoticWeights &omega);

}  // namespace kbp
