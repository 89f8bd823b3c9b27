#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace kbp::cli {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Displayed generator matrices and Schur transforms; block-diagonalization residuals.
std::vector<Check> verify_appendix();
/// Idempotence, trace preservation, commutation and Haar sampling agreement.
std::vector<Check> verify_twirl();
/// Skew-ratio identity, class counts against the closed form, the (3,2,1) example, asymptotic bound.
std::vector<Check> verify_ratio();
/// Reduced hierarchy value against the unreduced oracle on small configurations.
std::vector<Check> verify_equality();

const std::vector<std::string> &verify_suite_names();
/// Throws std::invalid_argument for an unknown suite; "all" runs every suite.
std::vector<Check> run_verify_suite(const std::string &suite);

bool all_passed(const std::vector<Check> &checks);

}  // namespace kbp::cli
