#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kbp/solver.hpp"

namespace kbp::cli {

enum class OutputFormat { Text, Json, Csv };

/// Accepts "text", "json", "csv"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string &text);

inline constexpr int kExitCertified = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;

struct SolveOptions {
    int k = 2;
    int d = 0;
    int N = 1;
    std::optional<double> isotropic_alpha;
    std::optional<std::string> witness_file;
    SolverConfig config;
    OutputFormat format = OutputFormat::Text;
};

struct SweepConfig {
    int k = 2;
    int d = 3;
    std::vector<int> levels{1, 2, 3};
    double alpha_start = -1.0;
    double alpha_end = -0.3;
    double alpha_step = 0.05;
    SolverConfig config;
    /// Empty = standard output.
    std::string output;
    OutputFormat format = OutputFormat::Csv;
};

struct SweepRow {
    int N = 0;
    double alpha = 0;
    SolveReport report;
};

/// Grid start + i*step up to end, rounded to 12 decimals so printed values are stable.
std::vector<double> alpha_grid(double start, double end, double step);

/// Rows in (N, alpha) order. Points run on a worker pool; each hierarchy solve is single-threaded.
std::vector<SweepRow> run_sweep(const SweepConfig &cfg);

/// "%.6g" with negative zero printed as 0.
std::string format_value(double v);

/// Minimum over the finite block minima; +infinity when every block is infeasible.
double raw_value(const SolveReport &report);

void write_report(std::ostream &out, const SolveReport &report, OutputFormat format);
void write_sweep(std::ostream &out, const std::vector<SweepRow> &rows, int k, int d, OutputFormat format);
void write_sizes(std::ostream &out, int k, int d, int N, OutputFormat format);

int cmd_solve(const SolveOptions &opts, std::ostream &out, std::ostream &err);
int cmd_sweep(const SweepConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_sizes(int k, int d, int N, OutputFormat format, std::ostream &out, std::ostream &err);

struct RepOptions {
    std::string shape;
    int k = 2;
    int d = 2;
    int N = 1;
    int generator = 0;
    /// Print only the Young orthogonal matrix restricted to classes A and S.
    bool young_only = false;
    OutputFormat format = OutputFormat::Text;
};

int cmd_rep(const RepOptions &opts, std::ostream &out, std::ostream &err);
int cmd_schur(int k, int n, OutputFormat format, std::ostream &out, std::ostream &err);
int cmd_verify(const std::string &suite, std::ostream &out, std::ostream &err);

}  // namespace kbp::cli
