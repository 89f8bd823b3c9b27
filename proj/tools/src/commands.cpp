#include "kbp/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "kbp/cli/verify.hpp"
#include "kbp/parallel.hpp"
#include "kbp/schur.hpp"
#include "kbp/sym_rep.hpp"

namespace kbp::cli {

using nlohmann::json;

OutputFormat parse_format(const std::string &text) {
    if (text == "text") {
        return OutputFormat::Text;
    }
    if (text == "json") {
        return OutputFormat::Json;
    }
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    throw std::invalid_argument("unknown format '" + text + "' (expected text, json or csv)");
}

std::vector<double> alpha_grid(double start, double end, double step) {
    if (!(step > 0)) {
        throw std::invalid_argument("alpha step must be positive");
    }
    if (start > end) {
        throw std::invalid_argument("alpha start must not exceed alpha end");
    }
    auto count = static_cast<long>(std::floor((end - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (long i = 0; i < count; i++) {
        out.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
    return out;
}

std::string format_value(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    std::string s(buf);
    return s == "-0" ? "0" : s;
}

double raw_value(const SolveReport &report) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto &b : report.per_block) {
        best = std::min(best, b.raw_minimum);
    }
    return best;
}

namespace {

json finite_or_null(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

json report_json(const SolveReport &r) {
    json blocks = json::array();
    for (const auto &b : r.per_block) {
        blocks.push_back({
            {"lambda", b.lambda.parts()},
            {"method", to_string(b.method)},
            {"status", to_string(b.status)},
            {"raw_minimum", finite_or_null(b.raw_minimum)},
            {"residuals",
             {{"constraint", b.residuals.constraint},
              {"eigen", b.residuals.eigen},
              {"primal", b.residuals.primal},
              {"dual", b.residuals.dual},
              {"iterations", b.residuals.iterations},
              {"fixed_dim", b.residuals.fixed_dim}}},
            {"message", b.message},
            {"seconds", b.seconds},
        });
    }
    return {
        {"k", r.k},
        {"d", r.d},
        {"N", r.N},
        {"alpha", r.alpha ? json(*r.alpha) : json(nullptr)},
        {"trace_target", r.trace_target},
        {"value", finite_or_null(raw_value(r))},
        {"hierarchy_value", r.hierarchy_value},
        {"clipped", r.clipped},
        {"verdict", describe(r.verdict, r.N)},
        {"certified", r.verdict == Verdict::Certified},
        {"wall_time", r.wall_time},
        {"blocks", blocks},
    };
}

std::string blocks_field(const SolveReport &r) {
    std::string s;
    for (const auto &b : r.per_block) {
        if (!s.empty()) {
            s += ';';
        }
        s += b.lambda.str() + (r.per_block.size() > 1 && b.method == SolveMethod::Sdp ? "sdp" : "") + "=" +
             format_value(b.raw_minimum);
    }
    return "\"" + s + "\"";
}

constexpr const char *kCsvHeader = "k,d,N,alpha,value,clipped,blocks";

std::string csv_row(const SolveReport &r) {
    std::ostringstream line;
    line << r.k << ',' << r.d << ',' << r.N << ',' << (r.alpha ? format_value(*r.alpha) : "") << ','
         << format_value(raw_value(r)) << ',' << format_value(r.hierarchy_value) << ',' << blocks_field(r);
    return line.str();
}

void write_text_report(std::ostream &out, const SolveReport &r) {
    out << "k=" << r.k << " d=" << r.d << " N=" << r.N;
    if (r.alpha) {
        out << " alpha=" << format_value(*r.alpha);
    }
    out << " trace_target=" << format_value(r.trace_target) << '\n';
    for (const auto &b : r.per_block) {
        out << "  block " << b.lambda.str() << " [" << to_string(b.method) << "] " << to_string(b.status)
            << " min=" << format_value(b.raw_minimum) << " fixed_dim=" << b.residuals.fixed_dim
            << " constraint_residual=" << format_value(b.residuals.constraint);
        if (b.method == SolveMethod::Sdp) {
            out << " iterations=" << b.residuals.iterations;
        }
        if (!b.message.empty()) {
            out << " (" << b.message << ")";
        }
        out << '\n';
    }
    out << "value " << format_value(r.hierarchy_value) << '\n';
    out << describe(r.verdict, r.N) << '\n';
}

WitnessSpec resolve_witness(const SolveOptions &opts) {
    if (opts.witness_file && opts.isotropic_alpha) {
        throw std::invalid_argument("give either --witness-file or --isotropic-alpha, not both");
    }
    if (opts.witness_file) {
        WitnessSpec w = load_witness_file(*opts.witness_file);
        if (opts.d > 0 && opts.d != w.d) {
            throw std::invalid_argument("--d " + std::to_string(opts.d) + " does not match witness dimension " +
                                        std::to_string(w.d));
        }
        return w;
    }
    if (opts.isotropic_alpha) {
        if (opts.d < 2) {
            throw std::invalid_argument("--d >= 2 is required for the isotropic witness");
        }
        return isotropic_witness(opts.d, *opts.isotropic_alpha);
    }
    throw std::invalid_argument("a witness is required: --witness-file or --isotropic-alpha");
}

template <class Fn>
int guarded(std::ostream &err, Fn &&fn) {
    try {
        return fn();
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

void write_matrix(std::ostream &out, const ComplexMatrix &m) {
    bool real = m.imag().cwiseAbs().maxCoeff() == 0;
    for (Index i = 0; i < m.rows(); i++) {
        for (Index j = 0; j < m.cols(); j++) {
            if (j > 0) {
                out << ' ';
            }
            Complex z = m(i, j);
            out << format_value(z.real());
            if (!real) {
                out << (z.imag() < 0 ? "-" : "+") << format_value(std::abs(z.imag())) << 'i';
            }
        }
        out << '\n';
    }
}

json matrix_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); i++) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); j++) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

void write_report(std::ostream &out, const SolveReport &report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json:
            out << report_json(report).dump(2) << '\n';
            break;
        case OutputFormat::Csv:
            out << kCsvHeader << '\n' << csv_row(report) << '\n';
            break;
        case OutputFormat::Text:
            write_text_report(out, report);
            break;
    }
}

std::vector<SweepRow> run_sweep(const SweepConfig &cfg) {
    if (cfg.levels.empty()) {
        throw std::invalid_argument("sweep needs at least one level");
    }
    std::vector<double> alphas = alpha_grid(cfg.alpha_start, cfg.alpha_end, cfg.alpha_step);
    std::vector<SweepRow> rows;
    for (int N : cfg.levels) {
        if (N < 1) {
            throw std::invalid_argument("levels must be >= 1");
        }
        for (double a : alphas) {
            rows.push_back({N, a, {}});
        }
    }
    SolverConfig inner = cfg.config;
    inner.workers = 1;
    parallel_for(
        rows.size(),
        [&](std::size_t i) { rows[i].report = solve_hierarchy(isotropic_witness(cfg.d, rows[i].alpha), cfg.k, rows[i].N, inner); },
        cfg.config.workers);
    return rows;
}

void write_sweep(std::ostream &out, const std::vector<SweepRow> &rows, int k, int d, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: {
            json arr = json::array();
            for (const auto &r : rows) {
                arr.push_back(report_json(r.report));
            }
            out << json{{"k", k}, {"d", d}, {"points", arr}}.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << kCsvHeader << '\n';
            for (const auto &r : rows) {
                out << csv_row(r.report) << '\n';
            }
            break;
        case OutputFormat::Text: {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%3s %8s %12s %12s\n", "N", "alpha", "value", "clipped");
            out << buf;
            for (const auto &r : rows) {
                std::snprintf(buf, sizeof buf, "%3d %8s %12s %12s\n", r.N, format_value(r.alpha).c_str(),
                              format_value(raw_value(r.report)).c_str(),
                              format_value(r.report.hierarchy_value).c_str());
                out << buf;
            }
            break;
        }
    }
}

void write_sizes(std::ostream &out, int k, int d, int N, OutputFormat format) {
    std::vector<SizeRow> rows = size_report(k, d, N);
    std::uint64_t unreduced = rows.empty() ? 0 : rows.front().unreduced;
    switch (format) {
        case OutputFormat::Json: {
            json blocks = json::array();
            for (const auto &r : rows) {
                blocks.push_back({{"lambda", r.lambda.parts()}, {"block_dim", r.block_dim}, {"d_lambda", r.d_lambda}});
            }
            out << json{{"k", k}, {"d", d}, {"N", N}, {"unreduced", unreduced}, {"blocks", blocks}}.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "lambda,unreduced,block_dim,d_lambda\n";
            for (const auto &r : rows) {
                out << '"' << r.lambda.str() << "\"," << r.unreduced << ',' << r.block_dim << ',' << r.d_lambda << '\n';
            }
            break;
        case OutputFormat::Text:
            out << unreduced;
            for (const auto &r : rows) {
                out << " | " << r.block_dim;
            }
            for (const auto &r : rows) {
                out << " | " << r.d_lambda;
            }
            out << '\n';
            break;
    }
}

int cmd_solve(const SolveOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        WitnessSpec w = resolve_witness(opts);
        SolveReport report = solve_hierarchy(w, opts.k, opts.N, opts.config);
        write_report(out, report, opts.format);
        return report.verdict == Verdict::Certified ? kExitCertified : kExitNegative;
    });
}

int cmd_sweep(const SweepConfig &cfg, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        std::ofstream file;
        if (!cfg.output.empty()) {
            file.open(cfg.output);
            if (!file) {
                throw std::runtime_error("cannot write '" + cfg.output + "'");
            }
        }
        std::vector<SweepRow> rows = run_sweep(cfg);
        std::ostream &sink = cfg.output.empty() ? out : file;
        write_sweep(sink, rows, cfg.k, cfg.d, cfg.format);
        sink.flush();
        if (!sink) {
            throw std::runtime_error("write failed");
        }
        return 0;
    });
}

int cmd_sizes(int k, int d, int N, OutputFormat format, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        write_sizes(out, k, d, N, format);
        return 0;
    });
}

int cmd_rep(const RepOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        Partition shape = Partition::parse(opts.shape);
        int j = opts.generator > 0 ? opts.generator : opts.k;
        ComplexMatrix m;
        if (opts.young_only) {
            m = restricted_generator(shape, j, opts.k).matrix.cast<Complex>();
        } else {
            m = delta_lambda(shape, opts.k, opts.d, opts.N, j).matrix;
        }
        std::vector<std::string> labels;
        std::size_t rows = block_size(shape, opts.k);
        auto basis = enumerate_syt(shape, opts.k);
        for (std::size_t i = 0; i < rows; i++) {
            labels.push_back(std::string(1, class_letter(basis[i].cls)) + ":" + basis[i].tableau.str());
        }
        if (opts.format == OutputFormat::Json) {
            out << json{{"shape", shape.parts()}, {"k", opts.k}, {"d", opts.d}, {"N", opts.N}, {"generator", j},
                        {"tableaux", labels}, {"matrix", matrix_json(m)}}
                       .dump(2)
                << '\n';
        } else {
            out << "shape " << shape.str() << " generator (" << j << "," << j + 1 << ")";
            if (!opts.young_only) {
                out << " d=" << opts.d << " N=" << opts.N;
            }
            out << "\ntableaux";
            for (const auto &l : labels) {
                out << ' ' << l;
            }
            out << '\n';
            write_matrix(out, m);
        }
        return 0;
    });
}

int cmd_schur(int k, int n, OutputFormat format, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        auto t = schur_transform(k, n);
        std::vector<std::string> labels;
        for (const auto &l : t->row_labels) {
            labels.push_back(l.shape.str() + " p=" + std::to_string(l.p) + " q=" + std::to_string(l.q));
        }
        if (format == OutputFormat::Json) {
            out << json{{"k", k}, {"n", n}, {"rows", labels}, {"matrix", matrix_json(t->matrix)}}.dump(2) << '\n';
        } else {
            for (std::size_t i = 0; i < labels.size(); i++) {
                out << "# row " << i << ": " << labels[i] << '\n';
            }
            write_matrix(out, t->matrix);
        }
        return 0;
    });
}

int cmd_verify(const std::string &suite, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        std::vector<Check> checks = run_verify_suite(suite);
        int failed = 0;
        for (const auto &c : checks) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty()) {
                out << ": " << c.detail;
            }
            out << '\n';
            failed += c.passed ? 0 : 1;
        }
        out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
        return failed == 0 ? 0 : 1;
    });
}

}  // namespace kbp::cli
