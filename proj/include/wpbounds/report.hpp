#pragma once

// Reporting layer shared by the command-line tool and the Python module:
// the constants table, figure data with SVG/CSV emission, and the
// invariant-check suite.

#include <string>
#include <string_view>
#include <vector>

#include "wpbounds/bracket.hpp"

namespace wpbounds::report {

enum class Provenance { paper, derived };
enum class Status { reproduced, mismatch };

/// How a computed bracket is compared with the published digits.
enum class Comparison {
    truncation,       ///< both ends truncate to the printed digits
    at_least,         ///< lo >= printed value
    within_interval,  ///< printed "(a, b)": a <= lo and hi <= b
    overlaps,         ///< printed "[a, b]": brackets intersect
    informational,    ///< recorded side by side, truncation decides the status
};

std::string_view to_string(Provenance p);
std::string_view to_string(Status s);
std::string_view to_string(Comparison c);

struct ConstantRecord {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    std::string paper;  ///< verbatim published digits
    Comparison comparison = Comparison::truncation;
    Provenance provenance = Provenance::paper;
    Status status = Status::mismatch;
};

/// Applies the comparison rule to (lo, hi) against the printed digits.
Status judge(double lo, double hi, std::string_view paper, Comparison comparison);

struct Settings {
    double tol = 1e-7;          ///< quadrature tolerance for the H integrals
    int max_word_length = 8;    ///< coset word length for delta11
    double delta_tol = 1e-6;    ///< quadrature tolerance for delta11
};

std::vector<ConstantRecord> build_constant_records(const Settings& settings = {});

/// True iff every record of paper provenance is reproduced.
bool all_reproduced(const std::vector<ConstantRecord>& records);

/// {"constants": [{"name", "lo", "hi", "paper", "status", "provenance"}, ...]}
std::string constants_json(const std::vector<ConstantRecord>& records);

/// Header "name,lo,hi,paper,status".
std::string constants_csv(const std::vector<ConstantRecord>& records);

/// Shortest round-trip decimal representation.
std::string format_double(double x);

enum class PlotKind { hsys_ratio, h_vs_k };

std::string_view to_string(PlotKind k);
PlotKind parse_plot_kind(std::string_view name);

inline constexpr int kMinPlotSamples = 16;

struct PlotData {
    PlotKind kind;
    std::vector<std::string> columns;     ///< first column is t
    std::vector<std::vector<double>> rows;
};

/// hsys_ratio: c(t) on log-spaced t in [1e-3, 1e2].
/// h_vs_k: H(0, t) and K(0, t) on t in [0, 10].
PlotData plot_data(PlotKind kind, int samples, double tol = 1e-7);

std::string plot_csv(const PlotData& data);
std::string plot_svg(const PlotData& data);

enum class Suite { fast, all };

Suite parse_suite(std::string_view name);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the named invariant checks of every module.
std::vector<CheckResult> run_verify(Suite suite, const Settings& settings = {});

}  // namespace wpbounds::report
