// wpbounds: constants tables, delta11 brackets, separation verdicts,
// integrals, figures and invariant checks from the command line.
//
// Exit codes: 0 success, 1 mismatch or failed check, 2 usage error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wpbounds/errors.hpp"
#include "wpbounds/report.hpp"
#include "wpbounds/torus_coset.hpp"
#include "wpbounds/wp_integrals.hpp"

namespace {

using namespace wpbounds;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::string fixed(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", x);
    return buf;
}

nlohmann::ordered_json bracket_json(const Bracket& b) {
    nlohmann::ordered_json j;
    j["lo"] = b.lo;
    j["hi"] = b.hi;
    j["budget"] = {{"quadrature", b.budget.quadrature},
                   {"series_tail", b.budget.series_tail},
                   {"truncation", b.budget.truncation},
                   {"rounding", b.budget.rounding}};
    j["notes"] = b.budget.notes;
    return j;
}

std::string bracket_text(const Bracket& b) { return "[" + fixed(b.lo) + ", " + fixed(b.hi) + "]"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified Weil-Petersson gradient and distance bounds"};
    app.require_subcommand(1);

    double tol = 1e-7;
    int max_word_length = torus::kDefaultWordLength;
    std::string format;
    std::string out_path;

    auto* constants = app.add_subcommand("constants", "Table of published constants with computed brackets");
    constants->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->default_str("json");
    constants->add_option("--out", out_path, "Output file (default stdout)");
    constants->add_option("--tol", tol, "Quadrature tolerance for the H integrals")->check(CLI::PositiveNumber);
    constants->add_option("--max-word-length", max_word_length, "Coset word length for delta11")
        ->check(CLI::Range(0, 12));

    double delta_tol = torus::kDefaultQuadTol;
    auto* delta = app.add_subcommand("delta11", "Certified bracket for delta11");
    delta->add_option("--max-word-length", max_word_length, "Coset word length")->check(CLI::Range(0, 12));
    delta->add_option("--tol", delta_tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
    delta->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    delta->add_option("--out", out_path, "Output file (default stdout)");

    std::string plot_name;
    int samples = 64;
    auto* plot = app.add_subcommand("plot", "Write an SVG figure and its CSV sidecar");
    plot->add_option("which", plot_name, "hsys-ratio or h-vs-k")
        ->required()
        ->check(CLI::IsMember({"hsys-ratio", "h-vs-k"}));
    plot->add_option("--samples", samples, "Number of sample points (>= 16)")
        ->check(CLI::Range(report::kMinPlotSamples, 100000));
    plot->add_option("--out", out_path, "SVG output path")->required();
    plot->add_option("--tol", tol, "Quadrature tolerance")->check(CLI::PositiveNumber);

    std::string suite_name = "fast";
    auto* verify = app.add_subcommand("verify", "Run the invariant checks");
    verify->add_option("suite", suite_name, "fast or all")->check(CLI::IsMember({"fast", "all"}));
    verify->add_option("--tol", tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--max-word-length", max_word_length, "Coset word length")->check(CLI::Range(0, 12));

    std::string integral_kind;
    std::vector<double> integral_args;
    std::string variant_name = "plain";
    auto* integral = app.add_subcommand(
        "integral", "Evaluate H a b, K a b, W1 L, W2 L or c t");
    integral->add_option("kind", integral_kind, "H, K, W1, W2 or c")
        ->required()
        ->check(CLI::IsMember({"H", "K", "W1", "W2", "c"}));
    integral->add_option("args", integral_args, "Numeric arguments")->required();
    integral->add_option("--variant", variant_name, "H variant: plain, separating or systole")
        ->check(CLI::IsMember({"plain", "separating", "systole"}));
    integral->add_option("--tol", tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
    integral->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    int intersections = 0;
    std::string surface_name = "genus";
    auto* separation = app.add_subcommand("separation", "Distance bound between strata meeting k times");
    separation->add_option("k", intersections, "Intersection number")->required()->check(CLI::NonNegativeNumber);
    separation->add_option("--surface", surface_name, "genus (has genus) or sphere (punctured sphere)")
        ->check(CLI::IsMember({"genus", "sphere"}));
    separation->add_option("--max-word-length", max_word_length, "Coset word length for delta11")
        ->check(CLI::Range(0, 12));
    separation->add_option("--tol", tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
    separation->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*constants) {
            report::Settings settings;
            settings.tol = tol;
            settings.max_word_length = max_word_length;
            const auto records = report::build_constant_records(settings);
            write_text(out_path, format == "csv" ? report::constants_csv(records)
                                                 : report::constants_json(records));
            return report::all_reproduced(records) ? kOk : kMismatch;
        }

        if (*delta) {
            const Bracket b = torus::delta11_bracket(max_word_length, delta_tol);
            const Bracket published{6.59576, 6.63283, {}};
            const bool consistent = b.overlaps(published);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["max_word_length"] = max_word_length;
                j["quad_tol"] = delta_tol;
                j["delta11"] = bracket_json(b);
                j["consistent"] = consistent;
                write_text(out_path, j.dump(2) + "\n");
            } else {
                std::string text = "delta11 in " + bracket_text(b) + "\n";
                text += "width " + fixed(b.width()) + ", word length " + std::to_string(max_word_length) + "\n";
                text += std::string("consistent with [6.59576, 6.63283]: ") + (consistent ? "yes" : "no") + "\n";
                write_text(out_path, text);
            }
            return consistent ? kOk : kMismatch;
        }

        if (*plot) {
            const auto data = report::plot_data(report::parse_plot_kind(plot_name), samples, tol);
            const std::filesystem::path svg(out_path);
            std::filesystem::path csv = svg;
            csv.replace_extension(".csv");
            write_text(svg.string(), report::plot_svg(data));
            write_text(csv.string(), report::plot_csv(data));
            std::cout << "wrote " << svg.string() << " and " << csv.string() << "\n";
            return kOk;
        }

        if (*verify) {
            report::Settings settings;
            settings.tol = tol;
            settings.max_word_length = max_word_length;
            const auto results = report::run_verify(report::parse_suite(suite_name), settings);
            int failed = 0;
            for (const auto& r : results) {
                std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
                if (!r.passed) {
                    std::cout << ": " << r.detail;
                    ++failed;
                }
                std::cout << "\n";
            }
            std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
                      << " checks passed\n";
            return failed == 0 ? kOk : kMismatch;
        }

        if (*integral) {
            const std::map<std::string, std::size_t> arity{{"H", 2}, {"K", 2}, {"W1", 1}, {"W2", 1}, {"c", 1}};
            if (integral_args.size() != arity.at(integral_kind)) {
                std::cerr << "error: " << integral_kind << " takes " << arity.at(integral_kind)
                          << " argument(s)\n";
                return kUsage;
            }
            const std::map<std::string, wp::HVariant> variants{{"plain", wp::HVariant::plain},
                                                               {"separating", wp::HVariant::separating},
                                                               {"systole", wp::HVariant::systole}};
            Bracket b;
            if (integral_kind == "H") {
                b = wp::integral_H(integral_args[0], integral_args[1], variants.at(variant_name), tol);
            } else if (integral_kind == "K") {
                b = Bracket::exact(wp::integral_K(integral_args[0], integral_args[1]));
            } else if (integral_kind == "W1") {
                b = wp::W1(integral_args[0], tol);
            } else if (integral_kind == "W2") {
                b = wp::W2(integral_args[0], tol);
            } else {
                b = Bracket::exact(wp::c_ratio(integral_args[0], tol));
            }
            if (format == "json") {
                nlohmann::ordered_json j;
                j["kind"] = integral_kind;
                j["args"] = integral_args;
                if (integral_kind == "H") j["variant"] = variant_name;
                j["value"] = bracket_json(b);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << integral_kind << " = " << bracket_text(b) << "\n";
            }
            return kOk;
        }

        if (*separation) {
            const auto cls = surface_name == "sphere" ? wp::SurfaceClass::punctured_sphere
                                                      : wp::SurfaceClass::has_genus;
            const Bracket d = torus::delta11_bracket(max_word_length, torus::kDefaultQuadTol);
            const auto v = wp::strata_separation(intersections, cls, d, tol);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["k"] = v.intersection;
                j["surface_class"] = std::string(wp::to_string(v.surface_class));
                j["kind"] = std::string(wp::to_string(v.kind));
                j["value"] = bracket_json(v.value);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << wp::to_string(v.surface_class) << ", k = " << v.intersection << ": ";
                if (v.kind == wp::VerdictKind::exact) {
                    std::cout << "distance in " << bracket_text(v.value) << "\n";
                } else {
                    std::cout << "distance >= " << fixed(v.value.lo) << "\n";
                }
                for (const auto& note : v.value.budget.notes) std::cout << "  " << note << "\n";
            }
            return kOk;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    }
    return kUsage;
}
