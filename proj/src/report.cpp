#include "wpbounds/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wpbounds/errors.hpp"
#include "wpbounds/grad_bounds.hpp"
#include "wpbounds/hyp2.hpp"
#include "wpbounds/quadrature.hpp"
#include "wpbounds/riera_kernel.hpp"
#include "wpbounds/torus_coset.hpp"
#include "wpbounds/wp_integrals.hpp"

namespace wpbounds::report {

using std::numbers::pi;

std::string_view to_string(Provenance p) { return p == Provenance::paper ? "paper" : "derived"; }

std::string_view to_string(Status s) { return s == Status::reproduced ? "reproduced" : "mismatch"; }

std::string_view to_string(Comparison c) {
    switch (c) {
        case Comparison::truncation: return "truncation";
        case Comparison::at_least: return "at-least";
        case Comparison::within_interval: return "within-interval";
        case Comparison::overlaps: return "overlaps";
        case Comparison::informational: return "informational";
    }
    return "?";
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

std::vector<double> parse_numbers(std::string_view text) {
    std::vector<double> out;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            out.push_back(std::stod(token));
            token.clear();
        }
    };
    for (char c : text) {
        if ((c >= '0' && c <= '9') || c == '.' || c == '-') {
            token.push_back(c);
        } else {
            flush();
        }
    }
    flush();
    return out;
}

int decimal_places(std::string_view digits) {
    const auto dot = digits.find('.');
    if (dot == std::string_view::npos) return 0;
    int n = 0;
    for (std::size_t i = dot + 1; i < digits.size() && digits[i] >= '0' && digits[i] <= '9'; ++i) ++n;
    return n;
}

std::string normalized_digits(std::string_view digits) {
    std::string s(digits);
    if (!s.empty() && s.front() == '.') s.insert(s.begin(), '0');
    return s;
}

}  // namespace

Status judge(double lo, double hi, std::string_view paper, Comparison comparison) {
    const auto values = parse_numbers(paper);
    if (values.empty()) throw DomainError("judge: no number in '" + std::string(paper) + "'");
    bool ok = false;
    switch (comparison) {
        case Comparison::truncation:
        case Comparison::informational: {
            const int places = decimal_places(paper);
            const std::string want = normalized_digits(paper);
            ok = truncate_decimals(lo, places) == want && truncate_decimals(hi, places) == want;
            break;
        }
        case Comparison::at_least: ok = lo >= values.front(); break;
        case Comparison::within_interval:
            if (values.size() != 2) throw DomainError("judge: interval needs two numbers");
            ok = values[0] <= lo && hi <= values[1];
            break;
        case Comparison::overlaps:
            if (values.size() != 2) throw DomainError("judge: interval needs two numbers");
            ok = lo <= values[1] && values[0] <= hi;
            break;
    }
    return ok ? Status::reproduced : Status::mismatch;
}

namespace {

ConstantRecord make_record(std::string name, double lo, double hi, std::string paper,
                           Comparison comparison, Provenance provenance = Provenance::paper) {
    ConstantRecord r{std::move(name), lo, hi, std::move(paper), comparison, provenance,
                     Status::mismatch};
    r.status = judge(r.lo, r.hi, r.paper, r.comparison);
    return r;
}

std::vector<double> log_grid(double a, double b, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    const double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (n - 1));
    return out;
}

}  // namespace

std::vector<ConstantRecord> build_constant_records(const Settings& settings) {
    const double tol = settings.tol;
    const double e2 = grad::kEpsilon2;
    const double root2 = std::numbers::sqrt2;
    std::vector<ConstantRecord> out;

    const auto elementary = torus::delta11_elementary();
    const Bracket delta_elem{elementary.lower_end.lo, elementary.upper_end.hi, {}};
    out.push_back(make_record("delta11_elementary", delta_elem.lo, delta_elem.hi,
                              "(6.57252, 6.65603)", Comparison::within_interval));

    const Bracket refined = torus::delta11_bracket(settings.max_word_length, settings.delta_tol);
    out.push_back(make_record("delta11_refined", refined.lo, refined.hi, "[6.59576, 6.63283]",
                              Comparison::overlaps));

    const Bracket general = wp::strata_general_bound(tol);
    out.push_back(make_record("strata_genus_general", general.lo, general.hi, "7.61138",
                              Comparison::at_least));

    const Bracket w1 = wp::W1(wp::kW1Length, tol);
    out.push_back(make_record("strata_W1", w1.lo, w1.hi, "10.76596", Comparison::at_least));

    const Bracket w2 = wp::W2(wp::kW2Length, tol);
    out.push_back(make_record("strata_W2", w2.lo, w2.hi, "10.09656", Comparison::at_least));

    const Bracket delta04 = delta_elem.scaled(root2);
    out.push_back(make_record("delta04", delta04.lo, delta04.hi, "(9.29495, 9.41305)",
                              Comparison::within_interval));

    const Bracket two_delta = delta_elem.scaled(2.0);
    out.push_back(make_record("two_delta11", two_delta.lo, two_delta.hi, "13.145",
                              Comparison::at_least));

    const auto gaps = wp::gap_constants(delta_elem, tol);
    out.push_back(make_record("gap_genus", gaps.gap_genus, gaps.gap_genus, "0.95535",
                              Comparison::at_least));
    out.push_back(make_record("gap_sphere", gaps.gap_sphere, gaps.gap_sphere, "0.68351",
                              Comparison::at_least));

    const double lip = grad::systole_lipschitz_constant();
    out.push_back(make_record("lipschitz_sys", lip, lip, "2.00423", Comparison::truncation));

    const Bracket h2 = wp::integral_H(0.0, 2.0 * e2, wp::HVariant::plain, tol);
    out.push_back(make_record("inradius_H_2eps2", h2.lo, h2.hi, "3.27466", Comparison::truncation));

    const Bracket hs4 = wp::integral_H(0.0, 4.0 * e2, wp::HVariant::separating, tol);
    out.push_back(make_record("inradius_Hs_4eps2", hs4.lo, hs4.hi, "4.63108", Comparison::truncation));

    double c_min = std::numeric_limits<double>::infinity();
    for (double t : log_grid(1e-3, 1e2, 200)) c_min = std::min(c_min, wp::c_ratio(t, tol));
    out.push_back(make_record("c_ratio_min", c_min, c_min, "0.94", Comparison::at_least));

    const auto pa = wp::pa_translation_bounds(tol);
    out.push_back(make_record("pa_case_i2", pa.case_i2, pa.case_i2, "1.06205", Comparison::at_least));
    out.push_back(make_record("pa_case_i1", pa.case_i1, pa.case_i1, "1.56949", Comparison::at_least));
    out.push_back(make_record("pa_general", pa.general, pa.general, "0.78474", Comparison::at_least));

    const double bb = wp::brock_bromberg_compare(1, 1);
    out.push_back(make_record("brock_bromberg_11", bb, bb, ".53724", Comparison::informational,
                              Provenance::derived));
    return out;
}

bool all_reproduced(const std::vector<ConstantRecord>& records) {
    return std::all_of(records.begin(), records.end(), [](const ConstantRecord& r) {
        return r.provenance != Provenance::paper || r.status == Status::reproduced;
    });
}

std::string constants_json(const std::vector<ConstantRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["lo"] = r.lo;
        j["hi"] = r.hi;
        j["paper"] = r.paper;
        j["status"] = std::string(to_string(r.status));
        j["provenance"] = std::string(to_string(r.provenance));
        j["comparison"] = std::string(to_string(r.comparison));
        arr.push_back(std::move(j));
    }
    nlohmann::ordered_json root;
    root["constants"] = std::move(arr);
    return root.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string constants_csv(const std::vector<ConstantRecord>& records) {
    std::string out = "name,lo,hi,paper,status\n";
    for (const auto& r : records) {
        out += csv_field(r.name) + ',' + format_double(r.lo) + ',' + format_double(r.hi) + ',' +
               csv_field(r.paper) + ',' + std::string(to_string(r.status)) + '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Figures

std::string_view to_string(PlotKind k) { return k == PlotKind::hsys_ratio ? "hsys-ratio" : "h-vs-k"; }

PlotKind parse_plot_kind(std::string_view name) {
    if (name == "hsys-ratio") return PlotKind::hsys_ratio;
    if (name == "h-vs-k") return PlotKind::h_vs_k;
    throw DomainError("unknown plot '" + std::string(name) + "'");
}

PlotData plot_data(PlotKind kind, int samples, double tol) {
    if (samples < kMinPlotSamples) {
        throw DomainError("plot_data: need at least " + std::to_string(kMinPlotSamples) + " samples");
    }
    PlotData data{kind, {}, {}};
    data.rows.reserve(static_cast<std::size_t>(samples));
    if (kind == PlotKind::hsys_ratio) {
        data.columns = {"t", "value"};
        for (double t : log_grid(1e-3, 1e2, samples)) data.rows.push_back({t, wp::c_ratio(t, tol)});
    } else {
        data.columns = {"t", "H", "K"};
        for (int i = 0; i < samples; ++i) {
            const double t = 10.0 * i / (samples - 1);
            const double h = t == 0.0 ? 0.0 : wp::integral_H(0.0, t, wp::HVariant::plain, tol).mid();
            data.rows.push_back({t, h, wp::integral_K(0.0, t)});
        }
    }
    return data;
}

std::string plot_csv(const PlotData& data) {
    std::string out;
    for (std::size_t i = 0; i < data.columns.size(); ++i) {
        if (i) out += ',';
        out += data.columns[i];
    }
    out += '\n';
    for (const auto& row : data.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

namespace {

constexpr double kWidth = 800, kHeight = 600;
constexpr double kLeft = 80, kRight = 30, kTop = 50, kBottom = 60;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c"};

std::string fmt(const char* spec, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

std::vector<double> nice_ticks(double lo, double hi) {
    const double raw = (hi - lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        step = m * mag;
        if (step >= raw) break;
    }
    std::vector<double> ticks;
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step; v += step) {
        ticks.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    }
    return ticks;
}

}  // namespace

std::string plot_svg(const PlotData& data) {
    const bool log_x = data.kind == PlotKind::hsys_ratio;
    auto xmap = [&](double t) { return log_x ? std::log10(t) : t; };

    double x0 = xmap(data.rows.front()[0]), x1 = xmap(data.rows.back()[0]);
    double y0 = std::numeric_limits<double>::infinity(), y1 = -y0;
    for (const auto& row : data.rows) {
        for (std::size_t i = 1; i < row.size(); ++i) {
            y0 = std::min(y0, row[i]);
            y1 = std::max(y1, row[i]);
        }
    }
    const double pad = 0.05 * (y1 - y0 > 0 ? y1 - y0 : 1.0);
    y0 -= pad;
    y1 += pad;

    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    const std::string title = log_x ? "H_sys(0,t) / sqrt(2 pi t)" : "H(0,t) and K(0,t)";
    os << "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">"
       << title << "</text>\n";
    os << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    os << "<line x1=\"" << fmt("%.2f", kLeft) << "\" y1=\"" << fmt("%.2f", kTop + ph) << "\" x2=\""
       << fmt("%.2f", kLeft + pw) << "\" y2=\"" << fmt("%.2f", kTop + ph) << "\"/>\n";
    os << "<line x1=\"" << fmt("%.2f", kLeft) << "\" y1=\"" << fmt("%.2f", kTop) << "\" x2=\""
       << fmt("%.2f", kLeft) << "\" y2=\"" << fmt("%.2f", kTop + ph) << "\"/>\n";
    os << "</g>\n";

    os << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    std::vector<double> xticks;
    if (log_x) {
        for (double d = std::ceil(x0 - 1e-12); d <= x1 + 1e-12; d += 1.0) xticks.push_back(d);
    } else {
        xticks = nice_ticks(x0, x1);
    }
    for (double x : xticks) {
        const double X = px(x);
        os << "<line x1=\"" << fmt("%.2f", X) << "\" y1=\"" << fmt("%.2f", kTop + ph) << "\" x2=\""
           << fmt("%.2f", X) << "\" y2=\"" << fmt("%.2f", kTop + ph + 6) << "\" stroke=\"black\"/>\n";
        const std::string label = log_x ? "1e" + fmt("%.0f", x) : fmt("%g", x);
        os << "<text x=\"" << fmt("%.2f", X) << "\" y=\"" << fmt("%.2f", kTop + ph + 22)
           << "\" text-anchor=\"middle\">" << label << "</text>\n";
    }
    for (double y : nice_ticks(y0, y1)) {
        const double Y = py(y);
        os << "<line x1=\"" << fmt("%.2f", kLeft - 6) << "\" y1=\"" << fmt("%.2f", Y) << "\" x2=\""
           << fmt("%.2f", kLeft) << "\" y2=\"" << fmt("%.2f", Y) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << fmt("%.2f", kLeft - 10) << "\" y=\"" << fmt("%.2f", Y + 4)
           << "\" text-anchor=\"end\">" << fmt("%g", y) << "</text>\n";
    }
    os << "<text x=\"" << fmt("%.2f", kLeft + pw / 2) << "\" y=\"" << fmt("%.2f", kHeight - 15)
       << "\" text-anchor=\"middle\">t</text>\n";
    os << "</g>\n";

    for (std::size_t c = 1; c < data.columns.size(); ++c) {
        os << "<polyline fill=\"none\" stroke=\"" << kColors[(c - 1) % 3]
           << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < data.rows.size(); ++i) {
            if (i) os << ' ';
            os << fmt("%.2f", px(xmap(data.rows[i][0]))) << ',' << fmt("%.2f", py(data.rows[i][c]));
        }
        os << "\"/>\n";
        os << "<text x=\"" << fmt("%.2f", kLeft + pw - 10) << "\" y=\"" << fmt("%.2f", kTop + 20.0 * c)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"14\" fill=\""
           << kColors[(c - 1) % 3] << "\">" << data.columns[c] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Invariant checks

Suite parse_suite(std::string_view name) {
    if (name == "fast") return Suite::fast;
    if (name == "all") return Suite::all;
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

namespace {

// A failed check throws; run_verify turns that into a named failure.
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

std::string num(double x) { return fmt("%.12g", x); }

hyp2::MoebiusMap random_map(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    for (;;) {
        const double a = entry(rng), b = entry(rng), c = entry(rng);
        if (std::abs(a) < 0.3) continue;
        return hyp2::MoebiusMap::normalized(a, b, c, (1.0 + b * c) / a);
    }
}

hyp2::GeodesicH2 random_geodesic(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pt(-3.0, 3.0);
    for (;;) {
        const double p = pt(rng), q = pt(rng);
        if (std::abs(p - q) > 0.05) return {p, q};
    }
}

void check_mobius_invariance() {
    std::mt19937_64 rng(1234);
    int done = 0;
    while (done < 200) {
        const auto g1 = random_geodesic(rng), g2 = random_geodesic(rng);
        const double ends[] = {g1.p().value(), g1.q().value()};
        if (std::abs(ends[0] - g2.p().value()) < 0.05 || std::abs(ends[0] - g2.q().value()) < 0.05 ||
            std::abs(ends[1] - g2.p().value()) < 0.05 || std::abs(ends[1] - g2.q().value()) < 0.05) {
            continue;
        }
        const auto G = random_map(rng);
        const auto u0 = hyp2::u_value(g1, g2);
        const auto u1 = hyp2::u_value(hyp2::translate_geodesic(G, g1), hyp2::translate_geodesic(G, g2));
        require(u0.crossing() == u1.crossing(), "crossing flag changed under a Moebius map");
        require(std::abs(u0.value() - u1.value()) <= 1e-10 * std::max(1.0, u0.value()),
                "u changed from " + num(u0.value()) + " to " + num(u1.value()));
        ++done;
    }
}

void check_axis_conjugation() {
    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 1000) {
        const auto M = random_map(rng);
        if (std::abs(M.trace()) < 2.05) continue;
        const auto G = random_map(rng);
        const auto lhs = hyp2::axis_of(G * M * G.inverse());
        const auto rhs = hyp2::translate_geodesic(G, hyp2::axis_of(M));
        require(hyp2::approx_equal(lhs, rhs, 1e-8), "axis of conjugate differs from translated axis");
        ++done;
    }
}

void check_translation_power() {
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 100) {
        const auto M = random_map(rng);
        if (std::abs(M.trace()) < 2.05) continue;
        const double l = hyp2::translation_length(M);
        for (int n = 1; n <= 10; ++n) {
            const double ln = hyp2::translation_length(M.pow(n));
            require(std::abs(ln - n * l) <= 1e-10 * n * l, "length of M^" + std::to_string(n) +
                                                                " is " + num(ln) + ", expected " +
                                                                num(n * l));
        }
        ++done;
    }
}

void check_collar_area() {
    double prev = 0.0;
    for (double r : log_grid(1e-4, 20.0, 400)) {
        const double a = hyp2::collar_area(r);
        require(a > prev, "collar area not increasing at r = " + num(r));
        prev = a;
    }
    const double scaled = hyp2::collar_area(20.0) * std::exp(-40.0);
    require(std::abs(scaled - pi / 4) <= 1e-6 * pi / 4, "A(r) e^{-2r} at r = 20 is " + num(scaled));
}

void check_riera_positive() {
    for (double d : log_grid(1e-6, 1e6, 400)) {
        const double R = riera::riera_R(1.0 + d);
        require(R > 0.0, "R(1 + " + num(d) + ") = " + num(R));
    }
}

void check_a_monotone_and_envelope() {
    double prev = std::numeric_limits<double>::infinity();
    for (double T : log_grid(1e-6, 50.0, 400)) {
        const double a = riera::a_of_T(T);
        require(a < prev || (T > 15 && a <= prev), "a(T) not decreasing at T = " + num(T));
        require(a >= 8.0 / 3.0 - 1e-15, "a(T) below 8/3 at T = " + num(T));
        require(a <= riera::a_upper_envelope(T) * (1 + 1e-13), "a(T) above envelope at T = " + num(T));
        prev = a;
    }
}

void check_series_brackets_closed_form() {
    for (int i = 1; i < 100; ++i) {
        const double u = i / 100.0;
        const auto s = riera::a_hat(u);
        const double R = riera::riera_R((u + 1.0 / u) / 2.0);
        const double lo = u * u * s.value, hi = u * u * (s.value + s.tail_bound);
        const double slack = 1e-13 * std::max(1.0, std::abs(R));
        require(lo - slack <= R && R <= hi + slack, "u^2 a_hat(u) misses R at u = " + num(u));
    }
}

void check_pair_bound_grid() {
    const auto grid = log_grid(1e-4, 40.0, 200);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i; j < grid.size(); ++j) {
            const double z = grid[i], w = grid[j];
            const double lhs = 2.0 * z / pi * grad::F_pair(z, w);
            const double rhs = 8.0 / (3.0 * pi * pi) * z * std::sinh(z / 2) * std::pow(std::sinh(w / 2), 2);
            require(lhs <= rhs * (1 + 1e-12), "bound fails at (" + num(z) + ", " + num(w) + ")");
        }
    }
}

void check_auv_grid() {
    const auto grid = log_grid(1e-4, 40.0, 200);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i; j < grid.size(); ++j) {
            const double z = grid[i], w = grid[j];
            const auto radii = grad::collar_radii(z, w);
            const double v = riera::a_of_T(radii.r + radii.s) * grad::u_factor(z) * grad::v_factor(w);
            require(v <= 4.0 / (3.0 * pi) * (1 + 1e-12), "a u v exceeds 4/(3 pi) at (" + num(z) + ", " +
                                                              num(w) + ")");
        }
    }
}

void check_large_length_bound_grid() {
    for (double l : log_grid(1e-4, 50.0, 400)) {
        const double lhs = grad::grad_sq_upper_single(l);
        const double rhs = 2.0 / pi * (l + l * l * std::exp(l / 2) / 3.0);
        require(lhs <= rhs * (1 + 1e-12), "bound fails at l = " + num(l));
    }
}

void check_rsys_minimum() {
    const auto grid = log_grid(1e-2, 20.0, 2000);
    int minima = 0;
    double where = 0.0;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double a = grad::r_sys(grid[i - 1]), b = grad::r_sys(grid[i]), c = grad::r_sys(grid[i + 1]);
        if (b <= a && b <= c) {
            ++minima;
            where = grid[i];
        }
    }
    require(minima == 1, std::to_string(minima) + " local minima");
    const double L0 = grad::solve_L0();
    require(std::abs(where - L0) < 0.02, "minimum at " + num(where) + ", L0 = " + num(L0));
}

void check_h_le_k(double tol) {
    const auto pts = log_grid(1e-4, 40.0, 12);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double a = pts[i], b = pts[j];
            const double K = wp::integral_K(a, b);
            for (auto v : {wp::HVariant::plain, wp::HVariant::separating, wp::HVariant::systole}) {
                const auto H = wp::integral_H(a, b, v, tol);
                require(H.lo <= K * (1 + 1e-12), "H > K on [" + num(a) + ", " + num(b) + "]");
            }
            const auto Hs = wp::integral_H(a, b, wp::HVariant::systole, tol);
            require(Hs.hi >= 2.0 * (std::sqrt(b) - std::sqrt(a)),
                    "H_sys < 2(sqrt b - sqrt a) on [" + num(a) + ", " + num(b) + "]");
        }
    }
}

void check_bracket_nesting(double tol) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> ends(0.0, 12.0);
    for (int i = 0; i < 20; ++i) {
        double a = ends(rng), b = ends(rng);
        if (a > b) std::swap(a, b);
        if (b - a < 1e-3) b = a + 1.0;
        for (auto v : {wp::HVariant::plain, wp::HVariant::separating, wp::HVariant::systole}) {
            const auto coarse = wp::integral_H(a, b, v, tol);
            const auto fine = wp::integral_H(a, b, v, tol / 10);
            require(coarse.contains(fine), std::string(wp::to_string(v)) + " bracket on [" + num(a) +
                                               ", " + num(b) + "] not nested");
            require(coarse.width() <= 1.5 * tol, "bracket wider than tol on [" + num(a) + ", " + num(b) + "]");
        }
    }
}

void check_h_over_k_small(double tol) {
    const double b = 1e-6;
    const double ratio = wp::integral_H(0.0, b, wp::HVariant::plain, tol * 1e-4).mid() / wp::integral_K(0.0, b);
    require(std::abs(ratio - 1.0) <= 1e-3, "H/K at 1e-6 is " + num(ratio));
}

void check_separation_monotone(const Bracket& delta, double tol) {
    double prev = -1.0;
    for (int k = 0; k <= 6; ++k) {
        const double v = wp::strata_separation(k, wp::SurfaceClass::has_genus, delta, tol).value.lo;
        require(v >= prev, "has-genus bound drops at k = " + std::to_string(k));
        prev = v;
    }
    prev = -1.0;
    for (int k = 0; k <= 8; k += 2) {
        const double v = wp::strata_separation(k, wp::SurfaceClass::punctured_sphere, delta, tol).value.lo;
        require(v >= prev, "punctured-sphere bound drops at k = " + std::to_string(k));
        prev = v;
    }
}

void check_path_contract(const Bracket& delta, double tol) {
    // The symmetric path from the stratum to the square torus has length
    // delta11/2 and must sit between the H and K integrals over [0, t0].
    const double t0 = torus::square_point();
    const auto H = wp::integral_H(0.0, t0, wp::HVariant::plain, tol);
    const double K = wp::integral_K(0.0, t0);
    require(H.lo <= delta.hi / 2, "path shorter than H(0, t0)");
    require(delta.lo / 2 <= K * (1 + 1e-12), "path longer than K(0, t0)");
}

void check_commutator_trace() {
    for (int i = 0; i < 50; ++i) {
        const double t = 0.05 + (10.0 - 0.05) * i / 49;
        const auto X = torus::holonomy(t);
        const double tr = (X.A * X.B * X.A.inverse() * X.B.inverse()).trace();
        require(std::abs(tr + 2.0) <= 1e-8, "trace " + num(tr) + " at t = " + num(t));
        const double id = std::sinh(t / 2) * std::sinh(X.s / 2);
        require(std::abs(id - 1.0) <= 1e-12, "sinh(t/2) sinh(s/2) = " + num(id));
    }
}

void check_u_value_classes() {
    for (double t : {0.3, 1.0, torus::square_point(), 3.0}) {
        const auto X = torus::holonomy(t);
        for (const auto& w : torus::enumerate_cosets(torus::CosetKind::AA, 6).words) {
            const auto u = torus::u_of_coset(X, w);
            require(!u.crossing() && u.value() > 1.0, "AA coset " + w.str() + " crosses");
        }
        const auto ab = torus::enumerate_cosets(torus::CosetKind::AB, 6);
        const auto id = torus::u_of_coset(X, *ab.identity);
        require(id.crossing() && id.value() <= 1e-12, "identity AB coset is not orthogonal");
        for (const auto& w : ab.words) {
            require(!torus::u_of_coset(X, w).crossing(), "AB coset " + w.str() + " crosses");
        }
    }
}

void check_square_symmetry() {
    const auto X = torus::holonomy(torus::square_point());
    const auto ua = torus::self_coset_u_values(X, 6, torus::Curve::alpha);
    const auto ub = torus::self_coset_u_values(X, 6, torus::Curve::beta);
    require(ua.size() == ub.size(), "multiset sizes differ");
    for (std::size_t i = 0; i < ua.size(); ++i) {
        require(std::abs(ua[i] - ub[i]) <= 1e-8 * ua[i], "u-values differ: " + num(ua[i]) + " vs " + num(ub[i]));
    }
}

void check_truncation_monotone() {
    const auto X = torus::holonomy(1.0);
    double lo = -1.0, hi = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= 8; ++n) {
        const auto b = torus::grad_sq_bracket(X, n);
        require(b.lo >= lo && b.hi <= hi, "bracket not monotone at word length " + std::to_string(n));
        lo = b.lo;
        hi = b.hi;
    }
    require(lo >= 2.0 / pi - 1e-15 && hi <= 4.0 / pi * std::sinh(0.5) + 1e-15, "analytic bounds violated");
}

void check_delta11_nested_and_window(double quad_tol) {
    Bracket prev{-1.0, std::numeric_limits<double>::infinity(), {}};
    for (int n : {0, 2, 4, 6, 8}) {
        const auto b = torus::delta11_bracket(n, quad_tol);
        require(b.lo >= 6.57252 - 1e-5 && b.hi <= 6.65603 + 1e-5,
                "delta11 bracket at word length " + std::to_string(n) + " leaves the window");
        if (n >= 2) require(prev.contains(b), "delta11 brackets not nested at " + std::to_string(n));
        prev = b;
    }
}

// Union-find over reduced words of length <= L + 4 glued by left A-multiplication
// and right A- (or B-) multiplication; the classes reaching length <= L must
// match the canonical enumeration exactly.
void check_coset_bruteforce(torus::CosetKind kind, int L) {
    std::vector<std::string> words{""};
    std::map<std::string, int> index{{"", 0}};
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].size() == static_cast<std::size_t>(L + 4)) continue;
        for (char c : {'A', 'a', 'B', 'b'}) {
            const std::string& w = words[i];
            if (!w.empty() && (w.back() ^ 0x20) == c) continue;
            std::string next = w + c;
            index.emplace(next, static_cast<int>(words.size()));
            words.push_back(std::move(next));
        }
    }
    std::vector<int> parent(words.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto reduce = [](std::string w) {
        std::string out;
        for (char c : w) {
            if (!out.empty() && (out.back() ^ 0x20) == c) {
                out.pop_back();
            } else {
                out.push_back(c);
            }
        }
        return out;
    };
    const char right = kind == torus::CosetKind::AA ? 'A' : 'B';
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (const std::string& n : {reduce("A" + words[i]), reduce("a" + words[i]),
                                     reduce(words[i] + right), reduce(words[i] + char(right ^ 0x20))}) {
            auto it = index.find(n);
            if (it != index.end()) parent[find(static_cast<int>(i))] = find(it->second);
        }
    }
    std::map<int, std::string> shortest;
    for (std::size_t i = 0; i < words.size(); ++i) {
        auto& s = shortest[find(static_cast<int>(i))];
        if (s.empty() && words[i].empty()) {
            s = "<e>";
        } else if (s != "<e>" && (s.empty() || words[i].size() < s.size())) {
            s = words[i];
        }
    }
    std::set<std::string> brute;
    for (const auto& [root, w] : shortest) {
        if (w == "<e>" || static_cast<int>(w.size()) > L) continue;
        brute.insert(w);
    }
    const bool has_identity_class = kind == torus::CosetKind::AB;
    const auto cosets = torus::enumerate_cosets(kind, L);
    std::set<std::string> enumerated;
    for (const auto& w : cosets.words) {
        require(enumerated.insert(w.str()).second, "duplicate coset " + w.str());
    }
    require(cosets.identity.has_value() == has_identity_class, "identity flag wrong");
    require(brute == enumerated, std::string(torus::to_string(kind)) + " enumeration differs at length " +
                                     std::to_string(L) + ": " + std::to_string(enumerated.size()) +
                                     " vs " + std::to_string(brute.size()));
}

void check_u_formula_geometric() {
    // The geometric route loses about eps * |W|^2 relative accuracy, so only
    // words it can resolve are compared, at that scale.
    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::size_t compared = 0;
    for (double t : {0.2, 1.0, 2.5}) {
        const auto X = torus::holonomy(t);
        for (auto kind : {torus::CosetKind::AA, torus::CosetKind::AB}) {
            for (const auto& w : torus::enumerate_cosets(kind, 6).words) {
                double norm2 = 0.0;
                const auto m = torus::word_matrix(X, w.letters());
                for (double x : m.entries()) norm2 += x * x;
                if (eps * norm2 > 1e-6) continue;
                ++compared;
                const auto a = torus::u_of_coset(X, w), b = torus::u_of_coset_geometric(X, w);
                require(a.crossing() == b.crossing() &&
                            std::abs(a.value() - b.value()) <= (1e-12 + 16.0 * eps * norm2) * a.value(),
                        "closed form and geometric u differ for " + w.str());
            }
        }
    }
    require(compared >= 1500, "too few words compared: " + std::to_string(compared));
}

void check_c_ratio_grid(double tol) {
    double lowest = std::numeric_limits<double>::infinity();
    for (double t : log_grid(1e-3, 1e2, 120)) {
        const double c = wp::c_ratio(t, tol);
        require(c >= std::sqrt(2.0 / pi), "c(" + num(t) + ") below sqrt(2/pi)");
        lowest = std::min(lowest, c);
    }
    require(lowest >= 0.94, "min c = " + num(lowest));
    require(std::abs(wp::c_ratio(1e-4, tol) - 1.0) <= 0.02, "c(1e-4) not near 1");
    require(std::abs(wp::c_ratio(1e4, 1e-4) - 1.0) <= 0.02, "c(1e4) not near 1");
}

}  // namespace

std::vector<CheckResult> run_verify(Suite suite, const Settings& settings) {
    const double tol = settings.tol;
    std::vector<std::pair<std::string, std::function<void()>>> checks;
    const auto delta = torus::delta11_bracket(settings.max_word_length, settings.delta_tol);

    checks.emplace_back("hyp2.mobius_invariance", check_mobius_invariance);
    checks.emplace_back("hyp2.axis_conjugation", check_axis_conjugation);
    checks.emplace_back("hyp2.translation_length_power", check_translation_power);
    checks.emplace_back("hyp2.collar_area_growth", check_collar_area);
    checks.emplace_back("riera.positive_for_disjoint", check_riera_positive);
    checks.emplace_back("riera.a_monotone_and_envelope", check_a_monotone_and_envelope);
    checks.emplace_back("riera.series_brackets_closed_form", check_series_brackets_closed_form);
    checks.emplace_back("grad.pair_bound_grid", check_pair_bound_grid);
    checks.emplace_back("grad.auv_bound_grid", check_auv_grid);
    checks.emplace_back("grad.large_length_bound_grid", check_large_length_bound_grid);
    checks.emplace_back("grad.r_sys_unique_minimum", check_rsys_minimum);
    checks.emplace_back("wp.h_below_k_grid", [tol] { check_h_le_k(tol); });
    checks.emplace_back("wp.bracket_nesting", [tol] { check_bracket_nesting(tol); });
    checks.emplace_back("wp.h_over_k_small_b", [tol] { check_h_over_k_small(tol); });
    checks.emplace_back("wp.separation_monotone", [&] { check_separation_monotone(delta, tol); });
    checks.emplace_back("wp.path_length_contract", [&] { check_path_contract(delta, tol); });
    checks.emplace_back("torus.commutator_trace", check_commutator_trace);
    checks.emplace_back("torus.u_value_classes", check_u_value_classes);
    checks.emplace_back("torus.square_symmetry", check_square_symmetry);
    checks.emplace_back("torus.truncation_monotone", check_truncation_monotone);
    checks.emplace_back("torus.delta11_nested_window",
                        [&] { check_delta11_nested_and_window(settings.delta_tol); });
    if (suite == Suite::all) {
        checks.emplace_back("torus.coset_bruteforce", [] {
            for (int L = 1; L <= 5; ++L) {
                check_coset_bruteforce(torus::CosetKind::AA, L);
                check_coset_bruteforce(torus::CosetKind::AB, L);
            }
        });
        checks.emplace_back("torus.u_formula_geometric", check_u_formula_geometric);
        checks.emplace_back("wp.c_ratio_grid", [tol] { check_c_ratio_grid(tol); });
    }

    std::vector<CheckResult> results;
    results.reserve(checks.size());
    for (auto& [name, fn] : checks) {
        CheckResult r{name, true, "ok"};
        try {
            fn();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace wpbounds::report
