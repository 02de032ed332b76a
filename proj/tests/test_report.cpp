#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wpbounds/errors.hpp"
#include "wpbounds/report.hpp"

using namespace wpbounds;
using namespace wpbounds::report;

namespace {

const std::vector<ConstantRecord>& records() {
    static const auto r = build_constant_records();
    return r;
}

const ConstantRecord& find(const std::string& name) {
    const auto& rs = records();
    const auto it = std::find_if(rs.begin(), rs.end(), [&](const ConstantRecord& r) { return r.name == name; });
    REQUIRE(it != rs.end());
    return *it;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("judge") {
    CHECK(judge(3.274664, 3.274669, "3.27466", Comparison::truncation) == Status::reproduced);
    CHECK(judge(3.274659, 3.274669, "3.27466", Comparison::truncation) == Status::mismatch);
    CHECK(judge(0.537249, 0.537249, ".53724", Comparison::informational) == Status::reproduced);
    CHECK(judge(0.5398, 0.5398, ".53724", Comparison::informational) == Status::mismatch);
    CHECK(judge(10.1, 10.2, "10.09656", Comparison::at_least) == Status::reproduced);
    CHECK(judge(10.09655, 10.2, "10.09656", Comparison::at_least) == Status::mismatch);
    CHECK(judge(6.58, 6.60, "(6.57252, 6.65603)", Comparison::within_interval) == Status::reproduced);
    CHECK(judge(6.57, 6.60, "(6.57252, 6.65603)", Comparison::within_interval) == Status::mismatch);
    CHECK(judge(6.60, 6.61, "[6.59576, 6.63283]", Comparison::overlaps) == Status::reproduced);
    CHECK(judge(6.64, 6.65, "[6.59576, 6.63283]", Comparison::overlaps) == Status::mismatch);
    CHECK_THROWS_AS(judge(1, 2, "abc", Comparison::at_least), DomainError);
}

TEST_CASE("format_double round-trips") {
    for (double x : {0.1, 1.0 / 3.0, 6.5725236032984372, 1e-300, 12345.678}) {
        CHECK(std::stod(format_double(x)) == x);
    }
}

TEST_CASE("constant records") {
    const std::vector<std::string> expected{
        "delta11_elementary", "delta11_refined", "strata_genus_general", "strata_W1", "strata_W2",
        "delta04", "two_delta11", "gap_genus", "gap_sphere", "lipschitz_sys", "inradius_H_2eps2",
        "inradius_Hs_4eps2", "c_ratio_min", "pa_case_i2", "pa_case_i1", "pa_general", "brock_bromberg_11"};
    std::map<std::string, int> seen;
    for (const auto& r : records()) {
        ++seen[r.name];
        CHECK(r.lo <= r.hi);
        CHECK(r.status == judge(r.lo, r.hi, r.paper, r.comparison));
    }
    for (const auto& name : expected) CHECK(seen[name] == 1);
    CHECK(seen.size() == expected.size());

    CHECK(find("delta11_elementary").status == Status::reproduced);
    CHECK(find("lipschitz_sys").status == Status::reproduced);
    CHECK(find("inradius_H_2eps2").status == Status::reproduced);
    CHECK(find("brock_bromberg_11").provenance == Provenance::derived);
    CHECK(find("brock_bromberg_11").paper == ".53724");
    CHECK(all_reproduced(records()) ==
          std::all_of(records().begin(), records().end(), [](const ConstantRecord& r) {
              return r.provenance == Provenance::derived || r.status == Status::reproduced;
          }));
}

TEST_CASE("constants JSON and CSV") {
    const auto json = nlohmann::json::parse(constants_json(records()));
    REQUIRE(json.contains("constants"));
    CHECK(json["constants"].size() == records().size());
    for (const auto& c : json["constants"]) {
        for (const char* key : {"name", "lo", "hi", "paper", "status"}) CHECK(c.contains(key));
    }
    const auto csv = lines(constants_csv(records()));
    REQUIRE(!csv.empty());
    CHECK(csv.front() == "name,lo,hi,paper,status");
    CHECK(csv.size() == records().size() + 1);
    CHECK(csv[1].rfind("delta11_elementary,", 0) == 0);
    CHECK(csv[1].find("\"(6.57252, 6.65603)\"") != std::string::npos);
    // Byte-identical on a rebuild.
    const auto again = build_constant_records();
    CHECK(constants_csv(again) == constants_csv(records()));
    CHECK(constants_json(again) == constants_json(records()));
}

TEST_CASE("figure data") {
    const auto ratio = plot_data(PlotKind::hsys_ratio, 40);
    CHECK(ratio.rows.size() == 40);
    CHECK(ratio.rows.front()[0] == doctest::Approx(1e-3));
    CHECK(ratio.rows.back()[0] == doctest::Approx(1e2));
    double lowest = INFINITY;
    for (const auto& row : ratio.rows) lowest = std::min(lowest, row[1]);
    CHECK(lowest >= 0.94);
    const auto csv = lines(plot_csv(ratio));
    CHECK(csv.front() == "t,value");
    CHECK(csv.size() == 41);

    const auto hk = plot_data(PlotKind::h_vs_k, 16);
    CHECK(hk.rows.size() == 16);
    CHECK(hk.rows.front()[0] == 0.0);
    CHECK(hk.rows.back()[0] == doctest::Approx(10.0));
    for (const auto& row : hk.rows) CHECK(row[1] <= row[2] + 1e-12);
    CHECK(lines(plot_csv(hk)).front() == "t,H,K");

    const auto svg = plot_svg(hk);
    CHECK(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);
    CHECK(svg == plot_svg(plot_data(PlotKind::h_vs_k, 16)));

    CHECK_THROWS_AS(plot_data(PlotKind::h_vs_k, 15), DomainError);
    CHECK(parse_plot_kind("hsys-ratio") == PlotKind::hsys_ratio);
    CHECK_THROWS_AS(parse_plot_kind("nope"), DomainError);
}

TEST_CASE("verify suite") {
    const auto start = std::chrono::steady_clock::now();
    const auto results = run_verify(Suite::fast);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(seconds < 60.0);
    CHECK(results.size() >= 15);
    for (const auto& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
    const auto all = run_verify(Suite::all);
    CHECK(all.size() > results.size());
    const bool has_bruteforce = std::any_of(all.begin(), all.end(), [](const CheckResult& r) {
        return r.name == "torus.coset_bruteforce";
    });
    CHECK(has_bruteforce);
    for (const auto& r : all) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
    CHECK(parse_suite("all") == Suite::all);
    CHECK_THROWS_AS(parse_suite("slow"), DomainError);
}
