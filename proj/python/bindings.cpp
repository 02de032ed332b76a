#include <cmath>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wpbounds/errors.hpp"
#include "wpbounds/grad_bounds.hpp"
#include "wpbounds/hyp2.hpp"
#include "wpbounds/report.hpp"
#include "wpbounds/riera_kernel.hpp"
#include "wpbounds/torus_coset.hpp"
#include "wpbounds/wp_integrals.hpp"

namespace py = pybind11;
using namespace wpbounds;

namespace {

wp::HVariant parse_variant(const std::string& name) {
    if (name == "plain") return wp::HVariant::plain;
    if (name == "separating") return wp::HVariant::separating;
    if (name == "systole") return wp::HVariant::systole;
    throw DomainError("unknown variant '" + name + "'");
}

torus::CosetKind parse_kind(const std::string& name) {
    if (name == "AA") return torus::CosetKind::AA;
    if (name == "AB") return torus::CosetKind::AB;
    throw DomainError("unknown coset kind '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Certified Weil-Petersson gradient and distance bounds";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    py::class_<Bracket>(m, "Bracket")
        .def(py::init([](double lo, double hi) { return Bracket{lo, hi, {}}; }), py::arg("lo"), py::arg("hi"))
        .def_readonly("lo", &Bracket::lo)
        .def_readonly("hi", &Bracket::hi)
        .def_property_readonly("mid", &Bracket::mid)
        .def_property_readonly("width", &Bracket::width)
        .def_property_readonly("notes", [](const Bracket& b) { return b.budget.notes; })
        .def_property_readonly("budget", [](const Bracket& b) {
            return py::dict(py::arg("quadrature") = b.budget.quadrature,
                            py::arg("series_tail") = b.budget.series_tail,
                            py::arg("truncation") = b.budget.truncation,
                            py::arg("rounding") = b.budget.rounding);
        })
        .def("contains", [](const Bracket& b, double x) { return b.contains(x); })
        .def("__repr__", [](const Bracket& b) {
            return "Bracket(" + report::format_double(b.lo) + ", " + report::format_double(b.hi) + ")";
        });

    m.def("riera_R", [](double u) { return riera::riera_R(u); }, py::arg("u"));
    m.def("a_of_T", &riera::a_of_T, py::arg("T"));
    m.def("a_hat", [](double u) {
        const auto s = riera::a_hat(u);
        return py::make_tuple(s.value, s.tail_bound, s.terms_used);
    }, py::arg("u"), "Partial sum, certified tail bound and number of terms.");
    m.def("collar_area", &hyp2::collar_area, py::arg("r"));
    m.def("u_value", [](double p1, double q1, double p2, double q2) {
        const auto point = [](double x) {
            return std::isinf(x) ? hyp2::BoundaryPoint::infinity() : hyp2::BoundaryPoint(x);
        };
        const auto u = hyp2::u_value({point(p1), point(q1)}, {point(p2), point(q2)});
        return py::make_tuple(u.value(), u.crossing());
    }, py::arg("p1"), py::arg("q1"), py::arg("p2"), py::arg("q2"),
          "u-value and crossing flag of two geodesics given by ideal endpoints (math.inf for infinity).");

    m.attr("EPSILON2") = grad::kEpsilon2;
    m.def("collar_radius_simple", &grad::collar_radius_simple, py::arg("length"));
    m.def("collar_radius_separating", &grad::collar_radius_separating, py::arg("length"));
    m.def("G", &grad::G_of, py::arg("r"), py::arg("s"));
    m.def("F", &grad::F_pair, py::arg("la"), py::arg("lb"));
    m.def("grad_sq_upper_single", &grad::grad_sq_upper_single, py::arg("length"));
    m.def("grad_sq_upper_separating", &grad::grad_sq_upper_separating, py::arg("length"));
    m.def("grad_sq_upper_systole", &grad::grad_sq_upper_systole, py::arg("length"));
    m.def("r_sys", &grad::r_sys, py::arg("t"));
    m.def("solve_L0", &grad::solve_L0);
    m.def("systole_lipschitz_constant", &grad::systole_lipschitz_constant);

    m.def("integral_K", &wp::integral_K, py::arg("a"), py::arg("b"));
    m.def("integral_H", [](double a, double b, const std::string& variant, double tol) {
        return wp::integral_H(a, b, parse_variant(variant), tol);
    }, py::arg("a"), py::arg("b"), py::arg("variant") = "plain", py::arg("tol") = wp::kDefaultTol);
    m.def("c_ratio", &wp::c_ratio, py::arg("t"), py::arg("tol") = wp::kDefaultTol);
    m.def("W1", &wp::W1, py::arg("L"), py::arg("tol") = wp::kDefaultTol);
    m.def("W2", &wp::W2, py::arg("L"), py::arg("tol") = wp::kDefaultTol);
    m.def("strata_separation", [](int k, const std::string& surface, const Bracket& delta11, double tol) {
        const auto cls = surface == "sphere" ? wp::SurfaceClass::punctured_sphere
                         : surface == "genus" ? wp::SurfaceClass::has_genus
                                              : throw DomainError("surface must be 'genus' or 'sphere'");
        const auto v = wp::strata_separation(k, cls, delta11, tol);
        return py::make_tuple(std::string(wp::to_string(v.kind)), v.value);
    }, py::arg("k"), py::arg("surface"), py::arg("delta11"), py::arg("tol") = wp::kDefaultTol,
          "(kind, bracket) with kind 'exact' or 'lower-bound'.");
    m.def("gap_constants", [](const Bracket& delta11, double tol) {
        const auto g = wp::gap_constants(delta11, tol);
        return py::make_tuple(g.gap_genus, g.gap_sphere);
    }, py::arg("delta11"), py::arg("tol") = wp::kDefaultTol);
    m.def("pa_translation_bounds", [](double tol) {
        const auto p = wp::pa_translation_bounds(tol);
        return py::make_tuple(p.case_i2, p.case_i1, p.general);
    }, py::arg("tol") = wp::kDefaultTol);
    m.def("lobachevsky", &wp::lobachevsky, py::arg("theta"));
    m.def("brock_bromberg_compare", &wp::brock_bromberg_compare, py::arg("genus"), py::arg("punctures"));

    m.def("enumerate_cosets", [](const std::string& kind, int max_word_length) {
        std::vector<std::string> out;
        for (const auto& w : torus::enumerate_cosets(parse_kind(kind), max_word_length).words) out.push_back(w.str());
        return out;
    }, py::arg("kind"), py::arg("max_word_length"));
    m.def("grad_sq_bracket", [](double t, int max_word_length) {
        return torus::grad_sq_bracket(torus::holonomy(t), max_word_length);
    }, py::arg("t"), py::arg("max_word_length") = torus::kDefaultWordLength);
    m.def("delta11_bracket", &torus::delta11_bracket, py::arg("max_word_length") = torus::kDefaultWordLength,
          py::arg("quad_tol") = torus::kDefaultQuadTol);
    m.def("delta11_elementary", []() {
        const auto el = torus::delta11_elementary();
        return py::make_tuple(el.lower_end, el.upper_end);
    });

    m.def("constants", [](double tol, int max_word_length) {
        report::Settings s;
        s.tol = tol;
        s.max_word_length = max_word_length;
        py::list out;
        for (const auto& r : report::build_constant_records(s)) {
            out.append(py::dict(py::arg("name") = r.name, py::arg("lo") = r.lo, py::arg("hi") = r.hi,
                                py::arg("paper") = r.paper,
                                py::arg("status") = std::string(report::to_string(r.status)),
                                py::arg("provenance") = std::string(report::to_string(r.provenance))));
        }
        return out;
    }, py::arg("tol") = 1e-7, py::arg("max_word_length") = torus::kDefaultWordLength);
    m.def("verify", [](const std::string& suite) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& r : report::run_verify(report::parse_suite(suite))) out.emplace_back(r.name, r.passed, r.detail);
        return out;
    }, py::arg("suite") = "fast");
}
