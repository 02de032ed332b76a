#include "wpbounds/wp_integrals.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "wpbounds/errors.hpp"
#include "wpbounds/grad_bounds.hpp"
#include "wpbounds/quadrature.hpp"
#include "wpbounds/riera_kernel.hpp"

namespace wpbounds::wp {

using std::numbers::pi;

std::string_view to_string(HVariant v) {
    switch (v) {
        case HVariant::plain: return "plain";
        case HVariant::separating: return "separating";
        case HVariant::systole: return "systole";
    }
    return "?";
}

std::string_view to_string(SurfaceClass c) {
    return c == SurfaceClass::has_genus ? "has-genus" : "punctured-sphere";
}

std::string_view to_string(VerdictKind k) {
    return k == VerdictKind::exact ? "exact" : "lower-bound";
}

double integral_K(double a, double b) {
    if (!(a >= 0.0 && a <= b)) throw DomainError("integral_K: need 0 <= a <= b");
    return std::sqrt(2.0 * pi * b) - std::sqrt(2.0 * pi * a);
}

double h_denominator_excess(HVariant variant, double t) {
    if (!(t >= 0.0)) throw DomainError("h_denominator_excess: t must be nonnegative");
    if (t == 0.0) return 0.0;
    switch (variant) {
        case HVariant::plain: return grad::F_diag(t);
        case HVariant::separating: return grad::F_diag(t / 2);
        case HVariant::systole: {
            const double r = grad::r_sys(t);
            return grad::G_of(r, r);
        }
    }
    return 0.0;
}

Bracket integral_H(double a, double b, HVariant variant, double tol) {
    if (!(a >= 0.0 && a < b)) throw DomainError("integral_H: need 0 <= a < b");
    if (!std::isfinite(b)) throw DomainError("integral_H: b must be finite");
    // dt = 2u du turns dt / sqrt(2t/pi (1+Phi)) into sqrt(2 pi / (1 + Phi(u^2))) du.
    auto integrand = [variant](double u) {
        return std::sqrt(2.0 * pi / (1.0 + h_denominator_excess(variant, u * u)));
    };
    const double ua = std::sqrt(a);
    const double ub = std::sqrt(b);

    Bracket out;
    if (variant == HVariant::systole) {
        // r_sys switches branch at L0; split there so panels stay smooth.
        const double uk = std::sqrt(grad::solve_L0());
        if (ua < uk && uk < ub) {
            out = quad::adaptive_simpson_split(integrand, std::array<double, 3>{ua, uk, ub}, tol);
        } else {
            out = quad::adaptive_simpson(integrand, ua, ub, tol);
        }
    } else {
        out = quad::adaptive_simpson(integrand, ua, ub, tol);
    }

    // a_hat is evaluated at its certified midpoint; Phi is off by at most
    // half a series tail in relative terms, and the integrand's sensitivity
    // to Phi is below 1/2 of its size.
    const double tail = 0.5 * riera::kDefaultSeriesTol * std::sqrt(2.0 * pi) * (ub - ua);
    out.lo -= tail;
    out.hi += tail;
    out.budget.series_tail += 2.0 * tail;
    std::ostringstream note;
    note << "H(" << a << ", " << b << ") " << to_string(variant) << " via t=u^2 adaptive Simpson";
    out.budget.notes.push_back(note.str());
    return out;
}

double c_ratio(double t, double tol) {
    if (!(t > 0.0)) throw DomainError("c_ratio: t must be positive");
    return integral_H(0.0, t, HVariant::systole, tol).mid() / std::sqrt(2.0 * pi * t);
}

Bracket W1(double L, double tol) {
    if (!(L > 0.0)) throw DomainError("W1: L must be positive");
    const double other = 8.0 * std::asinh(1.0 / std::sinh(L / 4));
    return integral_H(0.0, L, HVariant::separating, tol / 2) +
           integral_H(0.0, other, HVariant::separating, tol / 2);
}

Bracket W2(double L, double tol) {
    if (!(L > 0.0)) throw DomainError("W2: L must be positive");
    const double other =
        4.0 * std::asinh(1.0 / std::sinh(L / 4)) + 4.0 * std::asinh(1.0 / std::sinh(L / 2));
    return integral_H(0.0, L, HVariant::separating, tol / 2) +
           integral_H(0.0, other, HVariant::separating, tol / 2);
}

Bracket strata_general_bound(double tol) {
    return integral_H(0.0, 4.0 * grad::kEpsilon2, HVariant::plain, tol / 2) +
           integral_H(0.0, 2.0 * grad::kEpsilon2, HVariant::plain, tol / 2);
}

namespace {

std::string describe(const char* label, const Bracket& b) {
    std::ostringstream os;
    os << label << ' ' << b;
    return os.str();
}

}  // namespace

SeparationVerdict strata_separation(int k, SurfaceClass surface_class, const Bracket& delta11,
                                    double tol) {
    if (k < 0) throw DomainError("strata_separation: intersection number must be nonnegative");
    if (surface_class == SurfaceClass::punctured_sphere && k % 2 != 0) {
        throw DomainError("strata_separation: curves on a punctured sphere meet evenly");
    }
    SeparationVerdict v;
    v.intersection = k;
    v.surface_class = surface_class;
    if (k == 0) {
        v.kind = VerdictKind::exact;
        v.value = Bracket::exact(0.0);
        return v;
    }

    const double root2 = std::numbers::sqrt2;
    if (surface_class == SurfaceClass::has_genus) {
        if (k == 1) {
            v.kind = VerdictKind::exact;
            v.value = delta11;
            return v;
        }
        // Either every curve meets the other multicurve at most once (the
        // distance is then sqrt(k) delta11 >= sqrt(2) delta11) or some curve
        // meets it twice (the distance is then >= H(4e2) + H(2e2)). The bound
        // valid in both cases is the smaller one.
        const Bracket tori = delta11.scaled(root2);
        const Bracket general = strata_general_bound(tol);
        v.kind = VerdictKind::lower_bound;
        v.value = general.lo <= tori.lo ? general : tori;
        v.value.budget.notes.push_back(describe("branch sqrt(2)*delta11:", tori));
        v.value.budget.notes.push_back(describe("branch H(4e2)+H(2e2):", general));
        return v;
    }

    const Bracket delta04 = delta11.scaled(root2);
    if (k == 2) {
        v.kind = VerdictKind::exact;
        v.value = delta04;
        return v;
    }
    const Bracket spheres = delta04.scaled(root2);
    const Bracket w1 = W1(kW1Length, tol);
    const Bracket w2 = W2(kW2Length, tol);
    v.kind = VerdictKind::lower_bound;
    v.value = spheres;
    if (w1.lo < v.value.lo) v.value = w1;
    if (w2.lo < v.value.lo) v.value = w2;
    v.value.budget.notes.push_back(describe("branch sqrt(2)*delta04:", spheres));
    v.value.budget.notes.push_back(describe("branch W1(3.678):", w1));
    v.value.budget.notes.push_back(describe("branch W2(2.42):", w2));
    return v;
}

GapConstants gap_constants(const Bracket& delta11, double tol) {
    const Bracket general = strata_general_bound(tol);
    const Bracket w2 = W2(kW2Length, tol);
    return {general.lo - delta11.hi, w2.lo - std::numbers::sqrt2 * delta11.hi};
}

PaTranslationBounds pa_translation_bounds(double tol) {
    const double e2 = grad::kEpsilon2;
    const double i2 = integral_H(2.0 * e2, 4.0 * e2, HVariant::plain, tol).lo;
    const double i1 = integral_H(2.0 * e2, 6.0 * e2, HVariant::plain, tol).lo;
    return {i2, i1, i1 / 2.0};
}

namespace {

// zeta(s) for integer s >= 4: direct sum plus an Euler-Maclaurin tail.
double zeta_even(int s) {
    constexpr int kTerms = 64;
    double sum = 0.0;
    for (int k = kTerms; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
    const double K = kTerms;
    sum += std::pow(K, 1.0 - s) / (s - 1) - 0.5 * std::pow(K, -s) + s * std::pow(K, -s - 1.0) / 12.0;
    return sum;
}

// Clausen function Cl2(x) for 0 < x < 2 pi via
// x - x log x + sum_{n>=1} zeta(2n) x^{2n+1} / (n (2n+1) (2 pi)^{2n}).
double clausen2(double x) {
    if (x == 0.0) return 0.0;
    double sum = x - x * std::log(x);
    const double ratio = (x / (2.0 * pi)) * (x / (2.0 * pi));
    double power = x * ratio;  // x^{2n+1} / (2 pi)^{2n} at n = 1
    for (int n = 1; n < 200; ++n) {
        const double z = n == 1 ? pi * pi / 6.0 : zeta_even(2 * n);
        const double term = z * power / (n * (2.0 * n + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18) break;
        power *= ratio;
    }
    return sum;
}

}  // namespace

double lobachevsky(double theta) {
    if (!(theta >= 0.0 && theta <= pi / 2)) throw DomainError("lobachevsky: need 0 <= theta <= pi/2");
    return 0.5 * clausen2(2.0 * theta);
}

double regular_ideal_tetrahedron_volume() { return 2.0 * lobachevsky(pi / 6); }

double brock_bromberg_compare(int genus, int punctures) {
    const int chi = 2 * genus - 2 + punctures;
    if (genus < 0 || punctures < 0 || chi <= 0) {
        throw DomainError("brock_bromberg_compare: need 2g - 2 + n > 0");
    }
    const double area = 2.0 * pi * chi;
    return 4.0 * regular_ideal_tetrahedron_volume() / (3.0 * std::sqrt(area));
}

}  // namespace wpbounds::wp
