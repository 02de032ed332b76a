#pragma once

// Distance bounds obtained by integrating reciprocal gradient bounds along
// length levels:
//
//     K(a, b) = int_a^b dt / sqrt(2t/pi)              (upper bound)
//     H(a, b) = int_a^b dt / sqrt((2t/pi)(1 + Phi(t)))  (lower bound)
//
// with Phi(t) = F(t) (plain), F(t/2) (separating curves) or
// G(r_sys(t), r_sys(t)) (systoles). The strata-separation, in-radius and
// pseudo-Anosov constants are sums and differences of these.

#include <string_view>

#include "wpbounds/bracket.hpp"

namespace wpbounds::wp {

enum class HVariant { plain, separating, systole };

std::string_view to_string(HVariant v);

inline constexpr double kDefaultTol = 1e-7;

/// Lengths at which the two punctured-sphere branches are evaluated.
inline constexpr double kW1Length = 3.678;
inline constexpr double kW2Length = 2.42;

/// sqrt(2 pi b) - sqrt(2 pi a). Throws DomainError unless 0 <= a <= b.
double integral_K(double a, double b);

/// Phi(t) for the given variant; Phi(0) = 0.
double h_denominator_excess(HVariant variant, double t);

/// Certified bracket for H(a, b) of width <= tol (0 <= a < b).
/// Computed after t = u^2, which removes the t^{-1/2} endpoint behaviour.
Bracket integral_H(double a, double b, HVariant variant = HVariant::plain,
                   double tol = kDefaultTol);

/// H_sys(0, t) / sqrt(2 pi t), using the bracket midpoint.
double c_ratio(double t, double tol = kDefaultTol);

/// H_s(L) + H_s(8 asinh(1/sinh(L/4))).
Bracket W1(double L, double tol = kDefaultTol);

/// H_s(L) + H_s(4 asinh(1/sinh(L/4)) + 4 asinh(1/sinh(L/2))).
Bracket W2(double L, double tol = kDefaultTol);

/// H(0, 4 eps2) + H(0, 2 eps2): the general-branch strata bound.
Bracket strata_general_bound(double tol = kDefaultTol);

enum class SurfaceClass { has_genus, punctured_sphere };
enum class VerdictKind { exact, lower_bound };

std::string_view to_string(SurfaceClass c);
std::string_view to_string(VerdictKind k);

struct SeparationVerdict {
    int intersection = 0;
    SurfaceClass surface_class = SurfaceClass::has_genus;
    VerdictKind kind = VerdictKind::exact;
    /// exact: bracket for the distance. lower_bound: distance >= value.lo.
    Bracket value;
};

/// Distance between strata whose multicurves intersect k times.
/// Throws DomainError for negative k, or odd k on a punctured sphere.
SeparationVerdict strata_separation(int k, SurfaceClass surface_class, const Bracket& delta11,
                                    double tol = kDefaultTol);

struct GapConstants {
    double gap_genus;
    double gap_sphere;
};

/// (H(4e2) + H(2e2)).lo - delta11.hi and W2(2.42).lo - sqrt(2) delta11.hi.
GapConstants gap_constants(const Bracket& delta11, double tol = kDefaultTol);

struct PaTranslationBounds {
    double case_i2;  ///< H(2e2, 4e2).lo
    double case_i1;  ///< H(2e2, 6e2).lo
    double general;  ///< case_i1 / 2
};

PaTranslationBounds pa_translation_bounds(double tol = kDefaultTol);

/// Lobachevsky function -int_0^theta log|2 sin u| du, 0 <= theta <= pi/2.
double lobachevsky(double theta);

/// Volume 3 L(pi/3) = 2 L(pi/6) of the regular ideal tetrahedron.
double regular_ideal_tetrahedron_volume();

/// 4 V3 / (3 sqrt(2 pi (2g - 2 + n))). Throws DomainError unless 2g-2+n > 0.
double brock_bromberg_compare(int genus, int punctures);

}  // namespace wpbounds::wp
