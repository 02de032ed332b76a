#pragma once

// Closed-form bounds on Weil-Petersson length-gradient inner products.
//
// Notation: for lengths la <= lb the collar radii are
//     r = asinh(1/sinh(la/2)),   s = asinh(1/sinh(lb/2)),
// and the bound reads
//     <grad la, grad lb> <= (2 la / pi) (delta + F(la, lb)),
//     F(la, lb) = G(r, s) = a(r+s) (e^{-r} + e^{-3r}/3) / A(s)
// with A the collar area and a the normalized Riera kernel.

#include <string_view>

namespace wpbounds::grad {

/// Margulis constant of the hyperbolic plane as used for the strata and
/// in-radius constants: asinh(1), the self-dual collar length.
inline constexpr double kEpsilon2 = 0.88137358701954302523;

struct CollarRadii {
    double r;  ///< radius about the shorter curve
    double s;  ///< radius about the longer curve
};

enum class BoundKind { single_curve, pair, separating, systole };

std::string_view to_string(BoundKind kind);

/// Two-sided bound on ||grad l||^2 or <grad la, grad lb>.
struct GradBound {
    double lower;
    double upper;
    BoundKind kind;
};

/// asinh(1/sinh(l/2)): embedded collar radius from the collar lemma.
double collar_radius_simple(double length);

/// 2 asinh(1/sinh(l/4)): embedded collar width about a separating curve.
double collar_radius_separating(double length);

/// Radii for la <= lb; throws DomainError otherwise.
CollarRadii collar_radii(double la, double lb);

/// (2 cosh(l/2) + 1) / (3 (cosh(l/2) + 1)^2)
double u_factor(double length);

/// 1 / (atan(csch(l/2)) cosh^2(l/2) + sinh(l/2))
double v_factor(double length);

/// a(r+s) (e^{-r} + e^{-3r}/3) / A(s).
double G_of(double r, double s);

/// a(r+s) u(la) v(lb) sinh(la/2) sinh^2(lb/2). Requires 0 < la <= lb.
double F_pair(double la, double lb);

/// F(t) = F(t, t); F(0) = 0 by continuity.
double F_diag(double t);

/// (2l/pi)(1 + F(l, l)).
double grad_sq_upper_single(double length);

/// (2l/pi)(1 + F(l/2, l/2)) for separating curves.
double grad_sq_upper_separating(double length);

/// max(t/4, asinh(1/sinh(t/2))): collar radius lower bound for a systole.
double r_sys(double t);

/// Root of sinh(x/4) sinh(x/2) = 1 by bisection on [1, 4].
double solve_L0();

/// (2l/pi)(1 + G(r_sys(l), r_sys(l))).
double grad_sq_upper_systole(double length);

/// sqrt(2 pi / (1 + G(L0/4, L0/4))): lower Lipschitz factor for H_sys.
double systole_lipschitz_constant();

/// (2/pi) la delta <= <grad la, grad lb> <= (2 la/pi)(delta + F(la, lb)).
GradBound inner_product_bound(double la, double lb, bool same_curve);

/// Same lower bound, upper bound simplified to
/// (2/pi) la delta + 8/(3 pi^2) la sinh(la/2) sinh^2(lb/2).
GradBound inner_product_bound_elementary(double la, double lb, bool same_curve);

/// ||grad l||^2 bounds for a separating curve and for a systole.
GradBound grad_sq_bound_separating(double length);
GradBound grad_sq_bound_systole(double length);

}  // namespace wpbounds::grad
