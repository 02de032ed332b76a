#include "wpbounds/grad_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wpbounds/errors.hpp"
#include "wpbounds/hyp2.hpp"
#include "wpbounds/riera_kernel.hpp"

namespace wpbounds::grad {

using std::numbers::pi;

std::string_view to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::single_curve: return "single-curve";
        case BoundKind::pair: return "pair";
        case BoundKind::separating: return "separating";
        case BoundKind::systole: return "systole";
    }
    return "?";
}

namespace {

void require_positive(double x, const char* what) {
    if (!(x > 0.0)) throw DomainError(std::string(what) + ": argument must be positive");
}

// Past this length sinh^2(l/2) overflows; F is then taken through G(r, s).
constexpr double kProductFormLimit = 600.0;

}  // namespace

double collar_radius_simple(double length) {
    require_positive(length, "collar_radius_simple");
    return std::asinh(1.0 / std::sinh(length / 2));
}

double collar_radius_separating(double length) {
    require_positive(length, "collar_radius_separating");
    return 2.0 * std::asinh(1.0 / std::sinh(length / 4));
}

CollarRadii collar_radii(double la, double lb) {
    if (!(la <= lb)) throw DomainError("collar_radii: need la <= lb");
    return {collar_radius_simple(la), collar_radius_simple(lb)};
}

double u_factor(double length) {
    if (!(length >= 0.0)) throw DomainError("u_factor: length must be nonnegative");
    const double c = std::cosh(length / 2);
    return (2.0 * c + 1.0) / (3.0 * (c + 1.0) * (c + 1.0));
}

double v_factor(double length) {
    if (!(length >= 0.0)) throw DomainError("v_factor: length must be nonnegative");
    const double sh = std::sinh(length / 2);
    const double ch = std::cosh(length / 2);
    // atan(csch x) = atan2(1, sinh x) is finite at x = 0.
    return 1.0 / (std::atan2(1.0, sh) * ch * ch + sh);
}

double G_of(double r, double s) {
    require_positive(r, "G_of");
    require_positive(s, "G_of");
    if (std::isinf(r) || std::isinf(s)) return 0.0;
    const double er = std::exp(-r);
    return riera::a_of_T(r + s) * (er + er * er * er / 3.0) / hyp2::collar_area(s);
}

double F_pair(double la, double lb) {
    require_positive(la, "F_pair");
    require_positive(lb, "F_pair");
    if (!(la <= lb)) throw DomainError("F_pair: arguments must satisfy la <= lb");
    if (lb > kProductFormLimit) return G_of(collar_radius_simple(la), collar_radius_simple(lb));
    // e^{-r} = tanh(la/4), so e^{-(r+s)} = tanh(la/4) tanh(lb/4) and
    // 1 - e^{-(r+s)} = cosh((lb-la)/4) / (cosh(la/4) cosh(lb/4)).
    const double gap = std::cosh((lb - la) / 4) / (std::cosh(la / 4) * std::cosh(lb / 4));
    const double a = riera::a_hat_midpoint(std::tanh(la / 4) * std::tanh(lb / 4), gap);
    const double sb = std::sinh(lb / 2);
    return a * u_factor(la) * v_factor(lb) * std::sinh(la / 2) * sb * sb;
}

double F_diag(double t) {
    if (t == 0.0) return 0.0;
    return F_pair(t, t);
}

double grad_sq_upper_single(double length) {
    require_positive(length, "grad_sq_upper_single");
    return 2.0 * length / pi * (1.0 + F_pair(length, length));
}

double grad_sq_upper_separating(double length) {
    require_positive(length, "grad_sq_upper_separating");
    return 2.0 * length / pi * (1.0 + F_pair(length / 2, length / 2));
}

double r_sys(double t) {
    require_positive(t, "r_sys");
    return std::max(t / 4, std::asinh(1.0 / std::sinh(t / 2)));
}

double solve_L0() {
    auto f = [](double x) { return std::sinh(x / 4) * std::sinh(x / 2) - 1.0; };
    double lo = 1.0, hi = 4.0;
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double grad_sq_upper_systole(double length) {
    require_positive(length, "grad_sq_upper_systole");
    const double r = r_sys(length);
    return 2.0 * length / pi * (1.0 + G_of(r, r));
}

double systole_lipschitz_constant() {
    const double q = solve_L0() / 4;
    return std::sqrt(2.0 * pi / (1.0 + G_of(q, q)));
}

GradBound inner_product_bound(double la, double lb, bool same_curve) {
    const double delta = same_curve ? 1.0 : 0.0;
    const double lower = 2.0 / pi * la * delta;
    const double upper = 2.0 * la / pi * (delta + F_pair(la, lb));
    return {lower, upper, same_curve ? BoundKind::single_curve : BoundKind::pair};
}

GradBound inner_product_bound_elementary(double la, double lb, bool same_curve) {
    require_positive(la, "inner_product_bound_elementary");
    if (!(la <= lb)) throw DomainError("inner_product_bound_elementary: need la <= lb");
    const double delta = same_curve ? 1.0 : 0.0;
    const double sb = std::sinh(lb / 2);
    const double lower = 2.0 / pi * la * delta;
    const double upper = lower + 8.0 / (3.0 * pi * pi) * la * std::sinh(la / 2) * sb * sb;
    return {lower, upper, same_curve ? BoundKind::single_curve : BoundKind::pair};
}

GradBound grad_sq_bound_separating(double length) {
    return {2.0 * length / pi, grad_sq_upper_separating(length), BoundKind::separating};
}

GradBound grad_sq_bound_systole(double length) {
    return {2.0 * length / pi, grad_sq_upper_systole(length), BoundKind::systole};
}

}  // namespace wpbounds::grad
