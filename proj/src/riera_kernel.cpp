#include "wpbounds/riera_kernel.hpp"

#include <cmath>

#include "wpbounds/errors.hpp"

namespace wpbounds::riera {

namespace {

// sum_{k>=1} 2 w^k / (2k+1), w = 1/u^2 <= 1/4.
double r_series_large_u(double u) {
    const double w = 1.0 / (u * u);
    double power = w;
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
        const double term = 2.0 * power / (2 * k + 1);
        sum += term;
        if (term <= 1e-18 * sum) break;
        power *= w;
    }
    return sum;
}

}  // namespace

double riera_R(double u) {
    if (!(u >= 0.0)) throw DomainError("riera_R: u must be nonnegative");
    if (u == 1.0) throw TangencyError("riera_R: u = 1 (tangent geodesics)");
    if (std::isinf(u)) return 0.0;
    if (u < 1.0) return 2.0 * u * std::atanh(u) - 2.0;
    if (u >= kSeriesSwitchU) return r_series_large_u(u);
    return u * std::log1p(2.0 / (u - 1.0)) - 2.0;
}

double riera_R(const hyp2::UValue& u) { return riera_R(u.value()); }

double a_hat_coefficient(std::size_t n) {
    const double m = static_cast<double>(n);
    return 8.0 * (m + 1.0) / ((2.0 * m + 1.0) * (2.0 * m + 3.0));
}

SeriesEval a_hat(double u, double tol) {
    if (!(u >= 0.0 && u < 1.0)) throw DomainError("a_hat: need 0 <= u < 1");
    if (!(tol > 0.0)) throw DomainError("a_hat: tol must be positive");
    const double u2 = u * u;
    SeriesEval out;
    double power = 1.0;  // u^{2n}
    for (std::size_t n = 0; n < kSeriesTermCap; ++n) {
        out.value += a_hat_coefficient(n) * power;
        out.terms_used = n + 1;
        power *= u2;  // now u^{2n+2}
        const double tail = 2.0 * power / (static_cast<double>(n + 1) * (1.0 - u2));
        if (tail <= tol) {
            out.tail_bound = tail;
            return out;
        }
    }
    throw ConvergenceError("a_hat: tail tolerance not reached within term cap");
}

double a_hat_midpoint(double x) { return a_hat_midpoint(x, 1.0 - x); }

double a_hat_midpoint(double x, double gap) {
    if (!(x >= 0.0 && x < 1.0 && gap > 0.0)) throw DomainError("a_hat_midpoint: need 0 <= x < 1");
    if (x <= 0.75) return a_hat(x).midpoint();
    // x^{-2} R((x + 1/x)/2) with log((1+x)/(1-x)) = log1p(x) - log(gap).
    return ((x + 1.0 / x) * (std::log1p(x) - std::log(gap)) - 2.0) / (x * x);
}

double a_of_T(double T) {
    if (!(T > 0.0)) throw DomainError("a_of_T: T must be positive");
    return a_hat_midpoint(std::exp(-T), -std::expm1(-T));
}

double a_from_collar_length(double t) {
    if (!(t > 0.0)) throw DomainError("a_from_collar_length: t must be positive");
    const double h = std::tanh(t / 4);
    const double c = std::cosh(t / 4);
    return a_hat_midpoint(h * h, 1.0 / (c * c));
}

double a_upper_envelope(double T) {
    if (!(T > 0.0)) throw DomainError("a_upper_envelope: T must be positive");
    return 8.0 / 3.0 - 2.0 * std::log1p(-std::exp(-2.0 * T));
}

}  // namespace wpbounds::riera
