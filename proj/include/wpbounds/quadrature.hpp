#pragma once

// Adaptive Simpson quadrature with a Richardson error estimate per panel.
// The returned bracket is centred on the extrapolated sum and has half-width
// equal to the summed panel estimates |S2 - S1|/15 plus a rounding term.

#include <cmath>
#include <cstddef>
#include <iterator>
#include <limits>
#include <string>
#include <utility>

#include "wpbounds/bracket.hpp"
#include "wpbounds/errors.hpp"

namespace wpbounds::quad {

struct Options {
    int min_depth = 4;
    int max_depth = 48;
    std::size_t max_evaluations = 2'000'000;
};

namespace detail {

template <class Fn>
struct Simpson {
    Fn& f;
    const Options& opts;
    std::size_t evaluations = 0;
    double error = 0.0;
    double abs_sum = 0.0;

    double eval(double x) {
        ++evaluations;
        if (evaluations > opts.max_evaluations) {
            throw ConvergenceError("adaptive_simpson: evaluation cap exceeded");
        }
        const double y = f(x);
        if (!std::isfinite(y)) throw ConvergenceError("adaptive_simpson: non-finite integrand");
        return y;
    }

    double run(double a, double b, double fa, double fm, double fb, double whole, double tol,
               int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double halves = left + right;
        const double est = std::abs(halves - whole) / 15.0;
        if (depth >= opts.min_depth && (est <= tol || depth >= opts.max_depth)) {
            if (est > tol) {
                throw ConvergenceError("adaptive_simpson: subdivision cap reached on [" +
                                       std::to_string(a) + ", " + std::to_string(b) + "]");
            }
            error += est;
            abs_sum += std::abs(halves);
            return halves + (halves - whole) / 15.0;
        }
        return run(a, m, fa, flm, fm, left, tol / 2, depth + 1) +
               run(m, b, fm, frm, fb, right, tol / 2, depth + 1);
    }
};

}  // namespace detail

/// Bracket of width about <= tol for the integral of f over [a, b].
template <class Fn>
Bracket adaptive_simpson(Fn&& f, double a, double b, double tol, const Options& opts = {}) {
    if (!(a <= b)) throw DomainError("adaptive_simpson: need a <= b");
    if (!(tol > 0.0)) throw DomainError("adaptive_simpson: tol must be positive");
    if (a == b) return Bracket::exact(0.0);
    detail::Simpson<Fn> s{f, opts};
    const double fa = s.eval(a);
    const double fb = s.eval(b);
    const double fm = s.eval(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double value = s.run(a, b, fa, fm, fb, whole, 0.4 * tol, 0);
    const double rounding = 64.0 * std::numeric_limits<double>::epsilon() * s.abs_sum;
    Bracket out{value - s.error - rounding, value + s.error + rounding, {}};
    out.budget.quadrature = 2.0 * s.error;
    out.budget.rounding = 2.0 * rounding;
    return out;
}

/// Integral over consecutive panels split at the given interior points.
template <class Fn, class Range>
Bracket adaptive_simpson_split(Fn&& f, const Range& knots, double tol, const Options& opts = {}) {
    Bracket total = Bracket::exact(0.0);
    auto it = std::begin(knots);
    auto end = std::end(knots);
    if (it == end) return total;
    std::size_t panels = 0;
    for (auto jt = std::next(it); jt != end; ++jt) ++panels;
    if (panels == 0) return total;
    for (auto jt = std::next(it); jt != end; ++it, ++jt) {
        total += adaptive_simpson(f, *it, *jt, tol / static_cast<double>(panels), opts);
    }
    return total;
}

}  // namespace wpbounds::quad
