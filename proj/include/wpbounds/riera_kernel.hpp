#pragma once

// The scalar kernel R(u) = u log|(u+1)/(u-1)| - 2 of Riera's length-gradient
// formula, and its normalized form a(T) = e^{2T} R(cosh T).
//
// For small u the normalized kernel is evaluated through the everywhere
// positive power series
//
//     a_hat(u) = sum_{n>=0} 8(n+1) / ((2n+1)(2n+3)) u^{2n},   a(T) = a_hat(e^{-T}),
//
// whose tail after the n = N term is at most 2 u^{2N+2} / ((N+1)(1-u^2)).

#include <cstddef>

#include "wpbounds/hyp2.hpp"

namespace wpbounds::riera {

struct SeriesEval {
    double value = 0.0;
    /// The exact sum lies in [value, value + tail_bound].
    double tail_bound = 0.0;
    std::size_t terms_used = 0;

    double midpoint() const { return value + tail_bound / 2; }
};

inline constexpr double kDefaultSeriesTol = 1e-14;
inline constexpr std::size_t kSeriesTermCap = 200000;

/// Above this u the closed form of R is pure cancellation; the series in
/// 1/u^2 is used instead (see riera_R).
inline constexpr double kSeriesSwitchU = 2.0;

/// R(u) for a u-value. Positive for disjoint pairs, >= -2 for crossings.
double riera_R(const hyp2::UValue& u);

/// R(u) for a raw u >= 0, u != 1 (u < 1 is read as a crossing cosine).
double riera_R(double u);

/// Coefficient 8(n+1)/((2n+1)(2n+3)) of u^{2n}.
double a_hat_coefficient(std::size_t n);

/// Partial sum of the a_hat series with certified tail <= tol.
/// Throws DomainError unless 0 <= u < 1, ConvergenceError past kSeriesTermCap.
SeriesEval a_hat(double u, double tol = kDefaultSeriesTol);

/// a_hat evaluated at x = e^{-T}: series for x <= 0.75, closed form
/// x^{-2} R((x + 1/x)/2) above that (where the series converges slowly and
/// the closed form has no cancellation). Returns the certified midpoint.
double a_hat_midpoint(double x);

/// a_hat_midpoint with the complement gap = 1 - x supplied separately, so
/// that x close to 1 keeps full relative accuracy.
double a_hat_midpoint(double x, double gap);

/// a(T) = e^{2T} R(cosh T), computed as a_hat(e^{-T}). T must be positive.
double a_of_T(double T);

/// a(T) for T defined by sinh(T/2) sinh(t/2) = 1, i.e. a_hat(tanh^2(t/4)).
/// Stable as t -> 0.
double a_from_collar_length(double t);

/// Upper envelope 8/3 - 2 log(1 - e^{-2T}) of a(T).
double a_upper_envelope(double T);

}  // namespace wpbounds::riera
