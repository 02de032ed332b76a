#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wpbounds {

/// What a bracket's width accounts for.
struct ErrorBudget {
    double quadrature = 0.0;    ///< summed per-panel quadrature error estimates
    double series_tail = 0.0;   ///< certified series remainders
    double truncation = 0.0;    ///< one-sided truncations (coset sums, pruned terms)
    double rounding = 0.0;      ///< floating-point slack
    std::vector<std::string> notes;

    double total() const { return quadrature + series_tail + truncation + rounding; }
    ErrorBudget& operator+=(const ErrorBudget& other);
};

/// Closed interval [lo, hi] known to contain an exact value.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    ErrorBudget budget;

    static Bracket exact(double v) { return Bracket{v, v, {}}; }

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Bracket& inner) const { return lo <= inner.lo && inner.hi <= hi; }
    bool overlaps(const Bracket& other) const { return lo <= other.hi && other.lo <= hi; }

    Bracket& operator+=(const Bracket& other);
    /// Scaling by a nonnegative factor.
    Bracket scaled(double factor) const;
};

Bracket operator+(Bracket lhs, const Bracket& rhs);

std::ostream& operator<<(std::ostream& os, const Bracket& b);

/// First `places` decimals of x, truncated toward zero (x >= 0).
/// Works on the shortest round-trip decimal form of x so that exactly
/// representable cut points are not lost to binary rounding.
std::string truncate_decimals(double x, int places);

}  // namespace wpbounds
