#pragma once

// Primitives of the upper half-plane model: boundary points, unit-determinant
// Moebius maps, geodesics given by ideal endpoints, and the u-value between
// two geodesics.

#include <array>
#include <iosfwd>

namespace wpbounds::hyp2 {

/// A point of the extended real line R u {inf}.
class BoundaryPoint {
public:
    constexpr BoundaryPoint(double x) : value_(x), infinite_(false) {}  // NOLINT(implicit)

    static constexpr BoundaryPoint infinity() { return BoundaryPoint(0.0, true); }

    constexpr bool is_infinite() const { return infinite_; }
    /// Finite coordinate; meaningless when is_infinite().
    constexpr double value() const { return value_; }

    friend constexpr bool operator==(BoundaryPoint lhs, BoundaryPoint rhs) {
        if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ == rhs.infinite_;
        return lhs.value_ == rhs.value_;
    }

private:
    constexpr BoundaryPoint(double x, bool inf) : value_(x), infinite_(inf) {}
    double value_;
    bool infinite_;
};

std::ostream& operator<<(std::ostream& os, BoundaryPoint p);

/// Relative closeness of two boundary points (infinity only matches infinity).
bool approx_equal(BoundaryPoint p, BoundaryPoint q, double rel_tol);

/// Real 2x2 matrix [[m11, m12], [m21, m22]] with determinant one.
///
/// Products count how many compositions produced them; every
/// kRenormalizeEvery compositions the entries are rescaled by 1/sqrt(det)
/// so long words do not drift off SL(2,R).
class MoebiusMap {
public:
    static constexpr int kRenormalizeEvery = 32;
    static constexpr double kDetTolerance = 1e-9;

    /// Throws DomainError unless |det - 1| <= kDetTolerance * max(1, |M|^2).
    MoebiusMap(double m11, double m12, double m21, double m22);

    /// Rescales by 1/sqrt(det); det must be positive.
    static MoebiusMap normalized(double m11, double m12, double m21, double m22);
    static MoebiusMap identity() { return MoebiusMap(1.0, 0.0, 0.0, 1.0); }
    /// diag(e^{t/2}, e^{-t/2}): translation by t along the imaginary axis.
    static MoebiusMap diagonal(double t);
    /// [[cosh(s/2), sinh(s/2)], [sinh(s/2), cosh(s/2)]]: translation by s along the unit semicircle.
    static MoebiusMap symmetric(double s);

    double m11() const { return m_[0]; }
    double m12() const { return m_[1]; }
    double m21() const { return m_[2]; }
    double m22() const { return m_[3]; }
    const std::array<double, 4>& entries() const { return m_; }

    double det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    double trace() const { return m_[0] + m_[3]; }
    int compositions() const { return compositions_; }

    MoebiusMap inverse() const;
    MoebiusMap pow(int n) const;

    friend MoebiusMap operator*(const MoebiusMap& lhs, const MoebiusMap& rhs);

private:
    struct Unchecked {};
    MoebiusMap(Unchecked, std::array<double, 4> m, int compositions)
        : m_(m), compositions_(compositions) {}

    std::array<double, 4> m_;
    int compositions_ = 0;
};

/// Unoriented geodesic of H^2 given by two distinct ideal endpoints.
class GeodesicH2 {
public:
    /// Throws DomainError if p == q.
    GeodesicH2(BoundaryPoint p, BoundaryPoint q);

    BoundaryPoint p() const { return p_; }
    BoundaryPoint q() const { return q_; }

    /// Unordered comparison: (p, q) equals (q, p).
    friend bool operator==(const GeodesicH2& lhs, const GeodesicH2& rhs);

private:
    BoundaryPoint p_;
    BoundaryPoint q_;
};

bool approx_equal(const GeodesicH2& g, const GeodesicH2& h, double rel_tol);

/// cosh(distance) between disjoint geodesics, or cos(angle) between crossing
/// ones. The tangent value 1 is not representable.
class UValue {
public:
    /// Throws DomainError if the value/flag pair is inconsistent or tangent.
    UValue(double value, bool crossing);

    double value() const { return value_; }
    bool crossing() const { return crossing_; }

private:
    double value_;
    bool crossing_;
};

/// Fractional-linear action on the boundary.
BoundaryPoint mobius_apply(const MoebiusMap& m, BoundaryPoint x);

GeodesicH2 translate_geodesic(const MoebiusMap& m, const GeodesicH2& g);

/// Geodesic joining the two real fixed points. Throws DomainError if |trace| <= 2.
GeodesicH2 axis_of(const MoebiusMap& m);

/// 2 arccosh(|trace|/2). Throws DomainError if |trace| <= 2.
double translation_length(const MoebiusMap& m);

/// Relative tolerance below which normalized endpoints count as coincident.
inline constexpr double kTangencyTolerance = 1e-12;

/// u-value of the pair. Normalizes g1 to (0, inf); with g2 then at (p, q),
/// value = |p+q|/|p-q| and crossing = (p*q < 0).
/// Throws TangencyError on a shared endpoint or a collapsed g2.
UValue u_value(const GeodesicH2& g1, const GeodesicH2& g2);

/// Area 2 atan(sinh r) cosh^2 r + 2 sinh r of the r-neighbourhood of the unit
/// semicircle, measured in the flat metric.
double collar_area(double r);

}  // namespace wpbounds::hyp2
