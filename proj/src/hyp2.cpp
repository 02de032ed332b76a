#include "wpbounds/hyp2.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "wpbounds/errors.hpp"

namespace wpbounds::hyp2 {

std::ostream& operator<<(std::ostream& os, BoundaryPoint p) {
    if (p.is_infinite()) return os << "inf";
    return os << p.value();
}

bool approx_equal(BoundaryPoint p, BoundaryPoint q, double rel_tol) {
    if (p.is_infinite() || q.is_infinite()) return p.is_infinite() && q.is_infinite();
    const double scale = std::max({1.0, std::abs(p.value()), std::abs(q.value())});
    return std::abs(p.value() - q.value()) <= rel_tol * scale;
}

MoebiusMap::MoebiusMap(double m11, double m12, double m21, double m22)
    : m_{m11, m12, m21, m22} {
    for (double x : m_) {
        if (!std::isfinite(x)) throw DomainError("MoebiusMap: non-finite entry");
    }
    double norm2 = 0.0;
    for (double x : m_) norm2 = std::max(norm2, x * x);
    if (std::abs(det() - 1.0) > kDetTolerance * std::max(1.0, norm2)) {
        throw DomainError("MoebiusMap: determinant " + std::to_string(det()) + " is not 1");
    }
}

MoebiusMap MoebiusMap::normalized(double m11, double m12, double m21, double m22) {
    const double d = m11 * m22 - m12 * m21;
    if (!(d > 0.0)) throw DomainError("MoebiusMap::normalized: determinant must be positive");
    const double k = 1.0 / std::sqrt(d);
    return MoebiusMap(Unchecked{}, {m11 * k, m12 * k, m21 * k, m22 * k}, 0);
}

MoebiusMap MoebiusMap::diagonal(double t) {
    return MoebiusMap(Unchecked{}, {std::exp(t / 2), 0.0, 0.0, std::exp(-t / 2)}, 0);
}

MoebiusMap MoebiusMap::symmetric(double s) {
    const double c = std::cosh(s / 2);
    const double h = std::sinh(s / 2);
    return MoebiusMap(Unchecked{}, {c, h, h, c}, 0);
}

MoebiusMap MoebiusMap::inverse() const {
    return MoebiusMap(Unchecked{}, {m_[3], -m_[1], -m_[2], m_[0]}, compositions_);
}

MoebiusMap MoebiusMap::pow(int n) const {
    MoebiusMap base = n < 0 ? inverse() : *this;
    MoebiusMap out = identity();
    for (int k = std::abs(n); k > 0; --k) out = out * base;
    return out;
}

MoebiusMap operator*(const MoebiusMap& lhs, const MoebiusMap& rhs) {
    const auto& a = lhs.m_;
    const auto& b = rhs.m_;
    std::array<double, 4> m{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    int count = lhs.compositions_ + rhs.compositions_ + 1;
    if (count >= MoebiusMap::kRenormalizeEvery) {
        const double d = m[0] * m[3] - m[1] * m[2];
        if (d > 0.0 && std::isfinite(d)) {
            const double k = 1.0 / std::sqrt(d);
            for (double& x : m) x *= k;
        }
        count = 0;
    }
    return MoebiusMap(MoebiusMap::Unchecked{}, m, count);
}

GeodesicH2::GeodesicH2(BoundaryPoint p, BoundaryPoint q) : p_(p), q_(q) {
    if (p == q) throw DomainError("GeodesicH2: endpoints coincide");
}

bool operator==(const GeodesicH2& lhs, const GeodesicH2& rhs) {
    return (lhs.p_ == rhs.p_ && lhs.q_ == rhs.q_) || (lhs.p_ == rhs.q_ && lhs.q_ == rhs.p_);
}

bool approx_equal(const GeodesicH2& g, const GeodesicH2& h, double rel_tol) {
    return (approx_equal(g.p(), h.p(), rel_tol) && approx_equal(g.q(), h.q(), rel_tol)) ||
           (approx_equal(g.p(), h.q(), rel_tol) && approx_equal(g.q(), h.p(), rel_tol));
}

UValue::UValue(double value, bool crossing) : value_(value), crossing_(crossing) {
    if (!(value >= 0.0) || std::isnan(value)) throw DomainError("UValue: value must be >= 0");
    if (value == 1.0) throw TangencyError("UValue: tangent geodesics (u = 1)");
    if (crossing && value > 1.0) throw DomainError("UValue: crossing pair needs u < 1");
    if (!crossing && value < 1.0) throw DomainError("UValue: disjoint pair needs u > 1");
}

BoundaryPoint mobius_apply(const MoebiusMap& m, BoundaryPoint x) {
    if (x.is_infinite()) {
        if (m.m21() == 0.0) return BoundaryPoint::infinity();
        return m.m11() / m.m21();
    }
    const double den = m.m21() * x.value() + m.m22();
    if (den == 0.0) return BoundaryPoint::infinity();
    return (m.m11() * x.value() + m.m12()) / den;
}

GeodesicH2 translate_geodesic(const MoebiusMap& m, const GeodesicH2& g) {
    return GeodesicH2(mobius_apply(m, g.p()), mobius_apply(m, g.q()));
}

GeodesicH2 axis_of(const MoebiusMap& m) {
    const double tr = m.trace();
    if (!(std::abs(tr) > 2.0)) throw DomainError("axis_of: element is not hyperbolic");
    const double a = m.m11(), b = m.m12(), c = m.m21(), d = m.m22();
    // Fixed points solve c z^2 + (d - a) z - b = 0.
    if (c == 0.0) return GeodesicH2(BoundaryPoint::infinity(), b / (d - a));
    const double disc = std::sqrt(tr * tr - 4.0);
    const double diff = a - d;
    // Stable root pair: the larger-magnitude root from the quadratic formula,
    // the other via the product of roots (-b/c).
    const double big = (diff + std::copysign(disc, diff == 0.0 ? 1.0 : diff)) / (2.0 * c);
    double other;
    if (big != 0.0) {
        other = -b / (c * big);
    } else {
        other = (diff - disc) / (2.0 * c);
    }
    return GeodesicH2(big, other);
}

double translation_length(const MoebiusMap& m) {
    const double tr = std::abs(m.trace());
    if (!(tr > 2.0)) throw DomainError("translation_length: element is not hyperbolic");
    return 2.0 * std::acosh(tr / 2.0);
}

namespace {

// Image of z under a map sending x -> 0 and y -> inf.
BoundaryPoint normalize_point(BoundaryPoint x, BoundaryPoint y, BoundaryPoint z) {
    if (y.is_infinite()) {
        if (z.is_infinite()) return BoundaryPoint::infinity();
        return z.value() - x.value();
    }
    if (x.is_infinite()) {
        if (z.is_infinite()) return 0.0;
        const double den = z.value() - y.value();
        if (den == 0.0) return BoundaryPoint::infinity();
        return -1.0 / den;
    }
    if (z.is_infinite()) return 1.0;
    const double den = z.value() - y.value();
    if (den == 0.0) return BoundaryPoint::infinity();
    return (z.value() - x.value()) / den;
}

}  // namespace

UValue u_value(const GeodesicH2& g1, const GeodesicH2& g2) {
    const BoundaryPoint pn = normalize_point(g1.p(), g1.q(), g2.p());
    const BoundaryPoint qn = normalize_point(g1.p(), g1.q(), g2.q());
    if (pn.is_infinite() || qn.is_infinite()) {
        throw TangencyError("u_value: geodesics share an ideal endpoint");
    }
    const double p = pn.value();
    const double q = qn.value();
    const double big = std::max(std::abs(p), std::abs(q));
    const double small = std::min(std::abs(p), std::abs(q));
    if (small <= kTangencyTolerance * big) {
        throw TangencyError("u_value: geodesics share an ideal endpoint");
    }
    if (std::abs(p - q) <= kTangencyTolerance * big) {
        throw TangencyError("u_value: degenerate geodesic after normalization");
    }
    return UValue(std::abs(p + q) / std::abs(p - q), p * q < 0.0);
}

double collar_area(double r) {
    if (!(r > 0.0)) throw DomainError("collar_area: r must be positive");
    const double sh = std::sinh(r);
    const double ch = std::cosh(r);
    return 2.0 * std::atan(sh) * ch * ch + 2.0 * sh;
}

}  // namespace wpbounds::hyp2
