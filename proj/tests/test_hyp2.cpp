#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wpbounds/errors.hpp"
#include "wpbounds/hyp2.hpp"

using namespace wpbounds;
using namespace wpbounds::hyp2;
using std::numbers::pi;

namespace {

MoebiusMap random_map(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    for (;;) {
        const double a = entry(rng), b = entry(rng), c = entry(rng);
        if (std::abs(a) < 0.3) continue;
        return MoebiusMap::normalized(a, b, c, (1.0 + b * c) / a);
    }
}

// Area between x = t and the circle of radius R, by composite Simpson.
double chord_area(double t, double R) {
    const int n = 20000;
    const double h = (R - t) / n;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x = t + i * h;
        const double y = std::sqrt(std::max(0.0, R * R - x * x));
        sum += (i == 0 || i == n ? 1 : (i % 2 ? 4 : 2)) * y;
    }
    return 2.0 * sum * h / 3.0;
}

}  // namespace

TEST_CASE("boundary points and geodesics") {
    CHECK(BoundaryPoint::infinity().is_infinite());
    CHECK(BoundaryPoint(0.5) == BoundaryPoint(0.5));
    CHECK_FALSE(BoundaryPoint(0.5) == BoundaryPoint::infinity());
    CHECK_THROWS_AS(GeodesicH2(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(GeodesicH2(BoundaryPoint::infinity(), BoundaryPoint::infinity()), DomainError);
    CHECK(GeodesicH2(0.0, BoundaryPoint::infinity()) == GeodesicH2(BoundaryPoint::infinity(), 0.0));
    CHECK(GeodesicH2(-1.0, 1.0) == GeodesicH2(1.0, -1.0));
}

TEST_CASE("MoebiusMap validation") {
    CHECK_THROWS_AS(MoebiusMap(1.0, 1.0, 1.0, 1.0), DomainError);
    CHECK_NOTHROW(MoebiusMap(2.0, 0.0, 0.0, 0.5));
    const auto m = MoebiusMap::normalized(2.0, 1.0, 1.0, 2.0);
    CHECK(m.det() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(MoebiusMap::normalized(1.0, 1.0, 1.0, 1.0), DomainError);
    const auto id = m * m.inverse();
    CHECK(id.m11() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(id.m12()) < 1e-14);
}

TEST_CASE("mobius_apply") {
    CHECK(mobius_apply(MoebiusMap::identity(), 0.37).value() == 0.37);
    for (double s : {0.1, 1.0, 3.5}) {
        const auto x = mobius_apply(MoebiusMap::symmetric(s), 0.0);
        CHECK(x.value() == doctest::Approx(std::sinh(s / 2) / std::cosh(s / 2)).epsilon(1e-15));
    }
    CHECK(mobius_apply(MoebiusMap::diagonal(1.3), BoundaryPoint::infinity()).is_infinite());
    // Pole: -m22/m21 maps to infinity; infinity maps to m11/m21.
    const MoebiusMap m(2.0, 1.0, 1.0, 1.0);
    CHECK(mobius_apply(m, -1.0).is_infinite());
    CHECK(mobius_apply(m, BoundaryPoint::infinity()).value() == doctest::Approx(2.0));
}

TEST_CASE("translate_geodesic") {
    const GeodesicH2 g(0.3, -2.0);
    CHECK(translate_geodesic(MoebiusMap::identity(), g) == g);
    const GeodesicH2 imag(0.0, BoundaryPoint::infinity());
    CHECK(translate_geodesic(MoebiusMap::diagonal(2.0), imag) == imag);
    const double s = 0.7;
    const auto B = MoebiusMap::symmetric(s);
    for (int n = 1; n <= 5; ++n) {
        const auto h = translate_geodesic(B.pow(n), imag);
        const GeodesicH2 expected(std::tanh(n * s / 2), 1.0 / std::tanh(n * s / 2));
        CHECK(approx_equal(h, expected, 1e-12));
    }
}

TEST_CASE("axis_of") {
    CHECK(axis_of(MoebiusMap::diagonal(1.0)) == GeodesicH2(0.0, BoundaryPoint::infinity()));
    CHECK(approx_equal(axis_of(MoebiusMap::symmetric(0.8)), GeodesicH2(-1.0, 1.0), 1e-14));
    CHECK_THROWS_AS(axis_of(MoebiusMap(1.0, 1.0, 0.0, 1.0)), DomainError);
    CHECK_THROWS_AS(axis_of(MoebiusMap(0.0, 1.0, -1.0, 0.0)), DomainError);

    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 1000) {
        const auto M = random_map(rng);
        if (std::abs(M.trace()) < 2.05) continue;
        const auto G = random_map(rng);
        CHECK(approx_equal(axis_of(G * M * G.inverse()), translate_geodesic(G, axis_of(M)), 1e-8));
        // Fixed points really are fixed.
        const auto ax = axis_of(M);
        CHECK(approx_equal(mobius_apply(M, ax.p()), ax.p(), 1e-9));
        ++done;
    }
}

TEST_CASE("translation_length") {
    CHECK(translation_length(MoebiusMap::diagonal(1.7)) == doctest::Approx(1.7).epsilon(1e-14));
    CHECK(translation_length(MoebiusMap::symmetric(0.4)) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK_THROWS_AS(translation_length(MoebiusMap::identity()), DomainError);
    std::mt19937_64 rng(5);
    int done = 0;
    while (done < 100) {
        const auto M = random_map(rng);
        if (std::abs(M.trace()) < 2.05) continue;
        const double l = translation_length(M);
        CHECK(translation_length(M.inverse()) == doctest::Approx(l).epsilon(1e-14));
        for (int n = 2; n <= 10; ++n) {
            CHECK(std::abs(translation_length(M.pow(n)) - n * l) <= 1e-10 * n * l);
        }
        ++done;
    }
}

TEST_CASE("u_value") {
    const GeodesicH2 imag(0.0, BoundaryPoint::infinity());
    const GeodesicH2 unit(-1.0, 1.0);
    const auto u0 = u_value(imag, unit);
    CHECK(u0.crossing());
    CHECK(u0.value() == doctest::Approx(0.0));

    const double t = 1.1, s = 2.0 * std::asinh(1.0 / std::sinh(t / 2));
    const auto A = MoebiusMap::diagonal(t);
    const auto B = MoebiusMap::symmetric(s);
    for (int n = 1; n <= 4; ++n) {
        const auto u = u_value(imag, translate_geodesic(B.pow(n), imag));
        CHECK_FALSE(u.crossing());
        CHECK(u.value() == doctest::Approx(std::cosh(n * s)).epsilon(1e-11));
    }
    for (const auto& b : {B, B.inverse()}) {
        for (const auto& a : {A, A.inverse()}) {
            const auto u = u_value(imag, translate_geodesic(b * a, unit));
            CHECK_FALSE(u.crossing());
            CHECK(u.value() == doctest::Approx(std::sinh(t) * std::sinh(s)).epsilon(1e-12));
        }
    }

    // Crossing at angle theta: the semicircle through e^{i theta} centred on the real axis.
    const double theta = 0.6;
    const GeodesicH2 tilted(-std::tan(theta / 2), 1.0 / std::tan(theta / 2));
    const auto uc = u_value(imag, tilted);
    CHECK(uc.crossing());
    CHECK(uc.value() == doctest::Approx(std::abs(std::cos(theta))).epsilon(1e-12));

    CHECK_THROWS_AS(u_value(imag, GeodesicH2(0.0, 1.0)), TangencyError);
    CHECK_THROWS_AS(u_value(GeodesicH2(-1.0, 2.0), GeodesicH2(2.0, 5.0)), TangencyError);
    CHECK_THROWS_AS(UValue(1.0, false), TangencyError);
    CHECK_THROWS_AS(UValue(0.5, false), DomainError);
    CHECK_THROWS_AS(UValue(1.5, true), DomainError);
}

TEST_CASE("u_value is Moebius invariant") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> pt(-3.0, 3.0);
    int done = 0;
    while (done < 500) {
        const double p1 = pt(rng), q1 = pt(rng), p2 = pt(rng), q2 = pt(rng);
        const double ends[] = {p1, q1, p2, q2};
        bool ok = true;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) ok = ok && std::abs(ends[i] - ends[j]) > 0.05;
        if (!ok) continue;
        const GeodesicH2 g1(p1, q1), g2(p2, q2);
        const auto G = random_map(rng);
        const auto u = u_value(g1, g2);
        const auto v = u_value(translate_geodesic(G, g1), translate_geodesic(G, g2));
        CHECK(u.crossing() == v.crossing());
        CHECK(std::abs(u.value() - v.value()) <= 1e-10 * std::max(1.0, u.value()));
        ++done;
    }
}

TEST_CASE("collar_area") {
    CHECK_THROWS_AS(collar_area(0.0), DomainError);
    CHECK(collar_area(1e-9) < 1e-8);
    CHECK(collar_area(std::asinh(1.0)) == doctest::Approx(pi + 2.0).epsilon(1e-15));
    for (double r : {0.1, 0.5, 1.0, 2.0, 3.0}) {
        const double R = std::cosh(r);
        const double oracle = pi * R * R - 2.0 * chord_area(std::sqrt(R * R - 1.0), R);
        CHECK(collar_area(r) == doctest::Approx(oracle).epsilon(1e-7));
    }
    double prev = 0.0;
    for (int i = 1; i <= 400; ++i) {
        const double a = collar_area(i * 0.05);
        CHECK(a > prev);
        prev = a;
    }
    CHECK(collar_area(20.0) * std::exp(-40.0) == doctest::Approx(pi / 4).epsilon(1e-6));
}

TEST_CASE("determinant renormalization over long products") {
    const auto X = MoebiusMap::symmetric(0.9);
    const auto Y = MoebiusMap::diagonal(0.7);
    MoebiusMap m = MoebiusMap::identity();
    for (int i = 0; i < 200; ++i) m = m * (i % 2 ? X : Y.inverse());
    const double scale = std::max({std::abs(m.m11()), std::abs(m.m12()), std::abs(m.m21()), std::abs(m.m22())});
    CHECK(std::abs(m.det() - 1.0) <= 1e-9 * std::max(1.0, scale * scale));
}
