#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "wpbounds/errors.hpp"
#include "wpbounds/torus_coset.hpp"

using namespace wpbounds;
using namespace wpbounds::torus;
using std::numbers::pi;

namespace {

bool inverse_pair(char x, char y) { return x != y && std::tolower(x) == std::tolower(y); }

std::vector<std::string> reduced_words(int max_len) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (static_cast<int>(out[i].size()) == max_len) continue;
        for (char c : {'A', 'a', 'B', 'b'}) {
            if (!out[i].empty() && inverse_pair(out[i].back(), c)) continue;
            out.push_back(out[i] + c);
        }
    }
    return out;
}

// Double-coset representative by stripping generator powers from both ends.
std::string strip(std::string w, char right) {
    while (!w.empty() && std::toupper(w.front()) == 'A') w.erase(w.begin());
    while (!w.empty() && std::toupper(w.back()) == right) w.pop_back();
    return w;
}

std::set<std::string> brute_cosets(CosetKind kind, int L) {
    const char right = kind == CosetKind::AA ? 'A' : 'B';
    std::set<std::string> out;
    for (const auto& w : reduced_words(L + 4)) {
        const auto r = strip(w, right);
        if (!r.empty() && static_cast<int>(r.size()) <= L) out.insert(r);
    }
    return out;
}

std::set<std::string> as_set(const CosetEnumeration& e) {
    std::set<std::string> out;
    for (const auto& w : e.words) out.insert(w.str());
    return out;
}

}  // namespace

TEST_CASE("holonomy of the rectangular family") {
    for (int i = 0; i < 50; ++i) {
        const double t = 0.05 + (10.0 - 0.05) * i / 49;
        const auto X = holonomy(t);
        CHECK(std::abs(std::sinh(t / 2) * std::sinh(X.s / 2) - 1.0) <= 1e-12);
        const double tr = (X.A * X.B * X.A.inverse() * X.B.inverse()).trace();
        CHECK(std::abs(tr + 2.0) <= 1e-8);
        CHECK(hyp2::translation_length(X.A) == doctest::Approx(t).epsilon(1e-12));
        CHECK(hyp2::translation_length(X.B) == doctest::Approx(X.s).epsilon(1e-10));
        CHECK(X.B.m11() == doctest::Approx(std::cosh(X.s / 2)).epsilon(1e-12));
        CHECK(X.B.m12() == doctest::Approx(std::sinh(X.s / 2)).epsilon(1e-12));
        CHECK(X.A.m11() == doctest::Approx(std::exp(t / 2)).epsilon(1e-15));
    }
    const auto sq = holonomy(square_point());
    CHECK(sq.s == doctest::Approx(sq.t).epsilon(1e-15));
    CHECK_THROWS_AS(holonomy(0.0), DomainError);
    CHECK_THROWS_AS(holonomy(-1.0), DomainError);
}

TEST_CASE("coset words") {
    CHECK(CosetWord::parse("BaB", CosetKind::AA).str() == "BaB");
    CHECK_THROWS_AS(CosetWord::parse("AB", CosetKind::AA), DomainError);
    CHECK_THROWS_AS(CosetWord::parse("BA", CosetKind::AA), DomainError);
    CHECK_THROWS_AS(CosetWord::parse("Bb", CosetKind::AA), DomainError);
    CHECK_THROWS_AS(CosetWord::parse("AB", CosetKind::AB), DomainError);
    CHECK_THROWS_AS(CosetWord::parse("BB", CosetKind::AB), DomainError);
    CHECK_THROWS_AS(CosetWord::parse("", CosetKind::AA), DomainError);
    CHECK_THROWS_AS(CosetWord::parse("Bx", CosetKind::AA), DomainError);
    CHECK(CosetWord::parse("", CosetKind::AB).is_identity());
    CHECK(CosetWord::parse("BA", CosetKind::AB).size() == 2);
}

TEST_CASE("coset enumeration") {
    const auto aa1 = enumerate_cosets(CosetKind::AA, 1);
    CHECK(as_set(aa1) == std::set<std::string>{"B", "b"});
    CHECK_FALSE(aa1.identity.has_value());

    const auto ab2 = enumerate_cosets(CosetKind::AB, 2);
    CHECK(ab2.identity.has_value());
    CHECK(ab2.identity->is_identity());
    for (const char* w : {"BA", "Ba", "bA", "ba"}) CHECK(as_set(ab2).count(w) == 1);
    CHECK(ab2.words.size() == 4);

    std::size_t prev = 0;
    for (int L = 1; L <= 8; ++L) {
        const auto e = enumerate_cosets(CosetKind::AA, L);
        for (std::size_t i = 1; i < e.words.size(); ++i) CHECK(e.words[i - 1].size() <= e.words[i].size());
        CHECK(as_set(e).size() == e.words.size());
        if (L >= 3) CHECK(e.words.size() > 2 * prev);
        prev = e.words.size();
    }
    CHECK(enumerate_cosets(CosetKind::AA, 8).words.size() == 3280);
    CHECK(enumerate_cosets(CosetKind::AB, 8).words.size() == 3280);
    CHECK_THROWS_AS(enumerate_cosets(CosetKind::AA, -1), DomainError);
}

TEST_CASE("enumeration equals brute-force deduplication") {
    for (int L = 1; L <= 5; ++L) {
        CHECK(as_set(enumerate_cosets(CosetKind::AA, L)) == brute_cosets(CosetKind::AA, L));
        CHECK(as_set(enumerate_cosets(CosetKind::AB, L)) == brute_cosets(CosetKind::AB, L));
    }
}

TEST_CASE("u-values of named cosets") {
    const double t = 0.9;
    const auto X = holonomy(t);
    for (int n = 1; n <= 4; ++n) {
        const auto w = CosetWord(std::vector<Letter>(static_cast<std::size_t>(n), Letter::B), CosetKind::AA);
        CHECK(u_of_coset(X, w).value() == doctest::Approx(std::cosh(n * X.s)).epsilon(1e-11));
    }
    const auto id = u_of_coset(X, CosetWord::identity_ab());
    CHECK(id.crossing());
    CHECK(std::abs(id.value()) < 1e-14);
    for (const char* w : {"BA", "Ba", "bA", "ba"}) {
        const auto u = u_of_coset(X, CosetWord::parse(w, CosetKind::AB));
        CHECK_FALSE(u.crossing());
        CHECK(u.value() == doctest::Approx(std::sinh(t) * std::sinh(X.s)).epsilon(1e-12));
    }
}

TEST_CASE("closed-form u agrees with the geometric route") {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::size_t compared = 0;
    for (double t : {0.1, 0.7, square_point(), 3.0}) {
        const auto X = holonomy(t);
        for (auto kind : {CosetKind::AA, CosetKind::AB}) {
            const auto e = enumerate_cosets(kind, 6);
            for (const auto& w : e.words) {
                const auto a = u_of_coset(X, w);
                CHECK_FALSE(a.crossing());
                CHECK(a.value() > 1.0);
                double norm2 = 0.0;
                const auto m = word_matrix(X, w.letters());
                for (double x : m.entries()) norm2 += x * x;
                if (eps * norm2 > 1e-6) continue;
                ++compared;
                const auto b = u_of_coset_geometric(X, w);
                CHECK(a.crossing() == b.crossing());
                CHECK(std::abs(a.value() - b.value()) <= (1e-12 + 16.0 * eps * norm2) * a.value());
            }
        }
    }
    CHECK(compared >= 2500);
}

TEST_CASE("alpha and beta self-cosets agree at the square torus") {
    const auto X = holonomy(square_point());
    const auto ua = self_coset_u_values(X, 6, Curve::alpha);
    const auto ub = self_coset_u_values(X, 6, Curve::beta);
    REQUIRE(ua.size() == ub.size());
    for (std::size_t i = 0; i < ua.size(); ++i) CHECK(ua[i] == doctest::Approx(ub[i]).epsilon(1e-8));
    // Away from the square point the multisets differ.
    const auto Y = holonomy(1.0);
    CHECK(self_coset_u_values(Y, 2, Curve::alpha).front() !=
          doctest::Approx(self_coset_u_values(Y, 2, Curve::beta).front()));
}

TEST_CASE("gradient bracket") {
    const CosetSumEvaluator ev(8);
    CHECK(ev.aa_count() == 3280);
    CHECK(ev.ab_count() == 3280);
    for (double t : {1e-3, 0.1, 1.0, square_point(), 3.0, 6.0}) {
        const auto X = holonomy(t);
        const auto b = grad_sq_bracket(X, ev);
        CHECK(b.lo >= 2.0 * t / pi);
        CHECK(b.hi <= 4.0 / pi * std::sinh(t / 2) * (1 + 1e-15));
        CHECK(b.lo <= b.hi);
    }
    const auto b0 = grad_sq_bracket(holonomy(1.0), 0);
    CHECK(b0.lo == doctest::Approx(2.0 / pi));
    CHECK(b0.hi == doctest::Approx(4.0 / pi * std::sinh(0.5)));
    // Values from an independent double-precision implementation at word length 8.
    const auto b1 = grad_sq_bracket(holonomy(1.0), ev);
    CHECK(b1.lo == doctest::Approx(0.650705).epsilon(2e-6));
    CHECK(b1.hi == doctest::Approx(0.650938).epsilon(2e-6));
}

TEST_CASE("gradient bracket tightens with word length") {
    const auto X = holonomy(1.0);
    double lo = -1.0, hi = INFINITY;
    for (int n = 0; n <= 8; ++n) {
        const auto b = grad_sq_bracket(X, n);
        CHECK(b.lo >= lo);
        CHECK(b.hi <= hi);
        lo = b.lo;
        hi = b.hi;
    }
}

TEST_CASE("elementary delta11 bounds") {
    const auto el = delta11_elementary();
    CHECK(el.lower_end.lo <= 6.57252360329843715945);
    CHECK(6.57252360329843715945 <= el.lower_end.hi);
    CHECK(el.lower_end.width() < 1e-9);
    CHECK(el.upper_end.mid() == doctest::Approx(6.65602498318470041804).epsilon(1e-15));
}

TEST_CASE("delta11 bracket") {
    const auto el = delta11_elementary();
    const auto b0 = delta11_bracket(0, 1e-8);
    CHECK(b0.lo == doctest::Approx(el.lower_end.mid()).epsilon(1e-8));
    CHECK(b0.hi == doctest::Approx(el.upper_end.mid()).epsilon(1e-8));

    Bracket prev = b0;
    for (int n : {2, 4, 6, 8}) {
        const auto b = delta11_bracket(n, 1e-6);
        CHECK(prev.contains(b));
        CHECK(b.lo >= 6.57252 - 1e-5);
        CHECK(b.hi <= 6.65603 + 1e-5);
        prev = b;
    }
    CHECK(prev.lo >= 6.59576 - 2e-5);
    CHECK(prev.hi <= 6.63283 + 2e-5);
    CHECK(prev.width() <= 0.04);
    CHECK_THROWS_AS(delta11_bracket(-1, 1e-6), DomainError);
    CHECK_THROWS_AS(delta11_bracket(4, 0.0), DomainError);
}
