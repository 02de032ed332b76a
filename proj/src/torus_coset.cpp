#include "wpbounds/torus_coset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "wpbounds/errors.hpp"
#include "wpbounds/quadrature.hpp"
#include "wpbounds/riera_kernel.hpp"

namespace wpbounds::torus {

using hyp2::MoebiusMap;
using hyp2::UValue;
using std::numbers::pi;

namespace {

constexpr Letter kAllLetters[] = {Letter::A, Letter::A_inv, Letter::B, Letter::B_inv};

bool canonical_ends(const std::vector<Letter>& w, CosetKind kind) {
    if (w.empty()) return kind == CosetKind::AB;
    if (is_A(w.front())) return false;
    return kind == CosetKind::AA ? !is_A(w.back()) : !is_B(w.back());
}

bool freely_reduced(const std::vector<Letter>& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == inverse(w[i - 1])) return false;
    }
    return true;
}

}  // namespace

char to_char(Letter l) {
    switch (l) {
        case Letter::A: return 'A';
        case Letter::A_inv: return 'a';
        case Letter::B: return 'B';
        case Letter::B_inv: return 'b';
    }
    return '?';
}

Letter inverse(Letter l) {
    switch (l) {
        case Letter::A: return Letter::A_inv;
        case Letter::A_inv: return Letter::A;
        case Letter::B: return Letter::B_inv;
        case Letter::B_inv: return Letter::B;
    }
    return l;
}

bool is_A(Letter l) { return l == Letter::A || l == Letter::A_inv; }
bool is_B(Letter l) { return l == Letter::B || l == Letter::B_inv; }

std::string_view to_string(CosetKind kind) { return kind == CosetKind::AA ? "AA" : "AB"; }

CosetWord::CosetWord(std::vector<Letter> letters, CosetKind kind)
    : letters_(std::move(letters)), kind_(kind) {
    if (!freely_reduced(letters_)) throw DomainError("CosetWord: word is not freely reduced");
    if (!canonical_ends(letters_, kind_)) {
        throw DomainError("CosetWord: '" + str() + "' is not a canonical " +
                          std::string(to_string(kind_)) + " representative");
    }
}

CosetWord CosetWord::parse(std::string_view text, CosetKind kind) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'A': letters.push_back(Letter::A); break;
            case 'a': letters.push_back(Letter::A_inv); break;
            case 'B': letters.push_back(Letter::B); break;
            case 'b': letters.push_back(Letter::B_inv); break;
            default: throw DomainError(std::string("CosetWord::parse: bad letter '") + c + "'");
        }
    }
    return CosetWord(std::move(letters), kind);
}

std::string CosetWord::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter l : letters_) out.push_back(to_char(l));
    return out;
}

CosetEnumeration enumerate_cosets(CosetKind kind, int max_word_length) {
    if (max_word_length < 0) throw DomainError("enumerate_cosets: negative word length");
    CosetEnumeration out;
    if (kind == CosetKind::AB) out.identity = CosetWord::identity_ab();

    // Breadth-first over reduced words with a non-A first letter, so the
    // output is ordered by length and then by letter order.
    std::vector<std::vector<Letter>> frontier;
    for (Letter first : {Letter::B, Letter::B_inv}) frontier.push_back({first});
    for (int len = 1; len <= max_word_length; ++len) {
        std::vector<std::vector<Letter>> next;
        for (auto& w : frontier) {
            if (canonical_ends(w, kind)) out.words.emplace_back(w, kind);
            if (len == max_word_length) continue;
            for (Letter l : kAllLetters) {
                if (l == inverse(w.back())) continue;
                auto extended = w;
                extended.push_back(l);
                next.push_back(std::move(extended));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

RectTorusPoint holonomy(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("holonomy: t must be positive");
    const double csch = 1.0 / std::sinh(t / 2);
    const double coth = std::cosh(t / 2) * csch;
    const double s = 2.0 * std::asinh(csch);
    // coth^2 - csch^2 = 1 exactly in real arithmetic; normalized() absorbs rounding.
    return {t, s, MoebiusMap::diagonal(t), MoebiusMap::normalized(coth, csch, csch, coth)};
}

namespace {

const MoebiusMap& letter_matrix(const RectTorusPoint& X, Letter l, const MoebiusMap& a_inv,
                                const MoebiusMap& b_inv) {
    switch (l) {
        case Letter::A: return X.A;
        case Letter::A_inv: return a_inv;
        case Letter::B: return X.B;
        case Letter::B_inv: return b_inv;
    }
    return X.A;
}

bool finite(const MoebiusMap& m) {
    for (double x : m.entries()) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

// u and crossing flag from the word matrix; see u_of_coset.
std::pair<double, bool> coset_u_raw(const MoebiusMap& w, CosetKind kind) {
    const double a = w.m11(), b = w.m12(), c = w.m21(), d = w.m22();
    if (kind == CosetKind::AA) {
        // Endpoints of W(0, inf) are b/d and a/c.
        return {std::abs(a * d + b * c), (a * b) * (c * d) < 0.0};
    }
    // Endpoints of W(-1, 1) are (b - a)/(d - c) and (b + a)/(d + c).
    return {std::abs(b * d - a * c), (b * b - a * a) * (d * d - c * c) < 0.0};
}

}  // namespace

MoebiusMap word_matrix(const RectTorusPoint& X, std::span<const Letter> letters) {
    const MoebiusMap a_inv = X.A.inverse();
    const MoebiusMap b_inv = X.B.inverse();
    MoebiusMap m = MoebiusMap::identity();
    for (Letter l : letters) m = m * letter_matrix(X, l, a_inv, b_inv);
    return m;
}

UValue u_of_coset(const RectTorusPoint& X, const CosetWord& w) {
    const auto [u, crossing] = coset_u_raw(word_matrix(X, w.letters()), w.kind());
    if (!std::isfinite(u)) throw DomainError("u_of_coset: word matrix overflowed");
    return UValue(u, crossing);
}

UValue u_of_coset_geometric(const RectTorusPoint& X, const CosetWord& w) {
    const auto a = hyp2::axis_of(X.A);
    const auto target = w.kind() == CosetKind::AA ? a : hyp2::axis_of(X.B);
    return hyp2::u_value(a, hyp2::translate_geodesic(word_matrix(X, w.letters()), target));
}

std::vector<double> self_coset_u_values(const RectTorusPoint& X, int max_word_length, Curve c) {
    const auto cosets = enumerate_cosets(CosetKind::AA, max_word_length);
    std::vector<double> out;
    out.reserve(cosets.words.size());
    if (c == Curve::alpha) {
        for (const auto& w : cosets.words) out.push_back(u_of_coset(X, w).value());
    } else {
        // Swap the generators' roles: <B> \ G / <B> words are AA words with A <-> B.
        for (const auto& w : cosets.words) {
            std::vector<Letter> swapped;
            for (Letter l : w.letters()) {
                switch (l) {
                    case Letter::A: swapped.push_back(Letter::B); break;
                    case Letter::A_inv: swapped.push_back(Letter::B_inv); break;
                    case Letter::B: swapped.push_back(Letter::A); break;
                    case Letter::B_inv: swapped.push_back(Letter::A_inv); break;
                }
            }
            // Conjugate so that the axis of B, with endpoints -1 and 1, becomes (0, inf).
            const auto w_matrix = word_matrix(X, swapped);
            const auto& m = w_matrix.entries();
            const double p = m[0] + m[2], q = m[1] + m[3], r = m[2] - m[0], v = m[3] - m[1];
            const hyp2::MoebiusMap conj(0.5 * (p + q), 0.5 * (q - p), 0.5 * (r + v), 0.5 * (v - r));
            out.push_back(coset_u_raw(conj, CosetKind::AA).first);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CosetSumEvaluator::CosetSumEvaluator(int max_word_length) : max_len_(max_word_length) {
    if (max_word_length < 0) throw DomainError("CosetSumEvaluator: negative word length");
    if (max_word_length == 0) return;
    // Depth-first layout: a node's parent always precedes it.
    struct Pending {
        std::int32_t parent;
        Letter letter;
        int depth;
    };
    std::vector<Pending> stack{{-1, Letter::B_inv, 1}, {-1, Letter::B, 1}};
    while (!stack.empty()) {
        const Pending p = stack.back();
        stack.pop_back();
        const auto index = static_cast<std::int32_t>(nodes_.size());
        Node n{p.parent, p.letter, !is_A(p.letter), !is_B(p.letter)};
        nodes_.push_back(n);
        aa_count_ += n.aa;
        ab_count_ += n.ab;
        if (p.depth == max_word_length) continue;
        for (Letter l : kAllLetters) {
            if (l == inverse(p.letter)) continue;
            stack.push_back({index, l, p.depth + 1});
        }
    }
}

CosetSums CosetSumEvaluator::evaluate(const RectTorusPoint& X) const {
    CosetSums sums;
    if (nodes_.empty()) return sums;
    const MoebiusMap a_inv = X.A.inverse();
    const MoebiusMap b_inv = X.B.inverse();
    std::vector<MoebiusMap> mats;
    mats.reserve(nodes_.size());
    for (const Node& n : nodes_) {
        const MoebiusMap& step = letter_matrix(X, n.letter, a_inv, b_inv);
        mats.push_back(n.parent < 0 ? step : mats[static_cast<std::size_t>(n.parent)] * step);
        const MoebiusMap& m = mats.back();
        for (CosetKind kind : {CosetKind::AA, CosetKind::AB}) {
            if ((kind == CosetKind::AA && !n.aa) || (kind == CosetKind::AB && !n.ab)) continue;
            if (!finite(m)) {
                ++sums.overflowed;
                continue;
            }
            const auto [u, crossing] = coset_u_raw(m, kind);
            if (!std::isfinite(u)) {
                ++sums.overflowed;
                continue;
            }
            if (crossing || u <= 1.0) {
                throw std::logic_error("CosetSumEvaluator: non-identity " +
                                       std::string(to_string(kind)) +
                                       " coset lift crosses the axis of A");
            }
            if (u > kPruneU) {
                ++sums.pruned;
                // R(u) = sum_k 2/((2k+1) u^{2k}) <= (2/3) / (u^2 - 1).
                sums.pruned_mass += (2.0 / 3.0) / (u * u - 1.0);
                continue;
            }
            (kind == CosetKind::AA ? sums.aa_sum : sums.ab_sum) += riera::riera_R(u);
        }
    }
    return sums;
}

Bracket grad_sq_bracket(const RectTorusPoint& X, const CosetSumEvaluator& cosets) {
    const CosetSums sums = cosets.evaluate(X);
    const double lo = 2.0 / pi * (X.t + sums.aa_sum);
    const double hi = 2.0 / pi * std::sinh(X.t / 2) * (2.0 - sums.ab_sum);
    if (hi < lo) {
        std::ostringstream os;
        os << "grad_sq_bracket: upper " << hi << " < lower " << lo << " at t = " << X.t;
        throw std::logic_error(os.str());
    }
    Bracket out{lo, hi, {}};
    out.budget.truncation = hi - lo;
    std::ostringstream note;
    note << "coset sums to word length " << cosets.max_word_length() << " (" << cosets.aa_count()
         << " AA, " << cosets.ab_count() << " AB)";
    if (sums.pruned > 0) note << ", " << sums.pruned << " terms with u > 1e8 dropped";
    if (sums.overflowed > 0) note << ", " << sums.overflowed << " overflowed terms dropped";
    out.budget.notes.push_back(note.str());
    return out;
}

Bracket grad_sq_bracket(const RectTorusPoint& X, int max_word_length) {
    return grad_sq_bracket(X, CosetSumEvaluator(max_word_length));
}

double square_point() { return 2.0 * std::asinh(1.0); }

Bracket delta11_bracket(int max_word_length, double quad_tol) {
    if (max_word_length < 0) throw DomainError("delta11_bracket: negative word length");
    if (!(quad_tol > 0.0)) throw DomainError("delta11_bracket: quad_tol must be positive");
    const CosetSumEvaluator cosets(max_word_length);
    std::unordered_map<double, Bracket> cache;
    auto bounds_at = [&](double u) -> const Bracket& {
        auto it = cache.find(u);
        if (it == cache.end()) {
            it = cache.emplace(u, grad_sq_bracket(holonomy(u * u), cosets)).first;
        }
        return it->second;
    };
    // With t = u^2, dt / ||grad|| = 2u du / sqrt(g(u^2)); both bounds on g are
    // 2t/pi (1 + O(t)), so the integrand tends to sqrt(2 pi) at u = 0.
    const double limit = std::sqrt(2.0 * pi);
    auto from_upper = [&](double u) { return u == 0.0 ? limit : 2.0 * u / std::sqrt(bounds_at(u).hi); };
    auto from_lower = [&](double u) { return u == 0.0 ? limit : 2.0 * u / std::sqrt(bounds_at(u).lo); };

    const double end = std::sqrt(square_point());
    const Bracket short_side = quad::adaptive_simpson(from_upper, 0.0, end, quad_tol / 4);
    const Bracket long_side = quad::adaptive_simpson(from_lower, 0.0, end, quad_tol / 4);

    // By the alpha <-> beta symmetry the path beyond t0 has the same length.
    Bracket out{2.0 * short_side.lo, 2.0 * long_side.hi, {}};
    out.budget.quadrature = short_side.budget.quadrature + long_side.budget.quadrature;
    out.budget.rounding = short_side.budget.rounding + long_side.budget.rounding;
    out.budget.truncation = 2.0 * (long_side.mid() - short_side.mid());
    std::ostringstream note;
    note << "delta11 from coset sums to word length " << max_word_length << ", " << cache.size()
         << " gradient evaluations";
    out.budget.notes.push_back(note.str());
    return out;
}

ElementaryDelta11 delta11_elementary(double quad_tol) {
    // sqrt(pi) int_0^{t0} dt / sqrt(sinh(t/2)) with t = u^2; the integrand
    // 2u / sqrt(sinh(u^2/2)) tends to 2 sqrt(2) at u = 0.
    auto integrand = [](double u) {
        return u == 0.0 ? 2.0 * std::numbers::sqrt2 : 2.0 * u / std::sqrt(std::sinh(u * u / 2));
    };
    const double end = std::sqrt(square_point());
    const double root_pi = std::sqrt(pi);
    Bracket lower = quad::adaptive_simpson(integrand, 0.0, end, quad_tol / root_pi).scaled(root_pi);
    lower.budget.notes.push_back("sqrt(pi) int_0^{2 asinh 1} dt / sqrt(sinh(t/2))");

    const double v = 4.0 * std::sqrt(pi * std::asinh(1.0));
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() * v;
    Bracket upper{v - slack, v + slack, {}};
    upper.budget.rounding = 2.0 * slack;
    upper.budget.notes.push_back("4 sqrt(pi asinh 1), closed form");
    return {lower, upper};
}

}  // namespace wpbounds::torus
