#pragma once

// The rectangular punctured-torus family X_t and Riera sums over its
// double cosets.
//
// X_t has holonomy generated by
//     A = diag(e^{t/2}, e^{-t/2}),   B = [[coth(t/2), csch(t/2)], [csch(t/2), coth(t/2)]],
// so that l_alpha = t, l_beta = s with sinh(t/2) sinh(s/2) = 1, the axes of A
// and B cross orthogonally at i, and [A, B] is parabolic (trace -2).
//
// Along this path ||grad l_alpha||^2 is bracketed by truncated Riera sums:
//     lower = (2/pi)(t + sum_{AA cosets} R(u)),
//     upper = (2/pi) sinh(t/2) (2 - sum_{non-identity AB cosets} R(v)).
// Every dropped term is positive, so both truncations are one-sided.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wpbounds/bracket.hpp"
#include "wpbounds/hyp2.hpp"

namespace wpbounds::torus {

enum class Letter : std::uint8_t { A, A_inv, B, B_inv };

char to_char(Letter l);  ///< 'A', 'a', 'B', 'b'
Letter inverse(Letter l);
bool is_A(Letter l);
bool is_B(Letter l);

/// AA: <A> \ G / <A> (the ||grad l_alpha||^2 sum); AB: <A> \ G / <B>.
enum class CosetKind { AA, AB };

std::string_view to_string(CosetKind kind);

/// Canonical double-coset representative: freely reduced, no leading A^{+-1},
/// no trailing A^{+-1} (AA) or B^{+-1} (AB). The empty word is the AB identity.
class CosetWord {
public:
    /// Throws DomainError if the word is not canonical for its kind.
    CosetWord(std::vector<Letter> letters, CosetKind kind);

    /// Parses letters from "AaBb".
    static CosetWord parse(std::string_view text, CosetKind kind);
    static CosetWord identity_ab() { return CosetWord({}, CosetKind::AB); }

    const std::vector<Letter>& letters() const { return letters_; }
    CosetKind kind() const { return kind_; }
    std::size_t size() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }
    std::string str() const;

    friend bool operator==(const CosetWord&, const CosetWord&) = default;

private:
    std::vector<Letter> letters_;
    CosetKind kind_;
};

struct CosetEnumeration {
    /// The identity coset (AB only; it is the one crossing lift).
    std::optional<CosetWord> identity;
    /// Non-identity canonical words, ordered by length then letter order.
    std::vector<CosetWord> words;
};

/// All canonical representatives of reduced length 1..max_word_length.
CosetEnumeration enumerate_cosets(CosetKind kind, int max_word_length);

struct RectTorusPoint {
    double t;  ///< l_alpha
    double s;  ///< l_beta
    hyp2::MoebiusMap A;
    hyp2::MoebiusMap B;
};

RectTorusPoint holonomy(double t);

/// Left-to-right product of the letters' matrices.
hyp2::MoebiusMap word_matrix(const RectTorusPoint& X, std::span<const Letter> letters);

/// u-value of the coset from the entries of W = word_matrix:
/// AA: |W11 W22 + W12 W21| (axis of A vs W(axis of A));
/// AB: |W12 W22 - W11 W21| (axis of A vs W(axis of B)).
hyp2::UValue u_of_coset(const RectTorusPoint& X, const CosetWord& w);

/// Same quantity through hyp2::u_value on explicit translated geodesics.
hyp2::UValue u_of_coset_geometric(const RectTorusPoint& X, const CosetWord& w);

enum class Curve { alpha, beta };

/// Sorted u-values of the non-identity self-cosets <C> \ G / <C> for C = A
/// (alpha) or C = B (beta), up to the given word length.
std::vector<double> self_coset_u_values(const RectTorusPoint& X, int max_word_length, Curve c);

inline constexpr double kPruneU = 1e8;

struct CosetSums {
    double aa_sum = 0.0;           ///< sum of R(u) over AA cosets
    double ab_sum = 0.0;           ///< sum of R(v) over non-identity AB cosets
    std::size_t pruned = 0;        ///< terms with u > kPruneU dropped
    double pruned_mass = 0.0;      ///< upper bound on the dropped mass
    std::size_t overflowed = 0;    ///< terms whose matrices left double range (dropped)
};

/// Word tree for all canonical cosets up to a fixed length. The tree is
/// independent of t; evaluate() recomputes only the matrices.
class CosetSumEvaluator {
public:
    explicit CosetSumEvaluator(int max_word_length);

    int max_word_length() const { return max_len_; }
    std::size_t aa_count() const { return aa_count_; }
    std::size_t ab_count() const { return ab_count_; }

    CosetSums evaluate(const RectTorusPoint& X) const;

private:
    struct Node {
        std::int32_t parent;  // -1 for single-letter words
        Letter letter;
        bool aa;
        bool ab;
    };
    int max_len_;
    std::vector<Node> nodes_;
    std::size_t aa_count_ = 0;
    std::size_t ab_count_ = 0;
};

/// Bracket for ||grad l_alpha(X_t)||^2 from cosets up to the given length.
/// Length 0 gives the analytic bounds 2t/pi and (4/pi) sinh(t/2).
/// Throws std::logic_error if the truncated bounds cross.
Bracket grad_sq_bracket(const RectTorusPoint& X, const CosetSumEvaluator& cosets);
Bracket grad_sq_bracket(const RectTorusPoint& X, int max_word_length);

/// t0 = 2 asinh(1): the square torus, where l_alpha = l_beta.
double square_point();

inline constexpr int kDefaultWordLength = 8;
inline constexpr double kDefaultQuadTol = 1e-6;

/// delta11 = 2 int_0^{t0} dt / ||grad l_alpha(X_t)||, bracketed by integrating
/// the reciprocal square roots of the two gradient bounds.
Bracket delta11_bracket(int max_word_length = kDefaultWordLength,
                        double quad_tol = kDefaultQuadTol);

struct ElementaryDelta11 {
    Bracket lower_end;  ///< sqrt(pi) int_0^{t0} dt / sqrt(sinh(t/2))
    Bracket upper_end;  ///< 4 sqrt(pi asinh(1))
};

/// The two closed-form delta11 bounds, computed directly.
ElementaryDelta11 delta11_elementary(double quad_tol = 1e-10);

}  // namespace wpbounds::torus
