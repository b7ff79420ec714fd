#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aleshin/automaton.hpp"

namespace aleshin {

/**
 * Words over the six signed generators a, b, c, a^-1, b^-1, c^-1.  The fixed
 * index order below is used everywhere: as the state order of the union
 * automaton built from the Aleshin machine and its inverse, as the letter
 * order of that automaton's dual, and as the lexicographic base order for
 * sorted output.  A QWord is therefore simultaneously a state word of the
 * former and a tree word of the latter, with no conversion.
 */
using QWord = Word;

inline constexpr Letter q_a = 0;
inline constexpr Letter q_b = 1;
inline constexpr Letter q_c = 2;
inline constexpr Letter q_ai = 3;  // a^-1
inline constexpr Letter q_bi = 4;  // b^-1
inline constexpr Letter q_ci = 5;  // c^-1
inline constexpr std::size_t q_symbol_count = 6;

enum class Sign : std::uint8_t { plus, minus };

/// Sign sequence of a word: its pattern.
using Pattern = std::vector<Sign>;

constexpr Sign q_sign(Letter q) { return q < 3 ? Sign::plus : Sign::minus; }
constexpr Letter q_base(Letter q) { return static_cast<Letter>(q % 3); }
constexpr Letter q_inverse(Letter q) { return static_cast<Letter>((q + 3) % 6); }

/// Symbol names in index order: a b c a^-1 b^-1 c^-1.
const std::vector<std::string>& q_names();
std::optional<Letter> q_index(std::string_view token);

/// Reads "a,b^-1" or "a b^-1" (comma or whitespace separated tokens); the
/// empty string is the empty word.  Throws unknown_symbol on a bad token.
QWord parse_qword(std::string_view text);

/// Comma-joined token form, "" for the empty word.
std::string format_qword(const QWord& xi);

/// Generic token splitter on commas and whitespace.
std::vector<std::string> split_word_tokens(std::string_view text);

/// The sign character per letter: +1 for c and c^-1, -1 for the other four.
/// Multiplicative on concatenation; the identity-decision procedure reduces
/// to evaluating this on section words.
int chi(const QWord& xi);

Pattern pattern_of(const QWord& xi);

/// No adjacent pair q q^-1 or q^-1 q.
bool is_freely_irreducible(const QWord& xi);

/// Cancels adjacent inverse pairs until none remain; the free-group normal
/// form.  Result is independent of cancellation order.
QWord free_reduce(QWord xi);

/// Deletes every c and c^-1.  Multiplicative: strip_c(xi ++ eta) ==
/// strip_c(xi) ++ strip_c(eta).
QWord strip_c(const QWord& xi);

template <typename T>
std::vector<T> reversed(std::vector<T> w) {
  return {w.rbegin(), w.rend()};
}

/**
 * Sign-boundary classes.  Strip c/c^-1 from the word; membership requires the
 * remainder's pattern to alternate signs, and the flags record its first/last
 * sign (pp = starts and ends plus, pm = starts plus ends minus, ...).  The
 * empty remainder belongs to both the pm and mp classes, so the result is a
 * set of flags, not a single tag.
 */
struct WClassSet {
  bool pp = false;
  bool pm = false;
  bool mp = false;
  bool mm = false;
  bool any() const { return pp || pm || mp || mm; }
  friend bool operator==(const WClassSet&, const WClassSet&) = default;
};

WClassSet w_class(const QWord& xi);

/// All freely irreducible words with the same pattern as xi that agree with
/// xi except possibly in the last letter (xi included).  Requires xi
/// irreducible; {empty} for the empty word.  Size 2 or 3 otherwise.
std::set<QWord> z_set(const QWord& xi);

/**
 * A permutation of {0, .., n-1}.  compose(f, g) applies g first, matching
 * function composition f(g(x)); cycles multiply the same way.
 */
class Perm {
public:
  explicit Perm(std::size_t n);  // identity
  static Perm from_images(std::vector<std::uint8_t> images);

  std::size_t size() const { return images_.size(); }
  std::uint8_t operator()(std::uint8_t i) const;
  bool is_identity() const;
  Perm inverse() const;

  friend Perm compose(const Perm& f, const Perm& g);
  friend bool operator==(const Perm&, const Perm&) = default;

private:
  std::vector<std::uint8_t> images_;
};

/// Builds a permutation of {0, .., n-1} from disjoint cycles, e.g.
/// make_perm(6, {{q_b, q_c}, {q_bi, q_ci}}).
Perm make_perm(std::size_t n, std::initializer_list<std::initializer_list<std::uint8_t>> cycles);

/// All 6 permutations of {0, 1, 2} in a fixed enumeration order.
std::vector<Perm> base_permutations();

/// Lifts a permutation tau of the three generator bases {a, b, c} to the six
/// signed symbols, preserving signs: q^s -> tau(q)^s.  Lift of a product is
/// the product of lifts, and lift of the inverse is the inverse of the lift.
Perm lift_permutation(const Perm& tau);

/// Applies a permutation of the six signed symbols to each letter.
QWord apply_letterwise(const Perm& p, const QWord& xi);

}  // namespace aleshin
