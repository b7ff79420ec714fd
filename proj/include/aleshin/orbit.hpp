#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aleshin/automaton.hpp"
#include "aleshin/words.hpp"

namespace aleshin {

/// A word orbit together with a human-readable description of the generating
/// set that produced it.
struct OrbitSet {
  std::set<QWord> members;
  std::string generator_tag;
};

/// Closure of {xi} under the given initial actions; group mode (the default)
/// also applies their inverses.  Generators over an alphabet of signed
/// symbols preserve length, and the built-in generators preserve the pattern
/// and free irreducibility as well.
OrbitSet word_orbit(const std::vector<InitialRef>& gens, const QWord& xi,
                    OrbitMode mode = OrbitMode::group);

/// All freely irreducible words whose pattern is v, in lexicographic index
/// order.  {empty} for the empty pattern.
std::set<QWord> irreducible_class(const Pattern& v);

/// Closed form for the class size: 3 times a factor of 2 per sign change and
/// 3 per repeated sign along v; 1 for the empty pattern.
std::uint64_t irreducible_class_size(const Pattern& v);

/// Smallest member of irreducible_class(v) in lexicographic index order.
QWord lex_smallest_irreducible(const Pattern& v);

/// For a nonempty pattern v, two freely irreducible words following v whose
/// chi values differ: the first uses only a and b^-1, the second additionally
/// swaps the leading letter to c or c^-1.  Errors with empty_pattern on the
/// empty pattern.
std::pair<QWord, QWord> ind2_witnesses(const Pattern& v);

/// Witness pair for patterns of length >= 2 whose last two signs differ:
/// both words follow v, are freely irreducible, differ exactly in the last
/// letter (one ends in the a-form, the other in the b-form), and the stated
/// initial action of the three-state machine maps one to the other while the
/// z_set of either is exactly the pair.
struct Ind5Witnesses {
  QWord xi_a;
  QWord xi_b;
  State generator;  // e_alpha or e_beta
};

Ind5Witnesses ind5_witnesses(const Pattern& v);

/// Witness grid for patterns of length >= 2 whose first two signs agree and
/// whose last two signs agree: words[i][j] follows v with first-letter base i
/// and last-letter base j (0 = a, 1 = b, 2 = c), all nine freely irreducible
/// and sharing the interior.  generators[i] names the initial action of the
/// three-state machine sending words[i][0] to words[i][1]; rows with base c
/// use the opposite generator from rows a and b.
struct Ind6Witnesses {
  std::array<std::array<QWord, 3>, 3> words;
  std::array<State, 3> generators;
};

Ind6Witnesses ind6_witnesses(const Pattern& v);

}  // namespace aleshin
