#pragma once

#include <optional>
#include <string_view>

#include "aleshin/automaton.hpp"
#include "aleshin/words.hpp"

namespace aleshin {

/// The Aleshin automaton: states a, b, c over the binary alphabet 0, 1.
/// Every state's output row is a bijection, so all actions are invertible.
Automaton build_aleshin();

/// The Aleshin automaton together with its inverse, states renamed a^-1,
/// b^-1, c^-1 and glued by disjoint union.  Its six states follow the QWord
/// index order, so a QWord is literally a state word of this automaton.
Automaton build_b();

/// The dual of build_b(): two states 0, 1 over the six-letter signed
/// alphabet.  Transducing a QWord from state x yields its section at the tree
/// vertex x; iterating over a binary word w yields the section at w.
Automaton build_dual_d();

/// The three-state machine alpha, beta, gamma over the signed alphabet whose
/// initial actions generate the same word orbits as the dual's: alpha and
/// beta swap on letters with base a or b and output the transpositions
/// (a^-1 b^-1) and (a b) respectively; gamma is a sink that applies
/// (b c)(b^-1 c^-1) letterwise.  Structurally its own inverse.
Automaton build_e();

inline constexpr State e_alpha = 0;
inline constexpr State e_beta = 1;
inline constexpr State e_gamma = 2;

/// The per-state output permutations of build_e().
Perm sigma_alpha();
Perm sigma_beta();
Perm sigma_gamma();

/// Lookup by the names accepted on the command line: "aleshin", "b", "d", "e".
std::optional<Automaton> builtin_automaton(std::string_view name);

}  // namespace aleshin
