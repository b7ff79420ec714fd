#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aleshin/error.hpp"

namespace aleshin {

using State = std::uint8_t;
using Letter = std::uint8_t;

/// A vertex of the rooted tree X*: a finite word over the alphabet, stored as
/// letter indices.
using Word = std::vector<Letter>;

/// A finite word over the state set, stored as state indices.  Words over the
/// states of one automaton are exactly the tree words of its dual, so the two
/// aliases share a representation on purpose.
using StateWord = std::vector<State>;

/// Hard cap on both the state count and the alphabet size.  Keeps indices in a
/// byte and lets bounded words pack into a single machine word.
inline constexpr std::size_t max_symbols = 64;

/// One transition quadruple as named symbols, before validation.
struct RawTransition {
  std::string from;
  std::string input;
  std::string to;
  std::string output;
};

/**
 * A letter-to-letter transducer (Q, X, phi, psi): reading letter x in state q
 * emits out(q, x) and continues in next(q, x).  Every (state, letter) pair has
 * exactly one transition, so the action on finite words preserves length and
 * prefixes.
 *
 * Instances are immutable; build them with validate() or from_functions().
 * Equality is structural, including symbol names and their declared order.
 */
class Automaton {
public:
  std::size_t state_count() const { return state_names_.size(); }
  std::size_t alphabet_size() const { return letter_names_.size(); }

  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::vector<std::string>& letter_names() const { return letter_names_; }
  const std::string& state_name(State q) const { return state_names_.at(q); }
  const std::string& letter_name(Letter x) const { return letter_names_.at(x); }

  std::optional<State> state_index(std::string_view name) const;
  std::optional<Letter> letter_index(std::string_view name) const;

  State next(State q, Letter x) const { return next_[index_of(q, x)]; }
  Letter out(State q, Letter x) const { return out_[index_of(q, x)]; }

  friend bool operator==(const Automaton&, const Automaton&) = default;

  friend Automaton validate(std::vector<std::string> state_names,
                            std::vector<std::string> alphabet_names,
                            const std::vector<RawTransition>& transitions);

private:
  Automaton() = default;

  std::size_t index_of(State q, Letter x) const;

  std::vector<std::string> state_names_;
  std::vector<std::string> letter_names_;
  // row-major by state: entry for (q, x) sits at q * alphabet_size() + x
  std::vector<State> next_;
  std::vector<Letter> out_;
};

/// Checks a raw transition table for totality (missing_entry), uniqueness
/// (duplicate_entry), declared symbols only (unknown_symbol), a nonempty
/// alphabet (empty_alphabet) and the size cap (too_many_symbols), then builds
/// the automaton.  Messages name the offending (state, letter) pair.
Automaton validate(std::vector<std::string> state_names,
                   std::vector<std::string> alphabet_names,
                   const std::vector<RawTransition>& transitions);

/// Convenience builder for tables given as functions of (state, letter)
/// indices.  Runs the same checks as validate().
Automaton from_functions(std::vector<std::string> state_names,
                         std::vector<std::string> alphabet_names,
                         const std::function<State(State, Letter)>& next,
                         const std::function<Letter(State, Letter)>& out);

/// Same automaton with states renamed positionally.
Automaton rename_states(const Automaton& a, std::vector<std::string> new_names);

/// An automaton together with a chosen initial state: the unit that acts on
/// tree words.
struct InitialRef {
  InitialRef(const Automaton& a, State q);

  const Automaton* automaton;
  State state;
};

/// Runs w through the automaton from init's state and returns the output word.
/// The i-th output letter depends only on the first i+1 input letters.
Word transduce(const InitialRef& init, const Word& w);

/// True when every per-state output row x -> out(q, x) is a bijection on the
/// alphabet, i.e. when every initial action is invertible on tree words.
bool is_invertible(const Automaton& a);

/// Swaps the input/output roles of every transition.  The result's action from
/// state q undoes a's action from q.  Requires is_invertible(a).
Automaton inverse_automaton(const Automaton& a);

/// Reverses every transition arrow: defined when each per-letter successor
/// column q -> next(q, x) is a bijection on states.  The reverse automaton
/// transduces reversed words the way a transduces the originals.
Automaton reverse_automaton(const Automaton& a);

/// Exchanges the roles of states and letters: the dual's states are a's
/// letters and vice versa, with next/out tables transposed accordingly.
/// Always defined; dual_automaton(dual_automaton(a)) == a.
Automaton dual_automaton(const Automaton& a);

/// Union of two automata over the identical (equally ordered) alphabet.
/// State name sets must be disjoint; b's states follow a's.
Automaton disjoint_union(const Automaton& a, const Automaton& b);

/// Applies the states of xi in order: first xi[0]'s action, then xi[1]'s, and
/// so on.  act_word(a, xi ++ eta, w) == act_word(a, eta, act_word(a, xi, w)).
Word act_word(const Automaton& a, const StateWord& xi, const Word& w);

/// The section of xi's action at tree vertex w: the state word governing what
/// the action does below w.  Computed by running xi through the dual automaton
/// along w, one dual state per letter of w.
StateWord section_word(const Automaton& a, const StateWord& xi, const Word& w);

enum class OrbitMode { semigroup, group };

/// Closure of {w} under the actions of gens (and their inverses in group
/// mode).  All generators must reference the same automaton; group mode
/// requires it to be invertible.  Returned in lexicographic index order.
std::set<Word> tree_orbit(const std::vector<InitialRef>& gens, const Word& w,
                          OrbitMode mode);

}  // namespace aleshin
