#include "aleshin/automaton.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace aleshin {

namespace {

std::unordered_map<std::string, std::size_t> index_map(
    const std::vector<std::string>& names) {
  std::unordered_map<std::string, std::size_t> m;
  m.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) m.emplace(names[i], i);
  return m;
}

void check_distinct(const std::vector<std::string>& names, const char* kind) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) fail(Errc::unknown_symbol, std::string("empty ") + kind + " name");
    if (!seen.insert(n).second)
      fail(Errc::duplicate_entry, std::string(kind) + " '" + n + "' declared twice");
  }
}

}  // namespace

std::size_t Automaton::index_of(State q, Letter x) const {
  if (q >= state_count()) fail(Errc::index_out_of_range, "state index " + std::to_string(q));
  if (x >= alphabet_size()) fail(Errc::letter_out_of_range, "letter index " + std::to_string(x));
  return static_cast<std::size_t>(q) * alphabet_size() + x;
}

std::optional<State> Automaton::state_index(std::string_view name) const {
  for (std::size_t i = 0; i < state_names_.size(); ++i)
    if (state_names_[i] == name) return static_cast<State>(i);
  return std::nullopt;
}

std::optional<Letter> Automaton::letter_index(std::string_view name) const {
  for (std::size_t i = 0; i < letter_names_.size(); ++i)
    if (letter_names_[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Automaton validate(std::vector<std::string> state_names,
                   std::vector<std::string> alphabet_names,
                   const std::vector<RawTransition>& transitions) {
  if (alphabet_names.empty()) fail(Errc::empty_alphabet, "automaton needs at least one letter");
  if (state_names.empty()) fail(Errc::missing_entry, "automaton needs at least one state");
  if (state_names.size() > max_symbols)
    fail(Errc::too_many_symbols, std::to_string(state_names.size()) + " states, cap is " +
                                     std::to_string(max_symbols));
  if (alphabet_names.size() > max_symbols)
    fail(Errc::too_many_symbols, std::to_string(alphabet_names.size()) + " letters, cap is " +
                                     std::to_string(max_symbols));
  check_distinct(state_names, "state");
  check_distinct(alphabet_names, "letter");

  const auto states = index_map(state_names);
  const auto letters = index_map(alphabet_names);
  const std::size_t n = state_names.size() * alphabet_names.size();

  Automaton a;
  a.state_names_ = std::move(state_names);
  a.letter_names_ = std::move(alphabet_names);
  a.next_.assign(n, 0);
  a.out_.assign(n, 0);

  std::vector<bool> filled(n, false);
  for (const auto& t : transitions) {
    const auto q = states.find(t.from);
    if (q == states.end()) fail(Errc::unknown_symbol, "state '" + t.from + "'");
    const auto x = letters.find(t.input);
    if (x == letters.end()) fail(Errc::unknown_symbol, "letter '" + t.input + "'");
    const auto p = states.find(t.to);
    if (p == states.end()) fail(Errc::unknown_symbol, "state '" + t.to + "'");
    const auto y = letters.find(t.output);
    if (y == letters.end()) fail(Errc::unknown_symbol, "letter '" + t.output + "'");
    const std::size_t slot = q->second * a.alphabet_size() + x->second;
    if (filled[slot])
      fail(Errc::duplicate_entry, "second transition for (" + t.from + ", " + t.input + ")");
    filled[slot] = true;
    a.next_[slot] = static_cast<State>(p->second);
    a.out_[slot] = static_cast<Letter>(y->second);
  }
  for (std::size_t q = 0; q < a.state_count(); ++q)
    for (std::size_t x = 0; x < a.alphabet_size(); ++x)
      if (!filled[q * a.alphabet_size() + x])
        fail(Errc::missing_entry,
             "no transition for (" + a.state_names_[q] + ", " + a.letter_names_[x] + ")");
  return a;
}

Automaton from_functions(std::vector<std::string> state_names,
                         std::vector<std::string> alphabet_names,
                         const std::function<State(State, Letter)>& next,
                         const std::function<Letter(State, Letter)>& out) {
  std::vector<RawTransition> rows;
  rows.reserve(state_names.size() * alphabet_names.size());
  for (std::size_t q = 0; q < state_names.size(); ++q)
    for (std::size_t x = 0; x < alphabet_names.size(); ++x) {
      const State p = next(static_cast<State>(q), static_cast<Letter>(x));
      const Letter y = out(static_cast<State>(q), static_cast<Letter>(x));
      if (p >= state_names.size())
        fail(Errc::index_out_of_range, "next() out of range at (" + state_names[q] + ", " +
                                           alphabet_names[x] + ")");
      if (y >= alphabet_names.size())
        fail(Errc::letter_out_of_range, "out() out of range at (" + state_names[q] + ", " +
                                            alphabet_names[x] + ")");
      rows.push_back({state_names[q], alphabet_names[x], state_names[p], alphabet_names[y]});
    }
  return validate(std::move(state_names), std::move(alphabet_names), rows);
}

Automaton rename_states(const Automaton& a, std::vector<std::string> new_names) {
  if (new_names.size() != a.state_count())
    fail(Errc::index_out_of_range, "rename needs exactly " + std::to_string(a.state_count()) +
                                       " names, got " + std::to_string(new_names.size()));
  return from_functions(
      std::move(new_names), a.letter_names(),
      [&a](State q, Letter x) { return a.next(q, x); },
      [&a](State q, Letter x) { return a.out(q, x); });
}

InitialRef::InitialRef(const Automaton& a, State q) : automaton(&a), state(q) {
  if (q >= a.state_count())
    fail(Errc::index_out_of_range, "initial state index " + std::to_string(q));
}

Word transduce(const InitialRef& init, const Word& w) {
  const Automaton& a = *init.automaton;
  Word result;
  result.reserve(w.size());
  State q = init.state;
  for (Letter x : w) {
    result.push_back(a.out(q, x));
    q = a.next(q, x);
  }
  return result;
}

bool is_invertible(const Automaton& a) {
  std::vector<bool> hit(a.alphabet_size());
  for (State q = 0; q < a.state_count(); ++q) {
    std::fill(hit.begin(), hit.end(), false);
    for (Letter x = 0; x < a.alphabet_size(); ++x) {
      const Letter y = a.out(q, x);
      if (hit[y]) return false;
      hit[y] = true;
    }
  }
  return true;
}

Automaton inverse_automaton(const Automaton& a) {
  if (!is_invertible(a))
    fail(Errc::not_invertible, "some output row is not a bijection on the alphabet");
  // Reading y in state q, the inverse emits the x with out(q, x) == y and
  // follows the original transition.
  std::vector<Letter> pre(a.state_count() * a.alphabet_size());
  for (State q = 0; q < a.state_count(); ++q)
    for (Letter x = 0; x < a.alphabet_size(); ++x)
      pre[q * a.alphabet_size() + a.out(q, x)] = x;
  return from_functions(
      a.state_names(), a.letter_names(),
      [&](State q, Letter y) { return a.next(q, pre[q * a.alphabet_size() + y]); },
      [&](State q, Letter y) { return pre[q * a.alphabet_size() + y]; });
}

Automaton reverse_automaton(const Automaton& a) {
  // Needs each per-letter successor column to be a bijection on states.
  std::vector<State> pre(a.state_count() * a.alphabet_size());
  std::vector<bool> hit(a.state_count());
  for (Letter x = 0; x < a.alphabet_size(); ++x) {
    std::fill(hit.begin(), hit.end(), false);
    for (State q = 0; q < a.state_count(); ++q) {
      const State p = a.next(q, x);
      if (hit[p])
        fail(Errc::not_reversible,
             "two states reach '" + a.state_name(p) + "' on letter '" + a.letter_name(x) + "'");
      hit[p] = true;
      pre[static_cast<std::size_t>(p) * a.alphabet_size() + x] = q;
    }
  }
  return from_functions(
      a.state_names(), a.letter_names(),
      [&](State p, Letter x) { return pre[static_cast<std::size_t>(p) * a.alphabet_size() + x]; },
      [&](State p, Letter x) {
        return a.out(pre[static_cast<std::size_t>(p) * a.alphabet_size() + x], x);
      });
}

Automaton dual_automaton(const Automaton& a) {
  return from_functions(
      a.letter_names(), a.state_names(),
      [&a](State x, Letter q) { return a.out(static_cast<State>(q), static_cast<Letter>(x)); },
      [&a](State x, Letter q) { return a.next(static_cast<State>(q), static_cast<Letter>(x)); });
}

Automaton disjoint_union(const Automaton& a, const Automaton& b) {
  if (a.letter_names() != b.letter_names())
    fail(Errc::alphabet_mismatch, "operands declare different alphabets");
  for (const auto& n : b.state_names())
    if (a.state_index(n))
      fail(Errc::state_clash, "state '" + n + "' appears in both operands");
  std::vector<std::string> names = a.state_names();
  names.insert(names.end(), b.state_names().begin(), b.state_names().end());
  const State off = static_cast<State>(a.state_count());
  return from_functions(
      std::move(names), a.letter_names(),
      [&, off](State q, Letter x) {
        return q < off ? a.next(q, x) : static_cast<State>(b.next(q - off, x) + off);
      },
      [&, off](State q, Letter x) { return q < off ? a.out(q, x) : b.out(q - off, x); });
}

Word act_word(const Automaton& a, const StateWord& xi, const Word& w) {
  Word current = w;
  for (State q : xi) current = transduce(InitialRef(a, q), current);
  return current;
}

StateWord section_word(const Automaton& a, const StateWord& xi, const Word& w) {
  const Automaton d = dual_automaton(a);
  for (State q : xi)
    if (q >= a.state_count()) fail(Errc::index_out_of_range, "state index " + std::to_string(q));
  return act_word(d, w, xi);
}

std::set<Word> tree_orbit(const std::vector<InitialRef>& gens, const Word& w, OrbitMode mode) {
  if (gens.empty()) return {w};
  const Automaton* a = gens.front().automaton;
  for (const auto& g : gens)
    if (g.automaton != a)
      fail(Errc::index_out_of_range, "orbit generators reference different automata");

  std::vector<InitialRef> all = gens;
  std::optional<Automaton> inv;
  if (mode == OrbitMode::group) {
    inv = inverse_automaton(*a);
    for (const auto& g : gens) all.emplace_back(*inv, g.state);
  }

  std::set<Word> seen{w};
  std::deque<Word> frontier{w};
  while (!frontier.empty()) {
    const Word cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : all) {
      Word img = transduce(g, cur);
      if (seen.insert(img).second) frontier.push_back(std::move(img));
    }
  }
  return seen;
}

}  // namespace aleshin
