#pragma once

#include <random>
#include <string>
#include <vector>

#include "aleshin/automaton.hpp"
#include "aleshin/words.hpp"

// Deterministic generators and brute-force oracles shared by the test
// binaries.  Everything here recomputes results from first principles so the
// library under test is never its own referee.
namespace helpers {

using namespace aleshin;

inline QWord random_qword(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> pick(0, 5);
  QWord w(static_cast<std::size_t>(len));
  for (auto& q : w) q = static_cast<Letter>(pick(rng));
  return w;
}

inline QWord random_irreducible_qword(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> first(0, 5);
  std::uniform_int_distribution<int> rest(0, 4);
  QWord w;
  for (int i = 0; i < len; ++i) {
    if (w.empty()) {
      w.push_back(static_cast<Letter>(first(rng)));
      continue;
    }
    Letter q = static_cast<Letter>(rest(rng));
    if (q >= q_inverse(w.back())) q = static_cast<Letter>(q + 1);
    w.push_back(q);
  }
  return w;
}

inline QWord inverse_word(const QWord& w) {
  QWord inv;
  inv.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back(q_inverse(*it));
  return inv;
}

inline Word random_word(std::mt19937_64& rng, int len, int alphabet) {
  std::uniform_int_distribution<int> pick(0, alphabet - 1);
  Word w(static_cast<std::size_t>(len));
  for (auto& x : w) x = static_cast<Letter>(pick(rng));
  return w;
}

// Every word of one length over an alphabet of the given size, odometer order.
template <typename Fn>
void each_word(int len, int alphabet, Fn&& fn) {
  Word w(static_cast<std::size_t>(len), 0);
  for (;;) {
    fn(w);
    int i = len - 1;
    while (i >= 0 && w[i] == alphabet - 1) w[i--] = 0;
    if (i < 0) return;
    ++w[i];
  }
}

// First tree level on which the product action moves some word, by direct
// transduction of every word of each length; 0 when none is moved.
inline int brute_first_moved_level(const Automaton& a, const StateWord& xi, int max_level) {
  for (int n = 1; n <= max_level; ++n) {
    bool moved = false;
    each_word(n, static_cast<int>(a.alphabet_size()), [&](const Word& w) {
      if (!moved && act_word(a, xi, w) != w) moved = true;
    });
    if (moved) return n;
  }
  return 0;
}

// Random total transition table with mildly adversarial symbol names.
inline Automaton random_automaton(std::mt19937_64& rng, int max_states, int max_letters) {
  std::uniform_int_distribution<int> state_count(1, max_states);
  std::uniform_int_distribution<int> letter_count(1, max_letters);
  std::uniform_int_distribution<int> decor(0, 5);
  const int ns = state_count(rng);
  const int nl = letter_count(rng);
  std::vector<std::string> states, letters;
  for (int i = 0; i < ns; ++i) {
    std::string name = "q" + std::to_string(i);
    if (decor(rng) == 0) name += "^-1";
    if (decor(rng) == 1) name = "st." + name;
    states.push_back(name);
  }
  for (int i = 0; i < nl; ++i) {
    std::string name = std::to_string(i);
    if (decor(rng) == 0) name += "'";
    letters.push_back(name);
  }
  std::uniform_int_distribution<int> next(0, ns - 1);
  std::uniform_int_distribution<int> out(0, nl - 1);
  std::vector<State> next_tab(static_cast<std::size_t>(ns) * nl);
  std::vector<Letter> out_tab(static_cast<std::size_t>(ns) * nl);
  for (auto& v : next_tab) v = static_cast<State>(next(rng));
  for (auto& v : out_tab) v = static_cast<Letter>(out(rng));
  return from_functions(
      states, letters,
      [&](State q, Letter x) { return next_tab[static_cast<std::size_t>(q) * nl + x]; },
      [&](State q, Letter x) { return out_tab[static_cast<std::size_t>(q) * nl + x]; });
}

}  // namespace helpers
