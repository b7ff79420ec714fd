#include "aleshin/orbit.hpp"

#include <algorithm>

#include "aleshin/builtins.hpp"

namespace aleshin {

namespace {

const char* pattern_error(const Pattern& v, std::size_t min_len) {
  if (v.empty()) return "empty pattern";
  if (v.size() < min_len) return "pattern too short";
  return nullptr;
}

Letter signed_letter(Letter base, Sign s) {
  return s == Sign::plus ? base : static_cast<Letter>(base + 3);
}

}  // namespace

OrbitSet word_orbit(const std::vector<InitialRef>& gens, const QWord& xi, OrbitMode mode) {
  OrbitSet orbit;
  orbit.members = tree_orbit(gens, xi, mode);
  std::string tag;
  for (const auto& g : gens) {
    if (!tag.empty()) tag += ',';
    tag += g.automaton->state_name(g.state);
  }
  tag += mode == OrbitMode::group ? " (group)" : " (semigroup)";
  orbit.generator_tag = std::move(tag);
  return orbit;
}

std::set<QWord> irreducible_class(const Pattern& v) {
  std::set<QWord> out;
  QWord word(v.size());
  // depth-first over the three base choices per position, skipping the one
  // that would cancel against the previous letter
  auto descend = [&](auto&& self, std::size_t depth) -> void {
    if (depth == v.size()) {
      out.insert(word);
      return;
    }
    for (Letter base = 0; base < 3; ++base) {
      const Letter q = signed_letter(base, v[depth]);
      if (depth > 0 && q == q_inverse(word[depth - 1])) continue;
      word[depth] = q;
      self(self, depth + 1);
    }
  };
  descend(descend, 0);
  return out;
}

std::uint64_t irreducible_class_size(const Pattern& v) {
  if (v.empty()) return 1;
  std::uint64_t size = 3;
  for (std::size_t i = 1; i < v.size(); ++i) size *= v[i] != v[i - 1] ? 2 : 3;
  return size;
}

QWord lex_smallest_irreducible(const Pattern& v) {
  QWord word;
  word.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (Letter base = 0; base < 3; ++base) {
      const Letter q = signed_letter(base, v[i]);
      if (i > 0 && q == q_inverse(word[i - 1])) continue;
      word.push_back(q);
      break;
    }
  return word;
}

std::pair<QWord, QWord> ind2_witnesses(const Pattern& v) {
  if (v.empty()) fail(Errc::empty_pattern, "need a nonempty pattern");
  QWord plain;
  plain.reserve(v.size());
  for (Sign s : v) plain.push_back(s == Sign::plus ? q_a : q_bi);
  QWord swapped = plain;
  swapped[0] = v[0] == Sign::plus ? q_c : q_ci;
  return {std::move(plain), std::move(swapped)};
}

Ind5Witnesses ind5_witnesses(const Pattern& v) {
  if (const char* why = pattern_error(v, 2)) fail(Errc::bad_pattern, why);
  if (v[v.size() - 2] == v.back())
    fail(Errc::bad_pattern, "last two signs must differ");

  // interior: a/b^-1 right before a sign change, c/c^-1 otherwise, so the
  // word stays irreducible whatever same-pattern letter follows
  QWord eta;
  eta.reserve(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const bool changes = i + 2 < v.size() && v[i + 1] != v[i];
    if (v[i] == Sign::plus)
      eta.push_back(changes ? q_a : q_c);
    else
      eta.push_back(changes ? q_bi : q_ci);
  }

  Ind5Witnesses w;
  w.xi_a = eta;
  w.xi_a.push_back(signed_letter(0, v.back()));
  w.xi_b = std::move(eta);
  w.xi_b.push_back(signed_letter(1, v.back()));
  w.generator = v.front() == Sign::plus ? e_alpha : e_beta;
  return w;
}

Ind6Witnesses ind6_witnesses(const Pattern& v) {
  if (const char* why = pattern_error(v, 2)) fail(Errc::bad_pattern, why);
  if (v[0] != v[1] || v[v.size() - 2] != v.back())
    fail(Errc::bad_pattern, "first two and last two signs must each agree");

  // interior between the variable endpoints: a/b^-1 right after a sign
  // change, c/c^-1 otherwise
  QWord eta;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const bool changed = v[i - 1] != v[i];
    if (v[i] == Sign::plus)
      eta.push_back(changed ? q_a : q_c);
    else
      eta.push_back(changed ? q_bi : q_ci);
  }

  Ind6Witnesses w;
  for (Letter first = 0; first < 3; ++first)
    for (Letter last = 0; last < 3; ++last) {
      QWord word;
      word.reserve(v.size());
      word.push_back(signed_letter(first, v.front()));
      word.insert(word.end(), eta.begin(), eta.end());
      word.push_back(signed_letter(last, v.back()));
      w.words[first][last] = std::move(word);
    }
  const State same = v.front() == Sign::plus ? e_alpha : e_beta;
  const State other = same == e_alpha ? e_beta : e_alpha;
  w.generators = {same, same, other};
  return w;
}

}  // namespace aleshin
