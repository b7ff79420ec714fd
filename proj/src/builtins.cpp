#include "aleshin/builtins.hpp"

namespace aleshin {

Automaton build_aleshin() {
  // next(q, x) and out(q, x) indexed by state a, b, c and letter 0, 1
  static constexpr State kNext[3][2] = {{2, 1}, {1, 2}, {0, 0}};
  static constexpr Letter kOut[3][2] = {{1, 0}, {1, 0}, {0, 1}};
  return from_functions(
      {"a", "b", "c"}, {"0", "1"},
      [](State q, Letter x) { return kNext[q][x]; },
      [](State q, Letter x) { return kOut[q][x]; });
}

Automaton build_b() {
  const Automaton a = build_aleshin();
  const Automaton inv = rename_states(inverse_automaton(a), {"a^-1", "b^-1", "c^-1"});
  return disjoint_union(a, inv);
}

Automaton build_dual_d() { return dual_automaton(build_b()); }

Automaton build_e() {
  const Perm sigmas[3] = {sigma_alpha(), sigma_beta(), sigma_gamma()};
  return from_functions(
      {"alpha", "beta", "gamma"}, q_names(),
      [](State s, Letter q) {
        if (s == e_gamma) return e_gamma;
        if (q_base(q) == q_c) return s;             // c and c^-1 keep the state
        return s == e_alpha ? e_beta : e_alpha;      // a, b and inverses swap it
      },
      [&sigmas](State s, Letter q) { return static_cast<Letter>(sigmas[s](q)); });
}

Perm sigma_alpha() { return make_perm(q_symbol_count, {{q_ai, q_bi}}); }
Perm sigma_beta() { return make_perm(q_symbol_count, {{q_a, q_b}}); }
Perm sigma_gamma() { return make_perm(q_symbol_count, {{q_b, q_c}, {q_bi, q_ci}}); }

std::optional<Automaton> builtin_automaton(std::string_view name) {
  if (name == "aleshin") return build_aleshin();
  if (name == "b") return build_b();
  if (name == "d") return build_dual_d();
  if (name == "e") return build_e();
  return std::nullopt;
}

}  // namespace aleshin
