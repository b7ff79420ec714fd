#include "aleshin/lemmas.hpp"

#include <algorithm>
#include <unordered_map>

#include "aleshin/builtins.hpp"

namespace aleshin {

namespace {

const Automaton& machine_b() {
  static const Automaton b = build_b();
  return b;
}

const Automaton& machine_e() {
  static const Automaton e = build_e();
  return e;
}

const Automaton& machine_d() {
  static const Automaton d = build_dual_d();
  return d;
}

const Automaton& machine_d_inverse() {
  static const Automaton di = inverse_automaton(build_dual_d());
  return di;
}

QWord e_act(State s, const QWord& w) { return transduce(InitialRef(machine_e(), s), w); }
QWord d_act(State x, const QWord& w) { return transduce(InitialRef(machine_d(), x), w); }
QWord d_undo(State x, const QWord& w) { return transduce(InitialRef(machine_d_inverse(), x), w); }

// Every word over the six signed symbols of one length, odometer order.
template <typename Fn>
void for_each_qword(int len, Fn&& fn) {
  QWord w(static_cast<std::size_t>(len), 0);
  for (;;) {
    fn(w);
    int i = len - 1;
    while (i >= 0 && w[i] == q_symbol_count - 1) w[i--] = 0;
    if (i < 0) return;
    ++w[i];
  }
}

template <typename Fn>
void for_each_pattern(int len, Fn&& fn) {
  for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
    Pattern v(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) v[i] = (bits >> i) & 1 ? Sign::minus : Sign::plus;
    fn(v);
  }
}

std::size_t word_index(const QWord& w) {
  std::size_t v = 0;
  for (Letter q : w) v = v * q_symbol_count + q;
  return v;
}

struct Dsu {
  explicit Dsu(std::size_t n) : parent(n, -1) {}

  std::int64_t find(std::int64_t x) {
    std::int64_t root = x;
    while (parent[root] >= 0) root = parent[root];
    while (parent[x] >= 0) {
      const std::int64_t up = parent[x];
      parent[x] = root;
      x = up;
    }
    return root;
  }

  void unite(std::int64_t a, std::int64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (parent[a] > parent[b]) std::swap(a, b);
    parent[a] += parent[b];
    parent[b] = a;
  }

  std::vector<std::int64_t> parent;
};

// Connected components agree (up to root relabeling) when the root maps are
// mutually consistent.  pair_of(i) supplies the element of the second
// structure matched with element i of the first.
template <typename PairOf>
bool partitions_correspond(Dsu& lhs, Dsu& rhs, std::size_t n, PairOf&& pair_of,
                           std::size_t* bad_index) {
  std::unordered_map<std::int64_t, std::int64_t> fwd, bwd;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t l = lhs.find(static_cast<std::int64_t>(i));
    const std::int64_t r = rhs.find(static_cast<std::int64_t>(pair_of(i)));
    const auto f = fwd.emplace(l, r);
    const auto b = bwd.emplace(r, l);
    if ((!f.second && f.first->second != r) || (!b.second && b.first->second != l)) {
      if (bad_index) *bad_index = i;
      return false;
    }
  }
  return true;
}

std::uint64_t pow6(int e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= q_symbol_count;
  return v;
}

LemmaResult finish(LemmaResult r) {
  if (r.detail.empty())
    r.passed = true;
  else
    r.passed = false;
  return r;
}

}  // namespace

LemmaResult check_lifted_permutations(int max_len) {
  LemmaResult r{"free1", "lifting to signed symbols is a homomorphism", false, 0, ""};
  const auto taus = base_permutations();
  for (const Perm& t1 : taus) {
    for (const Perm& t2 : taus) {
      ++r.cases;
      if (lift_permutation(compose(t1, t2)) != compose(lift_permutation(t1), lift_permutation(t2))) {
        r.detail = "product lift mismatch";
        return finish(std::move(r));
      }
    }
    if (lift_permutation(t1.inverse()) != lift_permutation(t1).inverse()) {
      r.detail = "inverse lift mismatch";
      return finish(std::move(r));
    }
  }
  for (int len = 0; len <= max_len && r.detail.empty(); ++len)
    for_each_qword(len, [&](const QWord& w) {
      if (!r.detail.empty()) return;
      for (const Perm& t1 : taus)
        for (const Perm& t2 : taus) {
          ++r.cases;
          const QWord joint = apply_letterwise(lift_permutation(compose(t1, t2)), w);
          const QWord staged =
              apply_letterwise(lift_permutation(t1), apply_letterwise(lift_permutation(t2), w));
          if (joint != staged) {
            r.detail = "letterwise mismatch at " + format_qword(w);
            return;
          }
        }
    });
  return finish(std::move(r));
}

LemmaResult check_involution_products(int max_len) {
  LemmaResult r{"free2", "exchange actions square to one; products give lifted (a b) and (b c)",
                false, 0, ""};
  const Perm pi_ab = lift_permutation(make_perm(3, {{q_a, q_b}}));
  const Perm pi_bc = lift_permutation(make_perm(3, {{q_b, q_c}}));
  for (int len = 0; len <= max_len && r.detail.empty(); ++len)
    for_each_qword(len, [&](const QWord& w) {
      if (!r.detail.empty()) return;
      ++r.cases;
      for (State s : {e_alpha, e_beta, e_gamma})
        if (e_act(s, e_act(s, w)) != w) {
          r.detail = "action from state " + machine_e().state_name(s) +
                     " is not an involution at " + format_qword(w);
          return;
        }
      const QWord ab = apply_letterwise(pi_ab, w);
      if (e_act(e_alpha, e_act(e_beta, w)) != ab || e_act(e_beta, e_act(e_alpha, w)) != ab) {
        r.detail = "alpha/beta product mismatch at " + format_qword(w);
        return;
      }
      if (e_act(e_gamma, w) != apply_letterwise(pi_bc, w)) {
        r.detail = "gamma does not act as lifted (b c) at " + format_qword(w);
        return;
      }
    });
  return finish(std::move(r));
}

LemmaResult check_dual_factorizations(int max_len) {
  LemmaResult r{"free3",
                "single-letter sections factor through exchange actions and lifted permutations",
                false, 0, ""};
  const Perm pi_ac = lift_permutation(make_perm(3, {{q_a, q_c}}));
  const Perm pi_abc = lift_permutation(make_perm(3, {{q_a, q_b, q_c}}));
  const Perm pi_ab = lift_permutation(make_perm(3, {{q_a, q_b}}));
  for (int len = 0; len <= max_len && r.detail.empty(); ++len)
    for_each_qword(len, [&](const QWord& w) {
      if (!r.detail.empty()) return;
      ++r.cases;
      const QWord at0 = d_act(0, w);
      const QWord at1 = d_act(1, w);
      if (at0 != apply_letterwise(pi_ac, e_act(e_alpha, w)) ||
          at0 != apply_letterwise(pi_abc, e_act(e_beta, w))) {
        r.detail = "section at 0 mismatch at " + format_qword(w);
        return;
      }
      if (at1 != apply_letterwise(pi_abc, e_act(e_alpha, w)) ||
          at1 != apply_letterwise(pi_ac, e_act(e_beta, w))) {
        r.detail = "section at 1 mismatch at " + format_qword(w);
        return;
      }
      if (d_act(0, d_undo(1, w)) != e_act(e_gamma, w)) {
        r.detail = "section product does not equal gamma's action at " + format_qword(w);
        return;
      }
      if (d_undo(0, d_act(1, w)) != apply_letterwise(pi_ab, w)) {
        r.detail = "inverse section product does not equal lifted (a b) at " + format_qword(w);
        return;
      }
    });
  return finish(std::move(r));
}

LemmaResult check_orbit_partition_match(int max_len) {
  LemmaResult r{"free4-orbit", "section and exchange actions generate the same word partitions",
                false, 0, ""};
  for (int len = 0; len <= max_len && r.detail.empty(); ++len) {
    const std::size_t n = pow6(len);
    Dsu under_d(n);
    Dsu under_e(n);
    for_each_qword(len, [&](const QWord& w) {
      ++r.cases;
      const std::int64_t i = static_cast<std::int64_t>(word_index(w));
      for (State x : {State{0}, State{1}})
        under_d.unite(i, static_cast<std::int64_t>(word_index(d_act(x, w))));
      for (State s : {e_alpha, e_beta, e_gamma})
        under_e.unite(i, static_cast<std::int64_t>(word_index(e_act(s, w))));
    });
    std::size_t bad = 0;
    if (!partitions_correspond(under_d, under_e, n, [](std::size_t i) { return i; }, &bad))
      r.detail = "partitions diverge at index " + std::to_string(bad) + ", length " +
                 std::to_string(len);
  }
  return finish(std::move(r));
}

LemmaResult check_first_level_sign(int max_len) {
  LemmaResult r{"ind1", "trivial first-level action is equivalent to chi == +1", false, 0, ""};
  const Automaton& b = machine_b();
  for (int len = 0; len <= max_len && r.detail.empty(); ++len)
    for_each_qword(len, [&](const QWord& w) {
      if (!r.detail.empty()) return;
      ++r.cases;
      if (first_level_action(b, w).is_identity() != (chi(w) == 1))
        r.detail = "disagreement at " + format_qword(w);
    });
  return finish(std::move(r));
}

LemmaResult check_class_orbits(int max_pattern) {
  LemmaResult r{"ind3",
                "the exchange orbit of one irreducible word is its whole pattern class",
                false, 0, ""};
  const Automaton& e = machine_e();
  const std::vector<InitialRef> gens = {{e, e_alpha}, {e, e_beta}, {e, e_gamma}};
  for (int len = 1; len <= max_pattern && r.detail.empty(); ++len) {
    // direct filtered count per pattern, as an independent cross-check
    std::vector<std::uint64_t> filtered(std::size_t{1} << len, 0);
    for_each_qword(len, [&](const QWord& w) {
      if (!is_freely_irreducible(w)) return;
      std::size_t bits = 0;
      for (int i = 0; i < len; ++i)
        if (q_sign(w[i]) == Sign::minus) bits |= std::size_t{1} << i;
      ++filtered[bits];
    });
    for_each_pattern(len, [&](const Pattern& v) {
      if (!r.detail.empty()) return;
      ++r.cases;
      std::size_t bits = 0;
      for (int i = 0; i < len; ++i)
        if (v[i] == Sign::minus) bits |= std::size_t{1} << i;
      const std::set<QWord> cls = irreducible_class(v);
      if (cls.size() != irreducible_class_size(v) || cls.size() != filtered[bits]) {
        r.detail = "class size mismatch at pattern index " + std::to_string(bits) + ", length " +
                   std::to_string(len);
        return;
      }
      const OrbitSet orbit = word_orbit(gens, lex_smallest_irreducible(v));
      if (orbit.members != cls)
        r.detail = "orbit differs from class at pattern index " + std::to_string(bits) +
                   ", length " + std::to_string(len);
    });
  }
  return finish(std::move(r));
}

LemmaResult check_reversed_orbits(int max_len) {
  LemmaResult r{"ind4", "exchange orbits correspond under word reversal", false, 0, ""};
  for (int len = 0; len <= max_len && r.detail.empty(); ++len) {
    const std::size_t n = pow6(len);
    Dsu orbits(n);
    for_each_qword(len, [&](const QWord& w) {
      ++r.cases;
      const std::int64_t i = static_cast<std::int64_t>(word_index(w));
      for (State s : {e_alpha, e_beta, e_gamma})
        orbits.unite(i, static_cast<std::int64_t>(word_index(e_act(s, w))));
    });
    std::size_t bad = 0;
    // digit reversal pairs each word's index with its reversal's index
    auto reversed_index = [len](std::size_t i) {
      std::size_t rev = 0;
      for (int k = 0; k < len; ++k) {
        rev = rev * q_symbol_count + i % q_symbol_count;
        i /= q_symbol_count;
      }
      return rev;
    };
    if (!partitions_correspond(orbits, orbits, n, reversed_index, &bad))
      r.detail = "reversal mismatch at index " + std::to_string(bad) + ", length " +
                 std::to_string(len);
  }
  return finish(std::move(r));
}

LemmaResult check_boundary_pairs(int max_pattern) {
  LemmaResult r{"ind5", "witness pairs for patterns with a trailing sign change", false, 0, ""};
  for (int len = 2; len <= max_pattern && r.detail.empty(); ++len)
    for_each_pattern(len, [&](const Pattern& v) {
      if (!r.detail.empty() || v[v.size() - 2] == v.back()) return;
      ++r.cases;
      const Ind5Witnesses w = ind5_witnesses(v);
      const auto bad = [&](const std::string& why) {
        r.detail = why + " at " + format_qword(w.xi_a) + " / " + format_qword(w.xi_b);
      };
      if (!is_freely_irreducible(w.xi_a) || !is_freely_irreducible(w.xi_b))
        return bad("witness not irreducible");
      if (pattern_of(w.xi_a) != v || pattern_of(w.xi_b) != v)
        return bad("witness leaves the pattern");
      if (QWord(w.xi_a.begin(), w.xi_a.end() - 1) != QWord(w.xi_b.begin(), w.xi_b.end() - 1) ||
          w.xi_a == w.xi_b)
        return bad("witnesses do not differ exactly in the last letter");
      const std::set<QWord> expected = {w.xi_a, w.xi_b};
      if (z_set(w.xi_a) != expected || z_set(w.xi_b) != expected)
        return bad("z_set is not exactly the pair");
      if (e_act(w.generator, w.xi_a) != w.xi_b || e_act(w.generator, w.xi_b) != w.xi_a)
        return bad("designated exchange action does not swap the pair");
    });
  return finish(std::move(r));
}

LemmaResult check_interior_grid(int max_pattern) {
  LemmaResult r{"ind6", "witness grids for patterns with matched end signs", false, 0, ""};
  for (int len = 2; len <= max_pattern && r.detail.empty(); ++len)
    for_each_pattern(len, [&](const Pattern& v) {
      if (!r.detail.empty() || v[0] != v[1] || v[v.size() - 2] != v.back()) return;
      ++r.cases;
      const Ind6Witnesses w = ind6_witnesses(v);
      const auto bad = [&](const std::string& why, const QWord& word) {
        r.detail = why + " at " + format_qword(word);
      };
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const QWord& word = w.words[i][j];
          if (!is_freely_irreducible(word)) return bad("grid word reducible", word);
          if (pattern_of(word) != v) return bad("grid word leaves the pattern", word);
          if (q_base(word.front()) != i || q_base(word.back()) != j)
            return bad("grid word has wrong end letters", word);
          if (QWord(word.begin() + 1, word.end() - 1) !=
              QWord(w.words[0][0].begin() + 1, w.words[0][0].end() - 1))
            return bad("grid word changes the interior", word);
        }
      for (int i = 0; i < 3; ++i) {
        const std::set<QWord> column = {w.words[i][0], w.words[i][1], w.words[i][2]};
        if (z_set(w.words[i][2]) != column)
          return bad("z_set along the last letter incomplete", w.words[i][2]);
        const std::set<QWord> row_rev = {reversed(w.words[0][i]), reversed(w.words[1][i]),
                                         reversed(w.words[2][i])};
        if (z_set(reversed(w.words[2][i])) != row_rev)
          return bad("z_set along the reversed first letter incomplete", w.words[2][i]);
        if (e_act(w.generators[i], w.words[i][0]) != w.words[i][1])
          return bad("designated exchange action misses the b-column", w.words[i][0]);
      }
    });
  return finish(std::move(r));
}

LemmaResult check_class_fixing(int max_len) {
  LemmaResult r{"indextra", "sign-boundary classes are fixed and boundary letters swapped",
                false, 0, ""};
  const auto append = [](QWord w, Letter q) {
    w.push_back(q);
    return w;
  };
  for (int len = 0; len <= max_len && r.detail.empty(); ++len)
    for_each_qword(len, [&](const QWord& w) {
      if (!r.detail.empty()) return;
      const WClassSet cls = w_class(w);
      if (!cls.any()) return;
      ++r.cases;
      if ((cls.pp || cls.pm) && e_act(e_alpha, w) != w) {
        r.detail = "alpha moves " + format_qword(w);
        return;
      }
      if ((cls.mp || cls.mm) && e_act(e_beta, w) != w) {
        r.detail = "beta moves " + format_qword(w);
        return;
      }
      const auto swaps = [&](State s, Letter x, Letter y) {
        return e_act(s, append(w, x)) == append(w, y) && e_act(s, append(w, y)) == append(w, x);
      };
      if (cls.pp && !swaps(e_alpha, q_a, q_b)) {
        r.detail = "alpha does not swap appended a/b after " + format_qword(w);
        return;
      }
      if (cls.pm && !swaps(e_alpha, q_ai, q_bi)) {
        r.detail = "alpha does not swap appended a^-1/b^-1 after " + format_qword(w);
        return;
      }
      if (cls.mp && !swaps(e_beta, q_a, q_b)) {
        r.detail = "beta does not swap appended a/b after " + format_qword(w);
        return;
      }
      if (cls.mm && !swaps(e_beta, q_ai, q_bi)) {
        r.detail = "beta does not swap appended a^-1/b^-1 after " + format_qword(w);
        return;
      }
    });
  return finish(std::move(r));
}

std::vector<LemmaResult> run_lemma_suite(int max_len) {
  return {
      check_lifted_permutations(max_len),
      check_involution_products(max_len),
      check_dual_factorizations(max_len),
      check_orbit_partition_match(max_len),
      check_first_level_sign(max_len),
      check_class_orbits(max_len),
      check_reversed_orbits(max_len),
      check_boundary_pairs(max_len),
      check_interior_grid(max_len),
      check_class_fixing(max_len),
  };
}

}  // namespace aleshin
