#include <doctest.h>

#include <random>

#include "aleshin/error.hpp"
#include "aleshin/words.hpp"
#include "helpers.hpp"

using namespace aleshin;

TEST_CASE("letter encoding round trips") {
  CHECK(q_names() == std::vector<std::string>{"a", "b", "c", "a^-1", "b^-1", "c^-1"});
  for (Letter q = 0; q < q_symbol_count; ++q) {
    CHECK(q_inverse(q_inverse(q)) == q);
    CHECK(q_base(q_inverse(q)) == q_base(q));
    CHECK(q_sign(q) != q_sign(q_inverse(q)));
    CHECK(q_index(q_names()[q]) == q);
  }
  CHECK(q_sign(q_a) == Sign::plus);
  CHECK(q_sign(q_ci) == Sign::minus);
  CHECK(!q_index("d").has_value());
  CHECK_THROWS_AS(parse_qword("d"), Error);
}

TEST_CASE("qword parsing accepts commas and spaces") {
  CHECK(parse_qword("a,b^-1") == QWord{q_a, q_bi});
  CHECK(parse_qword("a b^-1") == QWord{q_a, q_bi});
  CHECK(parse_qword("  c^-1 ,a ") == QWord{q_ci, q_a});
  CHECK(parse_qword("") == QWord{});
  CHECK(format_qword({q_a, q_bi}) == "a,b^-1");
  CHECK(format_qword({}) == "");
  CHECK_THROWS_AS(parse_qword("a,d"), Error);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const QWord w = helpers::random_qword(rng, static_cast<int>(rng() % 8));
    CHECK(parse_qword(format_qword(w)) == w);
  }
}

TEST_CASE("chi counts sign letters modulo two") {
  CHECK(chi({}) == 1);
  CHECK(chi(parse_qword("c")) == 1);
  CHECK(chi(parse_qword("c^-1")) == 1);
  CHECK(chi(parse_qword("a")) == -1);
  CHECK(chi(parse_qword("b^-1")) == -1);
  CHECK(chi(parse_qword("c,a,b^-1")) == 1);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    QWord u = helpers::random_qword(rng, static_cast<int>(rng() % 6));
    const QWord v = helpers::random_qword(rng, static_cast<int>(rng() % 6));
    const int product = chi(u) * chi(v);
    u.insert(u.end(), v.begin(), v.end());
    CHECK(chi(u) == product);
  }
}

TEST_CASE("patterns and free reduction") {
  CHECK(pattern_of(parse_qword("a,c,b^-1")) ==
        Pattern{Sign::plus, Sign::plus, Sign::minus});
  CHECK(is_freely_irreducible(parse_qword("a,b^-1")));
  CHECK(!is_freely_irreducible(parse_qword("a,a^-1")));
  CHECK(!is_freely_irreducible(parse_qword("b^-1,b")));
  CHECK(is_freely_irreducible({}));

  CHECK(free_reduce(parse_qword("a,a^-1")).empty());
  CHECK(free_reduce(parse_qword("a,b,b^-1,a^-1")).empty());
  CHECK(free_reduce(parse_qword("c,a,a^-1,b")) == parse_qword("c,b"));

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const QWord w = helpers::random_qword(rng, static_cast<int>(rng() % 10));
    const QWord reduced = free_reduce(w);
    CHECK(is_freely_irreducible(reduced));
    CHECK(free_reduce(reduced) == reduced);
    QWord cancel = w;
    const QWord inv = helpers::inverse_word(w);
    cancel.insert(cancel.end(), inv.begin(), inv.end());
    CHECK(free_reduce(cancel).empty());
  }
}

TEST_CASE("strip_c removes the c letters and nothing else") {
  CHECK(strip_c(parse_qword("a,c,b^-1,c^-1")) == parse_qword("a,b^-1"));
  CHECK(strip_c(parse_qword("c,c^-1")).empty());
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    QWord u = helpers::random_qword(rng, static_cast<int>(rng() % 6));
    const QWord v = helpers::random_qword(rng, static_cast<int>(rng() % 6));
    QWord glued = u;
    glued.insert(glued.end(), v.begin(), v.end());
    QWord expected = strip_c(u);
    const QWord tail = strip_c(v);
    expected.insert(expected.end(), tail.begin(), tail.end());
    CHECK(strip_c(glued) == expected);
  }
}

TEST_CASE("w_class sorts words by boundary signs after dropping c") {
  const WClassSet none{};
  WClassSet both_mixed{};
  both_mixed.pm = both_mixed.mp = true;

  CHECK(w_class({}) == both_mixed);
  CHECK(w_class(parse_qword("c")) == both_mixed);
  CHECK(w_class(parse_qword("c,c^-1,c")) == both_mixed);

  WClassSet pm{};
  pm.pm = true;
  CHECK(w_class(parse_qword("a,c,b^-1")) == pm);

  WClassSet pp{};
  pp.pp = true;
  CHECK(w_class(parse_qword("a")) == pp);
  CHECK(w_class(parse_qword("a,b^-1,a")) == pp);

  WClassSet mp{};
  mp.mp = true;
  CHECK(w_class(parse_qword("a^-1,c,b")) == mp);

  WClassSet mm{};
  mm.mm = true;
  CHECK(w_class(parse_qword("a^-1,b,a^-1")) == mm);

  CHECK(w_class(parse_qword("a,a")) == none);
  CHECK(!w_class(parse_qword("a,b,c")).any());
  CHECK(w_class(parse_qword("a,a")).any() == false);
}

TEST_CASE("z_set replaces the last letter within its sign") {
  const auto z_ab = z_set(parse_qword("a,b"));
  CHECK(z_ab == std::set<QWord>{parse_qword("a,a"), parse_qword("a,b"), parse_qword("a,c")});
  const auto z_abi = z_set(parse_qword("a,b^-1"));
  CHECK(z_abi == std::set<QWord>{parse_qword("a,b^-1"), parse_qword("a,c^-1")});
  CHECK(z_set({}) == std::set<QWord>{QWord{}});
  CHECK(z_set(parse_qword("a")) == std::set<QWord>{parse_qword("a"), parse_qword("b"), parse_qword("c")});
  CHECK_THROWS_AS(z_set(parse_qword("a,a^-1")), Error);

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const QWord w = helpers::random_irreducible_qword(rng, 1 + static_cast<int>(rng() % 7));
    const auto z = z_set(w);
    CHECK((w.size() == 1 ? z.size() == 3 : (z.size() == 2 || z.size() == 3)));
    CHECK(z.count(w) == 1);
    for (const QWord& m : z) {
      CHECK(is_freely_irreducible(m));
      CHECK(pattern_of(m) == pattern_of(w));
      CHECK(QWord(m.begin(), m.end() - 1) == QWord(w.begin(), w.end() - 1));
    }
  }
}

TEST_CASE("permutation composition applies the right factor first") {
  const Perm ac = make_perm(3, {{0, 2}});
  const Perm acb = make_perm(3, {{0, 2, 1}});
  const Perm bc = make_perm(3, {{1, 2}});
  CHECK(compose(ac, acb) == bc);
  CHECK(compose(acb.inverse(), acb) == Perm(3));
  CHECK(Perm(3).is_identity());
  CHECK(!bc.is_identity());
  CHECK(bc(1) == 2);
  CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), Error);
}

TEST_CASE("lifting base permutations respects composition") {
  const auto lifted = lift_permutation(make_perm(3, {{0, 1}}));
  CHECK(lifted(q_a) == q_b);
  CHECK(lifted(q_ai) == q_bi);
  CHECK(lifted(q_c) == q_c);
  CHECK(lifted(q_ci) == q_ci);

  const auto bases = base_permutations();
  CHECK(bases.size() == 6);
  for (const Perm& f : bases) {
    for (const Perm& g : bases) {
      CHECK(lift_permutation(compose(f, g)) == compose(lift_permutation(f), lift_permutation(g)));
    }
    CHECK(lift_permutation(f.inverse()) == lift_permutation(f).inverse());
  }
}

TEST_CASE("apply_letterwise maps each letter through the permutation") {
  const Perm swap_ac = lift_permutation(make_perm(3, {{0, 2}}));
  CHECK(apply_letterwise(swap_ac, parse_qword("a,b,c^-1")) == parse_qword("c,b,a^-1"));
  CHECK(apply_letterwise(swap_ac, {}) == QWord{});
}

TEST_CASE("reversed flips any vector") {
  CHECK(reversed(parse_qword("a,b,c")) == parse_qword("c,b,a"));
  CHECK(reversed(QWord{}) == QWord{});
}
