#include "aleshin/words.hpp"

#include <algorithm>

namespace aleshin {

const std::vector<std::string>& q_names() {
  static const std::vector<std::string> names = {"a", "b", "c", "a^-1", "b^-1", "c^-1"};
  return names;
}

std::optional<Letter> q_index(std::string_view token) {
  const auto& names = q_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == token) return static_cast<Letter>(i);
  return std::nullopt;
}

std::vector<std::string> split_word_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  auto is_sep = [](char ch) { return ch == ',' || ch == ' ' || ch == '\t'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

QWord parse_qword(std::string_view text) {
  QWord xi;
  for (const auto& token : split_word_tokens(text)) {
    const auto q = q_index(token);
    if (!q) fail(Errc::unknown_symbol, "not a signed generator: '" + token + "'");
    xi.push_back(*q);
  }
  return xi;
}

std::string format_qword(const QWord& xi) {
  std::string out;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (i) out += ',';
    out += q_names().at(xi[i]);
  }
  return out;
}

int chi(const QWord& xi) {
  std::size_t negatives = 0;
  for (Letter q : xi)
    if (q_base(q) != q_c) ++negatives;
  return negatives % 2 == 0 ? 1 : -1;
}

Pattern pattern_of(const QWord& xi) {
  Pattern v;
  v.reserve(xi.size());
  for (Letter q : xi) v.push_back(q_sign(q));
  return v;
}

bool is_freely_irreducible(const QWord& xi) {
  for (std::size_t i = 1; i < xi.size(); ++i)
    if (xi[i] == q_inverse(xi[i - 1])) return false;
  return true;
}

QWord free_reduce(QWord xi) {
  QWord stack;
  stack.reserve(xi.size());
  for (Letter q : xi) {
    if (!stack.empty() && stack.back() == q_inverse(q))
      stack.pop_back();
    else
      stack.push_back(q);
  }
  return stack;
}

QWord strip_c(const QWord& xi) {
  QWord out;
  out.reserve(xi.size());
  for (Letter q : xi)
    if (q_base(q) != q_c) out.push_back(q);
  return out;
}

WClassSet w_class(const QWord& xi) {
  const QWord core = strip_c(xi);
  for (std::size_t i = 1; i < core.size(); ++i)
    if (q_sign(core[i]) == q_sign(core[i - 1])) return {};
  WClassSet set;
  if (core.empty()) {
    set.pm = set.mp = true;
    return set;
  }
  const bool first_plus = q_sign(core.front()) == Sign::plus;
  const bool last_plus = q_sign(core.back()) == Sign::plus;
  set.pp = first_plus && last_plus;
  set.pm = first_plus && !last_plus;
  set.mp = !first_plus && last_plus;
  set.mm = !first_plus && !last_plus;
  return set;
}

std::set<QWord> z_set(const QWord& xi) {
  if (!is_freely_irreducible(xi))
    fail(Errc::reducible_word, "z_set needs a freely irreducible word: " + format_qword(xi));
  if (xi.empty()) return {xi};
  std::set<QWord> out;
  QWord candidate = xi;
  const Letter sign_offset = q_sign(xi.back()) == Sign::plus ? 0 : 3;
  for (Letter base = 0; base < 3; ++base) {
    candidate.back() = static_cast<Letter>(base + sign_offset);
    if (is_freely_irreducible(candidate)) out.insert(candidate);
  }
  return out;
}

Perm::Perm(std::size_t n) : images_(n) {
  for (std::size_t i = 0; i < n; ++i) images_[i] = static_cast<std::uint8_t>(i);
}

Perm Perm::from_images(std::vector<std::uint8_t> images) {
  std::vector<bool> hit(images.size(), false);
  for (std::uint8_t v : images) {
    if (v >= images.size() || hit[v])
      fail(Errc::index_out_of_range, "image list is not a permutation");
    hit[v] = true;
  }
  Perm p(images.size());
  p.images_ = std::move(images);
  return p;
}

std::uint8_t Perm::operator()(std::uint8_t i) const {
  if (i >= images_.size()) fail(Errc::index_out_of_range, "point " + std::to_string(i));
  return images_[i];
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<std::uint8_t>(i);
  return from_images(std::move(inv));
}

Perm compose(const Perm& f, const Perm& g) {
  if (f.size() != g.size()) fail(Errc::index_out_of_range, "composing permutations of unequal size");
  std::vector<std::uint8_t> images(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) images[i] = f.images_[g.images_[i]];
  return Perm::from_images(std::move(images));
}

Perm make_perm(std::size_t n,
               std::initializer_list<std::initializer_list<std::uint8_t>> cycles) {
  std::vector<std::uint8_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint8_t>(i);
  for (const auto& cycle : cycles) {
    const std::vector<std::uint8_t> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n) fail(Errc::index_out_of_range, "cycle point " + std::to_string(c[i]));
      images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm::from_images(std::move(images));
}

std::vector<Perm> base_permutations() {
  std::vector<std::uint8_t> images = {0, 1, 2};
  std::vector<Perm> all;
  do {
    all.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return all;
}

Perm lift_permutation(const Perm& tau) {
  if (tau.size() != 3) fail(Errc::index_out_of_range, "lift wants a permutation of {a, b, c}");
  std::vector<std::uint8_t> images(q_symbol_count);
  for (std::uint8_t i = 0; i < 3; ++i) {
    images[i] = tau(i);
    images[i + 3] = static_cast<std::uint8_t>(tau(i) + 3);
  }
  return Perm::from_images(std::move(images));
}

QWord apply_letterwise(const Perm& p, const QWord& xi) {
  QWord out;
  out.reserve(xi.size());
  for (Letter q : xi) out.push_back(p(q));
  return out;
}

}  // namespace aleshin
