#include "aleshin/freeness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "aleshin/builtins.hpp"

namespace aleshin {

namespace {

const Automaton& the_b() {
  static const Automaton b = build_b();
  return b;
}

// The dual of a is read straight off a's tables: from dual state x, letter q
// leads to a.out(q, x) and outputs a.next(q, x).
StateWord dual_transduce(const Automaton& a, State dual_state, const StateWord& xi) {
  StateWord out;
  out.reserve(xi.size());
  State x = dual_state;
  for (State q : xi) {
    out.push_back(a.next(q, static_cast<Letter>(x)));
    x = a.out(q, static_cast<Letter>(x));
  }
  return out;
}

// Membership set over equal-length state words; packs into one 64-bit key
// when the word is short enough.
class Visited {
public:
  Visited(std::size_t state_count, std::size_t word_len) {
    bits_ = std::max<int>(
        1, static_cast<int>(std::bit_width(state_count > 1 ? state_count - 1 : std::size_t{1})));
    packable_ = static_cast<std::size_t>(bits_) * word_len <= 64;
  }

  bool insert(const StateWord& s) {
    if (packable_) {
      std::uint64_t key = 0;
      for (State q : s) key = (key << bits_) | q;
      return packed_.insert(key).second;
    }
    return raw_.insert(s).second;
  }

private:
  int bits_ = 1;
  bool packable_ = true;
  std::unordered_set<std::uint64_t> packed_;
  std::set<StateWord> raw_;
};

struct Node {
  StateWord word;
  std::uint32_t parent;
  Letter via;
};

constexpr std::uint32_t no_parent = 0xffffffffu;

// Level-synchronous closure walk under all single-letter sections.  The
// trivial() predicate decides whether a section acts trivially on the first
// tree level; the first failing section, by construction found at the
// shallowest possible depth, fixes min_level exactly.
template <typename Pred>
TrivialityCertificate decide(const Automaton& a, const StateWord& xi, Pred&& trivial) {
  TrivialityCertificate cert;
  cert.word = xi;

  auto finish_nontrivial = [&](const std::vector<Node>& nodes, std::uint32_t idx, int depth) {
    cert.verdict = Verdict::nontrivial;
    cert.min_level = depth + 1;
    cert.orbit_explored = nodes.size();
    Word path;
    for (std::uint32_t i = idx; nodes[i].parent != no_parent; i = nodes[i].parent)
      path.push_back(nodes[i].via);
    cert.witness_vertex.assign(path.rbegin(), path.rend());
  };

  std::vector<Node> nodes;
  nodes.push_back({xi, no_parent, 0});
  if (!trivial(xi)) {
    finish_nontrivial(nodes, 0, 0);
    return cert;
  }

  Visited visited(a.state_count(), xi.size());
  visited.insert(xi);
  const std::size_t letters = a.alphabet_size();
  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  int depth = 0;
  while (level_begin < level_end) {
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (std::size_t x = 0; x < letters; ++x) {
        StateWord s = dual_transduce(a, static_cast<State>(x), nodes[i].word);
        if (!visited.insert(s)) continue;
        nodes.push_back({std::move(s), static_cast<std::uint32_t>(i), static_cast<Letter>(x)});
        if (!trivial(nodes.back().word)) {
          finish_nontrivial(nodes, static_cast<std::uint32_t>(nodes.size() - 1), depth + 1);
          return cert;
        }
      }
    level_begin = level_end;
    level_end = nodes.size();
    ++depth;
  }

  cert.verdict = Verdict::identity;
  cert.orbit_explored = nodes.size();
  return cert;
}

bool first_level_trivial(const Automaton& a, const StateWord& xi) {
  for (Letter x = 0; x < a.alphabet_size(); ++x) {
    Letter y = x;
    for (State q : xi) y = a.out(q, y);
    if (y != x) return false;
  }
  return true;
}

std::uint64_t pack_msb(const QWord& w) {
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    packed |= static_cast<std::uint64_t>(w[i]) << ((max_sweep_length - 1 - i) * 3);
  return packed;
}

}  // namespace

TrivialityCertificate is_identity(const QWord& xi) {
  for (Letter q : xi)
    if (q >= q_symbol_count) fail(Errc::index_out_of_range, "signed symbol index out of range");
  return decide(the_b(), xi, [](const QWord& s) { return chi(s) == 1; });
}

TrivialityCertificate is_identity(const Automaton& a, const StateWord& xi) {
  if (!is_invertible(a))
    fail(Errc::not_invertible, "identity decision needs an invertible automaton");
  for (State q : xi)
    if (q >= a.state_count()) fail(Errc::index_out_of_range, "state index out of range");
  return decide(a, xi, [&a](const StateWord& s) { return first_level_trivial(a, s); });
}

std::optional<int> min_nontrivial_level(const QWord& xi) {
  const TrivialityCertificate cert = is_identity(xi);
  if (cert.verdict == Verdict::identity) return std::nullopt;
  return cert.min_level;
}

Perm first_level_action(const Automaton& a, const StateWord& xi) {
  if (!is_invertible(a))
    fail(Errc::not_invertible, "first-level action is a permutation only for invertible automata");
  std::vector<std::uint8_t> images(a.alphabet_size());
  for (Letter x = 0; x < a.alphabet_size(); ++x) {
    Letter y = x;
    for (State q : xi) y = a.out(q, y);
    images[x] = y;
  }
  return Perm::from_images(std::move(images));
}

QWord sweep_row_word(const SweepRow& row) {
  QWord w(row.length);
  for (std::size_t i = 0; i < row.length; ++i)
    w[i] = static_cast<Letter>((row.packed >> ((max_sweep_length - 1 - i) * 3)) & 7);
  return w;
}

SweepReport verify_freeness(int max_len, unsigned jobs) {
  if (max_len < 1 || max_len > max_sweep_length)
    fail(Errc::index_out_of_range,
         "sweep length must be between 1 and " + std::to_string(max_sweep_length));
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  const auto start = std::chrono::steady_clock::now();
  const Automaton& b = the_b();

  // Work splits into the six one-letter words plus, when max_len >= 2, one
  // task per irreducible two-letter prefix covering all its extensions.
  struct Task {
    QWord root;
    bool extend;
  };
  std::vector<Task> tasks;
  for (Letter q = 0; q < q_symbol_count; ++q) tasks.push_back({{q}, false});
  if (max_len >= 2)
    for (Letter q = 0; q < q_symbol_count; ++q)
      for (Letter r = 0; r < q_symbol_count; ++r)
        if (r != q_inverse(q)) tasks.push_back({{q, r}, true});

  auto evaluate = [&b](const QWord& word) {
    const TrivialityCertificate cert =
        decide(b, word, [](const QWord& s) { return chi(s) == 1; });
    SweepRow row;
    row.packed = pack_msb(word);
    row.length = static_cast<std::uint8_t>(word.size());
    row.min_level = cert.verdict == Verdict::nontrivial
                        ? static_cast<std::uint32_t>(cert.min_level)
                        : 0;
    row.orbit_explored = cert.orbit_explored;
    return row;
  };

  std::vector<std::vector<SweepRow>> results(tasks.size());
  std::atomic<std::size_t> cursor{0};
  std::vector<std::exception_ptr> errors(jobs);

  auto worker = [&](unsigned worker_id) {
    try {
      for (;;) {
        const std::size_t t = cursor.fetch_add(1);
        if (t >= tasks.size()) return;
        auto& rows = results[t];
        QWord word = tasks[t].root;
        rows.push_back(evaluate(word));
        if (!tasks[t].extend) continue;
        // depth-first extension by non-cancelling letters up to max_len
        auto descend = [&](auto&& self) -> void {
          if (word.size() == static_cast<std::size_t>(max_len)) return;
          for (Letter q = 0; q < q_symbol_count; ++q) {
            if (q == q_inverse(word.back())) continue;
            word.push_back(q);
            rows.push_back(evaluate(word));
            self(self);
            word.pop_back();
          }
        };
        descend(descend);
      }
    } catch (...) {
      errors[worker_id] = std::current_exception();
    }
  };

  {
    std::vector<std::thread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, tasks.size()));
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  SweepReport report;
  report.max_length = max_len;
  report.jobs = jobs;
  for (const auto& rows : results)
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  std::sort(report.rows.begin(), report.rows.end(), [](const SweepRow& l, const SweepRow& r) {
    return l.packed != r.packed ? l.packed < r.packed : l.length < r.length;
  });
  report.words_checked = report.rows.size();
  report.all_nontrivial =
      std::all_of(report.rows.begin(), report.rows.end(),
                  [](const SweepRow& row) { return row.min_level > 0; });
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void write_tsv(const SweepReport& report, std::ostream& out) {
  out << "word\tlength\tmin_level\torbit_explored\n";
  for (const auto& row : report.rows)
    out << format_qword(sweep_row_word(row)) << '\t' << static_cast<unsigned>(row.length) << '\t'
        << row.min_level << '\t' << row.orbit_explored << '\n';
  out << "# words=" << report.words_checked << " max_length=" << report.max_length
      << " all_nontrivial=" << (report.all_nontrivial ? "true" : "false")
      << " jobs=" << report.jobs << " elapsed_s=" << report.elapsed_seconds << '\n';
}

std::string to_tsv(const SweepReport& report) {
  std::ostringstream out;
  write_tsv(report, out);
  return out.str();
}

}  // namespace aleshin
