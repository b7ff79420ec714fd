#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aleshin/automaton.hpp"
#include "aleshin/words.hpp"

namespace aleshin {

enum class Verdict { identity, nontrivial };

/**
 * Outcome of the identity decision for one state word.  The procedure walks
 * the closure of the word under its sections at single letters, level by
 * level: the action is the identity exactly when every word in that closure
 * acts trivially on the first tree level.  For the signed Aleshin machine the
 * first-level test is chi == +1.
 *
 * When nontrivial, witness_vertex is a shortest tree vertex w whose section
 * fails the first-level test, min_level == |w| + 1 is the first tree level
 * the action moves, and the certificate can be replayed through
 * section_word() and chi()/first_level_action() independently.
 */
struct TrivialityCertificate {
  QWord word;
  Verdict verdict = Verdict::identity;
  Word witness_vertex;              // meaningful iff nontrivial
  int min_level = 0;                // meaningful iff nontrivial
  std::uint64_t orbit_explored = 0; // distinct section words visited
};

/// Decides whether the given signed word acts as the identity, i.e. whether
/// the corresponding product of Aleshin actions and their inverses is
/// trivial.
TrivialityCertificate is_identity(const QWord& xi);

/// Same decision for a state word over an arbitrary invertible automaton,
/// using the first-level permutation as the per-section test.
TrivialityCertificate is_identity(const Automaton& a, const StateWord& xi);

/// min_level of the certificate, or nullopt when the action is the identity.
std::optional<int> min_nontrivial_level(const QWord& xi);

/// The permutation the product action induces on single letters.  Requires an
/// invertible automaton.
Perm first_level_action(const Automaton& a, const StateWord& xi);

/// Longest word verify_freeness() accepts; keeps a word packable into one
/// 64-bit key (3 bits per signed symbol).
inline constexpr int max_sweep_length = 21;

/// One sweep result.  The word is packed 3 bits per letter, first letter in
/// the highest field, so (packed, length) sorts rows in lexicographic index
/// order.  min_level == 0 would flag an identity action (none exists when the
/// generated group is free).
struct SweepRow {
  std::uint64_t packed = 0;
  std::uint64_t orbit_explored = 0;
  std::uint32_t min_level = 0;
  std::uint8_t length = 0;
};

QWord sweep_row_word(const SweepRow& row);

struct SweepReport {
  int max_length = 0;
  unsigned jobs = 1;
  std::uint64_t words_checked = 0;
  bool all_nontrivial = false;
  double elapsed_seconds = 0.0;
  std::vector<SweepRow> rows;  // sorted lexicographically by word
};

/// Runs the identity decision over every freely irreducible nonempty signed
/// word of length <= max_len (there are 6 * 5^(l-1) per length l).  A free
/// group means every verdict is nontrivial.  jobs == 0 uses one worker per
/// hardware thread; results are identical for any worker count.
SweepReport verify_freeness(int max_len, unsigned jobs = 0);

/// Tab-separated report: header word/length/min_level/orbit_explored, one row
/// per word in lexicographic order, and a trailing '#' summary line with
/// counts and timing.
void write_tsv(const SweepReport& report, std::ostream& out);
std::string to_tsv(const SweepReport& report);

}  // namespace aleshin
