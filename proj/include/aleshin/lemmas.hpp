#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aleshin/freeness.hpp"
#include "aleshin/orbit.hpp"

namespace aleshin {

/**
 * Exhaustive bounded checks of the structural facts the identity decision
 * procedure rests on.  Each check enumerates every word (or pattern) up to
 * its bound, compares two independently computed sides, and reports the
 * first mismatch if any.  The short names are the stable identifiers used in
 * command-line output and reports.
 */
struct LemmaResult {
  std::string name;      // stable identifier, e.g. "free2"
  std::string summary;   // what was compared
  bool passed = false;
  std::uint64_t cases = 0;
  std::string detail;    // first counterexample when failed
};

/// free1: lifting base permutations to signed symbols is a homomorphism, on
/// permutations and letterwise on all words up to max_len.
LemmaResult check_lifted_permutations(int max_len);

/// free2: the three initial actions of the exchange machine are involutions;
/// alpha and beta commute with product the lifted (a b); gamma acts as the
/// lifted (b c).  Checked on all words up to max_len.
LemmaResult check_involution_products(int max_len);

/// free3: both single-letter sections factor as a lifted 3-cycle or
/// transposition after an exchange-machine action, and the two mixed products
/// of sections collapse to gamma's action and to the lifted (a b).  Checked
/// on all words up to max_len.
LemmaResult check_dual_factorizations(int max_len);

/// free4-orbit: section actions and exchange actions generate identical word
/// orbit partitions on every length up to max_len.
LemmaResult check_orbit_partition_match(int max_len);

/// ind1: a product acts trivially on single letters exactly when its chi
/// value is +1.  Checked on all words up to max_len.
LemmaResult check_first_level_sign(int max_len);

/// ind3: the exchange orbit of the smallest irreducible word of a pattern is
/// the whole irreducible class, whose size matches both the closed formula
/// and a direct filtered count.  Checked on all patterns up to max_pattern.
LemmaResult check_class_orbits(int max_pattern);

/// ind4: exchange orbits correspond under word reversal on every length up
/// to max_len.
LemmaResult check_reversed_orbits(int max_len);

/// ind5: for patterns whose last two signs differ, the constructed witness
/// pair is irreducible, follows the pattern, forms a complete z_set of size
/// two, and the designated exchange action swaps it.
LemmaResult check_boundary_pairs(int max_pattern);

/// ind6: for patterns whose first two and last two signs each agree, the
/// constructed 3x3 witness grid is irreducible with complete z_sets of size
/// three along both ends (the far end via reversal), and the designated
/// exchange actions swap the a/b columns.
LemmaResult check_interior_grid(int max_pattern);

/// indextra: the sign-boundary classes are fixed by the matching exchange
/// action, which swaps a freshly appended a/b (or a^-1/b^-1) letter.
/// Checked on all words up to max_len.
LemmaResult check_class_fixing(int max_len);

/// All ten checks with a uniform bound, in report order.
std::vector<LemmaResult> run_lemma_suite(int max_len);

}  // namespace aleshin
