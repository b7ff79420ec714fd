#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aleshin/automaton.hpp"

namespace aleshin {

/**
 * Plain-text exchange format for transition tables, one item per line:
 *
 *     # optional comment
 *     alphabet 0 1
 *     states a b c
 *     trans a 0 c 1          # trans <state> <input> <next> <output>
 *
 * Symbols are arbitrary whitespace-free tokens.  Both declaration lines must
 * appear exactly once, before any transition; every (state, input) pair needs
 * exactly one transition.  At most 64 states and 64 letters are accepted.
 */
struct MooreDocument {
  std::vector<std::string> comments;  // comment text, '#' and padding stripped
  std::vector<std::string> alphabet;
  std::vector<std::string> states;
  std::vector<RawTransition> transitions;
};

/// Splits text into declarations, transitions and comments.  Rejects malformed
/// lines (syntax_error, message carries the 1-based line number), symbols used
/// before declaration (undeclared_symbol), repeated (state, input) pairs
/// (duplicate_transition) and incomplete tables (missing_transition).
MooreDocument parse_document(std::string_view text);

/// parse_document followed by table construction.
Automaton parse(std::string_view text);

/// Canonical form: no comments, declarations in alphabet/states order, then
/// transitions sorted by (state index, input index), single spaces, trailing
/// newline.  parse(serialize(a)) reproduces a exactly; any two documents
/// describing the same table serialize identically.  Comment lines are
/// emitted up front only when given explicitly.
std::string serialize(const Automaton& a, const std::vector<std::string>& comments = {});

}  // namespace aleshin
