#pragma once

#include <stdexcept>
#include <string>

namespace aleshin {

/// Failure categories raised by table validation, the Moore-diagram text
/// format, and derived-automaton construction.
enum class Errc {
  // table validation
  missing_entry,
  duplicate_entry,
  unknown_symbol,
  empty_alphabet,
  too_many_symbols,
  // derived automata
  not_invertible,
  not_reversible,
  alphabet_mismatch,
  state_clash,
  // word application
  letter_out_of_range,
  index_out_of_range,
  // Moore text format
  syntax_error,
  undeclared_symbol,
  duplicate_transition,
  missing_transition,
  // signed-word apparatus
  reducible_word,
  bad_pattern,
  empty_pattern,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace aleshin
