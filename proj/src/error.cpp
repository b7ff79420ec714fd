#include "aleshin/error.hpp"

namespace aleshin {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::missing_entry: return "missing_entry";
    case Errc::duplicate_entry: return "duplicate_entry";
    case Errc::unknown_symbol: return "unknown_symbol";
    case Errc::empty_alphabet: return "empty_alphabet";
    case Errc::too_many_symbols: return "too_many_symbols";
    case Errc::not_invertible: return "not_invertible";
    case Errc::not_reversible: return "not_reversible";
    case Errc::alphabet_mismatch: return "alphabet_mismatch";
    case Errc::state_clash: return "state_clash";
    case Errc::letter_out_of_range: return "letter_out_of_range";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::syntax_error: return "syntax_error";
    case Errc::undeclared_symbol: return "undeclared_symbol";
    case Errc::duplicate_transition: return "duplicate_transition";
    case Errc::missing_transition: return "missing_transition";
    case Errc::reducible_word: return "reducible_word";
    case Errc::bad_pattern: return "bad_pattern";
    case Errc::empty_pattern: return "empty_pattern";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace aleshin
