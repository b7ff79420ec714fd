#include "aleshin/moore_format.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace aleshin {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

std::string at_line(std::size_t n) { return " (line " + std::to_string(n) + ")"; }

}  // namespace

MooreDocument parse_document(std::string_view text) {
  MooreDocument doc;
  std::unordered_map<std::string, std::size_t> letters;
  std::unordered_set<std::string> states;
  std::unordered_set<std::string> pairs_seen;  // "state\x1finput"
  bool saw_transition = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      std::string_view c = line.substr(hash + 1);
      while (!c.empty() && (c.front() == ' ' || c.front() == '\t')) c.remove_prefix(1);
      doc.comments.emplace_back(c);
      line = line.substr(0, hash);
    }
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "alphabet" || tokens[0] == "states") {
      if (saw_transition)
        fail(Errc::syntax_error, "declaration after transitions" + at_line(line_no));
      auto& target = tokens[0] == "alphabet" ? doc.alphabet : doc.states;
      if (!target.empty())
        fail(Errc::syntax_error, "repeated '" + tokens[0] + "' declaration" + at_line(line_no));
      if (tokens.size() < 2)
        fail(Errc::syntax_error, "'" + tokens[0] + "' declares no symbols" + at_line(line_no));
      target.assign(tokens.begin() + 1, tokens.end());
      if (target.size() > max_symbols)
        fail(Errc::too_many_symbols, "more than " + std::to_string(max_symbols) + " " +
                                         tokens[0] + " symbols" + at_line(line_no));
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const bool fresh = tokens[0] == "alphabet"
                               ? letters.emplace(tokens[i], i - 1).second
                               : states.insert(tokens[i]).second;
        if (!fresh)
          fail(Errc::syntax_error, "symbol '" + tokens[i] + "' declared twice" + at_line(line_no));
      }
      continue;
    }

    if (tokens[0] == "trans") {
      if (tokens.size() != 5)
        fail(Errc::syntax_error, "'trans' takes <state> <input> <next> <output>" + at_line(line_no));
      if (doc.alphabet.empty() || doc.states.empty())
        fail(Errc::syntax_error, "transition before declarations" + at_line(line_no));
      saw_transition = true;
      for (std::size_t i : {1u, 3u})
        if (!states.count(tokens[i]))
          fail(Errc::undeclared_symbol, "state '" + tokens[i] + "'" + at_line(line_no));
      for (std::size_t i : {2u, 4u})
        if (!letters.count(tokens[i]))
          fail(Errc::undeclared_symbol, "letter '" + tokens[i] + "'" + at_line(line_no));
      if (!pairs_seen.insert(tokens[1] + '\x1f' + tokens[2]).second)
        fail(Errc::duplicate_transition,
             "(" + tokens[1] + ", " + tokens[2] + ") defined twice" + at_line(line_no));
      doc.transitions.push_back({tokens[1], tokens[2], tokens[3], tokens[4]});
      continue;
    }

    fail(Errc::syntax_error, "unrecognized directive '" + tokens[0] + "'" + at_line(line_no));
  }

  if (doc.alphabet.empty()) fail(Errc::syntax_error, "missing 'alphabet' declaration");
  if (doc.states.empty()) fail(Errc::syntax_error, "missing 'states' declaration");
  for (const auto& q : doc.states)
    for (const auto& x : doc.alphabet)
      if (!pairs_seen.count(q + '\x1f' + x))
        fail(Errc::missing_transition, "no transition for (" + q + ", " + x + ")");
  return doc;
}

Automaton parse(std::string_view text) {
  MooreDocument doc = parse_document(text);
  return validate(std::move(doc.states), std::move(doc.alphabet), doc.transitions);
}

std::string serialize(const Automaton& a, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "alphabet";
  for (const auto& x : a.letter_names()) out << ' ' << x;
  out << "\nstates";
  for (const auto& q : a.state_names()) out << ' ' << q;
  out << '\n';
  for (State q = 0; q < a.state_count(); ++q)
    for (Letter x = 0; x < a.alphabet_size(); ++x)
      out << "trans " << a.state_name(q) << ' ' << a.letter_name(x) << ' '
          << a.state_name(a.next(q, x)) << ' ' << a.letter_name(a.out(q, x)) << '\n';
  return out.str();
}

}  // namespace aleshin
