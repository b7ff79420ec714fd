#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aleshin/builtins.hpp"
#include "aleshin/freeness.hpp"
#include "aleshin/lemmas.hpp"
#include "aleshin/moore_format.hpp"
#include "aleshin/orbit.hpp"

namespace {

using namespace aleshin;

Automaton load_automaton(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) {
    const std::string name = source.substr(8);
    if (auto a = builtin_automaton(name)) return *a;
    throw std::runtime_error("unknown builtin automaton '" + name +
                             "' (have: aleshin, b, d, e)");
  }
  std::ifstream in(source);
  if (!in) throw std::runtime_error("cannot open '" + source + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

// Words are written either as comma/space separated symbol names or, when
// every symbol of the set is a single character, simply concatenated.
std::vector<std::uint8_t> parse_symbols(const std::vector<std::string>& names,
                                        const std::string& text, const char* kind) {
  auto lookup = [&names](const std::string& token) -> int {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == token) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::uint8_t> out;
  if (text.empty()) return out;
  if (text.find(',') != std::string::npos || text.find(' ') != std::string::npos) {
    for (const auto& token : split_word_tokens(text)) {
      const int i = lookup(token);
      if (i < 0) throw std::runtime_error(std::string("unknown ") + kind + " '" + token + "'");
      out.push_back(static_cast<std::uint8_t>(i));
    }
    return out;
  }
  if (const int whole = lookup(text); whole >= 0) return {static_cast<std::uint8_t>(whole)};
  for (char ch : text) {
    const int i = lookup(std::string(1, ch));
    if (i < 0)
      throw std::runtime_error(std::string("unknown ") + kind + " '" + std::string(1, ch) +
                               "' in '" + text + "' (use comma-separated names)");
    out.push_back(static_cast<std::uint8_t>(i));
  }
  return out;
}

std::string format_symbols(const std::vector<std::string>& names,
                           const std::vector<std::uint8_t>& word) {
  bool single = true;
  for (const auto& n : names) single = single && n.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i && !single) out += ',';
    out += names.at(word[i]);
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mealy transducer toolkit for the Aleshin automaton and the free group it generates"};
  app.require_subcommand(1);
  int rc = 0;

  // parse
  {
    auto* cmd = app.add_subcommand("parse", "Parse a transition table and reprint it canonically");
    auto source = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    cmd->add_option("file", *source, "input file or builtin:<name>")->required();
    cmd->add_option("-o,--output", *out_path, "write result here instead of stdout");
    cmd->callback([=]() { emit(serialize(load_automaton(*source)), *out_path); });
  }

  // derive
  {
    auto* cmd = app.add_subcommand("derive", "Build the inverse, reverse or dual automaton");
    auto op = std::make_shared<std::string>();
    auto source = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    cmd->add_option("--op", *op, "inverse | reverse | dual")
        ->required()
        ->check(CLI::IsMember({"inverse", "reverse", "dual"}));
    cmd->add_option("file", *source, "input file or builtin:<name>")->required();
    cmd->add_option("-o,--output", *out_path, "write result here instead of stdout");
    cmd->callback([=]() {
      const Automaton a = load_automaton(*source);
      const Automaton derived = *op == "inverse"   ? inverse_automaton(a)
                                : *op == "reverse" ? reverse_automaton(a)
                                                   : dual_automaton(a);
      emit(serialize(derived), *out_path);
    });
  }

  // union
  {
    auto* cmd = app.add_subcommand("union", "Disjoint union of two automata over one alphabet");
    auto first = std::make_shared<std::string>();
    auto second = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    cmd->add_option("first", *first, "input file or builtin:<name>")->required();
    cmd->add_option("second", *second, "input file or builtin:<name>")->required();
    cmd->add_option("-o,--output", *out_path, "write result here instead of stdout");
    cmd->callback([=]() {
      emit(serialize(disjoint_union(load_automaton(*first), load_automaton(*second))), *out_path);
    });
  }

  // act
  {
    auto* cmd = app.add_subcommand("act", "Transduce a word from one state");
    auto source = std::make_shared<std::string>();
    auto state = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    cmd->add_option("file", *source, "input file or builtin:<name>")->required();
    cmd->add_option("--state", *state, "initial state name")->required();
    cmd->add_option("--input", *input, "input word over the alphabet")->required();
    cmd->callback([=]() {
      const Automaton a = load_automaton(*source);
      const auto q = a.state_index(*state);
      if (!q) throw std::runtime_error("unknown state '" + *state + "'");
      const Word w = parse_symbols(a.letter_names(), *input, "letter");
      std::cout << format_symbols(a.letter_names(), transduce(InitialRef(a, *q), w)) << '\n';
    });
  }

  // act-word
  {
    auto* cmd = app.add_subcommand("act-word", "Apply a product of state actions to a word");
    auto source = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    cmd->add_option("file", *source, "input file or builtin:<name>")->required();
    cmd->add_option("--word", *word, "state word, applied left to right")->required();
    cmd->add_option("--input", *input, "input word over the alphabet")->required();
    cmd->callback([=]() {
      const Automaton a = load_automaton(*source);
      const StateWord xi = parse_symbols(a.state_names(), *word, "state");
      const Word w = parse_symbols(a.letter_names(), *input, "letter");
      std::cout << format_symbols(a.letter_names(), act_word(a, xi, w)) << '\n';
    });
  }

  // chi
  {
    auto* cmd = app.add_subcommand("chi", "Sign character of a signed generator word");
    auto word = std::make_shared<std::string>();
    cmd->add_option("--word", *word, "word over a b c a^-1 b^-1 c^-1")->required();
    cmd->callback([=]() { std::cout << (chi(parse_qword(*word)) > 0 ? "+1" : "-1") << '\n'; });
  }

  // is-identity
  {
    auto* cmd = app.add_subcommand("is-identity", "Decide whether a product acts as the identity");
    auto word = std::make_shared<std::string>();
    auto source = std::make_shared<std::string>();
    cmd->add_option("--word", *word, "state word (signed generators by default)")->required();
    cmd->add_option("--automaton", *source,
                    "decide over this invertible automaton instead of the signed Aleshin machine");
    cmd->callback([=]() {
      TrivialityCertificate cert;
      std::string witness;
      if (source->empty()) {
        cert = is_identity(parse_qword(*word));
        witness = format_symbols({"0", "1"}, cert.witness_vertex);
      } else {
        const Automaton a = load_automaton(*source);
        cert = is_identity(a, parse_symbols(a.state_names(), *word, "state"));
        witness = format_symbols(a.letter_names(), cert.witness_vertex);
      }
      if (cert.verdict == Verdict::identity)
        std::cout << "identity orbit_explored=" << cert.orbit_explored << '\n';
      else
        std::cout << "nontrivial min_level=" << cert.min_level << " witness=" << witness
                  << " orbit_explored=" << cert.orbit_explored << '\n';
    });
  }

  // min-level
  {
    auto* cmd = app.add_subcommand("min-level", "First tree level a product moves, if any");
    auto word = std::make_shared<std::string>();
    cmd->add_option("--word", *word, "word over a b c a^-1 b^-1 c^-1")->required();
    cmd->callback([=]() {
      if (const auto level = min_nontrivial_level(parse_qword(*word)))
        std::cout << *level << '\n';
      else
        std::cout << "identity" << '\n';
    });
  }

  // orbit
  {
    auto* cmd = app.add_subcommand("orbit", "Closure of a word under chosen state actions");
    auto source = std::make_shared<std::string>();
    auto states = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    auto group = std::make_shared<bool>(false);
    cmd->add_option("--automaton", *source, "input file or builtin:<name>")->required();
    cmd->add_option("--states", *states, "generator states, comma separated")->required();
    cmd->add_option("--word", *word, "seed word over the alphabet")->required();
    cmd->add_flag("--group", *group, "also close under inverse actions");
    cmd->callback([=]() {
      const Automaton a = load_automaton(*source);
      std::vector<InitialRef> gens;
      for (std::uint8_t q : parse_symbols(a.state_names(), *states, "state"))
        gens.emplace_back(a, q);
      const Word seed = parse_symbols(a.letter_names(), *word, "letter");
      const auto members =
          tree_orbit(gens, seed, *group ? OrbitMode::group : OrbitMode::semigroup);
      for (const Word& m : members) std::cout << format_symbols(a.letter_names(), m) << '\n';
    });
  }

  // verify-freeness
  {
    auto* cmd = app.add_subcommand(
        "verify-freeness", "Check that every short reduced product acts nontrivially");
    auto max_len = std::make_shared<int>(6);
    auto jobs = std::make_shared<unsigned>(0);
    auto report_path = std::make_shared<std::string>();
    cmd->add_option("--max-len", *max_len, "longest reduced word to sweep")
        ->check(CLI::Range(1, max_sweep_length));
    cmd->add_option("--jobs", *jobs, "worker threads (default: all hardware threads)");
    cmd->add_option("--report", *report_path, "write the per-word TSV report here");
    cmd->callback([=, &rc]() {
      const SweepReport report = verify_freeness(*max_len, *jobs);
      if (!report_path->empty()) {
        std::ofstream out(*report_path);
        if (!out) throw std::runtime_error("cannot write '" + *report_path + "'");
        write_tsv(report, out);
      }
      if (report.all_nontrivial) {
        std::cout << report.words_checked << " words, all nontrivial\n";
      } else {
        std::uint64_t trivial = 0;
        for (const auto& row : report.rows)
          if (row.min_level == 0) {
            ++trivial;
            std::cout << "identity action: " << format_qword(sweep_row_word(row)) << '\n';
          }
        std::cout << report.words_checked << " words, " << trivial << " acting as identity\n";
        rc = 1;
      }
      std::cerr << "# max_len=" << report.max_length << " jobs=" << report.jobs
                << " elapsed_s=" << report.elapsed_seconds << '\n';
    });
  }

  // verify-lemmas
  {
    auto* cmd = app.add_subcommand("verify-lemmas",
                                   "Run the bounded structural checks behind the decision procedure");
    auto max_len = std::make_shared<int>(6);
    cmd->add_option("--max-len", *max_len, "bound on enumerated word and pattern lengths")
        ->check(CLI::Range(1, 10));
    cmd->callback([=, &rc]() {
      bool all = true;
      for (const LemmaResult& result : run_lemma_suite(*max_len)) {
        all = all && result.passed;
        std::cout << result.name << ": " << (result.passed ? "pass" : "FAIL") << " ("
                  << result.summary << "; cases=" << result.cases;
        if (!result.passed) std::cout << "; " << result.detail;
        std::cout << ")\n";
      }
      if (!all) rc = 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits cleanly, bad usage does not
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
