#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// Runs the installed binary with the given arguments, capturing stdout.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(ALESHIN_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  RunResult r;
  r.out = out;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

const std::string data_file = std::string(ALESHIN_DATA_DIR) + "/aleshin.aut";

}  // namespace

TEST_CASE("parse reprints the sample table canonically") {
  const RunResult r = run_cli("parse " + data_file);
  CHECK(r.status == 0);
  CHECK(r.out ==
        "alphabet 0 1\n"
        "states a b c\n"
        "trans a 0 c 1\n"
        "trans a 1 b 0\n"
        "trans b 0 b 1\n"
        "trans b 1 c 0\n"
        "trans c 0 a 0\n"
        "trans c 1 a 1\n");
}

TEST_CASE("parse accepts builtin sources") {
  const RunResult r = run_cli("parse builtin:aleshin");
  CHECK(r.status == 0);
  CHECK(r.out == run_cli("parse " + data_file).out);
}

TEST_CASE("act transduces from a named state") {
  CHECK(run_cli("act " + data_file + " --state a --input 110").out == "000\n");
  CHECK(run_cli("act builtin:aleshin --state c --input 01").out == "00\n");
  CHECK(run_cli("act builtin:aleshin --state a --input \"\"").out == "\n");
}

TEST_CASE("act-word applies products left to right") {
  CHECK(run_cli("act-word builtin:b --word a,b --input 00").out == "00\n");
  CHECK(run_cli("act-word builtin:b --word a --input 0").out == "1\n");
}

TEST_CASE("derive builds the dual table") {
  const RunResult r = run_cli("derive --op dual builtin:b");
  CHECK(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "alphabet a b c a^-1 b^-1 c^-1");
  REQUIRE(std::getline(in, line));
  CHECK(line == "states 0 1");
}

TEST_CASE("derive round-trips inverse through the dual") {
  const std::string dual_twice = run_cli("derive --op dual builtin:d").out;
  CHECK(dual_twice == run_cli("parse builtin:b").out);
}

TEST_CASE("union refuses to merge clashing state names") {
  const RunResult r = run_cli("union builtin:aleshin builtin:aleshin", true);
  CHECK(r.status == 2);
  CHECK(r.out.find("state_clash") != std::string::npos);
}

TEST_CASE("chi prints the sign") {
  CHECK(run_cli("chi --word a,b^-1").out == "+1\n");
  CHECK(run_cli("chi --word a").out == "-1\n");
  CHECK(run_cli("chi --word c").out == "+1\n");
}

TEST_CASE("is-identity reports certificates") {
  const RunResult trivial = run_cli("is-identity --word a,a^-1");
  CHECK(trivial.status == 0);
  CHECK(trivial.out.rfind("identity orbit_explored=", 0) == 0);

  const RunResult moved = run_cli("is-identity --word c");
  CHECK(moved.status == 0);
  CHECK(moved.out == "nontrivial min_level=2 witness=0 orbit_explored=2\n");

  const RunResult generic = run_cli("is-identity --automaton builtin:b --word c");
  CHECK(generic.out == moved.out);
}

TEST_CASE("min-level prints a number or the identity verdict") {
  CHECK(run_cli("min-level --word c").out == "2\n");
  CHECK(run_cli("min-level --word c,c").out == "3\n");
  CHECK(run_cli("min-level --word a,a^-1").out == "identity\n");
}

TEST_CASE("orbit lists the closure in sorted order") {
  const RunResult r = run_cli("orbit --automaton builtin:b --states a --word 0");
  CHECK(r.status == 0);
  CHECK(r.out == "0\n1\n");

  const RunResult grp =
      run_cli("orbit --automaton builtin:e --states alpha,beta,gamma --word a,b^-1 --group");
  CHECK(grp.status == 0);
  std::istringstream in(grp.out);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 6);
}

TEST_CASE("verify-freeness sweeps and writes a report") {
  const std::string report = "cli_freeness_report.tsv";
  std::remove(report.c_str());
  const RunResult r = run_cli("verify-freeness --max-len 3 --jobs 2 --report " + report);
  CHECK(r.status == 0);
  CHECK(r.out == "186 words, all nontrivial\n");

  std::ifstream in(report);
  REQUIRE(in.good());
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "word\tlength\tmin_level\torbit_explored");
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("#", 0) != 0) ++rows;
  CHECK(rows == 186);
  in.close();
  std::remove(report.c_str());
}

TEST_CASE("verify-lemmas reports every check by name") {
  const RunResult r = run_cli("verify-lemmas --max-len 3");
  CHECK(r.status == 0);
  for (const char* name : {"free1", "free2", "free3", "free4-orbit", "ind1", "ind3", "ind4",
                           "ind5", "ind6", "indextra"}) {
    CHECK(r.out.find(std::string(name) + ": pass") != std::string::npos);
  }
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("act builtin:aleshin", true).status == 2);
  CHECK(run_cli("no-such-command", true).status == 2);
  CHECK(run_cli("act builtin:nope --state a --input 0", true).status == 2);
  CHECK(run_cli("is-identity --word d", true).status == 2);
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("verify-freeness --max-len 99", true).status == 2);
}
