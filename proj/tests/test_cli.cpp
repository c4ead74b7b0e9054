#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
  const char* tool = std::getenv("CWTOOL");
  REQUIRE(tool != nullptr);
  std::string cmd = std::string(tool) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p))
    r.output.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("compute emits the expected table rows") {
  RunResult r = run("compute \"Bmu(5)\" --field R --max-deg 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "Bmu(5) over R"));
  CHECK(contains(r.output, "free_rank=2"));
  CHECK(contains(r.output, "invariants=[5]"));
}

TEST_CASE("compute json carries the frozen schema fields") {
  RunResult r = run("compute \"P(2)\" --field C --max-deg 2 --json");
  CHECK(r.exit_code == 0);
  for (const char* key :
       {"\"space\": \"P(2)\"", "\"field\": \"C\"", "\"bound\": 2",
        "\"bidegrees\"", "\"degree\"", "\"twist\"", "\"invariant_factors\"",
        "\"free_rank\"", "\"rho_image_index\"", "\"generators\"",
        "\"checks\""})
    CHECK_MESSAGE(contains(r.output, key), key);
}

TEST_CASE("compute output is deterministic") {
  RunResult a = run("compute \"Bmu(4)\" --field R --max-deg 3 --json");
  RunResult b = run("compute \"Bmu(4)\" --field R --max-deg 3 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("parse errors are classified and exit nonzero") {
  RunResult syntax = run("compute \"Q(2)\"");
  CHECK(syntax.exit_code == 2);
  CHECK(contains(syntax.output, "SyntaxError"));

  RunResult arity = run("compute \"BGm x BGm x BGm\"");
  CHECK(arity.exit_code == 2);
  CHECK(contains(arity.output, "ArityError"));

  RunResult param = run("compute \"P(0)\"");
  CHECK(param.exit_code == 2);
  CHECK(contains(param.output, "ParamError"));
}

TEST_CASE("compare verifies the closed form and reports success") {
  RunResult r = run("compare \"Bmu(3)\" --field F3 --max-deg 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "compare: all bidegrees agree"));
}

TEST_CASE("kunneth reports the verdict for a product") {
  RunResult r = run("kunneth \"BGm x Bmu(3)\" --field R --max-deg 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, ": iso"));

  RunResult s = run("kunneth \"Bmu(2) x Bmu(4)\" --field R --max-deg 2");
  CHECK(s.exit_code == 0);
  CHECK(contains(s.output, ": neither"));
  CHECK(contains(s.output, "surjective-not-injective"));
}

TEST_CASE("oracle compares with the real-point model") {
  RunResult r = run("oracle \"P(2)\" --field R --max-deg 3 --levels 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "oracle: as expected"));

  RunResult s = run("oracle \"Bmu(4)\" --field R --max-deg 4 --levels 0");
  CHECK(s.exit_code == 0);
  CHECK(contains(s.output, "mismatch"));
  CHECK(contains(s.output, "oracle: as expected"));
}

TEST_CASE("golden file regression suite") {
  RunResult r = run("regress");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "regress: all golden files match"));
  CHECK(!contains(r.output, "DIFFERS"));
}
