// End-to-end tests of the command-line tool: frozen wire outputs, payload
// sources (inline, stdin, file), formats, and exit codes.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

const char* cli_path() {
  if (const char* p = std::getenv("TROPCAT_CLI")) return p;
  return "./build/tools/tropcat";
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs a full shell command and captures stdout; stderr is left alone so
// failures show up in the test log.
RunResult run_command(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Runs the CLI with the given arguments (already shell-quoted).
RunResult run(const std::string& args) {
  return run_command(std::string(cli_path()) + " " + args);
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("lift prints the frozen wire form") {
  RunResult r = run(R"(lift '{"src":3,"dst":3,"table":[2,1,0]}')");
  CHECK(r.exit_code == 0);
  CHECK(trimmed(r.out) == R"({"src":3,"dst":3,"deg":2,"eqmod":1,"vals":[2,4,6]})");
}

TEST_CASE("cdesc counts cyclic descents") {
  RunResult r = run(R"(cdesc '{"src":3,"dst":3,"table":[2,1,0]}')");
  CHECK(r.exit_code == 0);
  CHECK(trimmed(r.out) == R"({"cdesc":2})");
}

TEST_CASE("compose applies the inner morphism first") {
  RunResult r = run(
      R"(compose '{"src":3,"dst":2,"deg":1,"vals":[0,1,1]}' )"
      R"('{"src":2,"dst":3,"deg":1,"vals":[0,2]}')");
  CHECK(r.exit_code == 0);
  CHECK(trimmed(r.out) == R"({"src":2,"dst":2,"deg":1,"eqmod":1,"vals":[0,1]})");
}

TEST_CASE("normalize canonicalizes the window") {
  RunResult r = run(R"(normalize '{"src":2,"dst":2,"deg":1,"vals":[4,5]}')");
  CHECK(r.exit_code == 0);
  CHECK(trimmed(r.out) == R"({"src":2,"dst":2,"deg":1,"eqmod":1,"vals":[0,1]})");
}

TEST_CASE("eval reports the value at a point") {
  RunResult r = run(R"(eval '{"src":3,"dst":3,"deg":1,"vals":[0,1,2]}' -- -1)");
  CHECK(r.exit_code == 0);
  CHECK(trimmed(r.out) == R"({"x":-1,"value":-1})");
  RunResult s = run(R"(eval '{"src":2,"dst":3,"deg":1,"vals":[0,2]}' 2)");
  CHECK(s.exit_code == 0);
  CHECK(trimmed(s.out) == R"({"x":2,"value":3})");
}

TEST_CASE("transpose and star invert each other") {
  RunResult r = run(R"(transpose '{"src":2,"dst":2,"deg":1,"vals":[0,0]}')");
  CHECK(r.exit_code == 0);
  CHECK(trimmed(r.out) == R"({"src":2,"dst":2,"deg":1,"eqmod":1,"vals":[0,2]})");
  RunResult s = run(R"(star '{"src":2,"dst":2,"deg":1,"vals":[0,2]}')");
  CHECK(s.exit_code == 0);
  CHECK(trimmed(s.out) == R"({"src":2,"dst":2,"deg":1,"eqmod":1,"vals":[0,0]})");
}

TEST_CASE("psi builds the period-multiplying morphism") {
  RunResult r = run("psi 2 2");
  CHECK(r.exit_code == 0);
  CHECK(trimmed(r.out) == R"({"src":4,"dst":2,"deg":2,"eqmod":1,"vals":[0,1,2,3]})");
}

TEST_CASE("factor splits off the power part") {
  RunResult r = run(R"(factor '{"src":2,"dst":2,"deg":2,"vals":[1,3]}')");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["power"] == nlohmann::json::parse(
                          R"({"src":4,"dst":2,"deg":2,"eqmod":1,"vals":[0,1,2,3]})"));
  CHECK(j["carrier"] == nlohmann::json::parse(
                            R"({"src":2,"dst":4,"deg":1,"eqmod":1,"vals":[1,3]})"));
}

TEST_CASE("project reduces to the set map") {
  RunResult r =
      run(R"(project '{"src":3,"dst":3,"deg":2,"vals":[2,4,6]}')");
  CHECK(r.exit_code == 0);
  CHECK(trimmed(r.out) == R"({"src":3,"dst":3,"table":[2,1,0]})");
}

TEST_CASE("submodule embeds residue subsets") {
  RunResult r = run("submodule 3 '[0,2]'");
  CHECK(r.exit_code == 0);
  CHECK(trimmed(r.out) == R"({"src":2,"dst":3,"deg":1,"eqmod":1,"vals":[0,2]})");
}

TEST_CASE("generators lists faces, degeneracies, and the rotation") {
  RunResult r = run("generators 3");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["period"] == 3);
  CHECK(j["faces"].size() == 4);
  CHECK(j["degeneracies"].size() == 3);
  CHECK(j["rotation"]["vals"] == nlohmann::json::parse("[2,3,4]"));
  CHECK(j["faces"][1]["vals"] == nlohmann::json::parse("[0,2,3]"));
}

TEST_CASE("circle prints the segment structure") {
  RunResult r = run("circle 3");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["period"] == 3);
  CHECK(j["segments"].size() == 12);
}

TEST_CASE("hyper-add blurs opposite elements") {
  RunResult r = run(R"(hyper-add 2 '{"mag":2,"sign":1}' '{"mag":2,"sign":-1}')");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 5);
  CHECK(j[0] == nlohmann::json::parse(R"({"mag":0,"sign":1})"));
}

TEST_CASE("hom-count evaluates the closed formula") {
  RunResult r = run("hom-count 1 2 2");
  CHECK(r.exit_code == 0);
  CHECK(trimmed(r.out) == R"({"count":4})");
}

TEST_CASE("payload from stdin and from a file") {
  RunResult r = run_command(std::string("echo '") +
                            R"({"src":1,"dst":1,"deg":1,"vals":[5]}' | )" +
                            cli_path() + " normalize -");
  CHECK(r.exit_code == 0);
  CHECK(trimmed(r.out) == R"({"src":1,"dst":1,"deg":1,"eqmod":1,"vals":[0]})");
  const char* path = "/tmp/tropcat_cli_payload.json";
  {
    std::ofstream f(path);
    f << R"({"src":2,"dst":2,"deg":1,"vals":[0,1]})";
  }
  RunResult s = run(std::string("normalize ") + path);
  CHECK(s.exit_code == 0);
  CHECK(trimmed(s.out) == R"({"src":2,"dst":2,"deg":1,"eqmod":1,"vals":[0,1]})");
  std::remove(path);
}

TEST_CASE("text format renders a readable line") {
  RunResult r = run(
      R"(normalize '{"src":3,"dst":3,"deg":1,"vals":[0,1,2]}' --format text)");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[2] -> [2]") != std::string::npos);
  CHECK(r.out.find("deg 1") != std::string::npos);
}

TEST_CASE("verify runs a suite and reports") {
  RunResult r = run("verify descent --max-period 3 --max-deg 2");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["passed"] == true);
  RunResult t = run("verify descent --max-period 3 --format text");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("PASS") != std::string::npos);
}

TEST_CASE("exit codes distinguish usage from domain failures") {
  // Malformed payload: parse failure.
  CHECK(run(R"(normalize '{"src":]' 2>/dev/null)").exit_code == 1);
  // Unreadable file: also a usage-level failure.
  CHECK(run("normalize /no/such/payload.json 2>/dev/null").exit_code == 1);
  // Unknown subcommand.
  CHECK(run("frobnicate 2>/dev/null").exit_code == 1);
  // Structurally valid JSON but an unsupported operation: domain failure.
  CHECK(run(R"(transpose '{"src":1,"dst":1,"deg":2,"vals":[0]}' 2>/dev/null)")
            .exit_code == 2);
  // Invariant-violating data.
  CHECK(run(R"(normalize '{"src":2,"dst":2,"deg":1,"vals":[1,0]}' 2>/dev/null)")
            .exit_code == 2);
}
