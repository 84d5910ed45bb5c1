#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

// end-to-end tests of the command-line binary; QALG_BIN and QALG_CATALOGS
// are injected by the test harness

namespace {

std::string bin() {
  const char* b = std::getenv("QALG_BIN");
  REQUIRE_MESSAGE(b != nullptr, "QALG_BIN not set");
  return b;
}

std::string catalogs() {
  const char* c = std::getenv("QALG_CATALOGS");
  REQUIRE_MESSAGE(c != nullptr, "QALG_CATALOGS not set");
  return c;
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = bin() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(bool(in), "missing ", path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("spectrum subcommand prints the expected levels") {
  RunResult r =
      run("spectrum --hbar 1 --mu 1 --mu1 1/2 --mu2 1/2 --mu3 1/2 --max-n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("-1/32") != std::string::npos);
  CHECK(r.output.find("-1/50") != std::string::npos);
  CHECK(r.output.find("-1/72") != std::string::npos);
  CHECK(r.output.rfind("n,branch,q,", 0) == 0);
}

TEST_CASE("verify subcommand passes on a zero catalog") {
  RunResult r = run("verify --catalog " + catalogs() + "/general.rel --symbolic");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(r.output.find("\"fail\"") == std::string::npos);
}

TEST_CASE("verify reports are byte-identical across runs") {
  std::string args = "verify --catalog " + catalogs() +
                     "/general.rel --symbolic --json cli_rep_{}.json";
  RunResult a = run("verify --catalog " + catalogs() +
                    "/general.rel --symbolic --json cli_rep_a.json");
  RunResult b = run("verify --catalog " + catalogs() +
                    "/general.rel --symbolic --json cli_rep_b.json --threads 4");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(slurp("cli_rep_a.json") == slurp("cli_rep_b.json"));
  std::remove("cli_rep_a.json");
  std::remove("cli_rep_b.json");
}

TEST_CASE("verify exits 1 when a relation fails and refitting is off") {
  std::ofstream f("cli_bad.rel");
  f << "generators: J1 J2 J3;\nwrong: comm(J1, J2) == 2*i*hbar*J3;\n";
  f.close();
  RunResult r = run("verify --catalog cli_bad.rel --symbolic --no-refit");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("\"status\": \"fail\"") != std::string::npos);
  std::remove("cli_bad.rel");
}

TEST_CASE("missing catalog exits 3 with a diagnostic") {
  RunResult r = run("verify --catalog nosuch.rel");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("nosuch.rel") != std::string::npos);
}

TEST_CASE("malformed catalog exits 2 with the error position") {
  std::ofstream f("cli_parse.rel");
  f << "generators: J1 J2;\nbroken: comm(J1, J2 == 0;\n";
  f.close();
  RunResult r = run("verify --catalog cli_parse.rel");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("line 2") != std::string::npos);
  std::remove("cli_parse.rel");
}

TEST_CASE("unknown flags exit 2") {
  CHECK(run("spectrum --no-such-flag 1").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("verify").exit_code == 2);  // --catalog is required
}

TEST_CASE("fit subcommand recovers constants for a misprinted relation") {
  // the double-commutator relation with a deliberately wrong A2^2 coefficient
  std::ofstream f("cli_fit.rel");
  f << "generators: A1 A2 B2;\n"
       "alg: comm(A2, comm(A2, B2)) == 9*hbar^2*A2^2 + anti(A2, B2)"
       " + A1*A2 + B2 + A1;\n";
  f.close();
  RunResult r = run("fit --catalog cli_fit.rel --label alg");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"status\": \"unique\"") != std::string::npos);
  CHECK(r.output.find("\"A2^2\": \"4*hbar^2\"") != std::string::npos);
  std::remove("cli_fit.rel");
}

TEST_CASE("structure-function subcommand confirms both factorizations") {
  for (std::string pair : {"a2b2", "a1b1"}) {
    RunResult r = run("structure-function --pair " + pair);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"matches_factorization\": true") != std::string::npos);
  }
}

TEST_CASE("build subcommand prints a normal-ordered operator") {
  RunResult r = run("build --name J3");
  CHECK(r.exit_code == 0);
  // i*hbar*(x d/dy - y d/dx)
  CHECK(r.output.find("hbar") != std::string::npos);
  CHECK(run("build --name NotAnOperator").exit_code == 2);
}

TEST_CASE("oracle and compare subcommands agree with the closed form") {
  RunResult r = run("oracle --J 0 --levels 1 --grid 2000");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("-0.4999") != std::string::npos);

  RunResult c = run(
      "compare --hbar 1 --mu 1 --mu1 1/2 --mu2 1/2 --mu3 1/2 --max-n 1 "
      "--grid 3000");
  CHECK(c.exit_code == 0);
  CHECK(c.output.find("\"pass\": true") != std::string::npos);

  RunResult tight = run(
      "compare --hbar 1 --mu 1 --mu1 1/2 --mu2 1/2 --mu3 1/2 --max-n 1 "
      "--grid 3000 --tol 1e-15");
  CHECK(tight.exit_code == 1);
}
