#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

// Drives the installed binary end to end: exit codes, output formats and
// determinism across worker counts.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

std::string tool_path() {
  const char* env = std::getenv("APERYTOOL");
  REQUIRE_MESSAGE(env != nullptr, "APERYTOOL must point at the CLI binary");
  return env;
}

RunResult run(const std::string& args) {
  const std::string cmd = tool_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("apery subcommand prints the sequence") {
  auto r = run("apery --max 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0 1\n1 5\n2 73\n3 1445\n");

  auto single = run("apery --max 0");
  CHECK(single.exit_code == 0);
  CHECK(single.output == "0 1\n");

  CHECK(run("apery --max -1").exit_code == 2);
  CHECK(run("apery").exit_code == 2);
}

TEST_CASE("apery JSON output") {
  auto r = run("apery --max 4 --format json");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.output);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 5);
  CHECK(parsed.at(4) == "33001");
}

TEST_CASE("cm subcommand") {
  auto r = run("cm --m 1,3,5,7 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "m,numerator,denominator\n"
        "1,1,1\n"
        "3,-1,3\n"
        "5,-13,27\n"
        "7,5,9\n");

  auto nine = run("cm --m 9 --format text");
  CHECK(nine.exit_code == 0);
  CHECK(nine.output == "c_9 = 2273/81\n");

  CHECK(run("cm --m 2").exit_code == 2);
  CHECK(run("cm --m 0").exit_code == 2);
}

TEST_CASE("verify subcommand exit codes") {
  CHECK(run("verify thm1 --primes 5..40 --m 1,3,5,7").exit_code == 0);
  CHECK(run("verify thm2-int --n 1..40").exit_code == 0);
  CHECK(run("verify bogus").exit_code == 2);
  CHECK(run("verify thm1 --primes 9..5").exit_code == 2);
  CHECK(run("verify thm1 --primes abc").exit_code == 2);
  CHECK(run("verify thm1 --m 2").exit_code == 2);
  CHECK(run("verify thm1 --jobs 0").exit_code == 2);
}

TEST_CASE("lemma21 accepts both parities of m") {
  CHECK(run("verify lemma21 --primes 5..20 --m 3,4,5").exit_code == 0);
  CHECK(run("verify lemma21 --primes 5..20").exit_code == 0);
}

TEST_CASE("verify JSON output parses and round-trips") {
  auto r = run("verify beukers --primes 3..30 --format json");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.output);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 9);  // odd primes 3..29
  for (const auto& entry : parsed) {
    CHECK(entry.at("check") == "beukers");
    CHECK(entry.at("pass") == true);
  }
  CHECK(parsed.dump(2) + "\n" == r.output);
}

TEST_CASE("output is byte-identical for any worker count") {
  const std::string base = "verify all --primes 5..30 --n 1..15 --m 1,3 --format json";
  auto serial = run(base + " --jobs 1");
  auto parallel = run(base + " --jobs 4");
  CHECK(serial.exit_code == 0);
  CHECK(parallel.exit_code == 0);
  CHECK(!serial.output.empty());
  CHECK(serial.output == parallel.output);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "/tmp/apery_cli_test_out.csv";
  std::remove(path.c_str());
  auto r = run("verify ap-mod-p --primes 3..20 --format csv --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  FILE* f = fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf;
  std::string content(buf.data(), fread(buf.data(), 1, buf.size(), f));
  fclose(f);
  std::remove(path.c_str());
  CHECK(content.rfind("check,params,modulus,lhs,rhs,diff_valuation,pass\n", 0) == 0);
  CHECK(content.find("ap-mod-p,p=3,3,2,2,") != std::string::npos);
}
