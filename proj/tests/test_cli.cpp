#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + HYPGAMMA_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, n);
  const int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("table csv has the pinned header and 10 rows") {
  const auto res = run_cli("table --digits 12 --format csv");
  CHECK(res.code == 0);
  std::istringstream lines(res.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "r,gamma_h,gamma_h_bar");
  int rows = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 10);
}

TEST_CASE("table json carries the schema fields") {
  const auto res = run_cli("table --digits 12 --format json");
  CHECK(res.code == 0);
  const auto rows = nlohmann::json::parse(res.out);
  REQUIRE(rows.size() == 10);
  for (const auto& row : rows) {
    CHECK(row.contains("r"));
    CHECK(row.contains("gamma_h"));
    CHECK(row.contains("gamma_h_bar"));
    CHECK(row.at("digits") == 12);
    CHECK(row.at("method") == "closed");
  }
  CHECK(rows[0].at("gamma_h") == rows[0].at("gamma_h_bar"));
  const std::string g2 = rows[2].at("gamma_h");
  CHECK(g2.substr(0, 10) == "0.55519605");
}

TEST_CASE("compute closed value at 12 digits") {
  const auto res = run_cli("compute --r 2 --digits 12 --method closed");
  CHECK(res.code == 0);
  CHECK(res.out.find("0.555196055353") != std::string::npos);
}

TEST_CASE("compute both reports containment") {
  const auto res = run_cli("compute --r 0 --method both --n-max 400 --format json");
  CHECK(res.code == 0);
  const auto rows = nlohmann::json::parse(res.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].at("contained") == true);
  CHECK(std::string(rows[0].at("value")).substr(0, 8) == "0.577215");
  CHECK(rows[0].contains("lower"));
  CHECK(rows[0].contains("upper"));
}

TEST_CASE("non-integer r gets a squeeze-only result") {
  const auto res = run_cli("compute --r 2.5 --n-max 300 --format json");
  CHECK(res.code == 0);
  const auto rows = nlohmann::json::parse(res.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].at("method") == "squeeze");
  CHECK(rows[0].contains("lower"));
  CHECK(rows[0].contains("upper"));
  CHECK(!rows[0].contains("contained"));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("compute --r 2.5 --method closed").code == 2);
  CHECK(run_cli("compute --r 2.5 --method both").code == 2);
  CHECK(run_cli("compute --r 1 --digits 200").code == 2);
  CHECK(run_cli("compute").code == 2);          // missing --r
  CHECK(run_cli("--bogus").code == 2);          // unknown option
  CHECK(run_cli("").code == 2);                 // missing subcommand
  CHECK(run_cli("compute --r -3").code == 2);   // negative order
  CHECK(run_cli("table --format yaml").code == 2);
}

TEST_CASE("unreachable tolerance exits with code 3") {
  const auto res = run_cli("compute --r 3 --quad-tol 1e-90 --n-max 50 --method squeeze");
  CHECK(res.code == 3);
}

TEST_CASE("verify suites pass and report one line per claim") {
  const auto res = run_cli("verify --suite soru --samples 300");
  CHECK(res.code == 0);
  CHECK(res.out.find("PASS  soru") != std::string::npos);

  const auto mono = run_cli("verify --suite monotone-bar");
  CHECK(mono.code == 0);
  CHECK(mono.out.find("PASS  monotone-bar") != std::string::npos);

  const auto lemma = run_cli("verify --suite lemma-top --r 3 --n 100 --digits 40");
  CHECK(lemma.code == 0);
  CHECK(lemma.out.find("PASS  lemma-top") != std::string::npos);

  const auto unknown = run_cli("verify --suite no-such-suite");
  CHECK(unknown.code == 2);
}

TEST_CASE("convergence trace shrinks and encloses the limit") {
  const auto res =
      run_cli("convergence --flavor power --r 0 --n-list 10,100,1000 --digits 12 --format json");
  CHECK(res.code == 0);
  const auto rows = nlohmann::json::parse(res.out);
  REQUIRE(rows.size() == 3);
  double prev_width = 1e9;
  for (const auto& row : rows) {
    const double width = std::stod(std::string(row.at("width")));
    CHECK(width < prev_width);
    prev_width = width;
  }
  // r = 0 width is 1/n
  CHECK(std::stod(std::string(rows[2].at("width"))) == doctest::Approx(1e-3).epsilon(0.01));
  const double lo = std::stod(std::string(rows[2].at("refined_low")));
  const double hi = std::stod(std::string(rows[2].at("refined_high")));
  CHECK(lo < 0.5772156649);
  CHECK(0.5772156649 < hi);
}

TEST_CASE("identical invocations produce byte-identical output files") {
  const std::string f1 = "/tmp/hypgamma_idem_1.json";
  const std::string f2 = "/tmp/hypgamma_idem_2.json";
  CHECK(run_cli("table --digits 15 --format json --output " + f1).code == 0);
  CHECK(run_cli("table --digits 15 --format json --output " + f2).code == 0);
  const std::string a = slurp(f1), b = slurp(f2);
  CHECK(!a.empty());
  CHECK(a == b);
  std::remove(f1.c_str());
  std::remove(f2.c_str());
}

TEST_CASE("HYPGAMMA_DIGITS overrides the default precision") {
  const auto res = run_cli("table --format json", "HYPGAMMA_DIGITS=20");
  CHECK(res.code == 0);
  const auto rows = nlohmann::json::parse(res.out);
  CHECK(rows[0].at("digits") == 20);
}
