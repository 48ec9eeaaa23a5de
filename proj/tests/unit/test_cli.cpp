#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ppart_cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ppart::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

fs::path scratch_dir(const std::string& name) {
  auto d = fs::temp_directory_path() / ("ppart_cli_test_" + name);
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("compute JSON") {
  auto r = run({"compute", "--family", "A", "--rank", "2", "--n", "2", "--lambda", "2,2", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["family"] == "A");
  CHECK(j["rank"] == 2);
  CHECK(j["n"] == 2);
  CHECK(j["lambda"] == nlohmann::json::array({2, 2}));
  CHECK(j["terms"].size() == 7);
  CHECK(j["terms"][0]["wt"] == nlohmann::json::array({2, 2}));

  r = run({"compute", "--family", "D", "--rank", "4", "--character", "--lambda", "1,0,0,0"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["terms"].size() == 8);
  CHECK(nlohmann::json::parse(r.out)["n"] == 0);

  r = run({"compute", "--family", "C", "--rank", "2", "--lambda", "1,1", "--text"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("weight", 0) == 0);
}

TEST_CASE("compute rejects bad input with exit 2") {
  auto r = run({"compute", "--family", "B", "--rank", "2", "--n", "1", "--lambda", "0,0"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("strongly dominant") != std::string::npos);
  CHECK(run({"compute", "--family", "B", "--rank", "2", "--n", "1", "--lambda", "0,0", "--allow-dominant"}).code == 0);
  CHECK(run({"compute", "--family", "D", "--rank", "2", "--lambda", "1,1"}).code == 2);
  CHECK(run({"compute", "--family", "E", "--rank", "6", "--lambda", "1,1,1,1,1,1"}).code == 2);
  CHECK(run({"compute", "--family", "A", "--rank", "2", "--lambda", "1,1,1"}).code == 2);
  CHECK(run({"compute", "--family", "A", "--rank", "2", "--lambda", "1,-1"}).code == 2);
  CHECK(run({"compute", "--family", "A", "--rank", "2", "--lambda", "1,1", "--n", "0"}).code == 2);
  CHECK(run({"compute", "--family", "A", "--rank", "2"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("threads do not change output") {
  const std::vector<std::string> base{"compute", "--family", "B", "--rank", "3", "--n", "2", "--lambda", "1,1,1"};
  auto a = base, b = base;
  a.insert(a.end(), {"--threads", "1"});
  b.insert(b.end(), {"--threads", "4"});
  const auto ra = run(a), rb = run(b);
  REQUIRE(ra.code == 0);
  CHECK(ra.out == rb.out);
  setenv("PPART_THREADS", "3", 1);
  CHECK(run(base).out == ra.out);
  setenv("PPART_THREADS", "lots", 1);
  CHECK(run(base).code == 2);
  // the flag wins over the environment
  CHECK(run(a).code == 0);
  unsetenv("PPART_THREADS");
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "gauss", "--primes", "5,7", "--n", "1,2,3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "gauss");
  CHECK(j["ok"] == true);
  CHECK(j["cases"].size() > 10);

  r = run({"verify", "--suite", "tokuyama", "--lambdas", "1,1;2,1;2,2"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);

  r = run({"verify", "--suite", "character", "--max-dim", "200", "--specs", "A2,B2"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);

  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "gauss", "--primes", "6"}).code == 2);
  CHECK(run({"verify", "--suite", "tokuyama", "--lambdas", "1,0"}).code == 2);
  CHECK(run({"verify", "--suite", "tokuyama", "--shift", "sideways"}).code == 2);
}

TEST_CASE("verify reports failures with exit 1") {
  // with only the unshifted divisor no convention divides
  auto r = run({"verify", "--suite", "tokuyama", "--lambdas", "1,1;2,1", "--shift", "lambda"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["ok"] == false);
  CHECK(r.err.find("FAIL") != std::string::npos);
}

TEST_CASE("export") {
  const auto dir = scratch_dir("export");
  auto r = run({"export", "--family", "A", "--rank", "2", "--lambda", "1,0", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto pat = dir / "A2_1-0_n1.patterns.txt";
  const auto dec = dir / "A2_1-0_n1.decorated.txt";
  const auto js = dir / "A2_1-0_n1.polynomial.json";
  const std::string p1 = slurp(pat), d1 = slurp(dec), j1 = slurp(js);
  CHECK(std::count(p1.begin(), p1.end(), '\n') == 3);
  CHECK_NOTHROW((void)nlohmann::json::parse(j1));
  r = run({"export", "--family", "A", "--rank", "2", "--lambda", "1,0", "--out", dir.string(), "--threads", "3"});
  REQUIRE(r.code == 0);
  CHECK(slurp(pat) == p1);
  CHECK(slurp(dec) == d1);
  CHECK(slurp(js) == j1);
  fs::remove_all(dir);

  // a regular file where a directory should be
  const auto blocker = scratch_dir("blocker");
  std::ofstream(blocker) << "x";
  r = run({"export", "--family", "A", "--rank", "2", "--lambda", "1,0", "--out", (blocker / "sub").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find(blocker.string()) != std::string::npos);
  fs::remove(blocker);
}
