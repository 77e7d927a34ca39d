#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "monopole_lab/cli.hpp"

using namespace monopole_lab;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("number formatting uses 17 significant digits") {
    CHECK(cli::format17(0.1) == "0.10000000000000001");
    CHECK(cli::format17(1.0) == "1");
    CHECK(cli::dump17(nlohmann::ordered_json{{"x", 0.1}, {"n", 3}}) == R"({"x":0.10000000000000001,"n":3})");
  }

  TEST_CASE("exit codes") {
    CHECK(run({"no-such-command"}).code == cli::kExitUsage);
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"bps", "verify", "--no-such-flag"}).code == cli::kExitUsage);
    CHECK(run({"bps", "verify", "--model", "torus"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitOk);
    CHECK(run({"bps", "verify", "--model", "riemann", "--kind", "trivial"}).code == cli::kExitOk);
    const Outcome breach = run({"bps", "verify", "--model", "riemann", "--kind", "trivial", "--tol", "0"});
    CHECK(breach.code == cli::kExitToleranceBreach);
    CHECK(breach.out.find("\"status\":\"tolerance_breach\"") != std::string::npos);
  }

  TEST_CASE("reports start with a self-describing header") {
    const Outcome o = run({"gauge", "verify", "--from", "dirac", "--to", "schwinger", "--grid", "6"});
    REQUIRE(o.code == 0);
    const auto ls = lines(o.out);
    REQUIRE(ls.size() >= 3);
    CHECK(ls.front().find("\"record\":\"header\"") != std::string::npos);
    CHECK(ls.front().find("\"version\"") != std::string::npos);
    CHECK(ls.front().find("\"rng\":\"mt19937_64\"") != std::string::npos);
    CHECK(ls.front().find("\"frame_from\":\"dirac\"") != std::string::npos);
    CHECK(o.out.find("\"max_defect_Phi\"") != std::string::npos);
    CHECK(o.out.find("\"max_defect_W\"") != std::string::npos);
  }

  TEST_CASE("randomized sweeps are reproducible") {
    const std::vector<std::string> args{"wigner", "check", "--jmax", "3", "--seed", "7", "--samples", "5"};
    const Outcome a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto other = args;
    other[5] = "8";
    CHECK(run(other).out != a.out);
  }

  TEST_CASE("selection-rules CSV") {
    const Outcome o = run({"selection-rules", "--omega", "-1", "--jrange", "0..1"});
    REQUIRE(o.code == 0);
    const auto ls = lines(o.out);
    CHECK(ls[0].rfind("# {", 0) == 0);
    CHECK(ls[1] == "omega,delta,delta_prime,J,J_prime,factor,outcome");
    CHECK(ls[2] == "-1,1,1,0,0,0,forced_zero");
    CHECK(ls.size() == 2 + 16 + 1);
  }

  TEST_CASE("spectrum report") {
    const Outcome o = run({"spectrum", "--j", "1", "--mass", "1", "--grid", "1000", "--count", "2"});
    CHECK(o.code == 0);
    CHECK(o.out.find("\"eigenvalues\":[2.15967904") != std::string::npos);
    CHECK(o.out.find("\"drift\"") != std::string::npos);
    const Outcome bad = run({"spectrum", "--model", "euclid"});
    CHECK(bad.code == cli::kExitUsage);
  }
}
