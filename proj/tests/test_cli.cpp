#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kschur/cli.hpp"

using kschur::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("phi output matches the golden files") {
  CHECK(call({"phi", "--k", "2", "--symbolic"}).out == slurp(KSCHUR_GOLDEN_DIR "/phi_k2.txt"));
  CHECK(call({"phi", "--k", "3", "--symbolic"}).out == slurp(KSCHUR_GOLDEN_DIR "/phi_k3.txt"));
  std::ostringstream out;
  CHECK(kschur::cli::selftest(out));
}

TEST_CASE("boundary f at k=2") {
  const Result r = call({"boundary", "f", "--k", "2", "--r", "1,3"});
  CHECK(r.code == 0);
  CHECK(r.out == "h = (2, 1)\n");
  const Result j = call({"--format", "json", "boundary", "f", "--k", "2", "--r", "1,3"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema"] == "kschur/1");
  CHECK(doc["t"].get<double>() == 2.0);
  CHECK(doc["X"]["(1)"].get<double>() == 2.0);
  const Result after = call({"boundary", "f", "--k", "2", "--r", "1,3", "--format", "json"});
  CHECK(after.out == j.out);
}

TEST_CASE("exit codes") {
  CHECK(call({"phi", "--k", "2", "--bogus"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"--tol", "0", "phi", "--k", "2"}).code == 2);
  CHECK(call({"--tol", "0.01", "phi", "--k", "2"}).code == 2);
  CHECK(call({"partitions", "--k", "2", "--partition", "3,1"}).code == 2);
  CHECK(call({"phi", "--k", "4", "--xi"}).code == 2);
  CHECK(call({"--symbolic-limit", "4", "phi", "--k", "4", "--xi"}).code == 0);
  CHECK(call({"boundary", "point", "--k", "3", "--r", "1,0,0"}).code == 2);
  CHECK(call({"walk", "simulate", "--k", "3", "--r", "1,0,0"}).code == 2);
}

TEST_CASE("tolerance from the environment") {
  ::setenv("KSCHUR_TOL", "nonsense", 1);
  CHECK(call({"phi", "--k", "2"}).code == 2);
  ::setenv("KSCHUR_TOL", "1e-10", 1);
  CHECK(call({"phi", "--k", "2"}).code == 0);
  ::unsetenv("KSCHUR_TOL");
}

TEST_CASE("subcommands produce output") {
  CHECK(call({"partitions", "--k", "3", "--irreducible"}).out == "()\n(1)\n(2)\n(1,1)\n(2,1)\n(2,1,1)\n");
  CHECK(call({"lattice", "--k", "2", "--partition", "2,1,1"}).out == "(2,1,1) -> (2,1,1,1)  (row 3)\n");
  CHECK(call({"kschur", "--k", "3", "--partition", "2", "--product", "1,1"}).out == "s3(2,1,1)\n");
  CHECK(call({"kschur", "--k", "3", "--partition", "2,1", "--tableaux", "1,1,1"}).out == "2\n");
  const Result alcove = call({"--format", "json", "alcove", "--k", "3", "--partition", ""});
  CHECK(nlohmann::json::parse(alcove.out)["I"] == std::vector<int>{2, 1, 1});
  CHECK(call({"toeplitz", "check", "--h", "2,1"}).out.find("totally positive:    yes") != std::string::npos);
  CHECK(call({"toeplitz", "reconstruct", "--k", "3", "--r", "1,2,3"}).code == 0);
  CHECK(call({"boundary", "region", "--h2", "0.5", "--h3", "0.2"}).code == 0);
  CHECK(call({"boundary", "zeta", "--k", "3", "--r", "1,2,3"}).code == 0);
  CHECK(call({"phi", "--k", "3", "--primitive"}).out.find("Delta = 8*r1 - 8*r3") != std::string::npos);
}

TEST_CASE("walk output is deterministic") {
  const std::vector<std::string> args{"--format", "csv", "walk", "simulate", "--k", "3", "--r", "1,2,3",
                                      "--steps", "2000", "--seed", "7", "--every", "100"};
  const Result a = call(args);
  const Result b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("step,state,x_1,x_2,x_3\n", 0) == 0);
  const Result drift = call({"--format", "csv", "walk", "drift", "--k", "2", "--r", "1,1", "--steps", "10000"});
  CHECK(drift.out.rfind("coordinate,formula,estimate,standard_error\n", 0) == 0);
}
