#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "aisr/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = aisr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(AISR_TEST_DATA) + "/" + name; }

nlohmann::json run_json(std::vector<std::string> args, int expected_code) {
  args.push_back("--json");
  const auto r = run(args);
  REQUIRE(r.code == expected_code);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("check") {
  auto r = run({"check", "--semiring", "S7_0", "--identity", "x^2 + y == x^2 + y + y^2",
                "--method", "both"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.out.empty());

  auto j = run_json({"check", "--semiring", "S7_0", "--identity", data("identity.txt"), "--method",
                     "both"},
                    1);
  CHECK(j["agree"] == true);
  CHECK(j["oracle"]["holds"] == false);
  CHECK(j["oracle"]["witness"]["x"] == "∞");
  CHECK(j["oracle"]["witness"]["y"] == "a");

  j = run_json({"check", "--semiring", "D2", "--identity", "x + x*y == x"}, 0);
  CHECK(j["oracle"]["holds"] == true);

  j = run_json({"check", "--semiring", data("d2_flipped.json"), "--identity", "x + y == x*y",
                "--method", "both"},
               1);
  CHECK(j["agree"] == true);

  CHECK(run({"check", "--semiring", "S7", "--identity", "x y == x"}).code == 2);
  CHECK(run({"check", "--semiring", "S9", "--identity", "x == x"}).code == 2);
  CHECK(run({"check", "--semiring", data("ragged.json"), "--identity", "x == x"}).code == 2);
  CHECK(run({"check", "--identity", "x == x"}).code == 2);
}

TEST_CASE("delta") {
  auto r = run({"delta", "--term", "x*y + y*z"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{y}; {x,z}") != std::string::npos);
  auto j = run_json({"delta", "--term", "x^2 + y"}, 0);
  CHECK(j["delta"].empty());
}

TEST_CASE("witness") {
  auto j = run_json({"witness", "--n", "2", "--oracle"}, 0);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 5);
  j = run_json({"witness", "--n", "3", "--oracle", "--oracle-cap", "100"}, 0);
  CHECK(j["checks"][4]["status"] == "skipped");
  CHECK(run({"witness", "--n", "0"}).code == 2);
}

TEST_CASE("axiom-check") {
  auto j = run_json({"axiom-check", "--identity", "x + x^2*y == x"}, 1);
  CHECK(j["a_short_words"] == false);
  CHECK(j["b_linear"] == false);
  CHECK(j["c_antichain"] == false);
  j = run_json({"axiom-check", "--term", "x*y + y*z", "--commutative"}, 0);
  CHECK(j["d_no_odd_cycle"] == true);
  CHECK(run({"axiom-check"}).code == 2);
}

TEST_CASE("derive") {
  auto j = run_json({"derive", "verify", "--axioms", data("axioms.json"), "--chain",
                     data("chain.json")},
                    0);
  CHECK(j["accepted"] == true);

  j = run_json({"derive", "verify", "--axioms", data("axioms.json"), "--chain",
                data("bad_chain.json")},
               1);
  CHECK(j["accepted"] == false);
  CHECK(j["failing_index"] == 0);

  j = run_json({"derive", "search", "--axioms", data("axioms.json"), "--goal",
                "y*z == y*z + y*z*y*z"},
               0);
  CHECK(j["outcome"] == "found");
  CHECK(j["chain"]["steps"].size() == 1);

  CHECK(run({"derive", "verify", "--axioms", data("missing.json"), "--chain",
             data("chain.json")})
            .code == 2);
}

TEST_CASE("validate") {
  CHECK(run({"validate", "--semiring", "S7_0"}).code == 0);
  CHECK(run({"validate", "--semiring", data("d2_flipped.json")}).code == 0);
  auto j = run_json({"validate", "--semiring", data("not_distributive.json")}, 1);
  CHECK(j["valid"] == false);
  CHECK(j["violation"].get<std::string>().size() > 0);
  CHECK(run({"validate", "--semiring", data("ragged.json")}).code == 2);
}

TEST_CASE("crossval") {
  auto j = run_json({"crossval", "--semiring", "S7", "--samples", "300", "--seed", "5"}, 0);
  CHECK(j["disagreements"].empty());
  CHECK(j["samples"] == 300);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"delta"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reruns are byte-identical") {
  const std::vector<std::vector<std::string>> commands = {
      {"crossval", "--semiring", "S7_0", "--samples", "200", "--seed", "3", "--json"},
      {"check", "--semiring", "S7_0", "--identity", "x^2 + y == x^2 + y + y^2", "--json"},
      {"derive", "search", "--axioms", data("axioms.json"), "--goal", "x == x + x^2 + x^4",
       "--max-depth", "2", "--json"},
      {"witness", "--n", "2", "--oracle"},
  };
  for (const auto& c : commands) {
    const auto a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
