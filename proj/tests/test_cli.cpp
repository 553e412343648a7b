#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "perminv/cli.hpp"
#include "perminv/error.hpp"

using namespace perminv;
using nlohmann::json;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_config(const CliConfig& config) {
  std::ostringstream out, err;
  const int status = run(config, out, err);
  return {status, out.str(), err.str()};
}

Outcome run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "perminv");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int status = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

CliConfig json_config(std::size_t n, std::vector<std::string> gens, std::vector<std::uint64_t> chars,
                      int depth = 10) {
  CliConfig c;
  c.n = n;
  c.generators = std::move(gens);
  c.characteristics = std::move(chars);
  c.depth = depth;
  c.format = OutputFormat::json;
  return c;
}

}  // namespace

TEST_CASE("split_generators and parse_characteristics") {
  CHECK(split_generators("(1 2);(1 2 3)") == std::vector<std::string>{"(1 2)", "(1 2 3)"});
  CHECK(split_generators("").empty());
  CHECK(split_generators(" ; (1 2) ;").size() == 1);
  CHECK(parse_characteristics("3,0,2,3") == std::vector<std::uint64_t>{0, 2, 3});
  CHECK_THROWS_AS(parse_characteristics("0,4"), ParseError);
  CHECK_THROWS_AS(parse_characteristics("two"), ParseError);
  CHECK_THROWS_AS(parse_characteristics("2,,3"), ParseError);
}

TEST_CASE("Bertin's group in JSON") {
  const auto r = run_config(json_config(4, {"(1 2 3 4)"}, {0, 2}, 6));
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(j["order"] == 4);
  CHECK(j["transpositions"] == 0);
  CHECK(j["index_G_over_N"] == 4);
  CHECK(j["per_char"]["0"]["quasi_gorenstein"] == false);
  CHECK(j["per_char"]["2"]["quasi_gorenstein"] == true);
  CHECK(j["per_char"]["0"]["splits"] == true);
  CHECK(j["per_char"]["2"]["splits"] == false);
  CHECK(j["per_char"]["2"]["a_invariant"] == -4);
  CHECK(j["per_char"]["0"]["a_invariant"] == -5);
  CHECK(j["per_char"]["2"]["canonical"]["base"] == "invariant-ring");
  CHECK(j["per_char"]["2"]["canonical"]["shift"] == -4);
  CHECK(j["per_char"]["0"]["cohomology_window"]["lo"] == -10);
  CHECK(j["per_char"]["0"]["cohomology_window"]["hi"] == -4);
  CHECK(j["uniformly_split"] == false);
  CHECK(j["generated_by_transpositions"] == false);
}

TEST_CASE("the order-two counterexample does not split in characteristic 2") {
  const auto r = run_config(json_config(6, {"(1 2)(3 4)(5 6)"}, {2}, 4));
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["per_char"]["2"]["splits"] == false);
  CHECK(j["index_G_over_N"] == 2);
}

TEST_CASE("trivial group") {
  const auto r = run_config(json_config(3, {}, {0}, 3));
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["hilb_invariants"]["num"] == json::array({1}));
  CHECK(j["hilb_invariants"]["den"] == json::array({1, -3, 3, -1}));
  CHECK(j["per_char"]["0"]["a_invariant"] == -3);
  CHECK(j["per_char"]["0"]["quasi_gorenstein"] == true);
  CHECK(j["per_char"]["0"]["gorenstein"] == true);
  CHECK(j["per_char"]["0"]["splits"] == true);
  CHECK(j["per_char"]["0"]["cohomology_window"]["dims"] == json::array({10, 6, 3, 1}));
}

TEST_CASE("JSON is byte-deterministic and carries enough to recheck verdicts") {
  const auto config = json_config(4, {"(1 2 3 4)", "(1 3)"}, {3, 0, 2, 3}, 5);
  const auto a = run_config(config);
  const auto b = run_config(config);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);

  const auto j = json::parse(a.out);
  const int n = j["n"];
  const int c = j["transpositions"];
  const std::uint64_t index = j["index_G_over_N"];
  CHECK(j["per_char"].size() == 3);
  for (const auto& [key, v] : j["per_char"].items()) {
    const std::uint64_t p = std::stoull(key);
    CHECK(v["splits"] == (p == 0 || index % p != 0));
    if (p == 2) {
      CHECK(v["quasi_gorenstein"] == true);
      CHECK(v["a_invariant"] == -(c + n));
    } else {
      CHECK(v["quasi_gorenstein"] == (v["a_invariant"] == -(c + n)));
    }
    const int t = v["transvections"];
    const auto& ring = v["cohomology_window"];
    const auto& inv = v["invariants_of_cohomology_window"];
    CHECK(ring["dims"] == inv["dims"]);
    CHECK(static_cast<int>(ring["lo"]) + t == static_cast<int>(inv["lo"]));
  }
  CHECK(j["uniformly_split"] == (index == 1));
}

TEST_CASE("exit codes") {
  CliConfig bad = json_config(3, {"(1 4)"}, {0});
  auto r = run_config(bad);
  CHECK(r.status == exit_code::parse_error);
  CHECK(r.err.find("outside") != std::string::npos);

  CliConfig big = json_config(5, {"(1 2)", "(1 2 3 4 5)"}, {0});
  big.limits.max_order = 50;
  CHECK(run_config(big).status == exit_code::cap_exceeded);

  CliConfig wide = json_config(3, {}, {0});
  wide.limits.max_monomials = 3;
  CHECK(run_config(wide).status == exit_code::cap_exceeded);

  CHECK(run_args({"--n", "3", "--chars", "4"}).status == exit_code::parse_error);
  CHECK(run_args({"--n", "3", "--format", "xml"}).status == exit_code::parse_error);
  CHECK(run_args({"--gens", "(1 2)"}).status == exit_code::parse_error);
  CHECK(run_args({"--help"}).status == exit_code::ok);
}

TEST_CASE("command line end to end") {
  const auto r = run_args({"--n", "3", "--gens", "(1 2);(1 2 3)", "--chars", "0,2", "--depth", "4"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("a-invariant      -6") != std::string::npos);
  CHECK(r.out.find("characteristic 2") != std::string::npos);

  const auto j = run_args({"--n", "2", "--gens", "(1 2)", "--chars", "0", "--format", "json"});
  REQUIRE(j.status == 0);
  CHECK(json::parse(j.out)["hilb_sign_semiinvariants"]["num"] == json::array({0, 1}));
}
