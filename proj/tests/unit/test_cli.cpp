#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "nsgps_cli/cli.hpp"
#include "oracles.hpp"
#include "printing.hpp"

using namespace nsgps;
using V = std::vector<Int>;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int const          code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }
}  // namespace

TEST_CASE("plain info record") {
  auto r = call({"info", "5", "7", "9"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.err.empty());
  CHECK(r.out
        == "generators: [ 5, 7, 9 ]\n"
           "multiplicity: 5\n"
           "embedding_dimension: 3\n"
           "frobenius: 13\n"
           "conductor: 14\n"
           "genus: 8\n"
           "sporadic_count: 6\n"
           "small_elements: [ 0, 5, 7, 9, 10, 12, 14 ]\n"
           "gaps: [ 1, 2, 3, 4, 6, 8, 11, 13 ]\n"
           "apery: [ 0, 16, 7, 18, 9 ]\n"
           "pf: [ 11, 13 ]\n"
           "type: 2\n"
           "special_gaps: [ 11, 13 ]\n"
           "wilf: true\n");
}

TEST_CASE("plain single-valued subcommands") {
  CHECK(call({"decompose", "7", "9", "11", "17"}).out
        == "[ [ 7, 8, 9, 10, 11, 12 ], [ 7, 9, 10, 11, 12, 13 ], [ 7, 9, 11, 13, 15, 17 ] ]\n");
  CHECK(call({"over", "3", "5", "7"}).out == "[ [ 1 ], [ 2, 3 ], [ 3, 4, 5 ], [ 3, 5, 7 ] ]\n");
  CHECK(call({"betti", "10", "11", "17", "23"}).out == "[ 33, 34, 40, 69 ]\n");
  CHECK(call({"apery", "6", "5", "7"}).out
        == "[ 0, 5, 7, 10, 12, 14, 15, 17, 19, 22, 24, 29 ]\n");
  CHECK(call({"enumerate", "--delta", "11"}).out
        == "[ [ 5, 4 ], [ 6, 4, 9 ], [ 7, 3 ], [ 9, 6, 4 ], [ 10, 4, 5 ], [ 13, 2 ] ]\n");
  CHECK(call({"enumerate", "--genus", "8", "--count"}).out == "67\n");
  CHECK(call({"enumerate", "--frobenius", "16", "--count"}).out == "205\n");
  CHECK(call({"factorize", "3", "5", "7"}).out == "[  ]\n");
}

TEST_CASE("plain structured subcommands") {
  CHECK(call({"presentation", "3", "5", "7"}).out
        == "presentation: [ [ [ 0, 2, 0 ], [ 1, 0, 1 ] ], [ [ 4, 0, 0 ], [ 0, 1, 1 ] ], "
           "[ [ 3, 1, 0 ], [ 0, 0, 2 ] ] ]\n"
           "binomials: [ \"x2^2 - x1*x3\", \"x1^4 - x2*x3\", \"x1^3*x2 - x3^2\" ]\n");
  CHECK(call({"invariants", "10", "11", "17", "23"}).out
        == "elasticity: 23/10\ndelta_min: 1\ndelta_max: 3\ncatenary: 6\nomega: 6\n");
  CHECK(call({"med", "4", "7", "9"}).out == "med: false\nclosure: [ 4, 11, 13, 18 ]\n");
  CHECK(call({"free", "4", "6", "9"}).out
        == "free: true\ntelescopic: true\narrangement: [ 4, 6, 9 ]\n"
           "d_seq: [ 4, 2, 1 ]\ne_seq: [ 2, 2 ]\n");
  auto curve = call({"curve", "--from-r", "6,4,9", "--dual"});
  CHECK(curve.code == 0);
  CHECK(curve.out.find("conductor: 12\n") != std::string::npos);
  CHECK(curve.out.find("dual.r_seq: [ 6, 2, 9 ]\n") != std::string::npos);
  CHECK(curve.out.find("dual.conductor: 8\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto gcd = call({"info", "6", "9"});
  CHECK(gcd.code == cli::kExitDomain);
  CHECK(gcd.out.empty());
  CHECK(gcd.err == "error: NotNumerical: generators have gcd 3\n");

  CHECK(call({"info"}).code == cli::kExitUsage);
  CHECK(call({"enumerate"}).code == cli::kExitUsage);
  CHECK(call({"frobnicate", "3"}).code == cli::kExitUsage);
  CHECK(call({"info", "x"}).code == cli::kExitUsage);
  CHECK(call({"enumerate", "--genus", "3", "--frobenius", "4"}).code == cli::kExitUsage);
  CHECK(call({"--help"}).code == cli::kExitOk);
  CHECK(call({"--limit", "2", "enumerate", "--genus", "3"}).code == cli::kExitDomain);
  CHECK(call({"invariants", "1"}).code == cli::kExitOk);
  CHECK(call({"curve", "--from-r", "4,6"}).code == cli::kExitDomain);
}

TEST_CASE("gcd reduction on request") {
  auto r = call({"--reduce", "info", "6", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("reduced_by: 3\ngenerators: [ 2, 3 ]\n", 0) == 0);
}

TEST_CASE("JSON output round-trips") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    auto                     gens = oracle::random_generators(rng, 5, 40);
    std::vector<std::string> args{"--json", "info"};
    for (Int g : gens) {
      args.push_back(std::to_string(g));
    }
    auto r = call(args);
    REQUIRE(r.code == 0);
    auto j = cli::Json::parse(r.out);
    CHECK(j.begin().key() == "generators");
    auto s = cli::semigroup_from_json(j);
    CHECK(s == from_generators(gens));
    CHECK(cli::to_json(s) == j);
    CHECK(j["frobenius"].get<Int>() == s.frobenius());
  }
  CHECK_THROWS_AS(cli::semigroup_from_json(cli::Json::object()), Error);
}

TEST_CASE("output does not depend on the thread count") {
  auto one = call({"--threads", "1", "--json", "enumerate", "--genus", "9"});
  for (std::string t : {"2", "4", "7"}) {
    auto other = call({"--threads", t, "--json", "enumerate", "--genus", "9"});
    CHECK(other.out == one.out);
  }
  CHECK(call({"--threads", "1", "enumerate", "--genus", "15", "--count"}).out
        == call({"--threads", "6", "enumerate", "--genus", "15", "--count"}).out);
}

TEST_CASE("runs are independent within one process") {
  auto first = call({"factorize", "60", "10", "11", "17", "23", "--classes"});
  call({"invariants", "--element", "60", "10", "11", "17", "23"});
  auto again = call({"factorize", "60", "10", "11", "17", "23", "--classes"});
  CHECK(first.out == again.out);
  CHECK(call({"factorize", "60", "10", "11", "17", "23"}).out
        == "[ [ 6, 0, 0, 0 ], [ 2, 0, 1, 1 ], [ 1, 3, 1, 0 ] ]\n");
}

TEST_CASE("batch input") {
  auto const path = std::filesystem::temp_directory_path() / "nsgps_cli_batch.txt";
  {
    std::ofstream f(path);
    f << "5 7 9\n\n3,5,7\n";
  }
  auto r = call({"--input", path.string(), "betti"});
  CHECK(r.code == 0);
  CHECK(r.out == "[ 5, 7, 9 ]\n[ 14, 25, 27 ]\n\n[ 3, 5, 7 ]\n[ 10, 12, 14 ]\n\n");
  auto j = call({"--json", "--input", path.string(), "betti"});
  auto parsed = cli::Json::parse(j.out);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 2);
  CHECK(parsed[1]["betti"] == cli::Json::parse("[10, 12, 14]"));
  std::filesystem::remove(path);
  CHECK(call({"--input", path.string(), "betti"}).code == cli::kExitUsage);
}

TEST_CASE("helpers") {
  CHECK(cli::format_list(V{}) == "[  ]");
  CHECK(cli::format_list(V{1, 2, 3}) == "[ 1, 2, 3 ]");
  CHECK(cli::parse_generator_line("5 7 9") == V{5, 7, 9});
  CHECK(cli::parse_generator_line("5,7,9") == V{5, 7, 9});
  CHECK(cli::parse_generator_line(" 5, 7,  9 ") == V{5, 7, 9});
  CHECK_THROWS_AS(cli::parse_generator_line("5 x 9"), Error);
  CHECK(cli::render_plain(cli::Json{{"a", 1}}) == "1\n");
  CHECK(cli::render_plain(cli::Json{{"a", nullptr}}) == "none\n");
}
