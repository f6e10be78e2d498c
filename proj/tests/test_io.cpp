#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hibi/analyze.hpp"
#include "hibi/cli.hpp"
#include "hibi/errors.hpp"
#include "hibi/families.hpp"
#include "hibi/io.hpp"
#include "test_util.hpp"

using namespace hibi;
using test::mk;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/hibi-test-") + name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("text format") {
  const Poset p = parse_poset("1 < 3\n2 < 3\n2 < 4\n");
  CHECK(test::same_structure(p, example_poset("ex1_2")));
  CHECK(p.elements() == std::vector<std::string>{"1", "3", "2", "4"});  // first-mention order

  const Poset with_noise = parse_poset("# covers\n\n  1 < 3 \n2 < 3\n2 < 4");
  CHECK(test::same_structure(with_noise, example_poset("ex1_2")));

  CHECK_THROWS_AS(parse_poset("a < a\n"), CycleError);
  CHECK_THROWS_AS(parse_poset("a b\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("a < b < c\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("< b\n"), ParseError);
}

TEST_CASE("json format") {
  const Poset single = parse_poset(R"({"elements":["a"],"covers":[]})");
  CHECK(single.size() == 1);

  const Poset p = parse_poset(R"({"elements":["1","2","3","4"],"relations":[["1","3"],["2","3"],["2","4"]]})");
  CHECK(p == example_poset("ex1_2"));  // declaration order preserved, so fully equal

  CHECK_THROWS_AS(parse_poset("{"), ParseError);
  CHECK_THROWS_AS(parse_poset(R"({"covers":[]})"), ParseError);
  CHECK_THROWS_AS(parse_poset(R"({"elements":[1]})"), ParseError);
  CHECK_THROWS_AS(parse_poset(R"({"elements":["a"],"covers":[["a"]]})"), ParseError);
}

TEST_CASE("serialization round-trips") {
  std::vector<Poset> posets;
  posets.push_back(example_poset("ex1_11"));
  posets.push_back(segre_poset(3, 4));
  posets.push_back(antichain(3));
  posets.push_back(example44_poset(4, 3, 2));
  posets.push_back(mk({}));
  for (const Poset& p : posets) {
    const Poset back = parse_poset(poset_to_json(p));
    CHECK(back == p);
    CHECK(report_to_json(analyze(back)) == report_to_json(analyze(p)));
  }
}

TEST_CASE("report schema is exact") {
  const std::string json = report_to_json(analyze(example_poset("ex1_11")));
  const auto j = nlohmann::json::parse(json);
  const std::vector<std::string> keys{"n_elements", "dim",  "rank",       "upper_rank",
                                      "lower_rank", "c_diagonal", "fpt", "minus_a",
                                      "min_maximal_chain", "pure", "gorenstein",
                                      "inequality_ok", "witnesses"};
  CHECK(j.size() == keys.size());
  for (const std::string& k : keys) CHECK(j.contains(k));
  CHECK(j["witnesses"].size() == 4);
  for (const char* k : {"upper_path", "lower_path", "level_path", "psi"})
    CHECK(j["witnesses"].contains(k));
}

TEST_CASE("monomial formatting") {
  const Poset p = example_poset("ex1_2");
  CHECK(monomial_to_string(p, {1, {0, 0, 0, 0}}) == "T");
  CHECK(monomial_to_string(p, {4, {3, 2, 2, 1}}) == "T^4*X[1]^3*X[2]^2*X[3]^2*X[4]");
  CHECK(monomial_to_string(p, {0, {0, 0, 0, 0}}) == "1");
}

TEST_CASE("cli invariants and gen") {
  const std::string f = write_temp("ex1_11.txt", "q1 < q2\nq2 < q3\nq4 < q2\nq4 < q5\nq5 < q6\n");

  const CliResult text = cli({"invariants", f});
  CHECK(text.code == 0);
  CHECK(text.out.find("c_diagonal") != std::string::npos);

  const CliResult json = cli({"invariants", f, "--json"});
  CHECK(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["rank"] == 2);
  CHECK(j["upper_rank"] == 3);
  CHECK(j["lower_rank"] == 2);
  CHECK(j["c_diagonal"] == 5);
  CHECK(j["fpt"] == 4);
  CHECK(j["minus_a"] == 4);

  const CliResult gen = cli({"gen", "--family", "segre", "--params", "3,4"});
  CHECK(gen.code == 0);
  const Poset back = parse_poset(gen.out);
  CHECK(back == segre_poset(3, 4));

  const CliResult gen44 = cli({"gen", "--family", "example44", "--params", "4,2,1"});
  CHECK(gen44.code == 0);
  CHECK(parse_poset(gen44.out) == example44_poset(4, 2, 1));
}

TEST_CASE("cli subcommands") {
  const std::string f12 = write_temp("ex1_2.txt", "1 < 3\n2 < 3\n2 < 4\n");

  const CliResult val = cli({"validate", f12});
  CHECK(val.code == 0);
  CHECK(val.out.find("4 elements") != std::string::npos);

  const CliResult nu = cli({"nu", f12, "--q", "2"});
  CHECK(nu.code == 0);
  CHECK(nu.out.substr(0, nu.out.find('\n')) == "nu(2) = 4 (predicted 4) MATCH");

  const CliResult nuj = cli({"nu", f12, "--q", "2", "--json"});
  const auto nj = nlohmann::json::parse(nuj.out);
  CHECK(nj["nu"] == 4);
  CHECK(nj["matches"] == true);

  const CliResult fpt = cli({"fpt", f12, "--method", "both"});
  CHECK(fpt.code == 0);
  CHECK(fpt.out.find("fpt = 3") == 0);
  CHECK(cli({"fpt", f12, "--method", "levels"}).out.find("fpt = 3") == 0);
  CHECK(cli({"fpt", f12, "--method", "paths"}).out.find("fpt = 3") == 0);

  const CliResult lattice = cli({"lattice", f12});
  CHECK(lattice.code == 0);
  CHECK(lattice.out.find("J(P): 8 ideals") == 0);
  // members print in declaration order, which for this file is 1, 3, 2, 4
  CHECK(lattice.out.find("{1, 3, 2, 4}") != std::string::npos);
  CHECK(lattice.out.find("{2, 4}") != std::string::npos);

  const CliResult gens = cli({"generators", f12});
  CHECK(gens.code == 0);
  CHECK(gens.out.find("8 generators") == 0);
  CHECK(gens.out.find("T*X[2]*X[4]") != std::string::npos);

  const CliResult paths = cli({"paths", f12});
  CHECK(paths.code == 0);
  CHECK(paths.out.find("(1, 3, 2, 4)  len*=2  star=yes  maximal=yes") != std::string::npos);

  const CliResult star = cli({"paths", f12, "--star-only", "--all"});
  CHECK(star.code == 0);
  CHECK(star.out.find("star=no") == std::string::npos);
}

TEST_CASE("cli exit codes") {
  const std::string bad = write_temp("bad.txt", "a < a\n");
  CHECK(cli({"validate", bad}).code == 1);
  CHECK(cli({"invariants", bad}).code == 1);
  CHECK(cli({"invariants", "/nonexistent/file"}).code == 1);

  const std::string big = write_temp("big.json", poset_to_json(antichain(21)));
  CHECK(cli({"lattice", big}).code == 2);
  const std::string ex = write_temp("ex1_11b.txt", "q1 < q2\nq2 < q3\nq4 < q2\nq4 < q5\nq5 < q6\n");
  CHECK(cli({"invariants", ex, "--max-states", "2"}).code == 2);

  CHECK(cli({"nonsense"}).code == 64);
  CHECK(cli({}).code == 64);
  CHECK(cli({"invariants"}).code == 64);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"gen", "--family", "chain"}).code == 64);
  CHECK(cli({"gen", "--family", "chain", "--params", "x"}).code == 1);
  CHECK(cli({"gen", "--family", "segre", "--params", "3"}).code == 1);
}
