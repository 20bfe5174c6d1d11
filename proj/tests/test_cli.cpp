#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "stomap/cli.hpp"
#include "stomap/expression.hpp"
#include "stomap/matrix_json.hpp"
#include "stomap/semantics.hpp"
#include "support/generators.hpp"

using namespace stomap;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = "stomap_test_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("eval command") {
  const Run r = cli({"eval", "c(1/2)"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "{\"rows\":2,\"cols\":1,\"entries\":[[\"1/2\"],[\"1/2\"]]}\n");
  CHECK(r.err.empty());
  CHECK(cli({"eval", "id(0)"}).out == "{\"rows\":0,\"cols\":0,\"entries\":[]}\n");
  const Run inclusions = cli({"eval", "(iota(1,2) * iota(2,2)) ; p(2,2)"});
  CHECK(matrix_from_json_text(inclusions.out) == StochasticMatrix::identity(2));

  const Run bad = cli({"eval", "s ; ;"});
  CHECK(bad.code == kExitParse);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("position 4") != std::string::npos);
  CHECK(cli({"eval", "e ; e"}).code == kExitArity);
}

TEST_CASE("synth command") {
  const std::string column = temp_file("column.json",
                                       R"({"rows":3,"cols":1,"entries":[["1/2"],["1/3"],["1/6"]]})");
  const Run r = cli({"synth", column});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "c(1/2) ; (id(1) * c(2/3))\n");

  const std::string empty = temp_file("empty.json", R"({"rows":3,"cols":0,"entries":[[],[],[]]})");
  CHECK(cli({"synth", empty}).out == "del * del * del\n");

  const std::string ident = temp_file("ident.json", R"({"rows":2,"cols":2,"entries":[["1","0"],["0","1"]]})");
  const Run id2 = cli({"synth", ident});
  CHECK(eval(parse_diagram(id2.out)) == StochasticMatrix::identity(2));

  const std::string bad = temp_file("bad.json",
                                    R"({"rows":2,"cols":2,"entries":[["1","1/2"],["0","1/3"]]})");
  const Run nonstochastic = cli({"synth", bad});
  CHECK(nonstochastic.code == kExitNotStochastic);
  CHECK(nonstochastic.err.find("column 2") != std::string::npos);

  const std::string junk = temp_file("junk.json", "{\"rows\":");
  CHECK(cli({"synth", junk}).code == kExitParse);
  CHECK(cli({"synth", "stomap_test_missing.json"}).code != kExitOk);
  for (const char* f : {"column.json", "empty.json", "ident.json", "bad.json", "junk.json"}) {
    std::remove(("stomap_test_" + std::string(f)).c_str());
  }
}

TEST_CASE("eval and synth round trip through text") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Diagram d = stomap::testing::random_diagram(rng, rng.below(4), rng.below(15));
    const std::string expr = print_diagram(d);
    const Run e = cli({"eval", expr});
    REQUIRE(e.code == kExitOk);
    const std::string path = temp_file("pipe.json", e.out);
    const Run s = cli({"synth", path});
    REQUIRE(s.code == kExitOk);
    CHECK(eval(parse_diagram(s.out)) == eval(d));
  }
  std::remove("stomap_test_pipe.json");
}

TEST_CASE("normalize and check-equal") {
  CHECK(cli({"normalize", "c(1/2) ; e"}).out == "id(1)\n");
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"s ; s", "id(2)"}, {"c(1/4) ; s", "c(3/4)"}, {"e", "s ; e"}}) {
    const Run r = cli({"check-equal", a, b});
    CHECK_MESSAGE(r.code == kExitOk, a << " vs " << b);
    CHECK(r.out.find("canonical 1: ") == 0);
    CHECK(r.out.find("\ncanonical 2: ") != std::string::npos);
    CHECK(r.out.ends_with("\nequal\n"));
  }
  const Run ne = cli({"check-equal", "id(2)", "s"});
  CHECK(ne.code == kExitFalse);
  CHECK(ne.out.ends_with("not equal\n"));
  CHECK(cli({"check-equal", "e", "s"}).code == kExitArity);
  CHECK(cli({"check-equal", "e", "(("}).code == kExitParse);
}

TEST_CASE("verify-relations") {
  const Run all = cli({"verify-relations"});
  CHECK(all.code == kExitOk);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(all.out.ends_with("all 128 checks passed\n"));

  const Run r12 = cli({"verify-relations", "--rule", "R12"});
  CHECK(r12.code == kExitOk);
  std::istringstream lines(r12.out);
  std::string line;
  int pass = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("PASS R12 ", 0) == 0) ++pass;
  }
  CHECK(pass == 20);
  CHECK(cli({"verify-relations", "--rule", "R5"}).out == "PASS R5\nall 1 checks passed\n");
  CHECK(cli({"verify-relations", "--rule", "R99"}).code != kExitOk);
  CHECK(cli({"verify-relations", "--rule", "R12", "--seed", "3"}).out ==
        cli({"verify-relations", "--rule", "R12", "--seed", "3"}).out);
}

TEST_CASE("sample command") {
  const Run one = cli({"sample", "c(1)", "1", "100", "7"});
  CHECK(one.code == kExitOk);
  CHECK(one.out.find("output 1: 100 expected 1\n") == 0);
  CHECK(cli({"sample", "s", "2", "50", "7"}).out.find("output 1: 50 expected 1\n") == 0);
  const Run quarter = cli({"sample", "c(1/4)", "1", "100000", "7"});
  CHECK(quarter.out.find("expected 1/4") != std::string::npos);
  const auto tv_at = quarter.out.rfind("tv ");
  REQUIRE(tv_at != std::string::npos);
  CHECK(std::stod(quarter.out.substr(tv_at + 3)) < 0.02);
  CHECK(cli({"sample", "c(1/4)", "1", "1000", "--seed", "5"}).out ==
        cli({"sample", "c(1/4)", "1", "1000", "5"}).out);
  CHECK(cli({"sample", "del", "1", "10"}).code == kExitArity);
  CHECK(cli({"sample", "s", "3", "10"}).code == kExitArity);
}

TEST_CASE("render command") {
  const Run ascii = cli({"render", "id(2)"});
  CHECK(ascii.code == kExitOk);
  CHECK(ascii.out == "| |\n| |\n");
  CHECK(cli({"render", "c(1/3)"}).out.find("[1/3]") != std::string::npos);
  const Run dot = cli({"render", "z(3)", "--format", "dot"});
  CHECK(dot.out.find("digraph") == 0);
  std::size_t crossings = 0;
  for (auto pos = dot.out.find("label=\"s\""); pos != std::string::npos;
       pos = dot.out.find("label=\"s\"", pos + 1)) {
    ++crossings;
  }
  CHECK(crossings == 2);
  CHECK(dot.out.find("in3") != std::string::npos);
  CHECK(dot.out.find("out3") != std::string::npos);
  CHECK(dot.out.find("in4") == std::string::npos);
  CHECK(cli({"render", "s", "--format", "svg"}).code == kExitParse);
}

TEST_CASE("rewrite command") {
  const Run list = cli({"rewrite", "s ; s"});
  CHECK(list.code == kExitOk);
  CHECK(list.out.find("R4 @ slice 0 offset 0") != std::string::npos);
  const Run step = cli({"rewrite", "s ; s", "--rule", "R4", "--slice", "0", "--offset", "0"});
  CHECK(step.out == "step 1: R4 @ slice 0 offset 0\nresult: id(2)\n");
  CHECK(cli({"rewrite", "s ; s", "--rule", "R4", "--slice", "1", "--offset", "0"}).code ==
        kExitInvalidRedex);
  const Run r12 = cli({"rewrite", "c(1/2) ; (c(1/3) * id(1))", "--rule", "R12", "--slice", "0",
                       "--offset", "0"});
  CHECK(r12.out == "step 1: R12 @ slice 0 offset 0 params λ=1/2, μ=1/3\n"
                   "result: c(1/6) ; (id(1) * c(2/5))\n");
  const Run walk = cli({"rewrite", "c(1/3) ; (id(1) * c(1/2)) ; (id(1) * e)", "--steps", "25", "--seed", "4"});
  CHECK(walk.code == kExitOk);
  CHECK(walk.out == cli({"rewrite", "c(1/3) ; (id(1) * c(1/2)) ; (id(1) * e)", "--steps", "25", "--seed", "4"}).out);
  const auto res = walk.out.rfind("result: ");
  REQUIRE(res != std::string::npos);
  std::string text = walk.out.substr(res + 8);
  text.pop_back();
  CHECK(eval(parse_diagram(text)) == eval(parse_diagram("c(1/3) ; (id(1) * c(1/2)) ; (id(1) * e)")));
}

TEST_CASE("output file and usage errors") {
  const std::string path = "stomap_test_out.json";
  const Run r = cli({"--output", path, "eval", "s"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "{\"rows\":2,\"cols\":2,\"entries\":[[\"0\",\"1\"],[\"1\",\"0\"]]}\n");
  std::remove(path.c_str());

  CHECK(cli({}).code == kExitParse);
  CHECK(cli({"frobnicate"}).code == kExitParse);
  CHECK(cli({"eval"}).code == kExitParse);
  CHECK(cli({"--help"}).code == kExitOk);
}
