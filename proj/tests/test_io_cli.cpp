#include <doctest.h>

#include <sstream>

#include "weylalt/cli.hpp"
#include "weylalt/io.hpp"

using namespace weylalt;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("weights and words in JSON") {
  Weight w({Rational(1), Rational(1, 2), Rational(-3)});
  Json j = weight_to_json(w);
  CHECK(j.dump() == R"([1,"1/2",-3])");
  CHECK(weight_from_json(j) == w);
  CHECK(word_from_json(word_to_json({1, 2, 1})) == Word{1, 2, 1});
  CHECK_THROWS(weight_from_json(Json::parse(R"(["x"])")));
}

TEST_CASE("alternation set JSON round trip is byte identical") {
  for (auto spec : {RootSystemSpec{Family::A, 4}, RootSystemSpec{Family::B, 3}, RootSystemSpec{Family::C, 3}}) {
    RootSystem rs(spec);
    auto set = compute(rs, rs.highest_root(), -rs.highest_root());
    std::string first = dump(to_json(rs, set));
    auto back = alternation_set_from_json(rs, Json::parse(first));
    CHECK(dump(to_json(rs, back)) == first);
    CHECK(back.elements.size() == set.elements.size());
    CHECK(back.right_cover_edges == set.right_cover_edges);
  }
  RootSystem a4({Family::A, 4}), a3({Family::A, 3});
  auto doc = to_json(a4, compute(a4, a4.highest_root(), a4.zero()));
  CHECK_THROWS_AS(alternation_set_from_json(a3, doc), std::invalid_argument);
}

TEST_CASE("DOT output for the whole A3 group") {
  RootSystem a3({Family::A, 3});
  auto all = enumerate_group(a3);
  ElementSet elements(all.begin(), all.end());
  std::string dot = hasse_dot(a3, elements, false);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(count_of(dot, "->") == 36);
  CHECK(count_of(dot, ";\n") - count_of(dot, "->") == 24 + 2);  // nodes plus rankdir and node style
  CHECK(count_of(hasse_dot(a3, elements, true), "->") == 36);
}

TEST_CASE("dependence graph and CSV") {
  RootSystem a4({Family::A, 4});
  auto bas = compute_bas(a4, a4.highest_root(), -a4.highest_root());
  std::string dot = dependence_dot(bas);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(count_of(dot, "--") == bas.dependence_edges.size());
  std::string csv = counts_csv(count_sweep(3));
  CHECK(csv.rfind("r,i,j,count,formula_value,match\n", 0) == 0);
  CHECK(count_of(csv, "\n") == 1 + 10);
}

TEST_CASE("command line") {
  auto r = run({"altset", "--family", "A", "--rank", "4", "--lambda", "highest-root", "--mu", "neg-root:1:4",
                "--format", "json"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["size"] == 11);
  CHECK(j["elements"].size() == 11);

  r = run({"qmult", "--family", "A", "--rank", "3", "--lambda", "highest-root", "--mu", "neg-root:1:1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("q^4 + q^3 - q") != std::string::npos);

  r = run({"mult", "--family", "B", "--rank", "2", "--mu", "zero"});
  CHECK(r.code == 0);
  CHECK(r.out.find('2') != std::string::npos);

  r = run({"verify", "recurrences", "--max-rank", "7"});
  CHECK(r.code == 0);

  r = run({"verify", "conjecture", "--max-rank", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("not a proof") != std::string::npos);

  r = run({"catalog", "--rank", "4", "--i", "1", "--j", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("s2 s3") != std::string::npos);

  r = run({"hasse", "--family", "A", "--rank", "3", "--full"});
  CHECK(r.code == 0);
  CHECK(count_of(r.out, "->") == 36);

  r = run({"gf", "--object", "grand", "--truncation", "5"});
  CHECK(r.code == 0);
  CHECK_NOTHROW((void)Json::parse(r.out));

  r = run({"counts", "--max-rank", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("r,i,j,", 0) == 0);
}

TEST_CASE("command line errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"altset", "--family", "E", "--rank", "6", "--mu", "zero"}).code == 2);
  CHECK(run({"altset", "--family", "A", "--rank", "0", "--mu", "zero"}).code == 2);
  CHECK(run({"altset", "--family", "A", "--rank", "3", "--mu", "1,2"}).code == 2);
  CHECK(run({"bas", "--family", "A", "--rank", "2", "--lambda", "zero", "--mu", "highest-root"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
}
