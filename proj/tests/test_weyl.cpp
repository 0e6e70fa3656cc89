#include <doctest.h>

#include <map>
#include <set>

#include "weylalt/weyl.hpp"

using namespace weylalt;

namespace {
WeylElement w(const RootSystem& rs, std::initializer_list<int> word) {
  std::vector<int> v(word);
  return from_word(rs, v);
}
}  // namespace

TEST_CASE("involutions and braid relations") {
  RootSystem a3({Family::A, 3});
  for (int i = 1; i <= 3; ++i) CHECK(w(a3, {i, i}).is_identity());
  CHECK(w(a3, {1, 2, 1}) == w(a3, {2, 1, 2}));
  CHECK(w(a3, {1, 3}) == w(a3, {3, 1}));
  RootSystem b2({Family::B, 2});
  CHECK(w(b2, {1, 2, 1, 2}) == w(b2, {2, 1, 2, 1}));
  CHECK_FALSE(w(b2, {1, 2, 1}) == w(b2, {2, 1, 2}));
  RootSystem d4({Family::D, 4});
  CHECK(w(d4, {2, 4, 2}) == w(d4, {4, 2, 4}));
  CHECK(w(d4, {3, 4}) == w(d4, {4, 3}));
}

TEST_CASE("canonical witness is the lexicographically smallest reduced word") {
  RootSystem a3({Family::A, 3});
  CHECK(w(a3, {2, 1, 2}).word() == Word{1, 2, 1});
  CHECK(w(a3, {3, 1}).word() == Word{1, 3});
  CHECK(w(a3, {1, 1, 2}).word() == Word{2});
  CHECK(w(a3, {3, 2, 1, 3}).length() == 4);
  CHECK(WeylElement::identity(a3).str() == "1");
  CHECK(w(a3, {2, 3}).str() == "s2s3");
}

TEST_CASE("group orders and lengths") {
  for (auto spec : {RootSystemSpec{Family::A, 3}, RootSystemSpec{Family::B, 3}, RootSystemSpec{Family::C, 3},
                    RootSystemSpec{Family::D, 4}}) {
    RootSystem rs(spec);
    auto all = enumerate_group(rs);
    CHECK(all.size() == group_order(spec));
    std::set<std::vector<int>> distinct;
    int longest = 0;
    for (const auto& e : all) {
      distinct.insert(e.images());
      CHECK(e.length() == inversion_count(rs, e));
      longest = std::max(longest, e.length());
    }
    CHECK(distinct.size() == all.size());
    CHECK(std::size_t(longest) == rs.positive_roots().size());
  }
  CHECK(group_order({Family::A, 4}) == 120);
  CHECK(group_order({Family::B, 3}) == 48);
  CHECK(group_order({Family::D, 4}) == 192);
  RootSystem a5({Family::A, 5});
  CHECK_THROWS_AS(enumerate_group(a5, 100), std::length_error);
}

TEST_CASE("descents, covers and inverses") {
  RootSystem b3({Family::B, 3});
  for (const auto& e : enumerate_group(b3)) {
    for (int i = 1; i <= 3; ++i) {
      CHECK(e.has_right_descent(i) == (e.times_simple(b3, i).length() < e.length()));
      CHECK(e.has_left_descent(i) == (e.simple_times(b3, i).length() < e.length()));
    }
    CHECK(multiply(b3, e, e.inverse(b3)).is_identity());
    for (const auto& up : right_covers(b3, e)) CHECK(up.length() == e.length() + 1);
    for (const auto& down : left_lower_covers(b3, e)) CHECK(down.length() == e.length() - 1);
    CHECK(right_covers(b3, e).size() + right_lower_covers(b3, e).size() == 3);
  }
  auto a = w(b3, {1, 2, 3}), b = w(b3, {3, 2}), c = w(b3, {2, 1, 2});
  CHECK(multiply(b3, multiply(b3, a, b), c) == multiply(b3, a, multiply(b3, b, c)));
}

TEST_CASE("action on weights") {
  RootSystem c3({Family::C, 3});
  for (int i = 1; i <= 3; ++i) CHECK(act(c3, WeylElement::simple(c3, i), c3.simple_root(i)) == -c3.simple_root(i));
  // s_i(rho) = rho - a_i.
  for (int i = 1; i <= 3; ++i)
    CHECK(act(c3, WeylElement::simple(c3, i), c3.rho()) == c3.rho() - c3.simple_root(i));
  auto sigma = w(c3, {1, 2, 3, 2});
  RootVector v{2, 1, 1};
  CHECK(act(sigma, v) == act(c3, sigma, Weight::from_ints(v)).to_ints());
}

TEST_CASE("influence and independence") {
  RootSystem a7({Family::A, 7});
  CHECK(independent(a7, w(a7, {1, 2}), w(a7, {4, 6, 7})));
  CHECK(influence(w(a7, {4, 6, 7})) == InfluenceSet{4, 6, 7});
  CHECK(extended_influence(a7, w(a7, {1, 2})) == InfluenceSet{1, 2, 3});
  CHECK_FALSE(connected_influence(a7, w(a7, {4, 6, 7})));
  CHECK(connected_influence(a7, w(a7, {6, 7})));
  CHECK(connected_influence(a7, WeylElement::identity(a7)));
  RootSystem d5({Family::D, 5});
  CHECK_FALSE(independent(d5, w(d5, {3, 4}), w(d5, {2})));
  CHECK(independent(d5, WeylElement::identity(d5), w(d5, {1, 2, 3, 4, 5})));
}

TEST_CASE("parse_word") {
  CHECK(parse_word("s1 s2 s1") == Word{1, 2, 1});
  CHECK(parse_word("s1s2s1") == Word{1, 2, 1});
  CHECK(parse_word("1,2,1") == Word{1, 2, 1});
  CHECK(parse_word("1 2 1") == Word{1, 2, 1});
  CHECK(parse_word("e").empty());
  CHECK(parse_word("").empty());
  CHECK(parse_word("s12") == Word{12});
  CHECK_THROWS(parse_word("s1x"));
  RootSystem a2({Family::A, 2});
  CHECK_THROWS_AS(from_word(a2, Word{3}), std::out_of_range);
}

TEST_CASE("right weak order on A3 matches the 24-node Hasse diagram") {
  RootSystem a3({Family::A, 3});
  // One-line permutation label -> reduced word, as drawn.
  std::map<std::string, Word> node = {
      {"1234", {}},           {"2134", {1}},          {"1324", {2}},          {"1243", {3}},
      {"1423", {3, 2}},       {"1342", {2, 3}},       {"2143", {1, 3}},       {"3124", {2, 1}},
      {"2314", {1, 2}},       {"1432", {2, 3, 2}},    {"4123", {3, 2, 1}},    {"2413", {1, 3, 2}},
      {"3142", {2, 3, 1}},    {"3214", {1, 2, 1}},    {"2341", {1, 2, 3}},    {"4132", {2, 3, 2, 1}},
      {"4213", {3, 1, 2, 1}}, {"3412", {2, 3, 1, 2}}, {"2431", {1, 2, 3, 2}}, {"3241", {1, 2, 1, 3}},
      {"4312", {2, 3, 2, 1, 2}}, {"4231", {1, 2, 3, 2, 1}}, {"3421", {1, 2, 3, 1, 2}},
      {"4321", {1, 2, 3, 1, 2, 1}}};
  const char* edges[][2] = {
      {"1243", "1423"}, {"1324", "1342"}, {"1324", "3124"}, {"2134", "2314"}, {"1423", "1432"}, {"1423", "4123"},
      {"1342", "1432"}, {"1342", "3142"}, {"2143", "2413"}, {"3124", "3142"}, {"3124", "3214"}, {"2314", "3214"},
      {"2314", "2341"}, {"1432", "4132"}, {"4123", "4132"}, {"4123", "4213"}, {"2413", "4213"}, {"2413", "2431"},
      {"3142", "3412"}, {"3214", "3241"}, {"2341", "3241"}, {"2341", "2431"}, {"4132", "4312"}, {"4213", "4231"},
      {"3412", "4312"}, {"3412", "3421"}, {"2431", "4231"}, {"3241", "3421"}, {"4312", "4321"}, {"4231", "4321"},
      {"3421", "4321"}, {"1234", "1243"}, {"1234", "1324"}, {"1234", "2134"}, {"2134", "2143"}, {"1243", "2143"}};
  std::set<std::pair<std::vector<int>, std::vector<int>>> drawn;
  for (const auto& [lo, hi] : edges)
    drawn.insert({from_word(a3, node.at(lo)).images(), from_word(a3, node.at(hi)).images()});
  std::set<std::pair<std::vector<int>, std::vector<int>>> computed;
  auto all = enumerate_group(a3);
  CHECK(all.size() == 24);
  std::set<std::vector<int>> labels;
  for (const auto& [k, v] : node) labels.insert(from_word(a3, v).images());
  CHECK(labels.size() == 24);
  for (const auto& e : all)
    for (const auto& up : right_covers(a3, e)) computed.insert({e.images(), up.images()});
  CHECK(computed.size() == 36);
  CHECK(computed == drawn);
}
