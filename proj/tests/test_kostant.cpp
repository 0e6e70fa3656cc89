#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "weylalt/kostant.hpp"

using namespace weylalt;

namespace {

// Coin-change table over a box: an independent way of counting vector partitions.
std::map<RootVector, BigInt> brute_table(const RootSystem& rs, int bound) {
  const int r = rs.rank();
  std::vector<RootVector> box;
  RootVector v(r, 0);
  while (true) {
    box.push_back(v);
    int k = r - 1;
    while (k >= 0 && v[k] == bound) v[k--] = 0;
    if (k < 0) break;
    ++v[k];
  }
  std::map<RootVector, BigInt> ways;
  for (const auto& b : box) ways[b] = 0;
  ways[RootVector(r, 0)] = 1;
  for (const auto& root : rs.positive_roots()) {
    // Boxes are visited in lexicographic order, so b - root is already updated.
    for (const auto& b : box) {
      RootVector prev = b;
      bool ok = true;
      for (int i = 0; i < r; ++i)
        if ((prev[i] -= root[i]) < 0) ok = false;
      if (ok) ways[b] += ways[prev];
    }
  }
  return ways;
}

}  // namespace

TEST_CASE("small partition function values") {
  RootSystem a2({Family::A, 2});
  CHECK(kostant_partition(a2, a2.zero()) == 1);
  CHECK(kostant_partition(a2, a2.highest_root()) == 2);
  CHECK(kostant_partition(a2, -a2.simple_root(1)) == 0);
  CHECK(kostant_partition(a2, Weight({Rational(1, 2), Rational(1)})) == 0);
  RootSystem a3({Family::A, 3});
  CHECK(kostant_partition_q(a3, a3.highest_root()) == QPolynomial::parse("q + 2q^2 + q^3"));
  CHECK(kostant_partition_q(a3, a3.zero()) == QPolynomial::constant(1));
}

TEST_CASE("partition function agrees with a coin-change table") {
  for (auto spec : {RootSystemSpec{Family::A, 3}, RootSystemSpec{Family::B, 3}, RootSystemSpec{Family::C, 3},
                    RootSystemSpec{Family::D, 4}}) {
    RootSystem rs(spec);
    const int bound = spec.rank == 4 ? 3 : 4;
    auto table = brute_table(rs, bound);
    PartitionCounter counter(rs);
    for (const auto& [v, n] : table) {
      CHECK(counter.count(v) == n);
      CHECK(counter.count_q(v).at_one() == n);
    }
  }
}

TEST_CASE("result does not depend on the root order") {
  std::mt19937 rng(7);
  for (auto spec : {RootSystemSpec{Family::B, 3}, RootSystemSpec{Family::C, 3}, RootSystemSpec{Family::D, 4},
                    RootSystemSpec{Family::A, 5}}) {
    RootSystem rs(spec);
    PartitionCounter base(rs);
    for (int trial = 0; trial < 3; ++trial) {
      auto order = rs.positive_roots();
      std::shuffle(order.begin(), order.end(), rng);
      PartitionCounter shuffled(rs, order);
      for (int k = 0; k < 20; ++k) {
        RootVector v(rs.rank());
        for (auto& c : v) c = std::uniform_int_distribution<int>(0, 4)(rng);
        CHECK(base.count(v) == shuffled.count(v));
        CHECK(base.count_q(v) == shuffled.count_q(v));
      }
    }
    auto bad = rs.positive_roots();
    bad.pop_back();
    CHECK_THROWS_AS(PartitionCounter(rs, bad), std::invalid_argument);
  }
}

TEST_CASE("positivity is exactly nonnegative integrality") {
  RootSystem c3({Family::C, 3});
  PartitionCounter counter(c3);
  for (int a = -1; a <= 3; ++a)
    for (int b = -1; b <= 3; ++b)
      for (int c = -1; c <= 3; ++c) {
        RootVector v{a, b, c};
        CHECK((counter.count(v) > 0) == (a >= 0 && b >= 0 && c >= 0));
      }
}

TEST_CASE("positive support is monotone under adding simple roots") {
  RootSystem b3({Family::B, 3});
  PartitionCounter counter(b3);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int i = 0; i < 3; ++i) {
          RootVector v{a, b, c};
          if (counter.count(v) == 0) continue;
          v[i] += 1;
          CHECK(counter.count(v) > 0);
        }
}

TEST_CASE("q polynomials") {
  auto p = QPolynomial::parse("q^4 + q^3 - q");
  CHECK(p.str() == "q^4 + q^3 - q");
  CHECK(p.coeff(1) == -1);
  CHECK(p.at_one() == 1);
  CHECK(QPolynomial::parse("2 - 3q^2").str() == "-3q^2 + 2");
  CHECK(QPolynomial::parse("0").is_zero());
  CHECK((QPolynomial::parse("1 + q") * QPolynomial::parse("1 - q")) == QPolynomial::parse("1 - q^2"));
  CHECK_THROWS(QPolynomial::parse("q^"));
  CHECK_THROWS(QPolynomial::parse("x"));
}
