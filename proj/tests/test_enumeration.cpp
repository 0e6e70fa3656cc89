#include <doctest.h>

#include "weylalt/enumeration.hpp"

using namespace weylalt;

namespace {

PowerSeries poly_x(const std::vector<int>& coeffs, int trunc = 12) {
  PowerSeries p({'x'}, {trunc});
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) p.set({static_cast<int>(k)}, coeffs[k]);
  return p;
}

std::vector<BigRational> x_coeffs(const PowerSeries& s, int n) {
  std::vector<BigRational> out;
  for (int k = 0; k < n; ++k) out.push_back(s.coeff({k}));
  return out;
}

std::vector<BigRational> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("Fibonacci and Lucas numbers") {
  CHECK(fibonacci(-1) == 0);
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(6) == 8);
  CHECK(fibonacci(92) == 7540113804746346429LL);
  CHECK(lucas(0) == 2);
  CHECK(lucas(1) == 1);
  CHECK(lucas(4) == 7);
  CHECK_THROWS_AS(fibonacci(-2), std::out_of_range);
  CHECK_THROWS_AS(fibonacci(93), std::out_of_range);
}

TEST_CASE("closed-form counts") {
  for (int r = 1; r <= 9; ++r) CHECK(count_neg_simple(r, 1) == fibonacci(r + 1));
  CHECK(count_neg_simple(6, 3) == lucas(5));
  CHECK(count_neg_simple(5, 2) == 6);
  CHECK(count_neg_height2(2, 1) == 3);
  CHECK(count_neg_height2(5, 1) == 9);
  CHECK(count_neg_height2(4, 2) == 6);
  CHECK_THROWS(count_neg_simple(3, 4));
  CHECK(count_neg_height2(3, 2) == 3 * fibonacci(2));
  CHECK_THROWS(count_neg_height2(3, 3));
  TypeACounts counts;
  CHECK(verify_closed_forms(8, counts).ok());
}

TEST_CASE("p and h values") {
  const std::vector<std::tuple<int, std::vector<std::int64_t>, std::vector<std::int64_t>>> table = {
      {1, {1, 2, 3, 8}, {1, 3, 5, 11}}, {2, {1, 2, 6, 12}, {2, 3, 8, 18}}, {3, {2, 4, 9, 20}, {3, 6, 13, 29}}};
  for (const auto& [i, p, h] : table)
    for (int k = 0; k < 4; ++k) {
      CHECK(p_value(i + k, i) == p[k]);
      CHECK(h_value(i + k, i) == h[k]);
    }
  CHECK_THROWS_AS(p_value(2, 3), std::invalid_argument);
}

TEST_CASE("recurrences and cited counts") {
  TypeACounts counts;
  CHECK(counts.alt(7, 2, 4) == counts.alt(6, 2, 4) + counts.alt(5, 2, 4));
  CHECK(counts.alt(7, 2, 4) == 32);
  CHECK(counts.h(5, 3) == counts.p(5, 3) + counts.p(4, 3));
  CHECK(verify_recurrences(8, counts).ok());
  CHECK(verify_fibonacci_subsets(16).ok());
  CHECK(verify_positive_root_counts(7, counts).ok());
  CHECK(verify_zero_weight_counts(8).ok());
}

TEST_CASE("series expansion") {
  auto fib = series_expand(poly_x({1}), poly_x({1, -1, -1}));
  CHECK(x_coeffs(fib, 7) == ints({1, 1, 2, 3, 5, 8, 13}));
  auto luc = series_expand(poly_x({0, 1, 2}), poly_x({1, -1, -1}));
  CHECK(x_coeffs(luc, 6) == ints({0, 1, 3, 4, 7, 11}));
  auto p1 = series_expand(poly_x({0, 1, 1}), poly_x({1, -1, -1, -3, -1}));
  CHECK(x_coeffs(p1, 5) == ints({0, 1, 2, 3, 8}));
  CHECK(x_coeffs(p_series(1), 5) == ints({0, 1, 2, 3, 8}));
  CHECK_THROWS_AS(series_expand(poly_x({1}), poly_x({0, 1})), std::domain_error);
  // exact rational quotient
  auto half = series_expand(poly_x({1}), poly_x({2}));
  CHECK(half.coeff({0}) == BigRational(1, 2));
}

TEST_CASE("series arithmetic") {
  auto x = PowerSeries::variable({'x', 's'}, {4, 4}, 'x');
  auto s = PowerSeries::variable({'x', 's'}, {4, 4}, 's');
  auto one = PowerSeries::constant({'x', 's'}, {4, 4}, 1);
  auto sq = (x + s).pow(2);
  CHECK(sq.coeff({1, 1}) == 2);
  CHECK((x * s).divided_by_variable('s').coeff({1, 0}) == 1);
  CHECK_THROWS_AS(x.divided_by_variable('s'), std::domain_error);
  CHECK(((one - x).divided_by(one - x)).str() == "1");
  CHECK(x.pow(5).terms().empty());
  CHECK_THROWS(x + PowerSeries::variable({'x'}, {4}, 'x'));
}

TEST_CASE("bivariate and trivariate coefficients") {
  CHECK(h_bivariate().coeff({3, 2}) == 3);
  CHECK(p_bivariate().coeff({5, 2}) == 12);
  auto grand = grand_series();
  CHECK(grand.coeff({4, 1, 4}) == 11);
  CHECK(grand.coeff({7, 2, 4}) == 32);
  CHECK(grand.coeff({3, 2, 1}) == 0);
}

TEST_CASE("alternative closed forms for H disagree from i = 2") {
  auto correct = h_bivariate(), printed = h_bivariate_printed();
  for (int r = 1; r <= 8; ++r) CHECK(correct.coeff({r, 1}) == printed.coeff({r, 1}));
  CHECK(printed.coeff({3, 2}) != 3);
  CHECK(correct.coeff({3, 2}) == 3);
  auto h2 = h_series(2), h2_alt = h2_series_printed();
  CHECK(x_coeffs(h2, 6) == ints({0, 0, 2, 3, 8, 18}));
  CHECK(x_coeffs(h2_alt, 6) == ints({0, 0, 0, 2, 3, 8}));
}

TEST_CASE("generating functions match the counts") {
  TypeACounts counts;
  CHECK(verify_generating_functions(8, counts).ok());
}

TEST_CASE("count sweep does not depend on thread count") {
  auto one = count_sweep(6, 1), three = count_sweep(6, 3);
  REQUIRE(one.size() == three.size());
  CHECK(one.size() == 56);
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].r == three[k].r);
    CHECK(one[k].i == three[k].i);
    CHECK(one[k].j == three[k].j);
    CHECK(one[k].count == three[k].count);
    CHECK(one[k].match);
  }
}
