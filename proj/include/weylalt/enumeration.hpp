#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weylalt/numeric.hpp"
#include "weylalt/report.hpp"

namespace weylalt {

/// F_0 = 0, F_1 = 1, and F_{-1} = 0 by convention. Defined for -1 <= n <= 92.
std::int64_t fibonacci(int n);
/// L_0 = 2, L_1 = 1. Defined for 0 <= n <= 90.
std::int64_t lucas(int n);

/// Closed form for |A_r(h, -a_i)|.
std::int64_t count_neg_simple(int r, int i);
/// Closed form for |A_r(h, -a_i - a_{i+1})|.
std::int64_t count_neg_height2(int r, int i);

/// Memoised type A counts taken from computed alternation sets:
///   alt(r, i, j) = |A_r(h, -a_{i,j})|
///   p(r, i)      = members of A_r(h, -a_{i,r}) whose influence avoids r
///   h(r, i)      = |A_r(h, -a_{i,r})|
class TypeACounts {
 public:
  std::int64_t alt(int r, int i, int j);
  std::int64_t p(int r, int i);
  std::int64_t h(int r, int i);
  /// |A_r(h, a_{i,j})| for the positive root a_i + ... + a_j.
  std::int64_t alt_positive(int r, int i, int j);

 private:
  std::map<std::vector<int>, std::int64_t> alt_, p_, pos_;
};

std::int64_t p_value(int r, int i);
std::int64_t h_value(int r, int i);

struct SequenceTable {
  std::string name;                                // "p", "h" or "A-count"
  std::map<std::vector<int>, std::int64_t> values;  // (r, i) or (r, i, j)
};

SequenceTable sequence_table(const std::string& name, int max_r, TypeACounts& counts);

inline constexpr int kDefaultRecurrenceCap = 10;

/// Two-term recurrence in r for fixed -a_{i,j}, the four-term and diagonal
/// recurrences for p and h, |A_r(h, -a_{i,r-1})| = p^i_r and h^i_r = p^i_r + p^i_{r-1}.
Report verify_recurrences(int max_r, TypeACounts& counts);
Report verify_recurrences(int max_r = kDefaultRecurrenceCap);

/// Both closed forms against computed counts for 2 <= r <= max_r.
Report verify_closed_forms(int max_r, TypeACounts& counts);
/// Subsets of {1..n} without consecutive elements number F_{n+2}.
Report verify_fibonacci_subsets(int max_n);
/// |A_r(h, a_{i,j})| = F_i F_{r-j+1} for positive roots.
Report verify_positive_root_counts(int max_r, TypeACounts& counts);
/// |A_r(h, 0)| = F_r.
Report verify_zero_weight_counts(int max_r);

/// Truncated multivariate power series with exact rational coefficients.
/// Coefficients with any exponent above that variable's truncation are dropped.
class PowerSeries {
 public:
  using Exponents = std::vector<int>;

  PowerSeries(std::vector<char> variables, std::vector<int> truncation);
  static PowerSeries constant(std::vector<char> variables, std::vector<int> truncation, const BigRational& c);
  static PowerSeries variable(std::vector<char> variables, std::vector<int> truncation, char name);

  const std::vector<char>& variables() const { return vars_; }
  const std::vector<int>& truncation() const { return trunc_; }
  const std::map<Exponents, BigRational>& terms() const { return coeffs_; }
  BigRational coeff(const Exponents& e) const;
  void set(const Exponents& e, const BigRational& c);
  std::size_t var_index(char name) const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  PowerSeries scaled(const BigRational& c) const;
  PowerSeries pow(int k) const;

  /// Quotient as a power series. Throws std::domain_error when the divisor has
  /// a zero constant term.
  PowerSeries divided_by(const PowerSeries& den) const;
  /// Exact division by one variable; the result's truncation in that variable
  /// drops by one. Throws std::domain_error if a term has exponent 0 there.
  PowerSeries divided_by_variable(char name) const;
  /// Same coefficients, clipped to a smaller truncation.
  PowerSeries truncated(std::vector<int> truncation) const;

  /// e.g. "x^2*s + 3*x*t"
  std::string str() const;

 private:
  void check_compatible(const PowerSeries& o) const;
  bool within(const Exponents& e) const;

  std::vector<char> vars_;
  std::vector<int> trunc_;
  std::map<Exponents, BigRational> coeffs_;
};

/// numerator / denominator as a power series.
PowerSeries series_expand(const PowerSeries& numerator, const PowerSeries& denominator);

inline constexpr int kDefaultTruncation = 12;

/// Closed-form generating functions for the p and h sequences (i in 1..3).
PowerSeries p_series(int i, int truncation = kDefaultTruncation);
PowerSeries h_series(int i, int truncation = kDefaultTruncation);
/// Bivariate series in (x, s).
PowerSeries p_bivariate(int truncation = kDefaultTruncation);
PowerSeries h_bivariate(int truncation = kDefaultTruncation);
/// Alternative closed forms: numerator xs(x^5 s + 3x^4 s - xs + x^2 + 2x + 1) for
/// H(x,s) and 2x^3 + x^4 + 3x^5 + x^6 for H^2(x). They disagree with the h
/// values for i >= 2 and are kept only so that the disagreement can be shown.
PowerSeries h_bivariate_printed(int truncation = kDefaultTruncation);
PowerSeries h2_series_printed(int truncation = kDefaultTruncation);
/// Trivariate series in (x, s, t) whose x^r s^i t^j coefficient should be |A_r(h, -a_{i,j})|.
PowerSeries grand_series(int truncation = kDefaultTruncation);

/// Compares the closed-form series with counts from definitions up to max_r.
Report verify_generating_functions(int max_r, TypeACounts& counts, int truncation = kDefaultTruncation);
Report verify_generating_functions(int max_r);

/// One row of the count sweep.
struct CountRow {
  int r, i, j;
  std::int64_t count;
  std::int64_t formula_value;  // coefficient of the trivariate series
  bool match;
};

/// Rows for 1 <= i <= j <= r <= max_r, in (r, i, j) order. Cells are computed
/// by up to `jobs` threads; the output does not depend on the thread count.
std::vector<CountRow> count_sweep(int max_r, int jobs = 1);

}  // namespace weylalt
