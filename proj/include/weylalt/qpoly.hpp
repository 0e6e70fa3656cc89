#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "weylalt/numeric.hpp"

namespace weylalt {

/// Integer polynomial in q; coeffs()[i] is the coefficient of q^i. Trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);
  static QPolynomial constant(const BigInt& c);
  static QPolynomial monomial(int degree, const BigInt& c = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int i) const;
  BigInt at_one() const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  /// Multiplication by q^k.
  QPolynomial shifted(int k) const;
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// Descending degree, e.g. "q^4 + q^3 - q"; "0" for the zero polynomial.
  std::string str() const;
  static QPolynomial parse(std::string_view text);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

}  // namespace weylalt
