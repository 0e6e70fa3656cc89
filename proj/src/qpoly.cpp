#include "weylalt/qpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace weylalt {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::constant(const BigInt& c) { return QPolynomial(std::vector<BigInt>{c}); }

QPolynomial QPolynomial::monomial(int degree, const BigInt& c) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, 0);
  v[degree] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

BigInt QPolynomial::at_one() const {
  BigInt total = 0;
  for (const auto& c : coeffs_) total += c;
  return total;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(out));
}

std::string QPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const BigInt& c = coeffs_[d];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (d == 0 || mag != 1) out += mag.str();
    if (d >= 1) out += "q";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

QPolynomial QPolynomial::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  if (s == "0") return {};
  QPolynomial out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    BigInt coef = start == pos ? BigInt(1) : BigInt(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == '*') ++pos;
    int degree = 0;
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t ds = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (ds == pos) throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
        degree = std::stoi(s.substr(ds, pos - ds));
      }
    } else if (start == pos) {
      throw std::invalid_argument("malformed polynomial '" + std::string(text) + "'");
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
      throw std::invalid_argument("malformed polynomial '" + std::string(text) + "'");
    out += QPolynomial::monomial(degree, sign * coef);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.str(); }

}  // namespace weylalt
