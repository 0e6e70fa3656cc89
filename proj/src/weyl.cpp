#include "weylalt/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

namespace weylalt {

namespace {

int checked_mul_add(int acc, int a, int b) {
  int prod = 0;
  int sum = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &sum))
    throw std::overflow_error("Weyl group matrix entry overflow");
  return sum;
}

// Sign of a root given in simple-root coordinates: +1, -1 (roots are never zero).
int root_sign(const std::vector<int>& m, int r, int col) {
  for (int row = 0; row < r; ++row) {
    int v = m[row * r + col];
    if (v > 0) return 1;
    if (v < 0) return -1;
  }
  return 0;
}

// m <- m * S_i: column j becomes col_j - cartan(j, i) col_i.
void right_multiply_simple(const RootSystem& rs, std::vector<int>& m, int i) {
  const int r = rs.rank();
  for (int j = 0; j < r; ++j) {
    if (j == i) continue;
    int c = rs.cartan(j, i);
    if (c == 0) continue;
    for (int row = 0; row < r; ++row) m[row * r + j] = checked_mul_add(m[row * r + j], -c, m[row * r + i]);
  }
  for (int row = 0; row < r; ++row) m[row * r + i] = -m[row * r + i];
}

// m <- S_i * m: row i becomes row_i - sum_k cartan(k, i) row_k.
void left_multiply_simple(const RootSystem& rs, std::vector<int>& m, int i) {
  const int r = rs.rank();
  std::vector<int> row(r, 0);
  for (int col = 0; col < r; ++col) row[col] = m[i * r + col];
  for (int k = 0; k < r; ++k) {
    int c = rs.cartan(k, i);
    if (c == 0) continue;
    for (int col = 0; col < r; ++col) row[col] = checked_mul_add(row[col], -c, m[k * r + col]);
  }
  for (int col = 0; col < r; ++col) m[i * r + col] = row[col];
}

std::vector<int> identity_matrix(int r) {
  std::vector<int> m(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i) m[i * r + i] = 1;
  return m;
}

std::vector<int> matmul(const std::vector<int>& a, const std::vector<int>& b, int r) {
  std::vector<int> out(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      int aik = a[i * r + k];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j) out[i * r + j] = checked_mul_add(out[i * r + j], aik, b[k * r + j]);
    }
  return out;
}

}  // namespace

WeylElement::WeylElement(int rank, std::vector<int> images, std::vector<int> inverse)
    : rank_(rank), images_(std::move(images)), inverse_(std::move(inverse)) {}

// Greedy smallest left descent yields the lexicographically smallest reduced word.
void WeylElement::canonicalize(const RootSystem& rs) {
  word_.clear();
  std::vector<int> cur = images_;
  std::vector<int> inv = inverse_;
  while (true) {
    int descent = -1;
    for (int i = 0; i < rank_; ++i)
      if (root_sign(inv, rank_, i) < 0) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    word_.push_back(descent + 1);
    left_multiply_simple(rs, cur, descent);
    right_multiply_simple(rs, inv, descent);
  }
  if (cur != identity_matrix(rank_)) throw std::logic_error("canonicalize: descent walk did not reach identity");
}

WeylElement WeylElement::identity(const RootSystem& rs) {
  return WeylElement(rs.rank(), identity_matrix(rs.rank()), identity_matrix(rs.rank()));
}

WeylElement WeylElement::simple(const RootSystem& rs, int i) {
  return identity(rs).times_simple(rs, i);
}

bool WeylElement::has_right_descent(int i) const { return root_sign(images_, rank_, i - 1) < 0; }
bool WeylElement::has_left_descent(int i) const { return root_sign(inverse_, rank_, i - 1) < 0; }

WeylElement WeylElement::times_simple(const RootSystem& rs, int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
  WeylElement out = *this;
  right_multiply_simple(rs, out.images_, i - 1);
  left_multiply_simple(rs, out.inverse_, i - 1);
  out.canonicalize(rs);
  return out;
}

WeylElement WeylElement::simple_times(const RootSystem& rs, int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
  WeylElement out = *this;
  left_multiply_simple(rs, out.images_, i - 1);
  right_multiply_simple(rs, out.inverse_, i - 1);
  out.canonicalize(rs);
  return out;
}

WeylElement WeylElement::inverse(const RootSystem& rs) const {
  WeylElement out(rank_, inverse_, images_);
  out.canonicalize(rs);
  return out;
}

std::string WeylElement::str() const {
  if (word_.empty()) return "1";
  std::string out;
  for (int g : word_) out += "s" + std::to_string(g);
  return out;
}

std::size_t WeylElementHash::operator()(const WeylElement& e) const {
  return boost::hash_range(e.images().begin(), e.images().end());
}

WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  if (a.rank() != rs.rank() || b.rank() != rs.rank()) throw std::invalid_argument("multiply: rank mismatch");
  WeylElement out(rs.rank(), matmul(a.images_, b.images_, rs.rank()), matmul(b.inverse_, a.inverse_, rs.rank()));
  out.canonicalize(rs);
  return out;
}

WeylElement from_word(const RootSystem& rs, std::span<const int> word) {
  std::vector<int> m = identity_matrix(rs.rank());
  std::vector<int> inv = identity_matrix(rs.rank());
  for (int g : word) {
    if (g < 1 || g > rs.rank())
      throw std::out_of_range("generator s" + std::to_string(g) + " out of range for " + rs.name());
    right_multiply_simple(rs, m, g - 1);
    left_multiply_simple(rs, inv, g - 1);
  }
  WeylElement out(rs.rank(), std::move(m), std::move(inv));
  out.canonicalize(rs);
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t.empty() || t == "e" || t == "id") return out;
  std::size_t pos = 0;
  while (pos < t.size()) {
    char c = t[pos];
    if (c == ' ' || c == ',' || c == '\t' || c == 's' || c == 'S' || c == '*') {
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed word '" + std::string(text) + "'");
    int v = 0;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) v = v * 10 + (t[pos++] - '0');
    out.push_back(v);
  }
  return out;
}

Weight act(const RootSystem& rs, const WeylElement& sigma, const Weight& w) {
  const int r = rs.rank();
  if (static_cast<int>(w.rank()) != r || sigma.rank() != r) throw std::invalid_argument("act: dimension mismatch");
  Weight out(static_cast<std::size_t>(r));
  for (int row = 0; row < r; ++row) {
    Rational acc(0);
    for (int col = 0; col < r; ++col) {
      int m = sigma.image(row, col);
      if (m != 0) acc += Rational(m) * w[col];
    }
    out[row] = acc;
  }
  return out;
}

RootVector act(const WeylElement& sigma, std::span<const int> v) {
  const int r = sigma.rank();
  if (static_cast<int>(v.size()) != r) throw std::invalid_argument("act: dimension mismatch");
  RootVector out(r, 0);
  for (int row = 0; row < r; ++row)
    for (int col = 0; col < r; ++col) out[row] = checked_mul_add(out[row], sigma.image(row, col), v[col]);
  return out;
}

int inversion_count(const RootSystem& rs, const WeylElement& sigma) {
  int count = 0;
  for (const auto& beta : rs.positive_roots()) {
    RootVector img = act(sigma, beta);
    auto first = std::find_if(img.begin(), img.end(), [](int c) { return c != 0; });
    if (first != img.end() && *first < 0) ++count;
  }
  return count;
}

std::vector<WeylElement> right_covers(const RootSystem& rs, const WeylElement& sigma) {
  std::vector<WeylElement> out;
  for (int i = 1; i <= rs.rank(); ++i)
    if (!sigma.has_right_descent(i)) out.push_back(sigma.times_simple(rs, i));
  return out;
}

std::vector<WeylElement> left_covers(const RootSystem& rs, const WeylElement& sigma) {
  std::vector<WeylElement> out;
  for (int i = 1; i <= rs.rank(); ++i)
    if (!sigma.has_left_descent(i)) out.push_back(sigma.simple_times(rs, i));
  return out;
}

std::vector<WeylElement> right_lower_covers(const RootSystem& rs, const WeylElement& sigma) {
  std::vector<WeylElement> out;
  for (int i = 1; i <= rs.rank(); ++i)
    if (sigma.has_right_descent(i)) out.push_back(sigma.times_simple(rs, i));
  return out;
}

std::vector<WeylElement> left_lower_covers(const RootSystem& rs, const WeylElement& sigma) {
  std::vector<WeylElement> out;
  for (int i = 1; i <= rs.rank(); ++i)
    if (sigma.has_left_descent(i)) out.push_back(sigma.simple_times(rs, i));
  return out;
}

InfluenceSet influence(const WeylElement& sigma) {
  return InfluenceSet(sigma.word().begin(), sigma.word().end());
}

InfluenceSet extended_influence(const RootSystem& rs, const WeylElement& sigma) {
  InfluenceSet base = influence(sigma);
  InfluenceSet out = base;
  for (int i : base)
    for (int j = 1; j <= rs.rank(); ++j)
      if (rs.adjacent(i, j)) out.insert(j);
  return out;
}

bool independent(const RootSystem& rs, const WeylElement& sigma, const WeylElement& tau) {
  InfluenceSet a = influence(sigma);
  InfluenceSet b = extended_influence(rs, tau);
  return std::none_of(a.begin(), a.end(), [&](int i) { return b.count(i) > 0; });
}

bool connected_influence(const RootSystem& rs, const WeylElement& sigma) {
  InfluenceSet nodes = influence(sigma);
  if (nodes.empty()) return true;
  InfluenceSet seen{*nodes.begin()};
  std::vector<int> stack{*nodes.begin()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : nodes)
      if (!seen.count(u) && rs.adjacent(u, v)) {
        seen.insert(u);
        stack.push_back(u);
      }
  }
  return seen.size() == nodes.size();
}

std::size_t group_cap_from_env() {
  if (const char* env = std::getenv("WEYLALT_MAX_GROUP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultGroupCap;
}

std::size_t group_order(const RootSystemSpec& spec) {
  std::size_t fact = 1;
  const std::size_t r = static_cast<std::size_t>(spec.rank);
  switch (spec.family) {
    case Family::A:
      for (std::size_t k = 2; k <= r + 1; ++k) fact *= k;
      return fact;
    case Family::B:
    case Family::C:
      for (std::size_t k = 2; k <= r; ++k) fact *= k;
      return fact << r;
    case Family::D:
      for (std::size_t k = 2; k <= r; ++k) fact *= k;
      return fact << (r - 1);
  }
  return 0;
}

std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::size_t cap) {
  std::size_t order = group_order(rs.spec());
  if (order > cap)
    throw std::length_error("Weyl group of " + rs.name() + " has " + std::to_string(order) +
                            " elements, exceeding the enumeration cap of " + std::to_string(cap));
  std::vector<WeylElement> out;
  std::unordered_set<WeylElement, WeylElementHash> seen;
  std::deque<WeylElement> queue{WeylElement::identity(rs)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    WeylElement cur = std::move(queue.front());
    queue.pop_front();
    for (auto& next : right_covers(rs, cur))
      if (seen.insert(next).second) queue.push_back(next);
    out.push_back(std::move(cur));
  }
  return out;
}

}  // namespace weylalt
