#include "weylalt/altset.hpp"

#include <algorithm>
#include <deque>
#include <iostream>
#include <stdexcept>
#include <unordered_set>

namespace weylalt {

namespace {

void check_weights(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != static_cast<std::size_t>(rs.rank()) || mu.rank() != static_cast<std::size_t>(rs.rank()))
    throw std::invalid_argument("weight dimension does not match rank " + std::to_string(rs.rank()));
}

bool nonnegative_integral(const Weight& w) {
  for (const auto& c : w.coords())
    if (c.denominator() != 1 || c.numerator() < 0) return false;
  return true;
}

void collect_edges(const RootSystem& rs, AlternationSet& set) {
  set.right_cover_edges.clear();
  for (const auto& e : set.elements)
    for (auto& up : right_covers(rs, e))
      if (set.contains(up)) set.right_cover_edges.emplace_back(e, std::move(up));
  ByLengthThenWord less;
  std::sort(set.right_cover_edges.begin(), set.right_cover_edges.end(), [&](const CoverEdge& a, const CoverEdge& b) {
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  });
}

}  // namespace

Weight alternation_argument(const RootSystem& rs, const Weight& lambda, const Weight& mu, const WeylElement& sigma) {
  return act(rs, sigma, lambda + rs.rho()) - mu - rs.rho();
}

bool contains(const RootSystem& rs, const Weight& lambda, const Weight& mu, const WeylElement& sigma) {
  check_weights(rs, lambda, mu);
  return nonnegative_integral(alternation_argument(rs, lambda, mu, sigma));
}

AlternationSet compute(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  check_weights(rs, lambda, mu);
  if (!is_dominant(rs, lambda) || !is_integral(rs, lambda)) {
    std::clog << "warning: lambda = (" << lambda.str()
              << ") is not dominant integral; enumerating the whole group\n";
    return compute_naive(rs, lambda, mu);
  }
  AlternationSet out{lambda, mu, {}, {}};
  std::unordered_set<WeylElement, WeylElementHash> seen;
  std::deque<WeylElement> queue;
  auto id = WeylElement::identity(rs);
  seen.insert(id);
  if (contains(rs, lambda, mu, id)) queue.push_back(id);
  while (!queue.empty()) {
    WeylElement cur = std::move(queue.front());
    queue.pop_front();
    out.elements.insert(cur);
    for (auto& up : right_covers(rs, cur)) {
      if (!seen.insert(up).second) continue;
      if (contains(rs, lambda, mu, up)) queue.push_back(std::move(up));
    }
  }
  collect_edges(rs, out);
  return out;
}

AlternationSet compute_naive(const RootSystem& rs, const Weight& lambda, const Weight& mu, std::size_t cap) {
  check_weights(rs, lambda, mu);
  AlternationSet out{lambda, mu, {}, {}};
  for (auto& e : enumerate_group(rs, cap))
    if (contains(rs, lambda, mu, e)) out.elements.insert(std::move(e));
  collect_edges(rs, out);
  return out;
}

BigInt multiplicity(const RootSystem& rs, const AlternationSet& set) {
  PartitionCounter counter(rs);
  BigInt total = 0;
  for (const auto& e : set.elements) {
    BigInt term = counter.count(alternation_argument(rs, set.lambda, set.mu, e));
    if (e.length() % 2) total -= term;
    else total += term;
  }
  return total;
}

QPolynomial q_multiplicity(const RootSystem& rs, const AlternationSet& set) {
  PartitionCounter counter(rs);
  QPolynomial total;
  for (const auto& e : set.elements) {
    QPolynomial term = counter.count_q(alternation_argument(rs, set.lambda, set.mu, e));
    if (e.length() % 2) total -= term;
    else total += term;
  }
  return total;
}

BigInt multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  return multiplicity(rs, compute(rs, lambda, mu));
}

QPolynomial q_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  return q_multiplicity(rs, compute(rs, lambda, mu));
}

Report verify_order_ideal(const RootSystem& rs, const AlternationSet& set) {
  Report r{"order-ideal", 0, {}};
  for (const auto& e : set.elements) {
    for (const auto& d : right_lower_covers(rs, e))
      r.expect(set.contains(d), e.str() + " is a member but its right lower cover " + d.str() + " is not");
    for (const auto& d : left_lower_covers(rs, e))
      r.expect(set.contains(d), e.str() + " is a member but its left lower cover " + d.str() + " is not");
  }
  return r;
}

Report verify_order_ideal(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  return verify_order_ideal(rs, compute_naive(rs, lambda, mu));
}

Report verify_subword_closure(const RootSystem& rs, const AlternationSet& set) {
  Report r{"subword-closure", 0, {}};
  for (const auto& e : set.elements) {
    const Word& w = e.word();
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j <= w.size(); ++j) {
        if (i == 0 && j == w.size()) continue;
        auto sub = from_word(rs, std::span<const int>(w.data() + i, j - i));
        r.expect(set.contains(sub), "consecutive subword " + sub.str() + " of member " + e.str() + " is not a member");
      }
  }
  return r;
}

Report verify_subword_closure(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  return verify_subword_closure(rs, compute_naive(rs, lambda, mu));
}

Weight dominant_weight(const RootSystem& rs, const std::vector<int>& coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(rs.rank()))
    throw std::invalid_argument("expected " + std::to_string(rs.rank()) + " fundamental weight coefficients");
  Weight out = rs.zero();
  for (int k = 1; k <= rs.rank(); ++k) {
    if (coeffs[k - 1] < 0) throw std::invalid_argument("fundamental weight coefficients must be nonnegative");
    out += Rational(coeffs[k - 1]) * rs.fundamental_weight(k);
  }
  return out;
}

}  // namespace weylalt
