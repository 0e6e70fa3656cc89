#include "weylalt/kostant.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace weylalt {

PartitionCounter::PartitionCounter(const RootSystem& rs)
    : PartitionCounter(rs, std::vector<RootVector>(rs.positive_roots().rbegin(), rs.positive_roots().rend())) {}

PartitionCounter::PartitionCounter(const RootSystem& rs, std::vector<RootVector> order)
    : rank_(rs.rank()), order_(std::move(order)) {
  std::set<RootVector> given(order_.begin(), order_.end());
  std::set<RootVector> expected(rs.positive_roots().begin(), rs.positive_roots().end());
  if (given != expected || order_.size() != expected.size())
    throw std::invalid_argument("root order must be a permutation of the positive roots");
  prepare();
}

void PartitionCounter::prepare() {
  const int n = static_cast<int>(order_.size());
  simple_tail_ = n;
  while (simple_tail_ > 0 && height(order_[simple_tail_ - 1]) == 1) --simple_tail_;
  support_.assign(n + 1, std::vector<char>(rank_, 0));
  for (int k = n - 1; k >= 0; --k) {
    support_[k] = support_[k + 1];
    for (int i = 0; i < rank_; ++i)
      if (order_[k][i] > 0) support_[k][i] = 1;
  }
}

bool PartitionCounter::feasible(int k, const RootVector& v) const {
  for (int i = 0; i < rank_; ++i) {
    if (v[i] < 0) return false;
    if (v[i] > 0 && !support_[k][i]) return false;
  }
  return true;
}

BigInt PartitionCounter::count_from(int k, RootVector& v) {
  if (!feasible(k, v)) return 0;
  // Only distinct simple roots remain: the partition is forced.
  if (k >= simple_tail_) return 1;
  Key key = v;
  key.push_back(k);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const RootVector& root = order_[k];
  BigInt total = 0;
  int uses = 0;
  while (true) {
    total += count_from(k + 1, v);
    bool ok = true;
    for (int i = 0; i < rank_; ++i) {
      v[i] -= root[i];
      if (v[i] < 0) ok = false;
    }
    ++uses;
    if (!ok) break;
  }
  for (int i = 0; i < rank_; ++i) v[i] += uses * root[i];
  memo_.emplace(std::move(key), total);
  return total;
}

QPolynomial PartitionCounter::count_q_from(int k, RootVector& v) {
  if (!feasible(k, v)) return {};
  if (k >= simple_tail_) {
    int parts = 0;
    for (int c : v) parts += c;
    return QPolynomial::monomial(parts);
  }
  Key key = v;
  key.push_back(k);
  if (auto it = memo_q_.find(key); it != memo_q_.end()) return it->second;

  const RootVector& root = order_[k];
  QPolynomial total;
  int uses = 0;
  while (true) {
    total += count_q_from(k + 1, v).shifted(uses);
    bool ok = true;
    for (int i = 0; i < rank_; ++i) {
      v[i] -= root[i];
      if (v[i] < 0) ok = false;
    }
    ++uses;
    if (!ok) break;
  }
  for (int i = 0; i < rank_; ++i) v[i] += uses * root[i];
  memo_q_.emplace(std::move(key), total);
  return total;
}

BigInt PartitionCounter::count(const RootVector& xi) {
  if (static_cast<int>(xi.size()) != rank_) throw std::invalid_argument("partition function: dimension mismatch");
  RootVector v = xi;
  return count_from(0, v);
}

BigInt PartitionCounter::count(const Weight& xi) {
  if (!xi.has_integer_coords()) return 0;
  return count(xi.to_ints());
}

QPolynomial PartitionCounter::count_q(const RootVector& xi) {
  if (static_cast<int>(xi.size()) != rank_) throw std::invalid_argument("partition function: dimension mismatch");
  RootVector v = xi;
  return count_q_from(0, v);
}

QPolynomial PartitionCounter::count_q(const Weight& xi) {
  if (!xi.has_integer_coords()) return {};
  return count_q(xi.to_ints());
}

BigInt kostant_partition(const RootSystem& rs, const Weight& xi) { return PartitionCounter(rs).count(xi); }

QPolynomial kostant_partition_q(const RootSystem& rs, const Weight& xi) {
  return PartitionCounter(rs).count_q(xi);
}

}  // namespace weylalt
