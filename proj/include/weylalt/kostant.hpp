#pragma once

#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "weylalt/qpoly.hpp"
#include "weylalt/rootsys.hpp"

namespace weylalt {

/// Memoised Kostant partition function for one root system.
///
/// Counts multisets of positive roots summing to a vector by recursion over a
/// fixed root order: use root k some number of times, then only roots after k.
/// The cache is keyed on (k, residual) and lives as long as the counter, so a
/// counter can be reused across the terms of one multiplicity sum. Results do
/// not depend on the order or on cache state.
class PartitionCounter {
 public:
  /// Uses the positive roots from highest to lowest height.
  explicit PartitionCounter(const RootSystem& rs);
  /// Uses the given order, which must be a permutation of the positive roots.
  PartitionCounter(const RootSystem& rs, std::vector<RootVector> order);

  /// 0 for negative or fractional coordinates; 1 for the zero weight.
  BigInt count(const Weight& xi);
  BigInt count(const RootVector& xi);
  /// Coefficient of q^i counts the multisets with exactly i parts.
  QPolynomial count_q(const Weight& xi);
  QPolynomial count_q(const RootVector& xi);

  const std::vector<RootVector>& order() const { return order_; }

 private:
  using Key = std::vector<int>;  // residual followed by the root index
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return boost::hash_range(k.begin(), k.end()); }
  };

  void prepare();
  bool feasible(int k, const RootVector& v) const;
  BigInt count_from(int k, RootVector& v);
  QPolynomial count_q_from(int k, RootVector& v);

  int rank_;
  std::vector<RootVector> order_;
  // Suffix order_[k..] consists of distinct simple roots for k >= simple_tail_.
  int simple_tail_ = 0;
  // support_[k][i]: some root in order_[k..] has a positive i-th coordinate.
  std::vector<std::vector<char>> support_;
  std::unordered_map<Key, BigInt, KeyHash> memo_;
  std::unordered_map<Key, QPolynomial, KeyHash> memo_q_;
};

BigInt kostant_partition(const RootSystem& rs, const Weight& xi);
QPolynomial kostant_partition_q(const RootSystem& rs, const Weight& xi);

}  // namespace weylalt
