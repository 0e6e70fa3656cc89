#pragma once

#include <utility>
#include <vector>

#include "weylalt/kostant.hpp"
#include "weylalt/report.hpp"
#include "weylalt/weyl.hpp"

namespace weylalt {

using CoverEdge = std::pair<WeylElement, WeylElement>;  // (lower, upper)

/// Elements of W with a nonzero term in Kostant's multiplicity formula, with
/// the right weak order covers among them.
struct AlternationSet {
  Weight lambda;
  Weight mu;
  ElementSet elements;
  std::vector<CoverEdge> right_cover_edges;  // sorted by (lower, upper)

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
  bool contains(const WeylElement& e) const { return elements.count(e) > 0; }
};

/// sigma(lambda + rho) - mu - rho, the argument of the partition function.
Weight alternation_argument(const RootSystem& rs, const Weight& lambda, const Weight& mu, const WeylElement& sigma);

/// p(sigma(lambda + rho) - mu - rho) > 0. Since every simple root is a positive
/// root this holds exactly when the argument has nonnegative integer coordinates.
bool contains(const RootSystem& rs, const Weight& lambda, const Weight& mu, const WeylElement& sigma);

/// Breadth-first search from the identity that only expands accepted elements.
/// Pruning is valid for dominant integral lambda; any other lambda falls back to
/// compute_naive with a warning on std::clog.
AlternationSet compute(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// Filters the whole group. Throws std::length_error above the group cap.
AlternationSet compute_naive(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                             std::size_t cap = group_cap_from_env());

BigInt multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu);
QPolynomial q_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu);
BigInt multiplicity(const RootSystem& rs, const AlternationSet& set);
QPolynomial q_multiplicity(const RootSystem& rs, const AlternationSet& set);

/// Every left and right cover-below of a member is a member.
Report verify_order_ideal(const RootSystem& rs, const AlternationSet& set);
Report verify_order_ideal(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// Every consecutive subword of each member's witness word is a member.
Report verify_subword_closure(const RootSystem& rs, const AlternationSet& set);
Report verify_subword_closure(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// Dominant integral weight with nonnegative integer coefficients on the
/// fundamental weights.
Weight dominant_weight(const RootSystem& rs, const std::vector<int>& fundamental_coeffs);

}  // namespace weylalt
