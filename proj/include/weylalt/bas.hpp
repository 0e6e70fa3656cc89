#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "weylalt/altset.hpp"

namespace weylalt {

/// Basic allowable subwords: the connected-influence members of an
/// alternation set, with the pairs that fail to be independent.
struct BasSet {
  Weight lambda;
  Weight mu;
  std::vector<WeylElement> members;  // sorted by (length, word); identity excluded
  std::vector<std::pair<WeylElement, WeylElement>> dependence_edges;

  std::size_t size() const { return members.size(); }
  bool contains(const WeylElement& e) const;
};

using ElementSubset = std::vector<WeylElement>;

/// Throws std::domain_error when the alternation set is empty.
BasSet compute_bas(const RootSystem& rs, const AlternationSet& set);
BasSet compute_bas(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// All pairwise independent subsets of the members, the empty one included.
/// Subsets list members in member order; the enumeration order is fixed.
std::vector<ElementSubset> independent_subsets(const RootSystem& rs, const BasSet& bas);

/// Product of a pairwise independent subset. Throws std::invalid_argument if two
/// members are not independent and std::logic_error if two fail to commute.
WeylElement reconstruct(const RootSystem& rs, const ElementSubset& subset);

Report verify_bijection(const RootSystem& rs, const AlternationSet& set);
Report verify_bijection(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// True when mu - nu is a nonnegative integer combination of simple roots.
bool weight_leq(const Weight& nu, const Weight& mu);

/// BAS(lambda, mu) = BAS(lambda, nu) intersected with A(lambda, mu), for nu <= mu.
/// Throws std::invalid_argument unless nu <= mu and both sets are nonempty.
Report verify_monotonicity(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu);

enum class ProductCase { InS, ShorterIndependentProduct, NotInA };

const char* product_case_name(ProductCase c);

struct ProductClass {
  ProductCase kind;
  ElementSubset witness;  // only for ShorterIndependentProduct
};

/// Classifies sigma*tau for dependent members of a BAS. Precomputes the
/// independent subsets once so that many pairs can be classified cheaply.
class ProductClassifier {
 public:
  ProductClassifier(const RootSystem& rs, const BasSet& bas, const AlternationSet& set);

  /// Throws std::invalid_argument if sigma or tau is not a member or they are
  /// independent, and std::logic_error if none of the three cases applies.
  ProductClass classify(const WeylElement& sigma, const WeylElement& tau) const;

 private:
  const RootSystem& rs_;
  const BasSet& bas_;
  const AlternationSet& set_;
  // (length sum, subset, product), sorted by length sum.
  std::vector<std::pair<int, std::pair<ElementSubset, WeylElement>>> subsets_;
};

ProductClass classify_product(const RootSystem& rs, const WeylElement& sigma, const WeylElement& tau,
                              const BasSet& bas, const AlternationSet& set);

/// Classifies every ordered dependent pair of BAS(lambda, mu).
Report verify_trichotomy(const RootSystem& rs, const Weight& lambda, const Weight& mu);

}  // namespace weylalt
