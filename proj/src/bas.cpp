#include "weylalt/bas.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace weylalt {

bool BasSet::contains(const WeylElement& e) const {
  return std::binary_search(members.begin(), members.end(), e, ByLengthThenWord{});
}

BasSet compute_bas(const RootSystem& rs, const AlternationSet& set) {
  if (set.empty())
    throw std::domain_error("alternation set A(" + set.lambda.str() + "; " + set.mu.str() + ") is empty");
  BasSet out{set.lambda, set.mu, {}, {}};
  for (const auto& e : set.elements)
    if (!e.is_identity() && connected_influence(rs, e)) out.members.push_back(e);
  for (std::size_t a = 0; a < out.members.size(); ++a)
    for (std::size_t b = a + 1; b < out.members.size(); ++b)
      if (!independent(rs, out.members[a], out.members[b]))
        out.dependence_edges.emplace_back(out.members[a], out.members[b]);
  return out;
}

BasSet compute_bas(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  return compute_bas(rs, compute(rs, lambda, mu));
}

std::vector<ElementSubset> independent_subsets(const RootSystem& rs, const BasSet& bas) {
  const std::size_t n = bas.members.size();
  std::vector<std::vector<char>> indep(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      indep[a][b] = a != b && independent(rs, bas.members[a], bas.members[b]);

  std::vector<ElementSubset> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> walk = [&](std::size_t start) {
    ElementSubset s;
    for (auto c : chosen) s.push_back(bas.members[c]);
    out.push_back(std::move(s));
    for (std::size_t k = start; k < n; ++k) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return indep[c][k]; });
      if (!ok) continue;
      chosen.push_back(k);
      walk(k + 1);
      chosen.pop_back();
    }
  };
  walk(0);
  return out;
}

WeylElement reconstruct(const RootSystem& rs, const ElementSubset& subset) {
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      if (!independent(rs, subset[a], subset[b]))
        throw std::invalid_argument(subset[a].str() + " and " + subset[b].str() + " are not independent");
      if (!(multiply(rs, subset[a], subset[b]) == multiply(rs, subset[b], subset[a])))
        throw std::logic_error(subset[a].str() + " and " + subset[b].str() + " are independent but do not commute");
    }
  WeylElement out = WeylElement::identity(rs);
  for (const auto& e : subset) out = multiply(rs, out, e);
  return out;
}

namespace {

std::string subset_str(const ElementSubset& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", " : "") + s[k].str();
  return out + "}";
}

}  // namespace

Report verify_bijection(const RootSystem& rs, const AlternationSet& set) {
  Report r{"bijection", 0, {}};
  BasSet bas = compute_bas(rs, set);
  for (const auto& m : bas.members) {
    r.expect(set.contains(m), "BAS member " + m.str() + " is not in the alternation set");
    r.expect(connected_influence(rs, m), "BAS member " + m.str() + " has disconnected influence");
  }
  std::unordered_map<WeylElement, ElementSubset, WeylElementHash> image;
  auto subsets = independent_subsets(rs, bas);
  for (const auto& s : subsets) {
    WeylElement p = reconstruct(rs, s);
    r.expect(set.contains(p), "product of " + subset_str(s) + " = " + p.str() + " is not in the alternation set");
    auto [it, fresh] = image.emplace(p, s);
    r.expect(fresh, "subsets " + subset_str(it->second) + " and " + subset_str(s) + " both give " + p.str());
  }
  for (const auto& e : set.elements)
    r.expect(image.count(e) > 0, "member " + e.str() + " is not a product of independent BAS elements");
  r.expect(subsets.size() == set.size(), std::to_string(subsets.size()) + " independent subsets but " +
                                             std::to_string(set.size()) + " alternation set elements");
  return r;
}

Report verify_bijection(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  return verify_bijection(rs, compute(rs, lambda, mu));
}

bool weight_leq(const Weight& nu, const Weight& mu) {
  if (nu.rank() != mu.rank()) throw std::invalid_argument("weight dimension mismatch");
  Weight d = mu - nu;
  for (const auto& c : d.coords())
    if (c.denominator() != 1 || c.numerator() < 0) return false;
  return true;
}

Report verify_monotonicity(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu) {
  if (!weight_leq(nu, mu))
    throw std::invalid_argument("precondition nu <= mu fails: mu - nu = (" + (mu - nu).str() +
                                ") is not a nonnegative integer combination of simple roots");
  Report r{"monotonicity", 0, {}};
  AlternationSet a_mu = compute(rs, lambda, mu);
  AlternationSet a_nu = compute(rs, lambda, nu);
  if (a_mu.empty() || a_nu.empty()) throw std::invalid_argument("monotonicity needs nonempty alternation sets");
  BasSet left = compute_bas(rs, a_mu);
  BasSet right = compute_bas(rs, a_nu);
  std::vector<WeylElement> expected;
  for (const auto& e : right.members)
    if (a_mu.contains(e)) expected.push_back(e);
  for (const auto& e : left.members)
    r.expect(std::binary_search(expected.begin(), expected.end(), e, ByLengthThenWord{}),
             e.str() + " is in BAS(lambda, mu) but not in BAS(lambda, nu) restricted to A(lambda, mu)");
  for (const auto& e : expected)
    r.expect(left.contains(e), e.str() + " is in BAS(lambda, nu) and A(lambda, mu) but not in BAS(lambda, mu)");
  return r;
}

const char* product_case_name(ProductCase c) {
  switch (c) {
    case ProductCase::InS: return "IN_S";
    case ProductCase::ShorterIndependentProduct: return "SHORTER_INDEPENDENT_PRODUCT";
    case ProductCase::NotInA: return "NOT_IN_A";
  }
  return "?";
}

ProductClassifier::ProductClassifier(const RootSystem& rs, const BasSet& bas, const AlternationSet& set)
    : rs_(rs), bas_(bas), set_(set) {
  for (auto& s : independent_subsets(rs, bas)) {
    int total = 0;
    for (const auto& e : s) total += e.length();
    WeylElement p = reconstruct(rs, s);
    subsets_.push_back({total, {std::move(s), std::move(p)}});
  }
  std::stable_sort(subsets_.begin(), subsets_.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
}

ProductClass ProductClassifier::classify(const WeylElement& sigma, const WeylElement& tau) const {
  if (!bas_.contains(sigma) || !bas_.contains(tau))
    throw std::invalid_argument("classify_product: arguments must be BAS members");
  if (independent(rs_, sigma, tau))
    throw std::invalid_argument("classify_product: " + sigma.str() + " and " + tau.str() + " are independent");
  WeylElement prod = multiply(rs_, sigma, tau);
  if (bas_.contains(prod)) return {ProductCase::InS, {}};
  const int bound = sigma.length() + tau.length();
  for (const auto& [total, entry] : subsets_) {
    if (total >= bound) break;
    if (entry.second == prod) return {ProductCase::ShorterIndependentProduct, entry.first};
  }
  if (!set_.contains(prod)) return {ProductCase::NotInA, {}};
  throw std::logic_error("trichotomy violation: " + sigma.str() + " * " + tau.str() + " = " + prod.str() +
                         " lies in A but is neither a BAS member nor a shorter independent product");
}

ProductClass classify_product(const RootSystem& rs, const WeylElement& sigma, const WeylElement& tau,
                              const BasSet& bas, const AlternationSet& set) {
  return ProductClassifier(rs, bas, set).classify(sigma, tau);
}

Report verify_trichotomy(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  Report r{"trichotomy", 0, {}};
  AlternationSet set = compute(rs, lambda, mu);
  BasSet bas = compute_bas(rs, set);
  ProductClassifier classifier(rs, bas, set);
  for (const auto& a : bas.members)
    for (const auto& b : bas.members) {
      if (independent(rs, a, b)) continue;
      ++r.checked;
      try {
        classifier.classify(a, b);
      } catch (const std::logic_error& e) {
        r.fail(e.what());
      }
    }
  return r;
}

}  // namespace weylalt
