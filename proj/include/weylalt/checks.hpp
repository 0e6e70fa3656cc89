#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylalt/bas.hpp"

namespace weylalt {

/// A root system with one (lambda, mu) pair.
struct WeightCase {
  RootSystemSpec spec;
  Weight lambda;
  Weight mu;
  std::string label;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Random pairs with lambda and mu dominant integral and lambda - mu a
/// nonnegative integer combination of simple roots. Deterministic in the seed.
std::vector<WeightCase> random_dominant_cases(const RootSystemSpec& spec, std::size_t count, std::uint64_t seed,
                                              int max_coeff = 5);

/// A_4 with lambda = highest root and mu ranging over the 10 negative roots,
/// then `per_system` random dominant pairs in each of A_4, B_3, C_3, D_4.
std::vector<WeightCase> property_cases(std::size_t per_system = 20, std::uint64_t seed = kDefaultSeed);

Report verify_ideal_cases(const std::vector<WeightCase>& cases);
Report verify_bijection_cases(const std::vector<WeightCase>& cases);
/// Breadth-first compute equals the whole-group filter, cover edges included.
Report verify_oracle_cases(const std::vector<WeightCase>& cases);

/// Dependent-pair trichotomy for BAS(h, -h) and the forbidden words, A_r for
/// min_r <= r <= max_r.
Report verify_appendix(int min_r, int max_r);

/// Catalog equality for every (i, j), 1 <= r <= max_r.
Report verify_catalogs(int max_r);

/// X_r bijection for r <= max_r, including |X_r| = h^1_r.
Report verify_x_bijections(int max_r);

/// m_q(h, -a_{i,j}) = q^{r+j-i+1} + q^{r+j-i} - q^{j-i+1} for 1 <= i <= j <= r <= max_r.
/// This checks instances of a conjectured formula; it proves nothing.
Report verify_conjecture(int max_r);

/// m_q(h, 0) = q + ... + q^r and m(h, a) = 1 for every root a, r <= max_r.
Report verify_adjoint_identities(int max_r);

}  // namespace weylalt
