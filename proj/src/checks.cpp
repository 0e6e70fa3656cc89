#include "weylalt/checks.hpp"

#include <random>
#include <stdexcept>

#include "weylalt/enumeration.hpp"
#include "weylalt/typea.hpp"

namespace weylalt {

std::vector<WeightCase> random_dominant_cases(const RootSystemSpec& spec, std::size_t count, std::uint64_t seed,
                                              int max_coeff) {
  RootSystem rs(spec);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(0, max_coeff);
  std::uniform_int_distribution<int> small(0, 1);
  std::vector<WeightCase> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 1000 * (count + 1)) throw std::runtime_error("could not sample dominant pairs for " + spec.name());
    std::vector<int> c(rs.rank());
    for (auto& v : c) v = coeff(rng);
    Weight lambda = dominant_weight(rs, c);
    // mu is a small dominant weight so that lambda - mu is large.
    std::vector<int> d(rs.rank());
    for (auto& v : d) v = small(rng);
    Weight mu = dominant_weight(rs, d);
    if (!weight_leq(mu, lambda)) continue;
    out.push_back({spec, lambda, mu, spec.name() + " random #" + std::to_string(out.size() + 1)});
  }
  return out;
}

std::vector<WeightCase> property_cases(std::size_t per_system, std::uint64_t seed) {
  std::vector<WeightCase> out;
  RootSystem a4({Family::A, 4});
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j)
      out.push_back({a4.spec(), a4.highest_root(), a4.neg_root(i, j),
                     "A4 (h, -a_{" + std::to_string(i) + "," + std::to_string(j) + "})"});
  const RootSystemSpec systems[] = {{Family::A, 4}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}};
  std::uint64_t s = seed;
  for (const auto& spec : systems) {
    auto more = random_dominant_cases(spec, per_system, s++);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

namespace {

std::string describe(const WeightCase& c) {
  return c.label + " lambda=(" + c.lambda.str() + ") mu=(" + c.mu.str() + ")";
}

template <class F>
Report sweep(const std::string& name, const std::vector<WeightCase>& cases, F&& check) {
  Report rep{name, 0, {}};
  for (const auto& c : cases) {
    RootSystem rs(c.spec);
    Report one = check(rs, c);
    one.name = describe(c);
    rep.absorb(one);
  }
  return rep;
}

}  // namespace

Report verify_ideal_cases(const std::vector<WeightCase>& cases) {
  return sweep("order ideal", cases, [](const RootSystem& rs, const WeightCase& c) {
    AlternationSet set = compute_naive(rs, c.lambda, c.mu);
    return verify_order_ideal(rs, set);
  });
}

Report verify_bijection_cases(const std::vector<WeightCase>& cases) {
  return sweep("bijection", cases, [](const RootSystem& rs, const WeightCase& c) {
    AlternationSet set = compute(rs, c.lambda, c.mu);
    if (set.empty()) {
      Report r{"", 1, {"alternation set is empty"}};
      return r;
    }
    return verify_bijection(rs, set);
  });
}

Report verify_oracle_cases(const std::vector<WeightCase>& cases) {
  return sweep("oracle", cases, [](const RootSystem& rs, const WeightCase& c) {
    Report r{"", 0, {}};
    AlternationSet fast = compute(rs, c.lambda, c.mu);
    AlternationSet slow = compute_naive(rs, c.lambda, c.mu);
    for (const auto& e : slow.elements) r.expect(fast.contains(e), "search misses " + e.str());
    for (const auto& e : fast.elements) r.expect(slow.contains(e), "search adds " + e.str());
    r.expect(fast.right_cover_edges == slow.right_cover_edges, "cover edges differ");
    return r;
  });
}

Report verify_appendix(int min_r, int max_r) {
  Report rep{"appendix", 0, {}};
  for (int r = min_r; r <= max_r; ++r) {
    RootSystem rs({Family::A, r});
    Report t = verify_trichotomy(rs, rs.highest_root(), -rs.highest_root());
    t.name = "trichotomy A" + std::to_string(r);
    rep.absorb(t);
    rep.absorb(verify_forbidden_words(r));
  }
  return rep;
}

Report verify_catalogs(int max_r) {
  Report rep{"catalog", 0, {}};
  for (int r = 1; r <= max_r; ++r)
    for (int i = 1; i <= r; ++i)
      for (int j = i; j <= r; ++j) rep.absorb(verify_catalog(r, i, j));
  return rep;
}

Report verify_x_bijections(int max_r) {
  Report rep{"x-bijection", 0, {}};
  TypeACounts counts;
  for (int r = 1; r <= max_r; ++r) {
    rep.absorb(verify_x_bijection(r));
    auto n = static_cast<std::int64_t>(x_sequences(r).size());
    rep.expect(n == counts.h(r, 1), "|X_" + std::to_string(r) + "| = " + std::to_string(n) + " but h^1_" +
                                        std::to_string(r) + " = " + std::to_string(counts.h(r, 1)));
  }
  return rep;
}

Report verify_conjecture(int max_r) {
  Report rep{"conjecture instances", 0, {}};
  for (int r = 1; r <= max_r; ++r) {
    RootSystem rs({Family::A, r});
    for (int i = 1; i <= r; ++i)
      for (int j = i; j <= r; ++j) {
        QPolynomial got = q_multiplicity(rs, rs.highest_root(), rs.neg_root(i, j));
        QPolynomial want = QPolynomial::monomial(r + j - i + 1);
        want += QPolynomial::monomial(r + j - i);
        want -= QPolynomial::monomial(j - i + 1);
        rep.expect(got == want, "r=" + std::to_string(r) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                    ": computed " + got.str() + ", formula " + want.str());
      }
  }
  return rep;
}

Report verify_adjoint_identities(int max_r) {
  Report rep{"adjoint identities", 0, {}};
  for (int r = 1; r <= max_r; ++r) {
    RootSystem rs({Family::A, r});
    QPolynomial got = q_multiplicity(rs, rs.highest_root(), rs.zero());
    QPolynomial want;
    for (int k = 1; k <= r; ++k) want += QPolynomial::monomial(k);
    rep.expect(got == want, "m_q(h,0) in A" + std::to_string(r) + " is " + got.str() + ", expected " + want.str());
    for (const auto& root : rs.positive_roots())
      for (int sign : {1, -1}) {
        Weight mu = Rational(sign) * Weight::from_ints(root);
        BigInt m = multiplicity(rs, rs.highest_root(), mu);
        rep.expect(m == 1, "m(h, " + mu.str() + ") in A" + std::to_string(r) + " is " + m.str());
      }
  }
  return rep;
}

}  // namespace weylalt
