#include "weylalt/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "weylalt/altset.hpp"

namespace weylalt {

std::int64_t fibonacci(int n) {
  if (n < -1 || n > 92) throw std::out_of_range("fibonacci index " + std::to_string(n) + " out of range");
  if (n <= 0) return 0;
  std::int64_t a = 0, b = 1;
  for (int k = 1; k < n; ++k) {
    std::int64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

std::int64_t lucas(int n) {
  if (n < 0 || n > 90) throw std::out_of_range("lucas index " + std::to_string(n) + " out of range");
  std::int64_t a = 2, b = 1;
  for (int k = 0; k < n; ++k) {
    std::int64_t c = a + b;
    a = b;
    b = c;
  }
  return a;
}

std::int64_t count_neg_simple(int r, int i) {
  if (r < 1 || i < 1 || i > r)
    throw std::invalid_argument("count_neg_simple needs 1 <= i <= r, got r=" + std::to_string(r) + " i=" + std::to_string(i));
  if (i == 1 || i == r) return fibonacci(r + 1);
  return fibonacci(r) + fibonacci(i - 1) * fibonacci(r - i - 1) + fibonacci(i - 2) * fibonacci(r - i);
}

std::int64_t count_neg_height2(int r, int i) {
  if (r < 2 || i < 1 || i > r - 1)
    throw std::invalid_argument("count_neg_height2 needs 1 <= i <= r-1, got r=" + std::to_string(r) + " i=" + std::to_string(i));
  if (i == 1 || i == r - 1) return 3 * fibonacci(r - 1);
  return fibonacci(r) + fibonacci(i - 2) * fibonacci(r - i) + 3 * fibonacci(i - 1) * fibonacci(r - i - 1) +
         fibonacci(i) * fibonacci(r - i - 2);
}

namespace {

void check_rij(int r, int i, int j) {
  if (!(1 <= i && i <= j && j <= r))
    throw std::invalid_argument("need 1 <= i <= j <= r, got r=" + std::to_string(r) + " i=" + std::to_string(i) +
                                " j=" + std::to_string(j));
}

}  // namespace

std::int64_t TypeACounts::alt(int r, int i, int j) {
  check_rij(r, i, j);
  std::vector<int> key{r, i, j};
  if (auto it = alt_.find(key); it != alt_.end()) return it->second;
  RootSystem rs({Family::A, r});
  auto n = static_cast<std::int64_t>(compute(rs, rs.highest_root(), rs.neg_root(i, j)).size());
  alt_.emplace(key, n);
  return n;
}

std::int64_t TypeACounts::alt_positive(int r, int i, int j) {
  check_rij(r, i, j);
  std::vector<int> key{r, i, j};
  if (auto it = pos_.find(key); it != pos_.end()) return it->second;
  RootSystem rs({Family::A, r});
  auto n = static_cast<std::int64_t>(compute(rs, rs.highest_root(), -rs.neg_root(i, j)).size());
  pos_.emplace(key, n);
  return n;
}

std::int64_t TypeACounts::p(int r, int i) {
  check_rij(r, i, r);
  std::vector<int> key{r, i};
  if (auto it = p_.find(key); it != p_.end()) return it->second;
  RootSystem rs({Family::A, r});
  AlternationSet set = compute(rs, rs.highest_root(), rs.neg_root(i, r));
  std::int64_t n = 0;
  for (const auto& e : set.elements)
    if (!influence(e).count(r)) ++n;
  p_.emplace(key, n);
  return n;
}

std::int64_t TypeACounts::h(int r, int i) { return alt(r, i, r); }

std::int64_t p_value(int r, int i) { return TypeACounts().p(r, i); }
std::int64_t h_value(int r, int i) { return TypeACounts().h(r, i); }

SequenceTable sequence_table(const std::string& name, int max_r, TypeACounts& counts) {
  SequenceTable t{name, {}};
  for (int r = 1; r <= max_r; ++r)
    for (int i = 1; i <= r; ++i) {
      if (name == "p") t.values[{r, i}] = counts.p(r, i);
      else if (name == "h") t.values[{r, i}] = counts.h(r, i);
      else if (name == "A-count")
        for (int j = i; j <= r; ++j) t.values[{r, i, j}] = counts.alt(r, i, j);
      else throw std::invalid_argument("unknown sequence '" + name + "' (expected p, h or A-count)");
    }
  return t;
}

namespace {

std::string idx(std::initializer_list<std::pair<const char*, int>> items) {
  std::string out;
  for (const auto& [k, v] : items) out += (out.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
  return out;
}

std::string eq(std::int64_t lhs, std::int64_t rhs) { return std::to_string(lhs) + " != " + std::to_string(rhs); }

}  // namespace

Report verify_recurrences(int max_r, TypeACounts& c) {
  if (max_r < 1 || max_r > 14) throw std::invalid_argument("verify_recurrences: max_r must be in 1..14");
  Report rep{"recurrences", 0, {}};

  // Fibonacci recurrence in r for fixed -a_{i,j}.
  for (int r = 3; r <= max_r; ++r)
    for (int i = 1; i <= r - 2; ++i)
      for (int j = i; j <= r - 2; ++j) {
        auto lhs = c.alt(r, i, j), rhs = c.alt(r - 1, i, j) + c.alt(r - 2, i, j);
        rep.expect(lhs == rhs, "two-term recurrence " + idx({{"r", r}, {"i", i}, {"j", j}}) + ": " + eq(lhs, rhs));
      }
  // Four-term recurrences for p and h.
  for (int i = 1; i + 4 <= max_r; ++i)
    for (int r = i + 4; r <= max_r; ++r) {
      auto lp = c.p(r, i), rp = c.p(r - 1, i) + c.p(r - 2, i) + 3 * c.p(r - 3, i) + c.p(r - 4, i);
      rep.expect(lp == rp, "p four-term " + idx({{"r", r}, {"i", i}}) + ": " + eq(lp, rp));
      auto lh = c.h(r, i), rh = c.h(r - 1, i) + c.h(r - 2, i) + 3 * c.h(r - 3, i) + c.h(r - 4, i);
      rep.expect(lh == rh, "h four-term " + idx({{"r", r}, {"i", i}}) + ": " + eq(lh, rh));
    }
  // Diagonal recurrences. The p version is checked from i = 3, where the
  // trivariate series also relies on it.
  for (int r = 3; r <= max_r; ++r)
    for (int i = 3; i <= r; ++i) {
      auto lp = c.p(r, i), rp = c.p(r - 1, i - 1) + c.p(r - 2, i - 2);
      rep.expect(lp == rp, "p diagonal " + idx({{"r", r}, {"i", i}}) + ": " + eq(lp, rp));
      auto lh = c.h(r, i), rh = c.h(r - 1, i - 1) + c.h(r - 2, i - 2);
      rep.expect(lh == rh, "h diagonal " + idx({{"r", r}, {"i", i}}) + ": " + eq(lh, rh));
    }
  for (int r = 2; r <= max_r; ++r)
    for (int i = 1; i < r; ++i) {
      auto a = c.alt(r, i, r - 1), p = c.p(r, i);
      rep.expect(a == p, "|A(h,-a_{i,r-1})| = p " + idx({{"r", r}, {"i", i}}) + ": " + eq(a, p));
      auto h = c.h(r, i), s = c.p(r, i) + c.p(r - 1, i);
      rep.expect(h == s, "h = p + p " + idx({{"r", r}, {"i", i}}) + ": " + eq(h, s));
    }
  return rep;
}

Report verify_recurrences(int max_r) {
  TypeACounts c;
  return verify_recurrences(max_r, c);
}

Report verify_closed_forms(int max_r, TypeACounts& c) {
  Report rep{"closed forms", 0, {}};
  for (int r = 2; r <= max_r; ++r) {
    for (int i = 1; i <= r; ++i) {
      if (i != 1 && i != r && r <= 2) continue;
      auto got = c.alt(r, i, i), want = count_neg_simple(r, i);
      rep.expect(got == want, "|A(h,-a_i)| " + idx({{"r", r}, {"i", i}}) + ": " + eq(got, want));
    }
    for (int i = 1; i <= r - 1; ++i) {
      if (i != 1 && i != r - 1 && r < 4) continue;
      auto got = c.alt(r, i, i + 1), want = count_neg_height2(r, i);
      rep.expect(got == want, "|A(h,-a_i-a_{i+1})| " + idx({{"r", r}, {"i", i}}) + ": " + eq(got, want));
    }
  }
  return rep;
}

Report verify_fibonacci_subsets(int max_n) {
  if (max_n < 0 || max_n > 24) throw std::invalid_argument("verify_fibonacci_subsets: n must be in 0..24");
  Report rep{"fibonacci subsets", 0, {}};
  for (int n = 0; n <= max_n; ++n) {
    std::int64_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      if ((mask & (mask >> 1)) == 0) ++count;
    rep.expect(count == fibonacci(n + 2), "n=" + std::to_string(n) + ": " + eq(count, fibonacci(n + 2)));
  }
  return rep;
}

Report verify_positive_root_counts(int max_r, TypeACounts& c) {
  Report rep{"positive root counts", 0, {}};
  for (int r = 1; r <= max_r; ++r)
    for (int i = 1; i <= r; ++i)
      for (int j = i; j <= r; ++j) {
        auto got = c.alt_positive(r, i, j), want = fibonacci(i) * fibonacci(r - j + 1);
        rep.expect(got == want, "|A(h,a_{i,j})| " + idx({{"r", r}, {"i", i}, {"j", j}}) + ": " + eq(got, want));
      }
  return rep;
}

Report verify_zero_weight_counts(int max_r) {
  Report rep{"zero weight counts", 0, {}};
  for (int r = 1; r <= max_r; ++r) {
    RootSystem rs({Family::A, r});
    auto got = static_cast<std::int64_t>(compute(rs, rs.highest_root(), rs.zero()).size());
    rep.expect(got == fibonacci(r), "|A_" + std::to_string(r) + "(h,0)|: " + eq(got, fibonacci(r)));
  }
  return rep;
}

// ---------------------------------------------------------------------------

PowerSeries::PowerSeries(std::vector<char> variables, std::vector<int> truncation)
    : vars_(std::move(variables)), trunc_(std::move(truncation)) {
  if (vars_.size() != trunc_.size()) throw std::invalid_argument("one truncation per variable expected");
  for (int t : trunc_)
    if (t < 0) throw std::invalid_argument("negative truncation");
}

PowerSeries PowerSeries::constant(std::vector<char> variables, std::vector<int> truncation, const BigRational& c) {
  PowerSeries out(std::move(variables), std::move(truncation));
  out.set(Exponents(out.vars_.size(), 0), c);
  return out;
}

PowerSeries PowerSeries::variable(std::vector<char> variables, std::vector<int> truncation, char name) {
  PowerSeries out(std::move(variables), std::move(truncation));
  Exponents e(out.vars_.size(), 0);
  e[out.var_index(name)] = 1;
  out.set(e, 1);
  return out;
}

std::size_t PowerSeries::var_index(char name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw std::invalid_argument(std::string("unknown series variable '") + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

bool PowerSeries::within(const Exponents& e) const {
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] > trunc_[k]) return false;
  return true;
}

BigRational PowerSeries::coeff(const Exponents& e) const {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent tuple has the wrong length");
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? BigRational(0) : it->second;
}

void PowerSeries::set(const Exponents& e, const BigRational& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent tuple has the wrong length");
  if (!within(e)) return;
  if (c == 0) coeffs_.erase(e);
  else coeffs_[e] = c;
}

void PowerSeries::check_compatible(const PowerSeries& o) const {
  if (vars_ != o.vars_ || trunc_ != o.trunc_) throw std::invalid_argument("power series over different rings");
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) + c);
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) - c);
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  a.check_compatible(b);
  PowerSeries out(a.vars_, a.trunc_);
  PowerSeries::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) {
      bool ok = true;
      for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] = ea[k] + eb[k];
        if (e[k] > a.trunc_[k]) ok = false;
      }
      if (!ok) continue;
      auto& slot = out.coeffs_[e];
      slot += ca * cb;
    }
  for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();)
    it = it->second == 0 ? out.coeffs_.erase(it) : std::next(it);
  return out;
}

PowerSeries PowerSeries::scaled(const BigRational& c) const {
  PowerSeries out(vars_, trunc_);
  for (const auto& [e, v] : coeffs_) out.set(e, v * c);
  return out;
}

PowerSeries PowerSeries::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  PowerSeries out = constant(vars_, trunc_, 1);
  for (int n = 0; n < k; ++n) out = out * *this;
  return out;
}

PowerSeries PowerSeries::divided_by(const PowerSeries& den) const {
  check_compatible(den);
  const Exponents zero(vars_.size(), 0);
  BigRational d0 = den.coeff(zero);
  if (d0 == 0) throw std::domain_error("series division: divisor has zero constant term");
  std::vector<std::pair<Exponents, BigRational>> tail;
  for (const auto& [e, c] : den.coeffs_)
    if (e != zero) tail.emplace_back(e, c);

  // q[e] = (n[e] - sum_{d != 0} den[d] q[e - d]) / den[0], visiting exponents
  // in lexicographic order so every q[e - d] is already known.
  PowerSeries q(vars_, trunc_);
  Exponents e(vars_.size(), 0), prev(vars_.size());
  while (true) {
    BigRational acc = coeff(e);
    for (const auto& [d, c] : tail) {
      bool ok = true;
      for (std::size_t k = 0; k < e.size(); ++k) {
        prev[k] = e[k] - d[k];
        if (prev[k] < 0) ok = false;
      }
      if (!ok) continue;
      auto it = q.coeffs_.find(prev);
      if (it != q.coeffs_.end()) acc -= c * it->second;
    }
    if (acc != 0) q.coeffs_[e] = acc / d0;
    std::size_t k = e.size();
    while (k > 0) {
      --k;
      if (e[k] < trunc_[k]) {
        ++e[k];
        break;
      }
      e[k] = 0;
      if (k == 0) return q;
    }
    if (e.empty()) return q;
  }
}

PowerSeries PowerSeries::divided_by_variable(char name) const {
  const std::size_t v = var_index(name);
  if (trunc_[v] == 0) throw std::domain_error("cannot divide: truncation is already 0");
  std::vector<int> t = trunc_;
  --t[v];
  PowerSeries out(vars_, t);
  for (const auto& [e, c] : coeffs_) {
    if (e[v] == 0) throw std::domain_error(std::string("series has a term free of '") + name + "'");
    Exponents f = e;
    --f[v];
    out.set(f, c);
  }
  return out;
}

PowerSeries PowerSeries::truncated(std::vector<int> truncation) const {
  PowerSeries out(vars_, std::move(truncation));
  for (std::size_t k = 0; k < trunc_.size(); ++k)
    if (out.trunc_[k] > trunc_[k]) throw std::invalid_argument("cannot raise truncation");
  for (const auto& [e, c] : coeffs_) out.set(e, c);
  return out;
}

std::string PowerSeries::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    bool neg = c < 0;
    BigRational mag = neg ? BigRational(-c) : c;
    std::string cs = mag.str();
    std::string term;
    if (mono.empty()) term = cs;
    else if (mag == 1) term = mono;
    else term = cs + "*" + mono;
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

PowerSeries series_expand(const PowerSeries& numerator, const PowerSeries& denominator) {
  return numerator.divided_by(denominator);
}

namespace {

struct Ring {
  std::vector<char> vars;
  std::vector<int> trunc;
  PowerSeries one() const { return PowerSeries::constant(vars, trunc, 1); }
  PowerSeries c(long v) const { return PowerSeries::constant(vars, trunc, v); }
  PowerSeries var(char n) const { return PowerSeries::variable(vars, trunc, n); }
};

// 1 - X - X^2 - 3X^3 - X^4
PowerSeries quartic(const Ring& ring, const PowerSeries& X) {
  return ring.one() - X - X.pow(2) - ring.c(3) * X.pow(3) - X.pow(4);
}

// 1 - Y - Y^2
PowerSeries fib_den(const Ring& ring, const PowerSeries& Y) { return ring.one() - Y - Y.pow(2); }

PowerSeries p_closed(const Ring& ring, const PowerSeries& X, const PowerSeries& S) {
  PowerSeries num = X * S * (X.pow(4) * S + ring.c(3) * X.pow(3) * S + X + ring.one());
  return num.divided_by(quartic(ring, X) * fib_den(ring, X * S));
}

// Equal to (1 + X) P(X, S) + (XS)^2 / (1 - XS - (XS)^2), since h^i_r = p^i_r + p^i_{r-1}
// for r > i and h^i_i - p^i_i = F_{i-1}.
PowerSeries h_closed(const Ring& ring, const PowerSeries& X, const PowerSeries& S) {
  PowerSeries num = X * S *
                    (X.pow(4) * S + ring.c(2) * X.pow(3) * S - X.pow(2) * S + X * S + X.pow(2) + ring.c(2) * X +
                     ring.one());
  return num.divided_by(quartic(ring, X) * fib_den(ring, X * S));
}

PowerSeries h_closed_printed(const Ring& ring, const PowerSeries& X, const PowerSeries& S) {
  PowerSeries num =
      X * S * (X.pow(5) * S + ring.c(3) * X.pow(4) * S - X * S + X.pow(2) + ring.c(2) * X + ring.one());
  return num.divided_by(quartic(ring, X) * fib_den(ring, X * S));
}

PowerSeries univariate(const std::vector<long>& numerator, int truncation) {
  Ring ring{{'x'}, {truncation}};
  PowerSeries x = ring.var('x');
  PowerSeries num(ring.vars, ring.trunc);
  for (std::size_t k = 0; k < numerator.size(); ++k) num += ring.c(numerator[k]) * x.pow(static_cast<int>(k));
  return series_expand(num, quartic(ring, x));
}

bool integral_value(const BigRational& v, std::int64_t& out) {
  if (denominator(v) != 1) return false;
  BigInt n = numerator(v);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) return false;
  out = static_cast<std::int64_t>(n);
  return true;
}

std::string ratstr(const BigRational& v) { return v.str(); }

}  // namespace

PowerSeries p_series(int i, int truncation) {
  switch (i) {
    case 1: return univariate({0, 1, 1}, truncation);
    case 2: return univariate({0, 0, 1, 1, 3, 1}, truncation);
    case 3: return univariate({0, 0, 0, 2, 2, 3, 1}, truncation);
  }
  throw std::invalid_argument("closed forms exist for i = 1, 2, 3 only");
}

PowerSeries h_series(int i, int truncation) {
  switch (i) {
    case 1: return univariate({0, 1, 2, 1}, truncation);
    case 2: return univariate({0, 0, 2, 1, 3, 1}, truncation);
    case 3: return univariate({0, 0, 0, 3, 3, 4, 1}, truncation);
  }
  throw std::invalid_argument("closed forms exist for i = 1, 2, 3 only");
}

PowerSeries p_bivariate(int truncation) {
  Ring ring{{'x', 's'}, {truncation, truncation}};
  return p_closed(ring, ring.var('x'), ring.var('s'));
}

PowerSeries h_bivariate(int truncation) {
  Ring ring{{'x', 's'}, {truncation, truncation}};
  return h_closed(ring, ring.var('x'), ring.var('s'));
}

PowerSeries h_bivariate_printed(int truncation) {
  Ring ring{{'x', 's'}, {truncation, truncation}};
  return h_closed_printed(ring, ring.var('x'), ring.var('s'));
}

PowerSeries h2_series_printed(int truncation) { return univariate({0, 0, 0, 2, 1, 3, 1}, truncation); }

PowerSeries grand_series(int truncation) {
  // Work with one extra power of t so that dividing by t keeps `truncation`.
  Ring ring{{'x', 's', 't'}, {truncation, truncation, truncation + 1}};
  PowerSeries x = ring.var('x'), s = ring.var('s'), t = ring.var('t');
  PowerSeries xt = x * t;
  PowerSeries inner = (ring.one() - x) * t * h_closed(ring, xt, s) + p_closed(ring, xt, s) -
                      (x * s * t).divided_by(fib_den(ring, x * s * t));
  PowerSeries shifted = inner.divided_by_variable('t');
  Ring out{{'x', 's', 't'}, {truncation, truncation, truncation}};
  return shifted.divided_by(fib_den(out, out.var('x')));
}

Report verify_generating_functions(int max_r, TypeACounts& c, int truncation) {
  if (max_r < 1 || max_r > truncation)
    throw std::invalid_argument("verify_generating_functions needs 1 <= max_r <= truncation");
  Report rep{"generating functions", 0, {}};
  auto check = [&](const BigRational& coeff, std::int64_t want, const std::string& where) {
    std::int64_t got = 0;
    bool ok = integral_value(coeff, got) && got == want;
    rep.expect(ok, where + ": series gives " + ratstr(coeff) + ", definition gives " + std::to_string(want));
  };

  PowerSeries pb = p_bivariate(truncation), hb = h_bivariate(truncation);
  for (int i = 1; i <= 3; ++i) {
    PowerSeries pu = p_series(i, truncation), hu = h_series(i, truncation);
    for (int r = 0; r <= max_r; ++r) {
      std::string at = " i=" + std::to_string(i) + " r=" + std::to_string(r);
      check(pu.coeff({r}), r >= i ? c.p(r, i) : 0, "P^i(x)" + at);
      check(hu.coeff({r}), r >= i ? c.h(r, i) : 0, "H^i(x)" + at);
      // The univariate forms must also be the s^i slices of the bivariate ones.
      rep.expect(pu.coeff({r}) == pb.coeff({r, i}), "P^i(x) differs from [s^i]P(x,s) at" + at);
      rep.expect(hu.coeff({r}) == hb.coeff({r, i}), "H^i(x) differs from [s^i]H(x,s) at" + at);
    }
  }
  for (int r = 0; r <= max_r; ++r)
    for (int i = 0; i <= max_r; ++i) {
      std::string at = " r=" + std::to_string(r) + " i=" + std::to_string(i);
      bool valid = i >= 1 && i <= r;
      check(pb.coeff({r, i}), valid ? c.p(r, i) : 0, "[x^r s^i]P(x,s)" + at);
      check(hb.coeff({r, i}), valid ? c.h(r, i) : 0, "[x^r s^i]H(x,s)" + at);
    }
  PowerSeries g = grand_series(truncation);
  for (int r = 0; r <= max_r; ++r)
    for (int i = 0; i <= max_r; ++i)
      for (int j = 0; j <= max_r; ++j) {
        bool valid = 1 <= i && i <= j && j <= r;
        check(g.coeff({r, i, j}), valid ? c.alt(r, i, j) : 0,
              "[x^r s^i t^j] r=" + std::to_string(r) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
  return rep;
}

Report verify_generating_functions(int max_r) {
  TypeACounts c;
  return verify_generating_functions(max_r, c);
}

std::vector<CountRow> count_sweep(int max_r, int jobs) {
  if (max_r < 1 || max_r > kDefaultTruncation) throw std::invalid_argument("count_sweep: max_r out of range");
  std::vector<CountRow> rows;
  for (int r = 1; r <= max_r; ++r)
    for (int i = 1; i <= r; ++i)
      for (int j = i; j <= r; ++j) rows.push_back({r, i, j, 0, 0, false});

  PowerSeries g = grand_series(std::max(max_r, 1));
  for (auto& row : rows) {
    std::int64_t v = -1;
    if (!integral_value(g.coeff({row.r, row.i, row.j}), v)) v = -1;
    row.formula_value = v;
  }

  jobs = std::max(1, jobs);
  std::size_t next = 0;
  std::mutex m;
  auto worker = [&] {
    while (true) {
      std::size_t k;
      {
        std::lock_guard lock(m);
        if (next >= rows.size()) return;
        k = next++;
      }
      auto& row = rows[k];
      RootSystem rs({Family::A, row.r});
      row.count = static_cast<std::int64_t>(compute(rs, rs.highest_root(), rs.neg_root(row.i, row.j)).size());
      row.match = row.count == row.formula_value;
    }
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

}  // namespace weylalt
