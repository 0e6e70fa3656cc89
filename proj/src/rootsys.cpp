#include "weylalt/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace weylalt {

char family_letter(Family family) {
  switch (family) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(std::string_view text) {
  if (text == "A" || text == "a") return Family::A;
  if (text == "B" || text == "b") return Family::B;
  if (text == "C" || text == "c") return Family::C;
  if (text == "D" || text == "d") return Family::D;
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected A, B, C or D)");
}

void RootSystemSpec::validate() const {
  int min_rank = 1;
  switch (family) {
    case Family::A: min_rank = 1; break;
    case Family::B:
    case Family::C: min_rank = 2; break;
    case Family::D: min_rank = 4; break;
  }
  if (rank < min_rank) {
    std::ostringstream os;
    os << "rank " << rank << " invalid for type " << family_letter(family) << ": requires rank >= "
       << min_rank;
    throw std::invalid_argument(os.str());
  }
}

std::string RootSystemSpec::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

// ---------------------------------------------------------------------------
// Weight

Weight Weight::from_ints(std::span<const int> coords) {
  std::vector<Rational> out;
  out.reserve(coords.size());
  for (int c : coords) out.emplace_back(c);
  return Weight(std::move(out));
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.numerator() == 0; });
}

bool Weight::has_integer_coords() const {
  return std::all_of(coords_.begin(), coords_.end(), is_integer);
}

RootVector Weight::to_ints() const {
  RootVector out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    if (!is_integer(c)) throw std::domain_error("weight " + str() + " has fractional coordinates");
    out.push_back(static_cast<int>(c.numerator()));
  }
  return out;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank() != rank()) throw std::invalid_argument("weight dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank() != rank()) throw std::invalid_argument("weight dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& scale) {
  for (auto& c : coords_) c *= scale;
  return *this;
}

std::string Weight::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += to_string(coords_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << '(' << w.str() << ')'; }

// ---------------------------------------------------------------------------
// RootSystem

namespace {

// Gram matrix under the fixed normalisation: long roots of A/D and B have
// squared length 2, the short root of B has 1; C has short roots 2, long 4.
std::vector<Rational> classical_gram(const RootSystemSpec& spec) {
  const int r = spec.rank;
  std::vector<Rational> g(static_cast<std::size_t>(r * r), Rational(0));
  auto at = [&](int i, int j) -> Rational& { return g[i * r + j]; };
  for (int i = 0; i < r; ++i) at(i, i) = 2;
  switch (spec.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      break;
    case Family::B:
      for (int i = 0; i + 1 < r; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      at(r - 1, r - 1) = 1;
      break;
    case Family::C:
      for (int i = 0; i + 2 < r; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      at(r - 2, r - 1) = at(r - 1, r - 2) = -2;
      at(r - 1, r - 1) = 4;
      break;
    case Family::D:
      for (int i = 0; i + 2 < r; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      at(r - 3, r - 1) = at(r - 1, r - 3) = -1;
      break;
  }
  return g;
}

// Solves M x = b over the rationals (M square, nonsingular).
std::vector<Rational> solve(std::vector<Rational> m, std::vector<Rational> b, int n) {
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot * n + col].numerator() == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular Cartan matrix");
    if (pivot != col) {
      for (int k = 0; k < n; ++k) std::swap(m[pivot * n + k], m[col * n + k]);
      std::swap(b[pivot], b[col]);
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row * n + col].numerator() == 0) continue;
      Rational f = m[row * n + col] / m[col * n + col];
      for (int k = 0; k < n; ++k) m[row * n + k] -= f * m[col * n + k];
      b[row] -= f * b[col];
    }
  }
  for (int i = 0; i < n; ++i) b[i] /= m[i * n + i];
  return b;
}

}  // namespace

RootSystem::RootSystem(RootSystemSpec spec) : spec_(spec) {
  spec_.validate();
  const int r = spec_.rank;
  gram_ = classical_gram(spec_);
  cartan_.resize(static_cast<std::size_t>(r * r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rational c = Rational(2) * gram(i, j) / gram(j, j);
      cartan_[i * r + j] = static_cast<int>(c.numerator());
    }

  // Closure by height. For a root b != a_i the a_i-string through b is
  // b - p a_i, ..., b + q a_i with p - q = <b, a_i^vee>, so b + a_i is a root
  // iff p > <b, a_i^vee>. All roots of lower height are already known.
  std::set<RootVector> known;
  std::vector<RootVector> layer;
  for (int i = 0; i < r; ++i) {
    RootVector e(r, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  while (!layer.empty()) {
    std::set<RootVector> next;
    for (const auto& b : layer) {
      for (int i = 0; i < r; ++i) {
        int pairing = 0;  // <b, a_i^vee> = sum_j b_j cartan(j, i)
        for (int j = 0; j < r; ++j) pairing += b[j] * cartan(j, i);
        int p = 0;
        RootVector down = b;
        while (true) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          RootVector up = b;
          ++up[i];
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }
  positive_roots_.assign(known.begin(), known.end());
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const RootVector& a, const RootVector& b) {
              int ha = height(a), hb = height(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });

  rho_ = Weight(static_cast<std::size_t>(r));
  for (const auto& b : positive_roots_) rho_ += Weight::from_ints(b);
  rho_ *= Rational(1, 2);

  // <w_k, a_i^vee> = delta_ki  <=>  sum_j c_j cartan(j, i) = delta_ki.
  std::vector<Rational> transposed(static_cast<std::size_t>(r * r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) transposed[i * r + j] = Rational(cartan(j, i));
  for (int k = 0; k < r; ++k) {
    std::vector<Rational> e(r, Rational(0));
    e[k] = 1;
    fundamental_.emplace_back(solve(transposed, e, r));
  }
}

int RootSystem::root_index(std::span<const int> coords) const {
  RootVector key(coords.begin(), coords.end());
  auto less = [](const RootVector& a, const RootVector& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  };
  auto it = std::lower_bound(positive_roots_.begin(), positive_roots_.end(), key, less);
  if (it == positive_roots_.end() || *it != key) return -1;
  return static_cast<int>(it - positive_roots_.begin());
}

bool RootSystem::is_root(std::span<const int> coords) const {
  if (root_index(coords) >= 0) return true;
  RootVector neg(coords.begin(), coords.end());
  for (int& c : neg) c = -c;
  return root_index(neg) >= 0;
}

Weight RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("simple root index " + std::to_string(i) + " out of range");
  Weight w(static_cast<std::size_t>(rank()));
  w[i - 1] = 1;
  return w;
}

Weight RootSystem::neg_root(int i, int j) const {
  if (i < 1 || j > rank() || i > j) {
    std::ostringstream os;
    os << "neg_root(" << i << ", " << j << ") requires 1 <= i <= j <= " << rank();
    throw std::out_of_range(os.str());
  }
  Weight w(static_cast<std::size_t>(rank()));
  for (int k = i; k <= j; ++k) w[k - 1] = -1;
  return w;
}

bool RootSystem::adjacent(int i, int j) const {
  return i != j && gram(i - 1, j - 1).numerator() != 0;
}

RootSystem build_root_system(RootSystemSpec spec) { return RootSystem(spec); }

Rational inner_product(const RootSystem& rs, const Weight& v, const Weight& w) {
  const int r = rs.rank();
  if (static_cast<int>(v.rank()) != r || static_cast<int>(w.rank()) != r)
    throw std::invalid_argument("inner_product: dimension mismatch");
  Rational total(0);
  for (int i = 0; i < r; ++i) {
    if (v[i].numerator() == 0) continue;
    Rational row(0);
    for (int j = 0; j < r; ++j) row += rs.gram(i, j) * w[j];
    total += v[i] * row;
  }
  return total;
}

Rational coroot_pairing(const RootSystem& rs, const Weight& v, int i) {
  if (static_cast<int>(v.rank()) != rs.rank()) throw std::invalid_argument("coroot_pairing: dimension mismatch");
  Rational total(0);
  for (int j = 0; j < rs.rank(); ++j) total += v[j] * rs.cartan(j, i - 1);
  return total;
}

bool is_dominant(const RootSystem& rs, const Weight& w) {
  for (int i = 1; i <= rs.rank(); ++i)
    if (coroot_pairing(rs, w, i).numerator() < 0) return false;
  return true;
}

bool is_integral(const RootSystem& rs, const Weight& w) {
  for (int i = 1; i <= rs.rank(); ++i)
    if (!is_integer(coroot_pairing(rs, w, i))) return false;
  return true;
}

int height(std::span<const int> root) {
  int h = 0;
  for (int c : root) h += c;
  return h;
}

Weight partition_to_weight(std::span<const int> partition, int rank) {
  if (static_cast<int>(partition.size()) > rank + 1)
    throw std::invalid_argument("partition has " + std::to_string(partition.size()) + " parts; at most " +
                                std::to_string(rank + 1) + " allowed in rank " + std::to_string(rank));
  for (std::size_t k = 0; k < partition.size(); ++k) {
    if (partition[k] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (k + 1 < partition.size() && partition[k] < partition[k + 1])
      throw std::invalid_argument("partition must be weakly decreasing");
  }
  RootSystem rs({Family::A, rank});
  Weight out = rs.zero();
  auto part = [&](int k) { return k < static_cast<int>(partition.size()) ? partition[k] : 0; };
  for (int k = 1; k <= rank; ++k) {
    int diff = part(k - 1) - part(k);
    if (diff) out += Rational(diff) * rs.fundamental_weight(k);
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_index(std::string_view s) {
  Rational v = parse_rational(s);
  if (!is_integer(v)) throw std::invalid_argument("expected an integer index, got '" + std::string(s) + "'");
  return static_cast<int>(v.numerator());
}

}  // namespace

Weight parse_weight(const RootSystem& rs, std::string_view text) {
  if (text == "zero") return rs.zero();
  if (text == "rho") return rs.rho();
  if (text == "highest-root") return rs.highest_root();
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    std::string_view kind = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);
    if (kind == "neg-root" || kind == "root") {
      auto parts = split(rest, ':');
      if (parts.size() != 2) throw std::invalid_argument("expected " + std::string(kind) + ":i:j");
      Weight w = rs.neg_root(parse_index(parts[0]), parse_index(parts[1]));
      return kind == "root" ? -w : w;
    }
    if (kind == "partition") {
      if (rs.family() != Family::A) throw std::invalid_argument("partition weights are only defined in type A");
      std::vector<int> parts;
      for (auto p : split(rest, ',')) parts.push_back(parse_index(p));
      return partition_to_weight(parts, rs.rank());
    }
    throw std::invalid_argument("unknown weight keyword '" + std::string(kind) + "'");
  }
  std::vector<Rational> coords;
  for (auto p : split(text, ',')) coords.push_back(parse_rational(p));
  if (static_cast<int>(coords.size()) != rs.rank())
    throw std::invalid_argument("weight '" + std::string(text) + "' has " + std::to_string(coords.size()) +
                                " coordinates; rank is " + std::to_string(rs.rank()));
  return Weight(std::move(coords));
}

}  // namespace weylalt
