#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weylalt/numeric.hpp"

namespace weylalt {

enum class Family { A, B, C, D };

char family_letter(Family family);
Family parse_family(std::string_view text);

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  /// Throws std::invalid_argument naming the violated rank bound.
  void validate() const;
  std::string name() const;  // e.g. "A4"

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

/// Integer vector in the simple-root basis.
using RootVector = std::vector<int>;

/// A weight, stored as exact rational coordinates in the simple-root basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, Rational(0)) {}
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static Weight from_ints(std::span<const int> coords);

  std::size_t rank() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;
  /// True when every coordinate is an integer.
  bool has_integer_coords() const;
  /// Integer coordinates; throws std::domain_error if any coordinate is fractional.
  RootVector to_ints() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& scale);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  friend bool operator==(const Weight&, const Weight&) = default;

  /// Comma separated coordinates, e.g. "1,1/2,0".
  std::string str() const;

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Immutable classical root system. All data is computed at construction.
class RootSystem {
 public:
  explicit RootSystem(RootSystemSpec spec);

  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  Family family() const { return spec_.family; }
  std::string name() const { return spec_.name(); }

  /// cartan(i, j) = 2 (a_i, a_j) / (a_j, a_j), zero-based.
  int cartan(int i, int j) const { return cartan_[i * rank() + j]; }
  const Rational& gram(int i, int j) const { return gram_[i * rank() + j]; }

  /// Sorted by (height, lexicographic coordinates).
  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
  const RootVector& highest_root_vector() const { return positive_roots_.back(); }
  /// Index of a positive root in positive_roots(), or -1.
  int root_index(std::span<const int> coords) const;
  bool is_root(std::span<const int> coords) const;

  Weight highest_root() const { return Weight::from_ints(highest_root_vector()); }
  const Weight& rho() const { return rho_; }
  Weight zero() const { return Weight(static_cast<std::size_t>(rank())); }
  Weight simple_root(int i) const;  // one-based
  /// -(a_i + ... + a_j), one-based and inclusive.
  Weight neg_root(int i, int j) const;
  /// Fundamental weight w_k in simple-root coordinates, one-based.
  const Weight& fundamental_weight(int k) const { return fundamental_[k - 1]; }

  /// Dynkin diagram adjacency, one-based.
  bool adjacent(int i, int j) const;

 private:
  RootSystemSpec spec_;
  std::vector<int> cartan_;
  std::vector<Rational> gram_;
  std::vector<RootVector> positive_roots_;
  Weight rho_;
  std::vector<Weight> fundamental_;
};

RootSystem build_root_system(RootSystemSpec spec);

Rational inner_product(const RootSystem& rs, const Weight& v, const Weight& w);
/// 2 (v, a_i) / (a_i, a_i) for the one-based simple root a_i.
Rational coroot_pairing(const RootSystem& rs, const Weight& v, int i);

bool is_dominant(const RootSystem& rs, const Weight& w);
bool is_integral(const RootSystem& rs, const Weight& w);
int height(std::span<const int> root);

/// Type A only: partition (p_1 >= p_2 >= ...) to sum_k (p_k - p_{k+1}) w_k.
Weight partition_to_weight(std::span<const int> partition, int rank);

/// Parses the textual weight syntax used by the command line:
/// "3,5,1/2", "zero", "rho", "highest-root", "neg-root:i:j", "root:i:j",
/// "partition:4,3,1".
Weight parse_weight(const RootSystem& rs, std::string_view text);

}  // namespace weylalt
