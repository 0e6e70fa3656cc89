#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylalt/rootsys.hpp"

namespace weylalt {

using Word = std::vector<int>;  // one-based generator indices

/// Exact Weyl group element in the geometric representation.
///
/// Column j of images() is sigma(a_j) in simple-root coordinates; the inverse
/// matrix is carried alongside so that left and right descents are both O(r).
/// Two elements are equal iff their image matrices are equal. The stored word
/// is the lexicographically smallest reduced word, so it does not depend on
/// how the element was built.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simple(const RootSystem& rs, int i);

  int rank() const { return rank_; }
  int length() const { return static_cast<int>(word_.size()); }
  const Word& word() const { return word_; }
  bool is_identity() const { return word_.empty(); }

  /// Entry (row, col) of the image matrix, zero-based.
  int image(int row, int col) const { return images_[row * rank_ + col]; }
  const std::vector<int>& images() const { return images_; }

  /// sigma(a_i) is a negative root, i.e. l(sigma s_i) < l(sigma). One-based.
  bool has_right_descent(int i) const;
  /// sigma^{-1}(a_i) is a negative root, i.e. l(s_i sigma) < l(sigma). One-based.
  bool has_left_descent(int i) const;

  WeylElement times_simple(const RootSystem& rs, int i) const;   // sigma s_i
  WeylElement simple_times(const RootSystem& rs, int i) const;   // s_i sigma
  WeylElement inverse(const RootSystem& rs) const;

  /// "s1s2s1", or "1" for the identity.
  std::string str() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.images_ == b.images_; }

 private:
  WeylElement(int rank, std::vector<int> images, std::vector<int> inverse);
  void canonicalize(const RootSystem& rs);
  friend WeylElement multiply(const RootSystem&, const WeylElement&, const WeylElement&);
  friend WeylElement from_word(const RootSystem&, std::span<const int>);

  int rank_ = 0;
  std::vector<int> images_;
  std::vector<int> inverse_;
  Word word_;
};

/// Deterministic output order: (length, witness word).
struct ByLengthThenWord {
  bool operator()(const WeylElement& a, const WeylElement& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.word() != b.word()) return a.word() < b.word();
    return a.images() < b.images();
  }
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& e) const;
};

using ElementSet = std::set<WeylElement, ByLengthThenWord>;

/// Sorted set of one-based generator indices.
using InfluenceSet = std::set<int>;

WeylElement from_word(const RootSystem& rs, std::span<const int> word);
WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b);

/// Accepts "s1 s2 s1", "s1s2s1", "1,2,1" or "1 2 1". The identity is "", "e"
/// or "id" (a bare "1" means s_1).
Word parse_word(std::string_view text);

Weight act(const RootSystem& rs, const WeylElement& sigma, const Weight& w);
/// sigma applied to an integer vector.
RootVector act(const WeylElement& sigma, std::span<const int> v);

/// Length computed independently as the number of positive roots sent negative.
int inversion_count(const RootSystem& rs, const WeylElement& sigma);

std::vector<WeylElement> right_covers(const RootSystem& rs, const WeylElement& sigma);
std::vector<WeylElement> left_covers(const RootSystem& rs, const WeylElement& sigma);
/// Elements covered by sigma in the right (resp. left) weak order.
std::vector<WeylElement> right_lower_covers(const RootSystem& rs, const WeylElement& sigma);
std::vector<WeylElement> left_lower_covers(const RootSystem& rs, const WeylElement& sigma);

InfluenceSet influence(const WeylElement& sigma);
InfluenceSet extended_influence(const RootSystem& rs, const WeylElement& sigma);
bool independent(const RootSystem& rs, const WeylElement& sigma, const WeylElement& tau);
bool connected_influence(const RootSystem& rs, const WeylElement& sigma);

inline constexpr std::size_t kDefaultGroupCap = 50000;

/// Cap from WEYLALT_MAX_GROUP when set, else kDefaultGroupCap.
std::size_t group_cap_from_env();

/// |W| for the classical families, without enumerating.
std::size_t group_order(const RootSystemSpec& spec);

/// All elements by BFS over right covers. Throws std::length_error when |W|
/// exceeds the cap.
std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::size_t cap = group_cap_from_env());

}  // namespace weylalt
