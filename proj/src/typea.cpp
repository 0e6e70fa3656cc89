#include "weylalt/typea.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace weylalt {

namespace {

RootSystem type_a(int r) { return RootSystem({Family::A, r}); }

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int g : w) out += "s" + std::to_string(g);
  return out;
}

}  // namespace

Word catalog_word(char shape, int k) {
  switch (shape) {
    case 'a': return {k};
    case 'b': return {k + 1, k};
    case 'c': return {k, k + 1};
    case 'd': return {k, k + 1, k};
    case 'e': return {k + 2, k, k + 1};
  }
  throw std::invalid_argument(std::string("unknown catalog shape '") + shape + "'");
}

std::vector<CatalogEntry> catalog_bas(int r, int i, int j) {
  if (!(1 <= i && i <= j && j <= r))
    throw std::invalid_argument("catalog_bas needs 1 <= i <= j <= r, got r=" + std::to_string(r) +
                                " i=" + std::to_string(i) + " j=" + std::to_string(j));
  std::vector<CatalogEntry> out;
  // A_1: s_1 sends 2a_1 + rho to -rho, leaving -a_1, so only the identity remains.
  if (r == 1) return out;
  auto add = [&](char shape, int lo, int hi) {
    for (int k = lo; k <= hi; ++k) out.push_back({shape, k, catalog_word(shape, k)});
  };
  const bool left = i == 1, right = j == r;
  if (left && right) {
    add('a', 1, r);
    add('b', 2, r - 2);
    add('c', 2, r - 2);
    add('d', 2, r - 2);
    add('e', 2, r - 3);
  } else if (left) {
    add('a', 1, r - 1);
    add('b', 2, j - 1);
    add('c', 2, std::min(j, r - 2));
    add('d', 2, j - 1);
    add('e', 2, j - 2);
  } else if (right) {
    add('a', 2, r);
    add('b', std::max(i - 1, 2), r - 2);
    add('c', i, r - 2);
    add('d', i, r - 2);
    add('e', i, r - 3);
  } else {
    add('a', 2, r - 1);
    add('b', std::max(i - 1, 2), j - 1);
    add('c', i, std::min(j, r - 2));
    add('d', i, j - 1);
    add('e', i, j - 2);
  }
  return out;
}

Report verify_catalog(int r, int i, int j) {
  Report rep{"catalog A" + std::to_string(r) + " (" + std::to_string(i) + "," + std::to_string(j) + ")", 0, {}};
  RootSystem rs = type_a(r);
  BasSet bas = compute_bas(rs, rs.highest_root(), rs.neg_root(i, j));
  ElementSet expected;
  for (const auto& e : catalog_bas(r, i, j)) {
    auto el = from_word(rs, e.word);
    rep.expect(expected.insert(el).second, "catalog lists " + el.str() + " twice");
  }
  for (const auto& m : bas.members)
    rep.expect(expected.count(m) > 0, "computed BAS member " + m.str() + " missing from the catalog");
  for (const auto& e : expected)
    rep.expect(bas.contains(e), "catalog entry " + e.str() + " is not a computed BAS member");
  return rep;
}

std::vector<Word> forbidden_words(int r) {
  if (r < 2) throw std::invalid_argument("forbidden_words needs r >= 2");
  std::vector<Word> out;
  std::set<Word> seen;
  auto add = [&](Word w) {
    if (seen.insert(w).second) out.push_back(std::move(w));
  };
  add({2, 1});
  add({1, 2});
  add({r - 1, r});
  add({r, r - 1});
  for (int i = 2; i <= r - 1; ++i) {
    add({i - 1, i, i + 1});
    add({i, i - 1, i + 1});
    add({i + 1, i, i - 1});
  }
  for (int k = 1; k <= r - 3; ++k) {
    Word w{k, k + 1, k + 2, k + 3};
    do add(w);
    while (std::next_permutation(w.begin(), w.end()));
  }
  return out;
}

Report verify_forbidden_words(int r) {
  Report rep{"forbidden words A" + std::to_string(r), 0, {}};
  RootSystem rs = type_a(r);
  const Weight h = rs.highest_root();
  AlternationSet set = compute(rs, h, -h);
  PartitionCounter counter(rs);
  for (const auto& w : forbidden_words(r)) {
    auto el = from_word(rs, w);
    BigInt value = counter.count(alternation_argument(rs, h, -h, el));
    rep.expect(value == 0, "partition function of forbidden word " + word_str(w) + " is " + value.str());
    rep.expect(!set.contains(el), "forbidden word " + word_str(w) + " is a member");
  }
  return rep;
}

bool is_x_sequence(const XSequence& x) {
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i) {
    if (x[i] < 0 || x[i] > 2) return false;
    int smaller = 0;
    if (i > 0 && x[i - 1] < x[i]) ++smaller;
    if (i + 1 < n && x[i + 1] < x[i]) ++smaller;
    if (smaller != x[i]) return false;
  }
  return true;
}

std::vector<XSequence> x_sequences(int r) {
  if (r < 1) throw std::invalid_argument("x_sequences needs r >= 1");
  if (r > 18) throw std::invalid_argument("x_sequences: r too large to filter 3^r candidates");
  std::vector<XSequence> out;
  XSequence x(r, 0);
  while (true) {
    if (is_x_sequence(x)) out.push_back(x);
    int pos = r - 1;
    while (pos >= 0 && x[pos] == 2) x[pos--] = 0;
    if (pos < 0) break;
    ++x[pos];
  }
  return out;
}

std::string x_sequence_str(const XSequence& x) {
  std::string out;
  for (int v : x) out += static_cast<char>('0' + v);
  return out;
}

WeylElement psi(const RootSystem& rs, const XSequence& x) {
  const int n = static_cast<int>(x.size());
  if (rs.family() != Family::A || rs.rank() != n)
    throw std::invalid_argument("psi: sequence length must match the rank of a type A system");
  if (!is_x_sequence(x)) throw std::invalid_argument("psi: " + x_sequence_str(x) + " is not a valid sequence");
  WeylElement out = WeylElement::identity(rs);
  int pos = 0;
  while (pos < n) {
    if (x[pos] == 0) {
      ++pos;
      continue;
    }
    int end = pos;
    std::string block;
    while (end < n && x[end] != 0) block += static_cast<char>('0' + x[end++]);
    const int i = pos + 1;
    Word w;
    if (block == "1") {
      if (pos != 0 && end != n)
        throw std::invalid_argument("psi: isolated 1 away from the boundary in " + x_sequence_str(x));
      w = {i};
    } else if (block == "2") {
      w = {i};
    } else if (block == "11") {
      w = {i, i + 1};
    } else if (block == "12") {
      w = {i + 1, i};
    } else if (block == "21") {
      w = {i, i + 1, i};
    } else if (block == "121") {
      w = {i, i + 2, i + 1};
    } else {
      throw std::invalid_argument("psi: unexpected block " + block + " in " + x_sequence_str(x));
    }
    out = multiply(rs, out, from_word(rs, w));
    pos = end;
  }
  return out;
}

Report verify_x_bijection(int r) {
  Report rep{"x-bijection A" + std::to_string(r), 0, {}};
  RootSystem rs = type_a(r);
  AlternationSet set = compute(rs, rs.highest_root(), -rs.highest_root());
  std::unordered_set<WeylElement, WeylElementHash> image;
  auto xs = x_sequences(r);
  for (const auto& x : xs) {
    WeylElement e = psi(rs, x);
    rep.expect(set.contains(e), "psi(" + x_sequence_str(x) + ") = " + e.str() + " is not a member");
    rep.expect(image.insert(e).second, "psi is not injective at " + x_sequence_str(x));
  }
  rep.expect(xs.size() == set.size(), "|X| = " + std::to_string(xs.size()) + " but |A| = " +
                                          std::to_string(set.size()));
  return rep;
}

}  // namespace weylalt
