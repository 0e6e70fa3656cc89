#pragma once

#include <string>
#include <vector>

#include "weylalt/bas.hpp"

namespace weylalt {

/// One row of the type A catalog of basic allowable subwords for
/// lambda = highest root, mu = -(a_i + ... + a_j).
///   a: s_k   b: s_{k+1}s_k   c: s_ks_{k+1}   d: s_ks_{k+1}s_k   e: s_{k+2}s_ks_{k+1}
struct CatalogEntry {
  char shape;
  int k;
  Word word;
};

Word catalog_word(char shape, int k);

/// Throws std::invalid_argument unless 1 <= i <= j <= r.
std::vector<CatalogEntry> catalog_bas(int r, int i, int j);

/// Compares compute_bas on A_r against the catalog; failures list the
/// symmetric difference.
Report verify_catalog(int r, int i, int j);

/// Words excluded from A(highest root, -highest root) in A_r, r >= 2: the
/// boundary pairs, the three-letter families around each interior i, and every
/// ordering of four consecutive generators.
std::vector<Word> forbidden_words(int r);

/// Each forbidden word w has p(w(h + rho) + h - rho) = 0 and is not a member.
Report verify_forbidden_words(int r);

using XSequence = std::vector<int>;

/// x_i equals the number of neighbours strictly smaller than x_i.
bool is_x_sequence(const XSequence& x);
/// All valid sequences of length r in lexicographic order.
std::vector<XSequence> x_sequences(int r);
/// Throws std::invalid_argument on an invalid sequence or an unexpected block.
WeylElement psi(const RootSystem& rs, const XSequence& x);
/// psi is injective on X_r with image A_r(h, -h).
Report verify_x_bijection(int r);

std::string x_sequence_str(const XSequence& x);

}  // namespace weylalt
