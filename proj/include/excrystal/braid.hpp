#pragma once

/**
 * @file braid.hpp
 * @brief Braid group action on the extended crystal: the invertible slotwise
 *        operators R_i and their inverses, words in them, relation checks,
 *        and the action of a full longest-word chain.
 *
 * R_i rewrites every slot at once.  In coordinates with respect to the
 * i-initial reduced word, slot k of the image is the left shift of slot k of
 * the source with the dropped leading entry of slot k-1 appended, read with
 * respect to the rotated word:
 *
 *     R_i:  (n_{k,1}, .., n_{k,l})  ->  (n_{k,2}, .., n_{k,l}, n_{k-1,1}).
 *
 * The inverse acts the same way at the other end, using words ending in i*.
 * Slotwise this matches  b'_k = (f*_i)^{eps_i(b_{k-1})} T_i(e_i^max b_k),
 * which the verification suite checks operator by operator.
 */

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "binf.hpp"
#include "cartan.hpp"
#include "extended.hpp"

namespace excry::braid {

using cartan::CartanDatum;
using ext::ExtElt;

/// One braid generator: node i with sign +1 (R_i) or -1 (inverse).
struct BraidLetter {
  int i = 0;
  int sign = +1;
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

using BraidWord = std::vector<BraidLetter>;

/// Applies R_i (sign = +1) or its inverse (sign = -1) to the whole sequence.
inline ExtElt braid_R(const CartanDatum& d, int i, const ExtElt& e, int sign = +1) {
  if (i < 0 || i >= d.rank()) throw std::invalid_argument("node index out of range");
  if (sign != +1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (e.comps.empty()) return e;
  const auto& w = cartan::index_words(d, i);
  const int lo = e.comps.begin()->first, hi = e.comps.rbegin()->first;
  const int len = d.positive_root_count;

  // coordinates of every slot the image can touch, one beyond each end
  std::map<int, std::vector<int>> at;
  for (int k = lo - 1; k <= hi + 1; ++k)
    at[k] = binf::detail::coords_at(d, ext::component(d, e, k),
                                    sign > 0 ? w.head : w.tail);

  ExtElt out;
  if (sign > 0) {
    for (int k = lo; k <= hi + 1; ++k) {
      std::vector<int> c(at[k].begin() + 1, at[k].end());
      c.push_back(at[k - 1][0]);
      ext::set_component(out, k, binf::detail::from_coords(d, std::move(c), w.head_rot));
    }
  } else {
    for (int k = lo - 1; k <= hi; ++k) {
      std::vector<int> c;
      c.reserve(len);
      c.push_back(at[k + 1].back());
      c.insert(c.end(), at[k].begin(), at[k].end() - 1);
      ext::set_component(out, k, binf::detail::from_coords(d, std::move(c), w.tail_shift));
    }
  }
  return out;
}

/// Applies a braid word, rightmost letter first (composition order).
inline ExtElt braid_apply(const CartanDatum& d, const BraidWord& word, ExtElt e) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    e = braid_R(d, it->i, e, it->sign);
  return e;
}

/// Outcome of a randomized relation check.
struct RelationReport {
  int i = 0;
  int j = 0;
  int m = 2;
  int checked = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
};

/// Checks R_i R_j R_i .. = R_j R_i R_j .. (m(i,j) factors per side) on random
/// elements of the extended crystal.
inline RelationReport check_relation(const CartanDatum& d, int i, int j, int samples,
                                     int depth, std::uint64_t seed, int window_lo = -3,
                                     int window_hi = 3) {
  if (i == j) throw std::invalid_argument("relation check needs distinct nodes");
  RelationReport rep;
  rep.i = i;
  rep.j = j;
  rep.m = d.m_table[i][j];
  BraidWord lhs, rhs;
  for (int t = 0; t < rep.m; ++t) {
    lhs.push_back({t % 2 == 0 ? i : j, +1});
    rhs.push_back({t % 2 == 0 ? j : i, +1});
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> steps(0, depth);
  for (int s = 0; s < samples; ++s) {
    const ExtElt e = ext::random_element(d, rng, steps(rng), window_lo, window_hi);
    ++rep.checked;
    if (braid_apply(d, lhs, e) != braid_apply(d, rhs, e)) ++rep.failed;
  }
  return rep;
}

/// Applies the chain R_{i_1} o ... o R_{i_l} for a reduced word of w_0
/// (rightmost letter acts first).  The result always equals the shift of the
/// star-relabel of e by one slot.
inline ExtElt longest_R(const CartanDatum& d, const std::vector<int>& letters, ExtElt e) {
  if (static_cast<int>(letters.size()) != d.positive_root_count ||
      !cartan::is_reduced(d, letters))
    throw std::invalid_argument("longest_R requires a reduced word of w_0");
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) e = braid_R(d, *it, e, +1);
  return e;
}

}  // namespace excry::braid
