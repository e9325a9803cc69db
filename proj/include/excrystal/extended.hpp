#pragma once

/**
 * @file extended.hpp
 * @brief The extended crystal: finitely supported Z-indexed sequences of
 *        B(infinity) elements, with the paired operators F/E at each slot,
 *        the shift, the star-relabel involution, and a normal form.
 *
 * A sequence (b_k) is stored sparsely: only slots holding a non-highest
 * element appear in the map, so map equality is sequence equality.
 *
 * The slot-k operators couple neighbouring entries through
 * eps_hat_{i,k} = eps_i(b_k) - eps*_i(b_{k+1}):   F acts as f_i at slot k
 * when eps_hat >= 0 and as e*_i at slot k+1 otherwise; E acts as e_i at
 * slot k when eps_hat > 0 and as f*_i at slot k+1 otherwise.  Both are
 * total and mutually inverse.
 */

#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "binf.hpp"
#include "cartan.hpp"

namespace excry::ext {

using binf::BinfElt;
using cartan::CartanDatum;
using cartan::Weight;

/// Finitely supported sequence Z -> B(infinity); absent slots hold the
/// highest element.
struct ExtElt {
  std::map<int, BinfElt> comps;
  friend bool operator==(const ExtElt&, const ExtElt&) = default;
  friend auto operator<=>(const ExtElt&, const ExtElt&) = default;
};

inline ExtElt one() { return ExtElt{}; }

inline BinfElt component(const CartanDatum& d, const ExtElt& e, int k) {
  auto it = e.comps.find(k);
  return it == e.comps.end() ? binf::highest(d) : it->second;
}

inline void set_component(ExtElt& e, int k, BinfElt b) {
  if (binf::is_highest(b))
    e.comps.erase(k);
  else
    e.comps[k] = std::move(b);
}

/// Alternating-sign total weight: sum over slots of (-1)^k wt(b_k).
inline Weight ext_weight(const CartanDatum& d, const ExtElt& e) {
  Weight w{std::vector<int>(d.rank(), 0)};
  for (const auto& [k, b] : e.comps) {
    const Weight wb = binf::weight(d, b);
    if (k % 2 == 0)
      w += wb;
    else
      w -= wb;
  }
  return w;
}

inline int eps_hat(const CartanDatum& d, int i, int k, const ExtElt& e) {
  return binf::eps(d, i, component(d, e, k)) -
         binf::eps_star(d, i, component(d, e, k + 1));
}

/// F at (i,k).  Total on the extended crystal.
inline ExtElt ext_F(const CartanDatum& d, int i, int k, ExtElt e) {
  if (eps_hat(d, i, k, e) >= 0) {
    set_component(e, k, binf::f(d, i, component(d, e, k)));
  } else {
    // eps*_i(b_{k+1}) > eps_i(b_k) >= 0, so e*_i is defined at slot k+1
    auto up = binf::e_star(d, i, component(d, e, k + 1));
    if (!up) throw std::logic_error("e* undefined where eps_hat < 0");
    set_component(e, k + 1, std::move(*up));
  }
  return e;
}

/// E at (i,k), the two-sided inverse of F at (i,k).
inline ExtElt ext_E(const CartanDatum& d, int i, int k, ExtElt e) {
  if (eps_hat(d, i, k, e) > 0) {
    auto down = binf::e(d, i, component(d, e, k));
    if (!down) throw std::logic_error("e undefined where eps_hat > 0");
    set_component(e, k, std::move(*down));
  } else {
    set_component(e, k + 1, binf::f_star(d, i, component(d, e, k + 1)));
  }
  return e;
}

/// Shift by p slots: component k of the result is component k - p of e.
inline ExtElt shift(const CartanDatum&, int p, const ExtElt& e) {
  ExtElt out;
  for (const auto& [k, b] : e.comps) out.comps[k + p] = b;
  return out;
}

/// Componentwise star-relabel involution (slot indices unchanged).
inline ExtElt ext_zeta(const CartanDatum& d, const ExtElt& e) {
  ExtElt out;
  for (const auto& [k, b] : e.comps) out.comps[k] = binf::zeta_b(d, b);
  return out;
}

/// Normal form: drives e to the vacuum 1 by repeatedly applying E at the
/// topmost occupied slot, at the least node whose eps is positive there.
/// Returns the (i,k) list applied, so composing F over it in reverse order
/// rebuilds e from 1 exactly.
inline std::vector<std::pair<int, int>> to_highest(const CartanDatum& d, ExtElt& e) {
  std::vector<std::pair<int, int>> path;
  while (!e.comps.empty()) {
    const int k = e.comps.rbegin()->first;
    const BinfElt& b = e.comps.rbegin()->second;
    int pick = -1;
    for (int i = 0; i < d.rank(); ++i)
      if (binf::eps(d, i, b) > 0) {
        pick = i;
        break;
      }
    if (pick < 0) throw std::logic_error("non-highest component with all eps zero");
    // at the topmost slot eps*_i(b_{k+1}) = 0, so E acts as e_i at slot k
    e = ext_E(d, pick, k, std::move(e));
    path.emplace_back(pick, k);
  }
  return path;
}

/// Random element: `steps` random F operators applied to the vacuum, with
/// slots drawn uniformly from [window_lo, window_hi].
inline ExtElt random_element(const CartanDatum& d, std::mt19937_64& rng, int steps,
                             int window_lo = -3, int window_hi = 3) {
  std::uniform_int_distribution<int> node(0, d.rank() - 1);
  std::uniform_int_distribution<int> slot(window_lo, window_hi);
  ExtElt e;
  for (int t = 0; t < steps; ++t) e = ext_F(d, node(rng), slot(rng), std::move(e));
  return e;
}

/// Random B(infinity) element: `steps` random f operators applied to the
/// highest element.
inline BinfElt random_binf(const CartanDatum& d, std::mt19937_64& rng, int steps) {
  std::uniform_int_distribution<int> node(0, d.rank() - 1);
  BinfElt b = binf::highest(d);
  for (int t = 0; t < steps; ++t) b = binf::f(d, node(rng), b);
  return b;
}

}  // namespace excry::ext
