#pragma once

/**
 * @file folding.hpp
 * @brief Diagram-automorphism folding: the induced automorphism of the
 *        extended crystal, orbitwise operators on its fixed points, and the
 *        folded (non-simply-laced) Cartan matrix they realize.
 *
 * A diagram automorphism sigma with edge-free orbits folds a simply-laced
 * Cartan matrix to c_{ab} = sum_{j in orbit b} a_{rep(a), j}.  Because the
 * nodes inside one orbit are pairwise disconnected, the slotwise operators
 * attached to them commute, and their orbit products act on the sigma-fixed
 * locus of the extended crystal as the operators of the folded type.
 */

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "binf.hpp"
#include "braid.hpp"
#include "cartan.hpp"
#include "extended.hpp"

namespace excry::fold {

using binf::BinfElt;
using cartan::CartanDatum;
using ext::ExtElt;

struct FoldingDatum {
  CartanDatum source;
  std::vector<int> sigma;                       ///< node permutation
  std::vector<std::vector<int>> orbits;         ///< ascending inside, by least element
  std::vector<int> orbit_of;                    ///< node -> orbit index
  std::vector<std::vector<int>> folded_matrix;  ///< folded Cartan matrix
  std::vector<std::vector<int>> folded_m;       ///< braid orders of the folded type

  int folded_rank() const { return static_cast<int>(orbits.size()); }
};

/// Builds the folding datum, validating that sigma is a diagram automorphism
/// whose orbits contain no edges.
inline FoldingDatum fold_cartan(cartan::CartanType t, const std::vector<int>& sigma) {
  FoldingDatum fd;
  fd.source = cartan::build_cartan(t);
  const int n = fd.source.rank();
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("sigma must list an image for every node");
  std::vector<bool> hit(n, false);
  for (int i : sigma) {
    if (i < 0 || i >= n || hit[i]) throw std::invalid_argument("sigma is not a permutation");
    hit[i] = true;
  }
  const auto& a = fd.source.matrix;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[sigma[i]][sigma[j]] != a[i][j])
        throw std::invalid_argument("sigma does not preserve the Cartan matrix");

  fd.sigma = sigma;
  fd.orbit_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (fd.orbit_of[i] >= 0) continue;
    std::vector<int> orb;
    for (int j = i; fd.orbit_of[j] < 0; j = sigma[j]) {
      fd.orbit_of[j] = static_cast<int>(fd.orbits.size());
      orb.push_back(j);
    }
    std::sort(orb.begin(), orb.end());
    for (std::size_t p = 0; p < orb.size(); ++p)
      for (std::size_t q = p + 1; q < orb.size(); ++q)
        if (a[orb[p]][orb[q]] != 0)
          throw std::invalid_argument("sigma orbit contains an edge");
    fd.orbits.push_back(std::move(orb));
  }

  const int r = fd.folded_rank();
  fd.folded_matrix.assign(r, std::vector<int>(r, 0));
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q) {
      int s = 0;
      for (int j : fd.orbits[q]) s += a[fd.orbits[p][0]][j];
      fd.folded_matrix[p][q] = s;
    }
  fd.folded_m.assign(r, std::vector<int>(r, 2));
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q) {
      if (p == q) continue;
      switch (fd.folded_matrix[p][q] * fd.folded_matrix[q][p]) {
        case 0: fd.folded_m[p][q] = 2; break;
        case 1: fd.folded_m[p][q] = 3; break;
        case 2: fd.folded_m[p][q] = 4; break;
        case 3: fd.folded_m[p][q] = 6; break;
        default: throw std::invalid_argument("folded matrix is not of finite type");
      }
    }
  return fd;
}

/// The automorphism of B(infinity) induced by sigma: coordinates with
/// respect to the sigma-relabelled reference word are carried over verbatim.
inline BinfElt sigma_b(const FoldingDatum& fd, const BinfElt& b) {
  std::vector<int> relabelled;
  relabelled.reserve(fd.source.ref.size());
  for (int i : fd.source.ref) relabelled.push_back(fd.sigma[i]);
  return binf::detail::from_coords(fd.source, b.coords, relabelled);
}

/// Componentwise extension to the extended crystal.
inline ExtElt sigma_ext(const FoldingDatum& fd, const ExtElt& e) {
  ExtElt out;
  for (const auto& [k, b] : e.comps) out.comps[k] = sigma_b(fd, b);
  return out;
}

inline bool invariance_check(const FoldingDatum& fd, const ExtElt& e) {
  return sigma_ext(fd, e) == e;
}

namespace detail {

inline const std::vector<int>& orbit(const FoldingDatum& fd, int j) {
  if (j < 0 || j >= fd.folded_rank()) throw std::invalid_argument("orbit index out of range");
  return fd.orbits[j];
}

}  // namespace detail

/// Orbitwise F at folded node j, slot k (factors commute; applied ascending).
inline ExtElt fold_F(const FoldingDatum& fd, int j, int k, ExtElt e) {
  for (int i : detail::orbit(fd, j)) e = ext::ext_F(fd.source, i, k, std::move(e));
  return e;
}

/// Orbitwise E at folded node j, slot k; inverse of fold_F at (j,k) on the
/// sigma-fixed locus.
inline ExtElt fold_E(const FoldingDatum& fd, int j, int k, ExtElt e) {
  for (int i : detail::orbit(fd, j)) e = ext::ext_E(fd.source, i, k, std::move(e));
  return e;
}

/// Orbitwise braid operator at folded node j.
inline ExtElt fold_R(const FoldingDatum& fd, int j, ExtElt e, int sign = +1) {
  for (int i : detail::orbit(fd, j)) e = braid::braid_R(fd.source, i, e, sign);
  return e;
}

/// Random sigma-fixed element: a random word in the orbitwise F operators
/// applied to the vacuum.
inline ExtElt random_fixed(const FoldingDatum& fd, std::mt19937_64& rng, int steps,
                           int window_lo = -2, int window_hi = 2) {
  std::uniform_int_distribution<int> node(0, fd.folded_rank() - 1);
  std::uniform_int_distribution<int> slot(window_lo, window_hi);
  ExtElt e;
  for (int t = 0; t < steps; ++t) e = fold_F(fd, node(rng), slot(rng), std::move(e));
  return e;
}

}  // namespace excry::fold
