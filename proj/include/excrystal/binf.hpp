#pragma once

/**
 * @file binf.hpp
 * @brief The crystal B(infinity) in Lusztig coordinates: parametrizations by
 *        reduced words, Kashiwara operators, their starred twins, Saito
 *        reflections, and the star-relabel involution.
 *
 * An element is stored by its coordinate vector with respect to the canonical
 * reference word of w_0 (positive convention).  Changing to any other reduced
 * word is a cached sequence of rank-2 transition maps driven by braid moves.
 *
 * The operator implementations all follow the same pattern: move to a word
 * adapted to the node (see cartan::index_words), act on a single boundary
 * coordinate, and move back.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartan.hpp"

namespace excry::binf {

using cartan::CartanDatum;
using cartan::Move;
using cartan::Weight;

/// Coordinate vector of an element with respect to an explicit reduced word
/// of w_0 and a sign convention.  For convention -1 the coordinates are
/// stored letter-indexed (entry t belongs to letter t of the word); display
/// order for negative data is the reverse.
struct LusztigDatum {
  std::vector<int> word;
  int convention = +1;  // +1 or -1
  std::vector<int> coords;

  friend bool operator==(const LusztigDatum&, const LusztigDatum&) = default;
};

/// Element of B(infinity), canonically the positive-convention coordinates
/// with respect to the reference word of the datum.
struct BinfElt {
  std::vector<int> coords;

  friend bool operator==(const BinfElt&, const BinfElt&) = default;
  friend auto operator<=>(const BinfElt&, const BinfElt&) = default;
};

/// The highest element 1 (all coordinates zero).
inline BinfElt highest(const CartanDatum& d) {
  return BinfElt{std::vector<int>(d.positive_root_count, 0)};
}

inline bool is_highest(const BinfElt& b) {
  return std::all_of(b.coords.begin(), b.coords.end(), [](int x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// rank-2 transitions and word changes

/// Coordinate change along one braid move of order m (2 or 3).
///   m = 2: (a, b)    -> (b, a)
///   m = 3: (a, b, c) -> (b + c - p, p, a + b - p)  with p = min(a, c).
/// Both maps are involutive and preserve the total weight they encode.
inline std::vector<int> transition_rank2(const std::vector<int>& coords, int m) {
  if (m == 2) {
    if (coords.size() != 2) throw std::invalid_argument("transition of order 2 needs 2 coordinates");
    return {coords[1], coords[0]};
  }
  if (m == 3) {
    if (coords.size() != 3) throw std::invalid_argument("transition of order 3 needs 3 coordinates");
    const int a = coords[0], b = coords[1], c = coords[2];
    const int p = std::min(a, c);
    return {b + c - p, p, a + b - p};
  }
  throw std::invalid_argument("transition order must be 2 or 3");
}

namespace detail {

/// In-place coordinate update along a move path (words already validated).
inline void apply_moves(std::vector<int>& coords, const std::vector<Move>& moves) {
  for (const Move& mv : moves) {
    if (mv.m == 2) {
      std::swap(coords[mv.pos], coords[mv.pos + 1]);
    } else {
      const int a = coords[mv.pos], b = coords[mv.pos + 1], c = coords[mv.pos + 2];
      const int p = std::min(a, c);
      coords[mv.pos] = b + c - p;
      coords[mv.pos + 1] = p;
      coords[mv.pos + 2] = a + b - p;
    }
  }
}

/// Coordinates of b with respect to `word` (positive convention).
inline std::vector<int> coords_at(const CartanDatum& d, const BinfElt& b,
                                  const std::vector<int>& word) {
  std::vector<int> c = b.coords;
  apply_moves(c, cartan::braid_move_path_cached(d, d.ref, word));
  return c;
}

/// Canonical element from coordinates with respect to `word`.
inline BinfElt from_coords(const CartanDatum& d, std::vector<int> c,
                           const std::vector<int>& word) {
  apply_moves(c, cartan::braid_move_path_cached(d, word, d.ref));
  return BinfElt{std::move(c)};
}

}  // namespace detail

/// Re-parametrizes a positive-convention datum with respect to another
/// reduced word of w_0.
inline LusztigDatum change_word(const CartanDatum& d, const LusztigDatum& datum,
                                const std::vector<int>& target) {
  if (datum.convention != +1)
    throw std::invalid_argument("change_word acts on positive-convention data");
  if (datum.coords.size() != datum.word.size())
    throw std::invalid_argument("coordinate/word length mismatch");
  std::vector<int> c = datum.coords;
  detail::apply_moves(c, cartan::braid_move_path_cached(d, datum.word, target));
  return LusztigDatum{target, +1, std::move(c)};
}

// ---------------------------------------------------------------------------
// weight and local structure

/// wt(b) = - sum_k coords_k * beta_k over the reference enumeration of
/// positive roots.
inline Weight weight(const CartanDatum& d, const BinfElt& b) {
  Weight w{std::vector<int>(d.rank(), 0)};
  for (int k = 0; k < d.positive_root_count; ++k)
    if (b.coords[k] != 0)
      for (int t = 0; t < d.rank(); ++t) w.c[t] -= b.coords[k] * d.ref_roots[k].c[t];
  return w;
}

/// The four local statistics at node i.
struct LocalData {
  int eps = 0;
  int phi = 0;
  int eps_star = 0;
  int phi_star = 0;
};

inline int eps(const CartanDatum& d, int i, const BinfElt& b) {
  return detail::coords_at(d, b, cartan::index_words(d, i).head).front();
}

inline int eps_star(const CartanDatum& d, int i, const BinfElt& b) {
  return detail::coords_at(d, b, cartan::index_words(d, i).tail).back();
}

inline LocalData local_data(const CartanDatum& d, int i, const BinfElt& b) {
  LocalData loc;
  loc.eps = eps(d, i, b);
  loc.eps_star = eps_star(d, i, b);
  const int pair = cartan::pairing(d, i, weight(d, b));
  loc.phi = loc.eps + pair;
  loc.phi_star = loc.eps_star + pair;
  return loc;
}

// ---------------------------------------------------------------------------
// Kashiwara operators

enum class Op { e, f, e_max, e_star, f_star, e_star_max };

inline BinfElt f(const CartanDatum& d, int i, const BinfElt& b) {
  const auto& w = cartan::index_words(d, i);
  std::vector<int> c = detail::coords_at(d, b, w.head);
  ++c.front();
  return detail::from_coords(d, std::move(c), w.head);
}

inline std::optional<BinfElt> e(const CartanDatum& d, int i, const BinfElt& b) {
  const auto& w = cartan::index_words(d, i);
  std::vector<int> c = detail::coords_at(d, b, w.head);
  if (c.front() == 0) return std::nullopt;
  --c.front();
  return detail::from_coords(d, std::move(c), w.head);
}

inline BinfElt e_max(const CartanDatum& d, int i, const BinfElt& b) {
  const auto& w = cartan::index_words(d, i);
  std::vector<int> c = detail::coords_at(d, b, w.head);
  c.front() = 0;
  return detail::from_coords(d, std::move(c), w.head);
}

inline BinfElt f_star(const CartanDatum& d, int i, const BinfElt& b) {
  const auto& w = cartan::index_words(d, i);
  std::vector<int> c = detail::coords_at(d, b, w.tail);
  ++c.back();
  return detail::from_coords(d, std::move(c), w.tail);
}

inline std::optional<BinfElt> e_star(const CartanDatum& d, int i, const BinfElt& b) {
  const auto& w = cartan::index_words(d, i);
  std::vector<int> c = detail::coords_at(d, b, w.tail);
  if (c.back() == 0) return std::nullopt;
  --c.back();
  return detail::from_coords(d, std::move(c), w.tail);
}

inline BinfElt e_star_max(const CartanDatum& d, int i, const BinfElt& b) {
  const auto& w = cartan::index_words(d, i);
  std::vector<int> c = detail::coords_at(d, b, w.tail);
  c.back() = 0;
  return detail::from_coords(d, std::move(c), w.tail);
}

/// Uniform dispatch over the six operators.  e and e_star return nullopt at
/// the top of their strings; the other four always produce an element.
inline std::optional<BinfElt> kashiwara(const CartanDatum& d, Op op, int i, const BinfElt& b) {
  switch (op) {
    case Op::e: return e(d, i, b);
    case Op::f: return f(d, i, b);
    case Op::e_max: return e_max(d, i, b);
    case Op::e_star: return e_star(d, i, b);
    case Op::f_star: return f_star(d, i, b);
    case Op::e_star_max: return e_star_max(d, i, b);
  }
  throw std::logic_error("unknown operator");
}

/// Iterated operators, f^n(b) etc.; n must be >= 0, and for e/e_star the
/// string must be long enough.
inline BinfElt power(const CartanDatum& d, Op op, int i, BinfElt b, int n) {
  if (n < 0) throw std::invalid_argument("operator power must be nonnegative");
  for (int t = 0; t < n; ++t) {
    auto nxt = kashiwara(d, op, i, b);
    if (!nxt) throw std::invalid_argument("operator string exhausted");
    b = std::move(*nxt);
  }
  return b;
}

// ---------------------------------------------------------------------------
// Saito reflections

/// Normalized Saito reflection.  With star=false this is b -> T_i(e_i^max b):
/// in coordinates with respect to the i-initial word, drop the first entry
/// and append 0 with respect to the rotated word.  With star=true it is the
/// dual reflection b -> T*_i(e*_i^max b) acting at the other end.
inline BinfElt saito(const CartanDatum& d, int i, const BinfElt& b, bool star = false) {
  const auto& w = cartan::index_words(d, i);
  if (!star) {
    std::vector<int> c = detail::coords_at(d, b, w.head);
    c.erase(c.begin());
    c.push_back(0);
    return detail::from_coords(d, std::move(c), w.head_rot);
  }
  std::vector<int> c = detail::coords_at(d, b, w.tail);
  c.pop_back();
  c.insert(c.begin(), 0);
  return detail::from_coords(d, std::move(c), w.tail_shift);
}

// ---------------------------------------------------------------------------
// the star-relabel involution

/// zeta: the crystal involution with eps_i(zeta b) = eps_{i*}(b) and
/// zeta f_{i*} = f_i zeta.  In coordinates, zeta(b) has the same coordinate
/// vector as b but read with respect to the starred reference word.
inline BinfElt zeta_b(const CartanDatum& d, const BinfElt& b) {
  std::vector<int> starred;
  starred.reserve(d.ref.size());
  for (int i : d.ref) starred.push_back(d.star[i]);
  return detail::from_coords(d, b.coords, starred);
}

// ---------------------------------------------------------------------------
// Lusztig data with respect to arbitrary words

namespace detail {

inline std::vector<int> dual_word(const CartanDatum& d, const std::vector<int>& word) {
  std::vector<int> out(word.rbegin(), word.rend());
  for (int& i : out) i = d.star[i];
  return out;
}

}  // namespace detail

/// Lusztig datum of b with respect to `word` in the given convention.
///
/// Positive convention: entry k is eps_{i_k} of the successive normalized
/// Saito reflections along the word.  Negative convention: entry k (letter-
/// indexed) is eps*_{i_k} of the successive dual reflections; the negative
/// datum with respect to a word equals the positive datum with respect to
/// the dual word (reversed and starred), stored in reverse.
inline LusztigDatum datum(const CartanDatum& d, const BinfElt& b,
                          const std::vector<int>& word, int convention) {
  if (static_cast<int>(word.size()) != d.positive_root_count || !cartan::is_reduced(d, word))
    throw std::invalid_argument("datum requires a reduced word of w_0");
  if (convention == +1) {
    std::vector<int> c = b.coords;
    detail::apply_moves(c, cartan::braid_move_path_cached(d, d.ref, word));
    return LusztigDatum{word, +1, std::move(c)};
  }
  if (convention == -1) {
    std::vector<int> c = b.coords;
    detail::apply_moves(c, cartan::braid_move_path_cached(d, d.ref, detail::dual_word(d, word)));
    std::reverse(c.begin(), c.end());
    return LusztigDatum{word, -1, std::move(c)};
  }
  throw std::invalid_argument("convention must be +1 or -1");
}

/// Canonical element from a datum in either convention.
inline BinfElt element_of(const CartanDatum& d, const LusztigDatum& datum) {
  if (datum.coords.size() != datum.word.size())
    throw std::invalid_argument("coordinate/word length mismatch");
  if (datum.convention == +1)
    return detail::from_coords(d, datum.coords, datum.word);
  if (datum.convention == -1) {
    std::vector<int> c(datum.coords.rbegin(), datum.coords.rend());
    return detail::from_coords(d, std::move(c), detail::dual_word(d, datum.word));
  }
  throw std::invalid_argument("convention must be +1 or -1");
}

}  // namespace excry::binf
