#pragma once

/**
 * @file cartan.hpp
 * @brief Finite simply-laced Cartan data, Weyl-group word machinery, and
 *        braid-move rewriting paths between reduced words.
 *
 * Root-lattice elements are integer coordinate vectors over the simple
 * roots.  Weyl group elements are represented by their action matrices on
 * the root lattice (column j = image of alpha_j), so every length/descent
 * test is exact integer arithmetic.
 *
 * Dynkin node indices are 0-based throughout the library; the 1-based
 * numbering used by the text formats appears only at the io boundary.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace excry::cartan {

enum class Family : char { A = 'A', D = 'D', E = 'E' };

/// Family letter plus rank, e.g. A2, D4, E6.  Simply-laced finite types only;
/// non-simply-laced data arises through folding (see folding.hpp).
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

inline std::string name(CartanType t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

inline void validate(CartanType t) {
  const int n = t.rank;
  const bool ok = (t.family == Family::A && n >= 1) ||
                  (t.family == Family::D && n >= 4) ||
                  (t.family == Family::E && (n == 6 || n == 7 || n == 8));
  if (!ok) throw std::invalid_argument("rank out of bounds for type " + name(t));
}

/// Element of the root lattice Q in simple-root coordinates.
struct Weight {
  std::vector<int> c;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  Weight& operator+=(const Weight& o) {
    for (std::size_t t = 0; t < c.size(); ++t) c[t] += o.c[t];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t t = 0; t < c.size(); ++t) c[t] -= o.c[t];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (int& x : a.c) x = -x;
    return a;
  }

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
  }
  /// Sum of simple-root coordinates (the height for positive elements).
  int height() const {
    int h = 0;
    for (int x : c) h += x;
    return h;
  }
};

/// Weyl group element as its root-lattice action; column j = image of alpha_j.
using WeylMat = std::vector<Weight>;

/// One braid move: the m letters starting at pos alternate (a,b,a,..) and get
/// replaced by (b,a,b,..).
struct Move {
  int pos = 0;
  int m = 2;
  friend bool operator==(const Move&, const Move&) = default;
};

struct IndexWords;  // forward; see below

struct CartanCache {
  std::mutex mu;
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<Move>> paths;
  std::map<int, IndexWords> words;
};

/// Immutable root datum shared by every operation in the library.
/// The embedded cache is shared across copies and guarded by a mutex, so a
/// datum may be used from several threads at once.
struct CartanDatum {
  CartanType type;
  std::vector<std::vector<int>> matrix;   ///< a_{ij}
  std::vector<int> star;                  ///< i -> i*, from w_0(alpha_i) = -alpha_{i*}
  std::vector<std::vector<int>> m_table;  ///< m(i,j) in {2,3}, diagonal unused
  std::vector<Weight> positive_roots;     ///< sorted by (height, coords)
  int positive_root_count = 0;            ///< l(w_0)
  std::vector<int> ref;                   ///< canonical (lex-least) reduced word of w_0
  std::vector<Weight> ref_roots;          ///< roots_along(ref), cached for weights
  std::shared_ptr<CartanCache> cache;

  int rank() const { return type.rank; }
};

/// Reduced word together with the Weyl element it spells.
struct ReducedWord {
  std::vector<int> letters;
  WeylMat element;
  bool is_longest = false;
};

// ---------------------------------------------------------------------------
// root-lattice primitives

/// <h_i, w> = sum_j a_{ij} w_j.
inline int pairing(const CartanDatum& d, int i, const Weight& w) {
  int s = 0;
  for (int j = 0; j < d.rank(); ++j) s += d.matrix[i][j] * w.c[j];
  return s;
}

/// s_i(w) = w - <h_i, w> alpha_i.
inline Weight reflect(const CartanDatum& d, int i, Weight w) {
  w.c[i] -= pairing(d, i, w);
  return w;
}

inline Weight simple_root(const CartanDatum& d, int i) {
  Weight w{std::vector<int>(d.rank(), 0)};
  w.c[i] = 1;
  return w;
}

inline bool is_positive(const Weight& w) {
  bool nonzero = false;
  for (int x : w.c) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

// ---------------------------------------------------------------------------
// Weyl elements as matrices

inline WeylMat identity_mat(const CartanDatum& d) {
  WeylMat m;
  m.reserve(d.rank());
  for (int i = 0; i < d.rank(); ++i) m.push_back(simple_root(d, i));
  return m;
}

inline Weight act(const CartanDatum& d, const WeylMat& w, const Weight& v) {
  Weight out{std::vector<int>(d.rank(), 0)};
  for (int j = 0; j < d.rank(); ++j)
    if (v.c[j] != 0)
      for (int t = 0; t < d.rank(); ++t) out.c[t] += v.c[j] * w[j].c[t];
  return out;
}

/// Right multiplication w * s_i.
inline WeylMat mul_s(const CartanDatum& d, const WeylMat& w, int i) {
  WeylMat out;
  out.reserve(d.rank());
  for (int j = 0; j < d.rank(); ++j) out.push_back(act(d, w, reflect(d, i, simple_root(d, j))));
  return out;
}

inline WeylMat word_element(const CartanDatum& d, const std::vector<int>& letters) {
  WeylMat w = identity_mat(d);
  for (int i : letters) w = mul_s(d, w, i);
  return w;
}

// ---------------------------------------------------------------------------
// construction

namespace detail {

inline std::vector<std::vector<int>> build_matrix(CartanType t) {
  const int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 2; ++i) link(i, i + 1);
      link(n - 3, n - 2);
      link(n - 3, n - 1);
      break;
    case Family::E: {
      // Bourbaki numbering: chain 1-3-4-5-..., node 2 attached to node 4.
      std::vector<int> chain = {0, 2, 3, 4, 5, 6, 7};
      chain.resize(n - 1);
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) link(chain[k], chain[k + 1]);
      link(1, 3);
      break;
    }
  }
  return a;
}

}  // namespace detail

inline CartanDatum build_cartan(CartanType t) {
  validate(t);
  CartanDatum d;
  d.type = t;
  d.matrix = detail::build_matrix(t);
  const int n = t.rank;

  d.m_table.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int p = d.matrix[i][j] * d.matrix[j][i];
      if (p != 0 && p != 1) throw std::logic_error("matrix is not simply laced");
      d.m_table[i][j] = (p == 0) ? 2 : 3;
    }

  // positive roots by reflection closure from the simple roots
  std::vector<Weight> roots;
  for (int i = 0; i < n; ++i) roots.push_back(simple_root(d, i));
  std::vector<Weight> frontier = roots;
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& v : frontier)
      for (int i = 0; i < n; ++i) {
        Weight w = reflect(d, i, v);
        if (is_positive(w) && std::find(roots.begin(), roots.end(), w) == roots.end()) {
          roots.push_back(w);
          next.push_back(w);
        }
      }
    frontier = std::move(next);
  }
  std::sort(roots.begin(), roots.end(),
            [](const Weight& a, const Weight& b) {
              return std::pair(a.height(), a.c) < std::pair(b.height(), b.c);
            });
  d.positive_roots = std::move(roots);
  d.positive_root_count = static_cast<int>(d.positive_roots.size());

  // canonical longest word: greedy lex-least ascent.  Any ascent of a prefix
  // extends to w_0, so picking the smallest ascending letter at each step
  // yields the lexicographically least element of R(w_0).
  WeylMat u = identity_mat(d);
  for (int step = 0; step < d.positive_root_count; ++step)
    for (int i = 0; i < n; ++i)
      if (is_positive(act(d, u, simple_root(d, i)))) {
        d.ref.push_back(i);
        u = mul_s(d, u, i);
        break;
      }

  // star map from w_0(alpha_i) = -alpha_{i*}
  d.star.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const Weight img = -act(d, u, simple_root(d, i));
    for (int j = 0; j < n; ++j)
      if (img == simple_root(d, j)) d.star[i] = j;
    if (d.star[i] < 0) throw std::logic_error("w_0 does not permute the simple roots");
  }

  // roots enumerated along the reference word, in word order
  {
    WeylMat v = identity_mat(d);
    for (int i : d.ref) {
      d.ref_roots.push_back(act(d, v, simple_root(d, i)));
      v = mul_s(d, v, i);
    }
  }

  d.cache = std::make_shared<CartanCache>();
  return d;
}

// ---------------------------------------------------------------------------
// words

inline bool is_reduced(const CartanDatum& d, const std::vector<int>& letters) {
  WeylMat u = identity_mat(d);
  for (int i : letters) {
    if (i < 0 || i >= d.rank()) throw std::invalid_argument("letter out of range");
    if (!is_positive(act(d, u, simple_root(d, i)))) return false;
    u = mul_s(d, u, i);
  }
  return true;
}

inline ReducedWord make_word(const CartanDatum& d, std::vector<int> letters) {
  if (!is_reduced(d, letters)) throw std::invalid_argument("word is not reduced");
  ReducedWord w;
  w.element = word_element(d, letters);
  w.is_longest = static_cast<int>(letters.size()) == d.positive_root_count;
  w.letters = std::move(letters);
  return w;
}

inline ReducedWord longest_word(const CartanDatum& d) { return make_word(d, d.ref); }

/// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}); requires a reduced word.
inline std::vector<Weight> roots_along(const CartanDatum& d, const std::vector<int>& letters) {
  std::vector<Weight> out;
  out.reserve(letters.size());
  WeylMat u = identity_mat(d);
  for (int i : letters) {
    Weight b = act(d, u, simple_root(d, i));
    if (!is_positive(b)) throw std::invalid_argument("word is not reduced");
    out.push_back(std::move(b));
    u = mul_s(d, u, i);
  }
  return out;
}

/// (i_1, ..., i_l) in R(w_0)  ->  (i_2, ..., i_l, i_1*) in R(w_0).
inline std::vector<int> rotate_word(const CartanDatum& d, const std::vector<int>& letters) {
  if (static_cast<int>(letters.size()) != d.positive_root_count)
    throw std::invalid_argument("rotate_word requires a reduced word of w_0");
  std::vector<int> out(letters.begin() + 1, letters.end());
  out.push_back(d.star[letters.front()]);
  return out;
}

namespace detail {

/// Rewrites reduced `word` by braid moves until it starts with `j` (which must
/// be a left descent).  Builds the alternating m(i,j)-prefix by recursing on
/// suffixes, then flips it with a single braid move.
inline std::vector<Move> make_initial(const CartanDatum& d, std::vector<int>& word, int j) {
  std::vector<Move> moves;
  if (word.empty()) throw std::invalid_argument("empty word has no descent");
  if (word.front() == j) return moves;
  const int i = word.front();
  const int m = d.m_table[i][j];
  for (int t = 1; t < m; ++t) {
    const int next = (t % 2 == 0) ? i : j;
    std::vector<int> sub(word.begin() + t, word.end());
    std::vector<Move> sub_moves = make_initial(d, sub, next);
    std::copy(sub.begin(), sub.end(), word.begin() + t);
    for (const Move& mv : sub_moves) moves.push_back({mv.pos + t, mv.m});
    if (word[t] != next) throw std::logic_error("alternating prefix construction failed");
  }
  for (int t = 0; t < m; ++t) word[t] = (t % 2 == 0) ? j : i;
  moves.push_back({0, m});
  return moves;
}

}  // namespace detail

/// Rewrites `word` in place according to `moves`, validating each move.
inline void apply_moves_to_word(const CartanDatum& d, std::vector<int>& word,
                                const std::vector<Move>& moves) {
  for (const Move& mv : moves) {
    const int a = word[mv.pos], b = word[mv.pos + 1];
    if (mv.m != d.m_table[a][b]) throw std::logic_error("braid move order mismatch");
    for (int t = 0; t < mv.m; ++t) word[mv.pos + t] = (t % 2 == 0) ? b : a;
  }
}

/// Cached braid-move path between two reduced words for the same element.
/// The returned reference stays valid for the lifetime of the datum's cache.
inline const std::vector<Move>& braid_move_path_cached(const CartanDatum& d,
                                                       const std::vector<int>& from,
                                                       const std::vector<int>& to) {
  {
    std::lock_guard<std::mutex> lock(d.cache->mu);
    auto it = d.cache->paths.find({from, to});
    if (it != d.cache->paths.end()) return it->second;
  }
  if (from.size() != to.size() || word_element(d, from) != word_element(d, to))
    throw std::invalid_argument("words represent different Weyl elements");
  std::vector<Move> moves;
  std::vector<int> cur = from;
  for (std::size_t off = 0; off < to.size(); ++off) {
    std::vector<int> sub(cur.begin() + off, cur.end());
    std::vector<Move> mv = detail::make_initial(d, sub, to[off]);
    std::copy(sub.begin(), sub.end(), cur.begin() + off);
    for (const Move& m : mv) moves.push_back({m.pos + static_cast<int>(off), m.m});
  }
  if (cur != to) throw std::logic_error("braid path construction failed");
  std::lock_guard<std::mutex> lock(d.cache->mu);
  return d.cache->paths.emplace(std::pair(from, to), std::move(moves)).first->second;
}

inline std::vector<Move> braid_move_path(const CartanDatum& d, const std::vector<int>& from,
                                         const std::vector<int>& to) {
  return braid_move_path_cached(d, from, to);
}

// ---------------------------------------------------------------------------
// distinguished words per Dynkin node, used by the crystal operators

/// Reduced words of w_0 adapted to node i:
///   head:       starts with i            (reads eps_i / drives e_i, f_i)
///   head_rot:   rotate_word(head)        (target of the Saito reflection)
///   tail:       ends with i*             (reads eps*_i / drives e*_i, f*_i)
///   tail_shift: (i, tail_1, .., tail_{l-1})  (target of the dual reflection)
struct IndexWords {
  std::vector<int> head;
  std::vector<int> head_rot;
  std::vector<int> tail;
  std::vector<int> tail_shift;
};

inline const IndexWords& index_words(const CartanDatum& d, int i) {
  if (i < 0 || i >= d.rank()) throw std::invalid_argument("node index out of range");
  std::lock_guard<std::mutex> lock(d.cache->mu);
  auto it = d.cache->words.find(i);
  if (it != d.cache->words.end()) return it->second;

  IndexWords w;
  std::vector<int> head = d.ref;
  detail::make_initial(d, head, i);
  w.head = head;
  w.head_rot = std::vector<int>(head.begin() + 1, head.end());
  w.head_rot.push_back(d.star[i]);

  std::vector<int> head_star = d.ref;
  detail::make_initial(d, head_star, d.star[i]);
  w.tail.assign(head_star.rbegin(), head_star.rend());  // reverse of a word of w_0
  w.tail_shift.push_back(i);
  w.tail_shift.insert(w.tail_shift.end(), w.tail.begin(), w.tail.end() - 1);

  return d.cache->words.emplace(i, std::move(w)).first->second;
}

}  // namespace excry::cartan
