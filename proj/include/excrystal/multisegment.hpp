#pragma once

/**
 * @file multisegment.hpp
 * @brief Type-A realization of B(infinity) by multisegments, with the
 *        signature rule for the crystal operators and the coordinate bridge
 *        to the Lusztig-data engine.
 *
 * A multisegment is a finite multiset of integer intervals [a,b] inside the
 * Dynkin diagram of A_n.  Intervals are 0-based internally; the text format
 * ("2[2]+3[1,2]+4[1]") is 1-based, multiplicity-prefixed, and lists segments
 * with larger right end first (ties: larger left end first).
 *
 * Everything here is independent of binf.hpp except the explicit bridge at
 * the bottom, which the verification suites use to cross-check the two
 * realizations against each other.
 */

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "binf.hpp"
#include "cartan.hpp"

namespace excry::ms {

using binf::Op;
using cartan::CartanDatum;
using cartan::Weight;

/// Interval [a,b] of Dynkin nodes, 0 <= a <= b < n.
struct Segment {
  int a = 0;
  int b = 0;
  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// Multiset of segments; multiplicities are always kept strictly positive,
/// so map equality is multiset equality.
struct Multisegment {
  std::map<Segment, int> segs;
  friend bool operator==(const Multisegment&, const Multisegment&) = default;
};

inline void require_type_a(const CartanDatum& d, const char* what) {
  if (d.type.family != cartan::Family::A)
    throw std::invalid_argument(std::string(what) + " requires type A");
}

inline void ms_validate(const CartanDatum& d, const Multisegment& m) {
  for (const auto& [seg, mult] : m.segs) {
    if (!(0 <= seg.a && seg.a <= seg.b && seg.b < d.rank()))
      throw std::invalid_argument("segment out of range");
    if (mult <= 0) throw std::invalid_argument("segment multiplicity must be positive");
  }
}

inline void ms_add(Multisegment& m, Segment seg, int delta) {
  const int v = (m.segs[seg] += delta);
  if (v == 0) m.segs.erase(seg);
  if (v < 0) throw std::logic_error("segment multiplicity went negative");
}

inline Weight ms_weight(const CartanDatum& d, const Multisegment& m) {
  Weight w{std::vector<int>(d.rank(), 0)};
  for (const auto& [seg, mult] : m.segs)
    for (int t = seg.a; t <= seg.b; ++t) w.c[t] -= mult;
  return w;
}

// ---------------------------------------------------------------------------
// signature rule

namespace detail {

struct Mark {
  bool plus = false;
  Segment seg;
};

/// Sign word at node i: '-' for each [i,b], '+' for each [i+1,b], scanned
/// with right end b descending and, within equal b, '-' before '+'.
inline std::vector<Mark> signs(const CartanDatum& d, const Multisegment& m, int i) {
  std::vector<Mark> out;
  for (int b = d.rank() - 1; b >= i; --b) {
    if (auto it = m.segs.find({i, b}); it != m.segs.end())
      out.insert(out.end(), it->second, Mark{false, {i, b}});
    if (i + 1 <= b)
      if (auto it = m.segs.find({i + 1, b}); it != m.segs.end())
        out.insert(out.end(), it->second, Mark{true, {i + 1, b}});
  }
  return out;
}

/// Cancels "+-" pairs (stack discipline); survivors keep their order.
inline std::vector<Mark> reduce(std::vector<Mark> in) {
  std::vector<Mark> stack;
  for (const Mark& s : in) {
    if (!stack.empty() && stack.back().plus && !s.plus)
      stack.pop_back();
    else
      stack.push_back(s);
  }
  return stack;
}

}  // namespace detail

inline int ms_eps(const CartanDatum& d, const Multisegment& m, int i) {
  int k = 0;
  for (const auto& s : detail::reduce(detail::signs(d, m, i)))
    if (!s.plus) ++k;
  return k;
}

/// f at node i: shrink the leftmost surviving [i+1,b] to [i,b]; if no '+'
/// survives, create the simple segment [i,i].
inline Multisegment ms_f(const CartanDatum& d, Multisegment m, int i) {
  for (const auto& s : detail::reduce(detail::signs(d, m, i)))
    if (s.plus) {
      ms_add(m, s.seg, -1);
      ms_add(m, {s.seg.a - 1, s.seg.b}, +1);
      return m;
    }
  ms_add(m, {i, i}, +1);
  return m;
}

/// e at node i: grow the rightmost surviving [i,b] to [i+1,b], deleting it
/// outright when b = i; none survives exactly when eps_i = 0.
inline std::optional<Multisegment> ms_e(const CartanDatum& d, Multisegment m, int i) {
  auto surv = detail::reduce(detail::signs(d, m, i));
  for (auto it = surv.rbegin(); it != surv.rend(); ++it)
    if (!it->plus) {
      ms_add(m, it->seg, -1);
      if (it->seg.b > i) ms_add(m, {it->seg.a + 1, it->seg.b}, +1);
      return m;
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// starred operators via the flip symmetry

/// Diagram flip [a,b] -> [n-1-b, n-1-a]; conjugating the plain operators by
/// the flip produces the starred ones.
inline Multisegment ms_flip(const CartanDatum& d, const Multisegment& m) {
  Multisegment out;
  for (const auto& [seg, mult] : m.segs)
    out.segs[{d.rank() - 1 - seg.b, d.rank() - 1 - seg.a}] = mult;
  return out;
}

inline int ms_eps_star(const CartanDatum& d, const Multisegment& m, int i) {
  return ms_eps(d, ms_flip(d, m), d.rank() - 1 - i);
}

inline Multisegment ms_f_star(const CartanDatum& d, const Multisegment& m, int i) {
  return ms_flip(d, ms_f(d, ms_flip(d, m), d.rank() - 1 - i));
}

inline std::optional<Multisegment> ms_e_star(const CartanDatum& d, const Multisegment& m, int i) {
  auto r = ms_e(d, ms_flip(d, m), d.rank() - 1 - i);
  if (!r) return std::nullopt;
  return ms_flip(d, *r);
}

// ---------------------------------------------------------------------------
// uniform interface mirroring the Lusztig-data engine

inline binf::LocalData ms_local_data(const CartanDatum& d, const Multisegment& m, int i) {
  require_type_a(d, "ms_local_data");
  binf::LocalData loc;
  loc.eps = ms_eps(d, m, i);
  loc.eps_star = ms_eps_star(d, m, i);
  const int pair = cartan::pairing(d, i, ms_weight(d, m));
  loc.phi = loc.eps + pair;
  loc.phi_star = loc.eps_star + pair;
  return loc;
}

inline std::optional<Multisegment> ms_kashiwara(const CartanDatum& d, Op op, int i,
                                                const Multisegment& m) {
  require_type_a(d, "ms_kashiwara");
  switch (op) {
    case Op::e: return ms_e(d, m, i);
    case Op::f: return ms_f(d, m, i);
    case Op::e_star: return ms_e_star(d, m, i);
    case Op::f_star: return ms_f_star(d, m, i);
    case Op::e_max: {
      Multisegment cur = m;
      while (auto nxt = ms_e(d, cur, i)) cur = std::move(*nxt);
      return cur;
    }
    case Op::e_star_max: {
      Multisegment cur = m;
      while (auto nxt = ms_e_star(d, cur, i)) cur = std::move(*nxt);
      return cur;
    }
  }
  throw std::logic_error("unknown operator");
}

// ---------------------------------------------------------------------------
// bridge to the Lusztig-data realization
//
// The bridging word for A_n is (n-1, .., 1, 0, n-1, .., 1, .., n-1) in
// 0-based letters: its root enumeration walks the intervals with right end
// descending and, for equal right end, left end descending, so segment
// multiplicities line up with Lusztig coordinates one for one.

inline std::vector<int> bridge_word(const CartanDatum& d) {
  require_type_a(d, "bridge_word");
  std::vector<int> out;
  for (int t = 0; t < d.rank(); ++t)
    for (int j = d.rank() - 1; j >= t; --j) out.push_back(j);
  return out;
}

namespace detail {

struct Bridge {
  std::vector<int> word;
  std::map<Segment, int> pos;   // segment -> coordinate slot
  std::vector<Segment> segs;    // slot -> segment
};

inline Bridge make_bridge(const CartanDatum& d) {
  Bridge br;
  br.word = bridge_word(d);
  const auto roots = cartan::roots_along(d, br.word);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    int a = -1, b = -1;
    for (int t = 0; t < d.rank(); ++t)
      if (roots[k].c[t] != 0) {
        if (a < 0) a = t;
        b = t;
      }
    br.pos[{a, b}] = static_cast<int>(k);
    br.segs.push_back({a, b});
  }
  return br;
}

}  // namespace detail

inline binf::BinfElt ms_to_binf(const CartanDatum& d, const Multisegment& m) {
  require_type_a(d, "ms_to_binf");
  ms_validate(d, m);
  const auto br = detail::make_bridge(d);
  std::vector<int> coords(d.positive_root_count, 0);
  for (const auto& [seg, mult] : m.segs) coords[br.pos.at(seg)] = mult;
  return binf::detail::from_coords(d, std::move(coords), br.word);
}

inline Multisegment ms_from_binf(const CartanDatum& d, const binf::BinfElt& b) {
  require_type_a(d, "ms_from_binf");
  const auto br = detail::make_bridge(d);
  const std::vector<int> coords = binf::detail::coords_at(d, b, br.word);
  Multisegment out;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] != 0) out.segs[br.segs[k]] = coords[k];
  return out;
}

// ---------------------------------------------------------------------------
// text format

/// Parses "2[2]+3[1,2]+4[1]" (1-based node labels; "0" or "empty" for the
/// empty multisegment).
inline Multisegment ms_parse(const CartanDatum& d, const std::string& text) {
  Multisegment m;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty() || s == "0" || s == "empty") return m;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t lb = s.find('[', pos);
    std::size_t rb = s.find(']', pos);
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
      throw std::invalid_argument("malformed multisegment text: " + text);
    const std::string head = s.substr(pos, lb - pos);
    const int mult = head.empty() ? 1 : std::stoi(head);
    const std::string body = s.substr(lb + 1, rb - lb - 1);
    const std::size_t comma = body.find(',');
    int a = 0, b = 0;
    if (comma == std::string::npos) {
      a = b = std::stoi(body);
    } else {
      a = std::stoi(body.substr(0, comma));
      b = std::stoi(body.substr(comma + 1));
    }
    ms_add(m, {a - 1, b - 1}, mult);
    pos = rb + 1;
    if (pos < s.size()) {
      if (s[pos] != '+') throw std::invalid_argument("malformed multisegment text: " + text);
      ++pos;
    }
  }
  ms_validate(d, m);
  return m;
}

inline std::string ms_show(const Multisegment& m) {
  std::vector<std::pair<Segment, int>> items(m.segs.begin(), m.segs.end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    return std::pair(-x.first.b, -x.first.a) < std::pair(-y.first.b, -y.first.a);
  });
  std::string out;
  for (const auto& [seg, mult] : items) {
    if (!out.empty()) out += "+";
    if (mult != 1) out += std::to_string(mult);
    out += "[" + std::to_string(seg.a + 1);
    if (seg.b != seg.a) out += "," + std::to_string(seg.b + 1);
    out += "]";
  }
  return out.empty() ? "0" : out;
}

}  // namespace excry::ms
