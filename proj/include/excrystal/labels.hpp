#pragma once

/**
 * @file labels.hpp
 * @brief Affine highest-weight labels for the rank-2 extended crystal: the
 *        spectral-shift map on label pairs, the labelling of extended
 *        multisegments, and the fundamental orbit of the braid chain.
 *
 * A label is a pair (i,a) with i in {1,2} and a - i odd; multisets of labels
 * with multiplicities form the label lattice.  Slot k of an extended
 * multisegment contributes through the base assignment
 *     [2] -> (1,2),   [12] -> (2,1),   [1] -> (1,0)
 * composed with the k-th power of the shift
 *     cdual(i,a) = (i, a+3)      after an even number of applications,
 *                  (3-i, a+3)    after an odd one.
 */

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braid.hpp"
#include "cartan.hpp"
#include "extended.hpp"
#include "multisegment.hpp"

namespace excry::labels {

using cartan::CartanDatum;
using ext::ExtElt;

/// One spectral label (i,a); i is 1-based here because the label alphabet is
/// its own index set, not the internal Dynkin numbering.
using LabelPair = std::pair<int, int>;

/// Multiset of labels with positive multiplicities.
struct AffineLabel {
  std::map<LabelPair, int> pairs;
  friend bool operator==(const AffineLabel&, const AffineLabel&) = default;
  friend auto operator<=>(const AffineLabel&, const AffineLabel&) = default;
};

inline bool label_valid(LabelPair p) {
  const auto [i, a] = p;
  return (i == 1 || i == 2) && (((a - i) % 2 + 2) % 2 == 1);
}

/// k-fold spectral shift of one label pair.
inline LabelPair cdual(int k, LabelPair p) {
  if (!label_valid(p)) throw std::invalid_argument("not a valid label pair");
  const auto [i, a] = p;
  return (k % 2 == 0) ? LabelPair{i, a + 3 * k} : LabelPair{3 - i, a + 3 * k};
}

inline AffineLabel cdual(int k, const AffineLabel& l) {
  AffineLabel out;
  for (const auto& [p, mult] : l.pairs) out.pairs[cdual(k, p)] += mult;
  return out;
}

inline void label_add(AffineLabel& l, LabelPair p, int mult) {
  if (!label_valid(p)) throw std::invalid_argument("not a valid label pair");
  const int v = (l.pairs[p] += mult);
  if (v == 0) l.pairs.erase(p);
  if (v < 0) throw std::logic_error("label multiplicity went negative");
}

inline void require_rank2_a(const CartanDatum& d, const char* what) {
  if (d.type.family != cartan::Family::A || d.rank() != 2)
    throw std::invalid_argument(std::string(what) + " is defined for type A2 only");
}

/// Label of one slot: base assignment on the three segments, then the k-th
/// shift power.
inline AffineLabel gamma_k(const CartanDatum& d, const ms::Multisegment& m, int k) {
  require_rank2_a(d, "gamma_k");
  AffineLabel out;
  for (const auto& [seg, mult] : m.segs) {
    LabelPair base;
    if (seg == ms::Segment{1, 1})
      base = {1, 2};
    else if (seg == ms::Segment{0, 1})
      base = {2, 1};
    else if (seg == ms::Segment{0, 0})
      base = {1, 0};
    else
      throw std::invalid_argument("segment outside the rank-2 alphabet");
    label_add(out, cdual(k, base), mult);
  }
  return out;
}

/// Total label of an extended element: sum of the slot labels.
inline AffineLabel gamma(const CartanDatum& d, const ExtElt& e) {
  require_rank2_a(d, "gamma");
  AffineLabel out;
  for (const auto& [k, b] : e.comps)
    for (const auto& [p, mult] : gamma_k(d, ms::ms_from_binf(d, b), k).pairs)
      label_add(out, p, mult);
  return out;
}

/// Membership in the fundamental pattern {(1, even a >= 0)} u {(2, odd a >= 1)}.
inline bool in_fundamental_set(LabelPair p) {
  const auto [i, a] = p;
  return label_valid(p) && a >= 0;
}

/// Labels of the braid chain along the alternating word (1,2,1,2,..): the
/// k-th element applies the first k-1 braid operators of the word to the
/// one-step element F_{i_k,0}(1) and reads off its label, which is always a
/// single pair.
inline std::vector<LabelPair> fundamental_orbit(const CartanDatum& d, int count) {
  require_rank2_a(d, "fundamental_orbit");
  std::vector<LabelPair> out;
  for (int k = 1; k <= count; ++k) {
    const auto node = [](int t) { return (t % 2 == 1) ? 0 : 1; };  // 1,2,1,2,..
    ExtElt e = ext::ext_F(d, node(k), 0, ext::one());
    for (int t = k - 1; t >= 1; --t) e = braid::braid_R(d, node(t), e, +1);
    const AffineLabel l = gamma(d, e);
    if (l.pairs.size() != 1 || l.pairs.begin()->second != 1)
      throw std::logic_error("chain element is not a single fundamental label");
    out.push_back(l.pairs.begin()->first);
  }
  return out;
}

// ---------------------------------------------------------------------------
// text format: "2(2,5)+3(1,4)+4(2,3)", multiplicity prefix omitted when 1,
// pairs listed with spectral parameter a descending.

inline std::string label_show(const AffineLabel& l) {
  std::vector<std::pair<LabelPair, int>> items(l.pairs.begin(), l.pairs.end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    return std::pair(-x.first.second, x.first.first) <
           std::pair(-y.first.second, y.first.first);
  });
  std::string out;
  for (const auto& [p, mult] : items) {
    if (!out.empty()) out += "+";
    if (mult != 1) out += std::to_string(mult);
    out += "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
  }
  return out.empty() ? "0" : out;
}

inline AffineLabel label_parse(const std::string& text) {
  AffineLabel l;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty() || s == "0") return l;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t lb = s.find('(', pos);
    const std::size_t comma = s.find(',', lb);
    const std::size_t rb = s.find(')', lb);
    if (lb == std::string::npos || comma == std::string::npos || rb == std::string::npos ||
        !(lb < comma && comma < rb))
      throw std::invalid_argument("malformed label text: " + text);
    const std::string head = s.substr(pos, lb - pos);
    const int mult = head.empty() ? 1 : std::stoi(head);
    const int i = std::stoi(s.substr(lb + 1, comma - lb - 1));
    const int a = std::stoi(s.substr(comma + 1, rb - comma - 1));
    label_add(l, {i, a}, mult);
    pos = rb + 1;
    if (pos < s.size()) {
      if (s[pos] != '+') throw std::invalid_argument("malformed label text: " + text);
      ++pos;
    }
  }
  return l;
}

}  // namespace excry::labels
