#pragma once

/**
 * @file io.hpp
 * @brief Text and JSON surfaces: Cartan type strings, element serialization,
 *        operator scripts, braid-word text, and DOT graph export.
 *
 * All indices are 1-based on this boundary (Dynkin nodes, word letters); the
 * conversion to the library's internal 0-based numbering happens here and
 * nowhere else.
 *
 * Element JSON:  {"type":"A2","components":{"0":"1[2]","1":"2[2]+3[1,2]"}}
 * for type A (multisegment text, explicit multiplicities), and
 * {"type":"D4","components":{"0":{"word":[..],"coords":[..]}}} otherwise.
 */

#include <cctype>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "binf.hpp"
#include "braid.hpp"
#include "cartan.hpp"
#include "extended.hpp"
#include "labels.hpp"
#include "multisegment.hpp"

namespace excry::io {

using json = nlohmann::json;
using cartan::CartanDatum;
using ext::ExtElt;

// ---------------------------------------------------------------------------
// Cartan types

inline cartan::CartanType parse_type(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("bad type string: " + text);
  const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  cartan::CartanType t;
  switch (fam) {
    case 'A': t.family = cartan::Family::A; break;
    case 'D': t.family = cartan::Family::D; break;
    case 'E': t.family = cartan::Family::E; break;
    default: throw std::invalid_argument("bad type string: " + text);
  }
  try {
    t.rank = std::stoi(text.substr(1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad type string: " + text);
  }
  cartan::validate(t);
  return t;
}

// ---------------------------------------------------------------------------
// elements

/// Lusztig-datum JSON {"word":[1-based letters],"coords":[..]}.
inline json binf_to_json(const CartanDatum& d, const binf::BinfElt& b) {
  json w = json::array(), c = json::array();
  for (int i : d.ref) w.push_back(i + 1);
  for (int x : b.coords) c.push_back(x);
  return json{{"word", w}, {"coords", c}};
}

inline binf::BinfElt binf_from_json(const CartanDatum& d, const json& j) {
  if (!j.is_object() || !j.contains("word") || !j.contains("coords"))
    throw std::invalid_argument("element JSON needs word and coords");
  std::vector<int> word, coords;
  for (const auto& x : j.at("word")) word.push_back(static_cast<int>(x) - 1);
  for (const auto& x : j.at("coords")) coords.push_back(static_cast<int>(x));
  if (word.size() != coords.size())
    throw std::invalid_argument("word and coords must have equal length");
  for (int v : coords)
    if (v < 0) throw std::invalid_argument("coordinates must be nonnegative");
  return binf::element_of(d, binf::LusztigDatum{word, +1, coords});
}

/// Multisegment text with explicit multiplicities, as used inside JSON.
inline std::string ms_show_explicit(const ms::Multisegment& m) {
  std::vector<std::pair<ms::Segment, int>> items(m.segs.begin(), m.segs.end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    return std::pair(-x.first.b, -x.first.a) < std::pair(-y.first.b, -y.first.a);
  });
  std::string out;
  for (const auto& [seg, mult] : items) {
    if (!out.empty()) out += "+";
    out += std::to_string(mult) + "[" + std::to_string(seg.a + 1);
    if (seg.b != seg.a) out += "," + std::to_string(seg.b + 1);
    out += "]";
  }
  return out.empty() ? "0" : out;
}

inline json ext_to_json(const CartanDatum& d, const ExtElt& e) {
  json comps = json::object();
  for (const auto& [k, b] : e.comps) {
    if (d.type.family == cartan::Family::A)
      comps[std::to_string(k)] = ms_show_explicit(ms::ms_from_binf(d, b));
    else
      comps[std::to_string(k)] = binf_to_json(d, b);
  }
  return json{{"type", cartan::name(d.type)}, {"components", comps}};
}

inline ExtElt ext_from_json(const CartanDatum& d, const json& j) {
  if (!j.is_object() || !j.contains("components"))
    throw std::invalid_argument("element JSON needs a components object");
  if (j.contains("type") && j.at("type").is_string()) {
    const auto t = parse_type(j.at("type").get<std::string>());
    if (!(t == d.type))
      throw std::invalid_argument("element type " + cartan::name(t) +
                                  " does not match datum " + cartan::name(d.type));
  }
  ExtElt e;
  for (const auto& [key, val] : j.at("components").items()) {
    const int k = std::stoi(key);
    binf::BinfElt b = val.is_string()
                          ? ms::ms_to_binf(d, ms::ms_parse(d, val.get<std::string>()))
                          : binf_from_json(d, val);
    ext::set_component(e, k, std::move(b));
  }
  return e;
}

inline ExtElt ext_from_json_text(const CartanDatum& d, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("element JSON parse error: ") + err.what());
  }
  return ext_from_json(d, j);
}

// ---------------------------------------------------------------------------
// labels

inline json label_to_json(const labels::AffineLabel& l) {
  json out = json::array();
  for (const auto& [p, mult] : l.pairs) out.push_back(json::array({p.first, p.second, mult}));
  return out;
}

// ---------------------------------------------------------------------------
// operator scripts ("F 2 0", "E 1 -1", "D 1", "zeta", "R 1", "R* 1")

struct OpCall {
  enum class Kind { F, E, D, Zeta, R, Rinv } kind = Kind::F;
  int i = 0;  ///< node (0-based), for F/E/R
  int k = 0;  ///< slot for F/E, shift amount for D
};

inline std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline OpCall parse_op(const CartanDatum& d, const std::string& text) {
  const auto toks = tokens_of(text);
  if (toks.empty()) throw std::invalid_argument("empty operator");
  auto node_arg = [&](const std::string& s) {
    const int i = std::stoi(s) - 1;
    if (i < 0 || i >= d.rank()) throw std::invalid_argument("node out of range in: " + text);
    return i;
  };
  OpCall op;
  if (toks[0] == "F" || toks[0] == "E") {
    if (toks.size() != 3) throw std::invalid_argument("expected '<F|E> i k': " + text);
    op.kind = toks[0] == "F" ? OpCall::Kind::F : OpCall::Kind::E;
    op.i = node_arg(toks[1]);
    op.k = std::stoi(toks[2]);
    return op;
  }
  if (toks[0] == "D") {
    if (toks.size() != 2) throw std::invalid_argument("expected 'D p': " + text);
    op.kind = OpCall::Kind::D;
    op.k = std::stoi(toks[1]);
    return op;
  }
  if (toks[0] == "zeta") {
    if (toks.size() != 1) throw std::invalid_argument("expected 'zeta': " + text);
    op.kind = OpCall::Kind::Zeta;
    return op;
  }
  if (toks[0] == "R" || toks[0] == "R*") {
    if (toks.size() != 2) throw std::invalid_argument("expected 'R i' or 'R* i': " + text);
    op.kind = toks[0] == "R" ? OpCall::Kind::R : OpCall::Kind::Rinv;
    op.i = node_arg(toks[1]);
    return op;
  }
  throw std::invalid_argument("unknown operator: " + text);
}

inline ExtElt apply_op(const CartanDatum& d, const OpCall& op, ExtElt e) {
  switch (op.kind) {
    case OpCall::Kind::F: return ext::ext_F(d, op.i, op.k, std::move(e));
    case OpCall::Kind::E: return ext::ext_E(d, op.i, op.k, std::move(e));
    case OpCall::Kind::D: return ext::shift(d, op.k, e);
    case OpCall::Kind::Zeta: return ext::ext_zeta(d, e);
    case OpCall::Kind::R: return braid::braid_R(d, op.i, e, +1);
    case OpCall::Kind::Rinv: return braid::braid_R(d, op.i, e, -1);
  }
  throw std::logic_error("unknown operator kind");
}

// ---------------------------------------------------------------------------
// braid words: "1 2 1'" means R_1 R_2 R_1^{-1}, rightmost applied first

inline braid::BraidWord parse_braid_word(const CartanDatum& d, const std::string& text) {
  braid::BraidWord word;
  for (std::string tok : tokens_of(text)) {
    int sign = +1;
    if (!tok.empty() && tok.back() == '\'') {
      sign = -1;
      tok.pop_back();
    }
    int i = 0;
    try {
      i = std::stoi(tok) - 1;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad braid letter: " + tok);
    }
    if (i < 0 || i >= d.rank()) throw std::invalid_argument("braid letter out of range: " + tok);
    word.push_back({i, sign});
  }
  return word;
}

inline std::string show_braid_word(const braid::BraidWord& word) {
  std::string out;
  for (const auto& l : word) {
    if (!out.empty()) out += " ";
    out += std::to_string(l.i + 1);
    if (l.sign < 0) out += "'";
  }
  return out;
}

// ---------------------------------------------------------------------------
// compact human-readable element text (used in DOT nodes and reports)

inline std::string ext_show(const CartanDatum& d, const ExtElt& e) {
  if (e.comps.empty()) return "1";
  std::string out;
  for (const auto& [k, b] : e.comps) {
    if (!out.empty()) out += "  ";
    out += std::to_string(k) + ":";
    if (d.type.family == cartan::Family::A)
      out += ms::ms_show(ms::ms_from_binf(d, b));
    else {
      std::string c;
      for (int x : b.coords) c += (c.empty() ? "" : ",") + std::to_string(x);
      out += "(" + c + ")";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// DOT export: the (i,k)-colored graph on the ball of the given radius around
// the vacuum, slots restricted to [window_lo, window_hi]

inline int export_dot(const CartanDatum& d, int radius, int window_lo, int window_hi,
                      std::ostream& out) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  if (window_lo > window_hi) throw std::invalid_argument("empty slot window");
  std::map<ExtElt, int> id;
  std::vector<ExtElt> order;
  std::vector<std::string> edges;
  ExtElt root;
  id[root] = 0;
  order.push_back(root);
  std::vector<ExtElt> layer{root};
  for (int depth = 0; depth < radius && !layer.empty(); ++depth) {
    std::vector<ExtElt> next;
    for (const ExtElt& e : layer)
      for (int k = window_lo; k <= window_hi; ++k)
        for (int i = 0; i < d.rank(); ++i) {
          ExtElt img = ext::ext_F(d, i, k, e);
          auto [it, fresh] = id.emplace(img, static_cast<int>(order.size()));
          if (fresh) {
            order.push_back(img);
            next.push_back(img);
          }
          edges.push_back("  n" + std::to_string(id[e]) + " -> n" + std::to_string(it->second) +
                          " [label=\"(" + std::to_string(i + 1) + "," + std::to_string(k) +
                          ")\"];");
        }
    layer = std::move(next);
  }
  out << "digraph extended_crystal {\n";
  out << "  rankdir=TB;\n";
  for (std::size_t t = 0; t < order.size(); ++t)
    out << "  n" << t << " [label=\"" << ext_show(d, order[t]) << "\"];\n";
  for (const std::string& e : edges) out << e << "\n";
  out << "}\n";
  return static_cast<int>(order.size());
}

}  // namespace excry::io
