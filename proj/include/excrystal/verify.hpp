#pragma once

/**
 * @file verify.hpp
 * @brief Randomized verification suites: every structural identity the
 *        library relies on, checked on seeded random elements, with
 *        first-principles re-implementations of the fast paths to compare
 *        against.
 *
 * Each suite is deterministic for a fixed seed and returns a report listing
 * the number of checks performed and a message per failure.  The `detail`
 * namespace re-derives the Saito reflections, Lusztig data, and the braid
 * operators directly from the elementary crystal operators, so a suite
 * failure localizes a disagreement between definition and implementation.
 */

#include <random>
#include <string>
#include <vector>

#include "binf.hpp"
#include "braid.hpp"
#include "cartan.hpp"
#include "extended.hpp"
#include "folding.hpp"
#include "labels.hpp"
#include "multisegment.hpp"

namespace excry::verify {

using binf::BinfElt;
using cartan::CartanDatum;
using ext::ExtElt;

struct SuiteReport {
  std::string suite;
  std::string type;
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }

  void expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond && failures.size() < 25) failures.push_back(what);
    if (!cond && failures.size() == 25) failures.push_back("(further failures suppressed)");
  }
};

// ---------------------------------------------------------------------------
// first-principles reference implementations

namespace detail {

/// T_i from its definition f^{phi*} e*^{eps*}; requires eps_i(b) = 0.
inline BinfElt T_def(const CartanDatum& d, int i, const BinfElt& b) {
  const auto loc = binf::local_data(d, i, b);
  BinfElt out = binf::power(d, binf::Op::e_star, i, b, loc.eps_star);
  return binf::power(d, binf::Op::f, i, std::move(out), loc.phi_star);
}

/// Dual reflection f*^{phi} e^{eps}; requires eps*_i(b) = 0.
inline BinfElt Ts_def(const CartanDatum& d, int i, const BinfElt& b) {
  const auto loc = binf::local_data(d, i, b);
  BinfElt out = binf::power(d, binf::Op::e, i, b, loc.eps);
  return binf::power(d, binf::Op::f_star, i, std::move(out), loc.phi);
}

inline BinfElt saito_def(const CartanDatum& d, int i, const BinfElt& b, bool star) {
  if (!star) return T_def(d, i, *binf::kashiwara(d, binf::Op::e_max, i, b));
  return Ts_def(d, i, *binf::kashiwara(d, binf::Op::e_star_max, i, b));
}

/// Lusztig datum from the reflection chains; positive convention returns the
/// chain of eps values, negative returns the printed (reversed) eps* chain.
inline std::vector<int> datum_def(const CartanDatum& d, const std::vector<int>& word,
                                  int convention, const BinfElt& b) {
  std::vector<int> out;
  BinfElt cur = b;
  for (std::size_t t = 0; t < word.size(); ++t) {
    const int i = word[t];
    out.push_back(convention == +1 ? binf::eps(d, i, cur) : binf::eps_star(d, i, cur));
    if (t + 1 < word.size()) cur = binf::saito(d, i, cur, convention != +1);
  }
  if (convention != +1) std::reverse(out.begin(), out.end());
  return out;
}

/// Slotwise braid operator assembled operator by operator:
/// b'_k = (f*_i)^{eps_i(b_{k-1})} ( T_i e_i^max (b_k) ).
inline ExtElt R_def(const CartanDatum& d, int i, const ExtElt& e) {
  ExtElt out;
  if (e.comps.empty()) return out;
  const int lo = e.comps.begin()->first, hi = e.comps.rbegin()->first;
  for (int k = lo; k <= hi + 1; ++k) {
    const BinfElt cur = ext::component(d, e, k);
    BinfElt img = binf::is_highest(cur) ? cur : saito_def(d, i, cur, false);
    img = binf::power(d, binf::Op::f_star, i, std::move(img),
                      binf::eps(d, i, ext::component(d, e, k - 1)));
    ext::set_component(out, k, std::move(img));
  }
  return out;
}

/// Inverse braid operator: b'_k = (f_i)^{eps*_i(b_{k+1})} ( T*_i e*_i^max (b_k) ).
inline ExtElt Rs_def(const CartanDatum& d, int i, const ExtElt& e) {
  ExtElt out;
  if (e.comps.empty()) return out;
  const int lo = e.comps.begin()->first, hi = e.comps.rbegin()->first;
  for (int k = lo - 1; k <= hi; ++k) {
    const BinfElt cur = ext::component(d, e, k);
    BinfElt img = binf::is_highest(cur) ? cur : saito_def(d, i, cur, true);
    img = binf::power(d, binf::Op::f, i, std::move(img),
                      binf::eps_star(d, i, ext::component(d, e, k + 1)));
    ext::set_component(out, k, std::move(img));
  }
  return out;
}

inline BinfElt rand_binf(const CartanDatum& d, std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> steps(0, depth);
  return ext::random_binf(d, rng, steps(rng));
}

inline ExtElt rand_ext(const CartanDatum& d, std::mt19937_64& rng, int depth,
                       int window = 2) {
  std::uniform_int_distribution<int> steps(0, depth);
  return ext::random_element(d, rng, steps(rng), -window, window);
}

inline std::string show_wt(const cartan::Weight& w) {
  std::string s = "(";
  for (std::size_t t = 0; t < w.c.size(); ++t)
    s += (t ? "," : "") + std::to_string(w.c[t]);
  return s + ")";
}

/// Reference word plus its rotations (and the reversed reference once
/// rotations start repeating), used wherever several words of w_0 are needed.
inline std::vector<std::vector<int>> some_longest_words(const CartanDatum& d, int count) {
  std::vector<std::vector<int>> words{d.ref};
  while (static_cast<int>(words.size()) < count) {
    std::vector<int> next = cartan::rotate_word(d, words.back());
    if (std::find(words.begin(), words.end(), next) == words.end()) {
      words.push_back(std::move(next));
    } else {
      std::vector<int> rev(d.ref.rbegin(), d.ref.rend());
      if (std::find(words.begin(), words.end(), rev) != words.end()) break;
      words.push_back(std::move(rev));
    }
  }
  return words;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// suites

/// Elementary operator identities on B(infinity): inverse pairs, weight and
/// eps bookkeeping, fast Saito reflections against their definitions, and
/// the reflection round trip on its domain.
inline SuiteReport crystal_axioms(const CartanDatum& d, int samples, int depth,
                                  std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "crystal-axioms";
  rep.type = cartan::name(d.type);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const BinfElt b = detail::rand_binf(d, rng, depth);
    for (int i = 0; i < d.rank(); ++i) {
      const std::string at = " at sample " + std::to_string(s) + ", node " + std::to_string(i + 1);
      rep.expect(binf::e(d, i, binf::f(d, i, b)) == b, "e(f(b)) != b" + at);
      rep.expect(binf::e_star(d, i, binf::f_star(d, i, b)) == b, "e*(f*(b)) != b" + at);
      if (auto up = binf::e(d, i, b)) rep.expect(binf::f(d, i, *up) == b, "f(e(b)) != b" + at);
      cartan::Weight wf = binf::weight(d, binf::f(d, i, b)) - binf::weight(d, b);
      rep.expect(wf == -cartan::simple_root(d, i), "wt(f(b)) != wt(b) - alpha" + at);
      rep.expect(binf::eps(d, i, binf::f(d, i, b)) == binf::eps(d, i, b) + 1,
                 "eps(f(b)) != eps(b)+1" + at);
      rep.expect(binf::eps_star(d, i, binf::f_star(d, i, b)) == binf::eps_star(d, i, b) + 1,
                 "eps*(f*(b)) != eps*(b)+1" + at);
      rep.expect(binf::saito(d, i, b, false) == detail::saito_def(d, i, b, false),
                 "saito fast path != definition" + at);
      rep.expect(binf::saito(d, i, b, true) == detail::saito_def(d, i, b, true),
                 "dual saito fast path != definition" + at);
      if (binf::eps(d, i, b) == 0)
        rep.expect(binf::saito(d, i, binf::saito(d, i, b, false), true) == b,
                   "reflection round trip failed on eps=0 element" + at);
    }
  }
  return rep;
}

/// Inverse pairs and exchange laws on the extended crystal: E/F, shift
/// commutation, normal-form round trip, braid inverses, shift/braid
/// commutation, and the weight reflection law.
inline SuiteReport inverse_pairs(const CartanDatum& d, int samples, int depth,
                                 std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "inverse-pairs";
  rep.type = cartan::name(d.type);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> node(0, d.rank() - 1);
  std::uniform_int_distribution<int> slot(-2, 2);
  for (int s = 0; s < samples; ++s) {
    const ExtElt e = detail::rand_ext(d, rng, depth);
    const int i = node(rng), k = slot(rng), p = slot(rng);
    const std::string at = " at sample " + std::to_string(s);
    rep.expect(ext::ext_E(d, i, k, ext::ext_F(d, i, k, e)) == e, "E(F(e)) != e" + at);
    rep.expect(ext::ext_F(d, i, k, ext::ext_E(d, i, k, e)) == e, "F(E(e)) != e" + at);
    rep.expect(ext::shift(d, p, ext::ext_F(d, i, k, e)) ==
                   ext::ext_F(d, i, k + p, ext::shift(d, p, e)),
               "shift does not commute with F" + at);
    rep.expect(ext::ext_zeta(d, ext::ext_zeta(d, e)) == e, "zeta not involutive" + at);

    ExtElt scratch = e;
    const auto path = ext::to_highest(d, scratch);
    rep.expect(scratch.comps.empty(), "to_highest did not reach the vacuum" + at);
    ExtElt back;
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      back = ext::ext_F(d, it->first, it->second, std::move(back));
    rep.expect(back == e, "to_highest replay did not rebuild the element" + at);

    const ExtElt r = braid::braid_R(d, i, e, +1);
    const ExtElt rs = braid::braid_R(d, i, e, -1);
    rep.expect(braid::braid_R(d, i, r, -1) == e, "R^{-1}(R(e)) != e" + at);
    rep.expect(braid::braid_R(d, i, rs, +1) == e, "R(R^{-1}(e)) != e" + at);
    rep.expect(ext::shift(d, 1, r) == braid::braid_R(d, i, ext::shift(d, 1, e), +1),
               "R does not commute with the shift" + at);
    rep.expect(ext::ext_weight(d, r) == cartan::reflect(d, i, ext::ext_weight(d, e)),
               "wt(R(e)) != s_i(wt(e))" + at);
    rep.expect(r == detail::R_def(d, i, e), "R fast path != slotwise definition" + at);
    rep.expect(rs == detail::Rs_def(d, i, e), "R^{-1} fast path != slotwise definition" + at);
  }
  return rep;
}

/// Braid relations between every pair of nodes on random elements.
inline SuiteReport braid_relations(const CartanDatum& d, int samples, int depth,
                                   std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "braid-relations";
  rep.type = cartan::name(d.type);
  std::mt19937_64 seeds(seed);
  for (int i = 0; i < d.rank(); ++i)
    for (int j = i + 1; j < d.rank(); ++j) {
      const auto r = braid::check_relation(d, i, j, samples, depth, seeds());
      rep.checked += r.checked;
      if (!r.ok())
        rep.failures.push_back("relation m=" + std::to_string(r.m) + " between nodes " +
                               std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               " failed on " + std::to_string(r.failed) + "/" +
                               std::to_string(r.checked) + " samples");
    }
  return rep;
}

/// Longest-word chains: R along any reduced word of w_0 equals the shift of
/// the star relabel, and the inverse chain equals the inverse shift.
inline SuiteReport longest_word(const CartanDatum& d, int words, int samples, int depth,
                                std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "longest-word";
  rep.type = cartan::name(d.type);
  std::mt19937_64 rng(seed);
  for (const auto& w : detail::some_longest_words(d, words)) {
    for (int s = 0; s < samples; ++s) {
      const ExtElt e = detail::rand_ext(d, rng, depth);
      const ExtElt dz = ext::shift(d, 1, ext::ext_zeta(d, e));
      rep.expect(braid::longest_R(d, w, e) == dz,
                 "longest chain != shift of star relabel at sample " + std::to_string(s));
      braid::BraidWord inv;
      for (int i : w) inv.push_back({i, -1});
      rep.expect(braid::braid_apply(d, inv, e) ==
                     ext::shift(d, -1, ext::ext_zeta(d, e)),
                 "inverse chain != inverse shift of star relabel at sample " + std::to_string(s));
    }
  }
  return rep;
}

/// Dual-realization agreement in type A: the multisegment operators and the
/// Lusztig-data operators agree along random operator strings, statistic by
/// statistic, through the coordinate bridge.
inline SuiteReport oracle_agreement(const CartanDatum& d, int samples, int depth,
                                    std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "oracle-agreement";
  rep.type = cartan::name(d.type);
  if (d.type.family != cartan::Family::A) {
    rep.failures.push_back("oracle-agreement runs in type A only");
    return rep;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> node(0, d.rank() - 1);
  std::uniform_int_distribution<int> len(0, depth);
  for (int s = 0; s < samples; ++s) {
    ms::Multisegment m;
    BinfElt b = binf::highest(d);
    const int steps = len(rng);
    for (int t = 0; t < steps; ++t) {
      const int i = node(rng);
      m = ms::ms_f(d, std::move(m), i);
      b = binf::f(d, i, b);
    }
    const std::string at = " at sample " + std::to_string(s);
    rep.expect(ms::ms_to_binf(d, m) == b, "bridge image mismatch after f-string" + at);
    rep.expect(ms::ms_from_binf(d, b) == m, "bridge preimage mismatch after f-string" + at);
    rep.expect(ms::ms_weight(d, m) == binf::weight(d, b), "weight mismatch" + at);
    for (int i = 0; i < d.rank(); ++i) {
      const auto lm = ms::ms_local_data(d, m, i);
      const auto lb = binf::local_data(d, i, b);
      rep.expect(lm.eps == lb.eps && lm.phi == lb.phi && lm.eps_star == lb.eps_star &&
                     lm.phi_star == lb.phi_star,
                 "local data mismatch" + at + ", node " + std::to_string(i + 1));
      rep.expect(ms::ms_to_binf(d, ms::ms_f_star(d, m, i)) == binf::f_star(d, i, b),
                 "f* mismatch" + at);
      const auto em = ms::ms_e(d, m, i);
      const auto eb = binf::e(d, i, b);
      rep.expect(em.has_value() == eb.has_value() &&
                     (!em || ms::ms_to_binf(d, *em) == *eb),
                 "e mismatch" + at);
      const auto esm = ms::ms_e_star(d, m, i);
      const auto esb = binf::e_star(d, i, b);
      rep.expect(esm.has_value() == esb.has_value() &&
                     (!esm || ms::ms_to_binf(d, *esm) == *esb),
                 "e* mismatch" + at);
    }
    // star-relabel properties, checked on the Lusztig side
    const BinfElt z = binf::zeta_b(d, b);
    rep.expect(binf::zeta_b(d, z) == b, "zeta not involutive" + at);
    for (int i = 0; i < d.rank(); ++i) {
      rep.expect(binf::eps(d, i, z) == binf::eps(d, d.star[i], b),
                 "eps of relabel mismatch" + at);
      rep.expect(binf::zeta_b(d, binf::f(d, d.star[i], b)) == binf::f(d, i, z),
                 "relabel does not intertwine f" + at);
    }
  }
  return rep;
}

/// Lusztig data with respect to many words: positive data against the
/// reflection chains, the negative/positive duality, and the one-letter
/// rotation law.
inline SuiteReport two_ld(const CartanDatum& d, int samples, int depth, std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "two-ld";
  rep.type = cartan::name(d.type);
  std::mt19937_64 rng(seed);
  const auto words = detail::some_longest_words(d, 6);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(words.size()) - 1);
  std::uniform_int_distribution<int> tdist(0, 2);
  for (int s = 0; s < samples; ++s) {
    const BinfElt b = detail::rand_binf(d, rng, depth);
    const auto& w = words[pick(rng)];
    const std::string at = " at sample " + std::to_string(s);

    const auto plus = binf::datum(d, b, w, +1);
    rep.expect(plus.coords == detail::datum_def(d, w, +1, b),
               "positive datum != reflection chain" + at);
    rep.expect(binf::element_of(d, plus) == b, "positive datum round trip failed" + at);

    const auto minus = binf::datum(d, b, w, -1);
    std::vector<int> printed(minus.coords.rbegin(), minus.coords.rend());
    rep.expect(printed == detail::datum_def(d, w, -1, b),
               "negative datum != dual reflection chain" + at);
    rep.expect(binf::element_of(d, minus) == b, "negative datum round trip failed" + at);

    std::vector<int> dual(w.rbegin(), w.rend());
    for (int& x : dual) x = d.star[x];
    rep.expect(printed == binf::datum(d, b, dual, +1).coords,
               "negative datum != positive datum of the dual word" + at);

    // one-letter rotation: datum of f*^t(reflected b) along the rotated word
    const int i = w.front();
    const int t = tdist(rng);
    const BinfElt moved =
        binf::power(d, binf::Op::f_star, i, binf::saito(d, i, b, false), t);
    std::vector<int> expected(plus.coords.begin() + 1, plus.coords.end());
    expected.push_back(t);
    rep.expect(binf::datum(d, moved, cartan::rotate_word(d, w), +1).coords == expected,
               "rotation law for the positive datum failed" + at);
  }
  return rep;
}

/// Folding: matrix arithmetic, fixed-locus preservation, the automorphism
/// intertwining law, inverse orbit operators, and folded braid relations.
inline SuiteReport folding(const fold::FoldingDatum& fd, int samples, int depth,
                           std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "folding";
  rep.type = cartan::name(fd.source.type);
  std::mt19937_64 rng(seed);
  const int r = fd.folded_rank();
  std::uniform_int_distribution<int> orbit(0, r - 1);
  std::uniform_int_distribution<int> node(0, fd.source.rank() - 1);
  std::uniform_int_distribution<int> slot(-2, 2);
  std::uniform_int_distribution<int> steps(0, depth);
  const int m = (r >= 2) ? fd.folded_m[0][1] : 2;
  for (int s = 0; s < samples; ++s) {
    ExtElt e = ext::one();
    const int nsteps = steps(rng);
    for (int t = 0; t < nsteps; ++t) e = fold::fold_F(fd, orbit(rng), slot(rng), std::move(e));
    const std::string at = " at sample " + std::to_string(s);

    rep.expect(fold::invariance_check(fd, e), "orbitwise word left the fixed locus" + at);

    const int i = node(rng), k = slot(rng), j = orbit(rng);
    rep.expect(fold::sigma_ext(fd, ext::ext_F(fd.source, i, k, e)) ==
                   ext::ext_F(fd.source, fd.sigma[i], k, fold::sigma_ext(fd, e)),
               "automorphism does not intertwine F" + at);

    rep.expect(fold::fold_E(fd, j, k, fold::fold_F(fd, j, k, e)) == e,
               "orbitwise E is not inverse to orbitwise F" + at);

    const ExtElt rj = fold::fold_R(fd, j, e, +1);
    rep.expect(fold::invariance_check(fd, rj), "orbitwise R left the fixed locus" + at);
    rep.expect(fold::fold_R(fd, j, rj, -1) == e, "orbitwise R not inverted" + at);

    if (r >= 2) {
      ExtElt lhs = e, rhs = e;
      int a = 0, b2 = 1;
      for (int t = 0; t < m; ++t) {
        lhs = fold::fold_R(fd, a, std::move(lhs), +1);
        std::swap(a, b2);
      }
      a = 1, b2 = 0;
      for (int t = 0; t < m; ++t) {
        rhs = fold::fold_R(fd, a, std::move(rhs), +1);
        std::swap(a, b2);
      }
      rep.expect(lhs == rhs,
                 "folded braid relation of order " + std::to_string(m) + " failed" + at);
    }
  }
  return rep;
}

/// The two standard folding configurations used by the checks: the diagram
/// mirror of A_3 (folds to braid order 4) and the rotation of D_4 (order 6).
inline fold::FoldingDatum fold_a3_mirror() {
  return fold::fold_cartan({cartan::Family::A, 3}, {2, 1, 0});
}

inline fold::FoldingDatum fold_d4_rotation() {
  return fold::fold_cartan({cartan::Family::D, 4}, {2, 1, 3, 0});
}

}  // namespace excry::verify
