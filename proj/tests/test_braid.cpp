/**
 * @file test_braid.cpp
 * @brief Braid operators: the worked rank-2 chains, frozen cross-checks,
 *        inverses, relations, and the longest-word identity.
 */

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <map>

#include <json.hpp>

#include <excrystal/braid.hpp>
#include <excrystal/cartan.hpp>
#include <excrystal/extended.hpp>
#include <excrystal/multisegment.hpp>
#include <excrystal/verify.hpp>

using namespace excry;
using braid::BraidWord;
using cartan::CartanDatum;
using cartan::Family;
using ext::ExtElt;
using nlohmann::json;

namespace {

const CartanDatum& a2() {
  static CartanDatum d = cartan::build_cartan({Family::A, 2});
  return d;
}

std::map<int, std::string> as_text(const CartanDatum& d, const ExtElt& e) {
  std::map<int, std::string> out;
  for (const auto& [k, b] : e.comps) out[k] = ms::ms_show(ms::ms_from_binf(d, b));
  return out;
}

ExtElt from_text(const CartanDatum& d, const std::map<int, std::string>& comps) {
  ExtElt e;
  for (const auto& [k, text] : comps)
    ext::set_component(e, k, ms::ms_to_binf(d, ms::ms_parse(d, text)));
  return e;
}

ExtElt apply_chain(const CartanDatum& d, std::vector<int> word, ExtElt e) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) e = braid::braid_R(d, *it, e, +1);
  return e;
}

}  // namespace

TEST_CASE("rank-2 chain from the one-box element") {
  const CartanDatum& d = a2();
  const ExtElt start = ext::ext_F(d, 1, 0, ext::one());
  REQUIRE(as_text(d, start) == std::map<int, std::string>{{0, "[2]"}});

  const std::pair<std::vector<int>, std::map<int, std::string>> chain[] = {
      {{0}, {{0, "[1,2]"}}},        // R_1
      {{1, 0}, {{0, "[1]"}}},       // R_2 R_1
      {{0, 1, 0}, {{1, "[1]"}}},    // R_1 R_2 R_1
      {{1}, {{1, "[2]"}}},          // R_2
      {{0, 1}, {{1, "[1,2]"}}},     // R_1 R_2
      {{1, 0, 1}, {{1, "[1]"}}},    // R_2 R_1 R_2
  };
  for (const auto& [word, expect] : chain) {
    INFO("chain length " << word.size());
    CHECK(as_text(d, apply_chain(d, word, start)) == expect);
  }

  // both longest chains equal the shifted star relabel
  const ExtElt dz = ext::shift(d, 1, ext::ext_zeta(d, start));
  CHECK(apply_chain(d, {0, 1, 0}, start) == dz);
  CHECK(apply_chain(d, {1, 0, 1}, start) == dz);
  CHECK(braid::longest_R(d, d.ref, start) == dz);
}

TEST_CASE("rank-2 full-sequence braid step") {
  const CartanDatum& d = a2();
  const ExtElt e = from_text(d, {{1, "2[2]+3[1,2]+4[1]"},
                                 {0, "[2]+[1,2]+2[1]"},
                                 {-1, "3[2]+2[1,2]+[1]"}});
  const ExtElt r = braid::braid_R(d, 0, e, +1);
  CHECK(as_text(d, r) == std::map<int, std::string>{{2, "5[1]"},
                                                    {1, "2[2]+3[1,2]+2[1]"},
                                                    {0, "[2]+[1,2]+2[1]"},
                                                    {-1, "[2]+4[1,2]"}});
  // and the inverse returns exactly
  CHECK(braid::braid_R(d, 0, r, -1) == e);
}

TEST_CASE("frozen braid vectors replay exactly") {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/braid_vectors.json");
  REQUIRE(in.good());
  json all;
  in >> all;
  for (const auto& [key, data] : all.items()) {
    const CartanDatum d = key[0] == 'A' ? cartan::build_cartan({Family::A, key[1] - '0'})
                                        : cartan::build_cartan({Family::D, key[1] - '0'});
    INFO("type " << key);
    std::vector<int> ref1;
    for (int i : d.ref) ref1.push_back(i + 1);
    REQUIRE(data.at("ref_word").get<std::vector<int>>() == ref1);

    auto decode = [&](const json& comps) {
      ExtElt e;
      for (const auto& [k, coords] : comps.items())
        ext::set_component(e, std::stoi(k), binf::BinfElt{coords.get<std::vector<int>>()});
      return e;
    };

    for (const auto& entry : data.at("entries")) {
      ExtElt e = ext::one();
      for (const auto& op : entry.at("fops"))
        e = ext::ext_F(d, op.at(0).get<int>() - 1, op.at(1).get<int>(), std::move(e));
      CHECK(e == decode(entry.at("elem")));
      const int i = entry.at("i").get<int>() - 1;
      CHECK(braid::braid_R(d, i, e, +1) == decode(entry.at("R")));
      CHECK(braid::braid_R(d, i, e, -1) == decode(entry.at("Rstar")));
      CHECK(ext::ext_weight(d, e).c == entry.at("wt_hat").get<std::vector<int>>());
    }
  }
}

TEST_CASE("relation reports") {
  const CartanDatum d = cartan::build_cartan({Family::A, 3});
  const auto adjacent = braid::check_relation(d, 0, 1, 60, 10, 77);
  CHECK(adjacent.m == 3);
  CHECK(adjacent.checked == 60);
  CHECK(adjacent.ok());
  const auto distant = braid::check_relation(d, 0, 2, 60, 10, 78);
  CHECK(distant.m == 2);
  CHECK(distant.ok());
  CHECK_THROWS_AS(braid::check_relation(d, 1, 1, 5, 5, 1), std::invalid_argument);
}

TEST_CASE("braid relation suite across types") {
  CHECK(verify::braid_relations(a2(), 80, 10, 5001).ok());
  CHECK(verify::braid_relations(cartan::build_cartan({Family::A, 3}), 50, 10, 5002).ok());
  CHECK(verify::braid_relations(cartan::build_cartan({Family::D, 4}), 30, 10, 5003).ok());
}

TEST_CASE("longest-word suite across types") {
  CHECK(verify::longest_word(a2(), 2, 40, 10, 6001).ok());
  CHECK(verify::longest_word(cartan::build_cartan({Family::A, 3}), 4, 25, 10, 6002).ok());
  CHECK(verify::longest_word(cartan::build_cartan({Family::D, 4}), 3, 15, 10, 6003).ok());
}

TEST_CASE("longest_R validates its word") {
  const CartanDatum& d = a2();
  CHECK_THROWS_AS(braid::longest_R(d, {0, 1}, ext::one()), std::invalid_argument);
  CHECK_THROWS_AS(braid::longest_R(d, {0, 1, 1}, ext::one()), std::invalid_argument);
}

TEST_CASE("empty sequences are fixed by every braid operator") {
  const CartanDatum& d = a2();
  CHECK(braid::braid_R(d, 0, ext::one(), +1) == ext::one());
  CHECK(braid::braid_R(d, 1, ext::one(), -1) == ext::one());
  CHECK(braid::braid_apply(d, BraidWord{{0, +1}, {1, -1}}, ext::one()) == ext::one());
}
