/**
 * @file test_io.cpp
 * @brief Serialization surfaces: type strings, element JSON in both styles,
 *        operator scripts, braid-word text, and DOT export.
 */

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <excrystal/io.hpp>
#include <excrystal/verify.hpp>

using namespace excry;
using cartan::CartanDatum;
using cartan::Family;
using ext::ExtElt;
using nlohmann::json;

namespace {
const CartanDatum& a2() {
  static CartanDatum d = cartan::build_cartan({Family::A, 2});
  return d;
}
}  // namespace

TEST_CASE("type strings parse and validate") {
  CHECK(io::parse_type("A2") == cartan::CartanType{Family::A, 2});
  CHECK(io::parse_type("d4") == cartan::CartanType{Family::D, 4});
  CHECK(io::parse_type("E6") == cartan::CartanType{Family::E, 6});
  CHECK(cartan::name(io::parse_type("A13")) == "A13");
  CHECK_THROWS_AS(io::parse_type("Q2"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_type("A"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_type("Axy"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_type("E5"), std::invalid_argument);
}

TEST_CASE("element JSON round trips in segment style") {
  const CartanDatum& d = a2();
  const ExtElt e = io::ext_from_json_text(d, R"({"components":{"0":"1[2]","2":"2[2]+3[1,2]+4[1]"}})");
  const json j = io::ext_to_json(d, e);
  CHECK(j.at("type") == "A2");
  CHECK(j.at("components").at("0") == "1[2]");
  CHECK(j.at("components").at("2") == "2[2]+3[1,2]+4[1]");
  CHECK(io::ext_from_json(d, j) == e);
  // vacuum
  CHECK(io::ext_to_json(d, ext::one()).at("components").empty());
  CHECK(io::ext_from_json_text(d, R"({"components":{}})") == ext::one());
}

TEST_CASE("element JSON round trips in coordinate style") {
  const CartanDatum d = cartan::build_cartan({Family::D, 4});
  std::mt19937_64 rng(31);
  const ExtElt e = ext::random_element(d, rng, 8, -2, 2);
  const json j = io::ext_to_json(d, e);
  for (const auto& [k, val] : j.at("components").items()) {
    CHECK(val.contains("word"));
    CHECK(val.contains("coords"));
  }
  CHECK(io::ext_from_json(d, j) == e);
  // coordinate style is accepted for type A too
  const json ja = {{"components", {{"0", {{"word", {1, 2, 1}}, {"coords", {0, 0, 1}}}}}}};
  CHECK(io::ext_from_json(a2(), ja) == ext::ext_F(a2(), 1, 0, ext::one()));
}

TEST_CASE("element JSON rejects malformed input") {
  const CartanDatum& d = a2();
  CHECK_THROWS_AS(io::ext_from_json_text(d, "not json"), std::invalid_argument);
  CHECK_THROWS_AS(io::ext_from_json_text(d, R"({"no_components":1})"), std::invalid_argument);
  CHECK_THROWS_AS(io::ext_from_json_text(d, R"({"type":"A3","components":{}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::ext_from_json_text(d, R"({"components":{"0":"[7]"}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      io::ext_from_json_text(d, R"({"components":{"0":{"word":[1,2,1],"coords":[1]}}})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      io::ext_from_json_text(d, R"({"components":{"0":{"word":[1,2,1],"coords":[0,0,-1]}}})"),
      std::invalid_argument);
}

TEST_CASE("operator scripts") {
  const CartanDatum& d = a2();
  ExtElt e = ext::one();
  for (const char* text : {"F 2 0", "F 1 1", "R 1", "R* 1", "D 1", "D -1", "zeta", "zeta"})
    e = io::apply_op(d, io::parse_op(d, text), std::move(e));
  // the R/R*, D/D^{-1}, zeta/zeta pairs cancel
  ExtElt expect = ext::ext_F(d, 0, 1, ext::ext_F(d, 1, 0, ext::one()));
  CHECK(e == expect);

  CHECK_THROWS_AS(io::parse_op(d, ""), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_op(d, "F 1"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_op(d, "F 3 0"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_op(d, "G 1 0"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_op(d, "zeta 1"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_op(d, "R 0"), std::invalid_argument);
}

TEST_CASE("braid word text") {
  const CartanDatum& d = a2();
  const braid::BraidWord w = io::parse_braid_word(d, "1 2 1'");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == braid::BraidLetter{0, +1});
  CHECK(w[1] == braid::BraidLetter{1, +1});
  CHECK(w[2] == braid::BraidLetter{0, -1});
  CHECK(io::show_braid_word(w) == "1 2 1'");
  CHECK(io::parse_braid_word(d, "").empty());
  CHECK_THROWS_AS(io::parse_braid_word(d, "1 x"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_braid_word(d, "3"), std::invalid_argument);

  // a word followed by its formal inverse acts trivially
  std::mt19937_64 rng(41);
  const ExtElt e = ext::random_element(d, rng, 8, -2, 2);
  braid::BraidWord inv;
  for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back({it->i, -it->sign});
  braid::BraidWord both = w;
  both.insert(both.end(), inv.begin(), inv.end());
  CHECK(braid::braid_apply(d, both, e) == e);
}

TEST_CASE("DOT export shape") {
  const CartanDatum a1 = cartan::build_cartan({Family::A, 1});
  std::ostringstream dot;
  const int nodes = io::export_dot(a1, 1, 0, 1, dot);
  // vacuum plus one element per slot in the window
  CHECK(nodes == 3);
  const std::string text = dot.str();
  CHECK(text.find("digraph") != std::string::npos);
  CHECK(text.find("(1,0)") != std::string::npos);
  CHECK(text.find("(1,1)") != std::string::npos);

  std::ostringstream trivial;
  CHECK(io::export_dot(a1, 0, 0, 0, trivial) == 1);

  // radius-2 node count matches an independent breadth-first enumeration
  std::set<ExtElt> seen{ext::one()};
  std::vector<ExtElt> layer{ext::one()};
  for (int depth = 0; depth < 2; ++depth) {
    std::vector<ExtElt> next;
    for (const auto& e : layer)
      for (int k = 0; k <= 1; ++k)
        for (int i = 0; i < a2().rank(); ++i) {
          ExtElt img = ext::ext_F(a2(), i, k, e);
          if (seen.insert(img).second) next.push_back(img);
        }
    layer = std::move(next);
  }
  std::ostringstream a2dot;
  CHECK(io::export_dot(a2(), 2, 0, 1, a2dot) == static_cast<int>(seen.size()));

  CHECK_THROWS_AS(io::export_dot(a1, -1, 0, 0, dot), std::invalid_argument);
  CHECK_THROWS_AS(io::export_dot(a1, 1, 2, 1, dot), std::invalid_argument);
}

TEST_CASE("human-readable element text") {
  const CartanDatum& d = a2();
  CHECK(io::ext_show(d, ext::one()) == "1");
  const ExtElt e = io::ext_from_json_text(d, R"({"components":{"0":"1[2]","1":"2[1]"}})");
  CHECK(io::ext_show(d, e) == "0:[2]  1:2[1]");
}
