#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "qcartan/verify.hpp"

using namespace qcartan;

TEST_CASE("type strings") {
  CHECK(parse_type("a5").str() == "A5");
  CHECK(parse_type("E8").rank == 8);
  CHECK_THROWS_AS(parse_type("Z9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type("B"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type("B3x"), std::invalid_argument);
}

TEST_CASE("height specs") {
  CartanDatum b3 = build_datum("B3");
  CHECK(parse_heights(b3, "3,2,1") == Vec{3, 2, 1});
  CHECK(parse_heights(b3, "linear") == Vec{3, 2, 1});
  CHECK(parse_heights(b3, "sink-source") == Vec{0, 1, 0});
  CHECK_THROWS_AS(parse_heights(b3, "1,2"), std::invalid_argument);
  // linear follows graph distance, so it is a valid height function on forks
  CartanDatum d4 = build_datum("D4");
  CHECK_NOTHROW(DynkinQuiver(d4, parse_heights(d4, "linear")));
  CartanDatum e6 = build_datum("E6");
  CHECK_NOTHROW(DynkinQuiver(e6, parse_heights(e6, "sink-source")));
}

TEST_CASE("word and window specs") {
  CartanDatum b3 = build_datum("B3");
  CHECK(parse_word(b3, "1,2,3,1,2,3,1,2,3") == Word{0, 1, 2, 0, 1, 2, 0, 1, 2});
  CHECK_THROWS_AS(parse_word(b3, "0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(b3, "4"), std::invalid_argument);
  Window w = parse_window("-8,8");
  CHECK(w.lo == -8);
  CHECK(w.hi == 8);
  CHECK_THROWS_AS(parse_window("3,-3"), std::invalid_argument);
}

TEST_CASE("tables JSON round trip") {
  for (const char* name : {"B3", "G2", "E6", "C4"}) {
    TildeBTable t = inverse_via_eta(build_datum(name));
    std::string payload = tables_json(t, 0, false);
    TildeBTable back = tables_from_json(payload);
    CHECK(back == t);
  }
}

TEST_CASE("tables JSON schema") {
  TildeBTable t = inverse_via_eta(build_datum("G2"));
  auto j = nlohmann::json::parse(tables_json(t, 0, false));
  CHECK(j["type"] == "G2");
  CHECK(j["h"] == 6);
  std::vector<long long> entry = j["entries"]["1,1"];
  CHECK(entry == std::vector<long long>{0, 1, 0, 2, 0, 1});
  // extended tfb payload includes negative-side zeros and the sign flip
  auto jt = nlohmann::json::parse(tables_json(t, 12, true));
  std::vector<long long> ext = jt["entries"]["1,1"];
  REQUIRE(ext.size() == 13);
  CHECK(ext[1] == 1);
  CHECK(ext[7] == -1);
}

TEST_CASE("tables CSV") {
  TildeBTable t = inverse_via_eta(build_datum("A1"));
  std::string csv = tables_csv(t, 6, true);
  CHECK(csv.find("i,j,u,coef\n") == 0);
  CHECK(csv.find("1,1,1,1\n") != std::string::npos);
  CHECK(csv.find("1,1,3,-1\n") != std::string::npos);
}

TEST_CASE("quiver payloads") {
  CartanDatum b3 = build_datum("B3");
  DynkinQuiver q(b3, {3, 2, 1});
  std::string dot = quiver_dot(q, false, {-8, 8});
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("(1,3): (1,0,0)") != std::string::npos);
  // 9 vertices in the AR view
  size_t count = 0, pos = 0;
  while ((pos = dot.find("label=", pos)) != std::string::npos) {
    ++count;
    ++pos;
  }
  CHECK(count == 9);

  auto j = nlohmann::json::parse(quiver_json(q, false, {-8, 8}));
  CHECK(j["vertices"].size() == 9);
  CHECK(j["emit"] == "ar");

  auto jr = nlohmann::json::parse(quiver_json(q, true, {-4, 4}));
  CHECK(jr["emit"] == "rep");
  // repetition window [-4,4]: vertices with matching parity
  size_t expect = 0;
  for (int i = 0; i < 3; ++i)
    for (long long p = -4; p <= 4; ++p)
      if (q.valid_vertex({i, p})) ++expect;
  CHECK(jr["vertices"].size() == expect);

  std::string text = quiver_text(q, false, {-8, 8});
  CHECK(text.find("(3,-3): (0,0,1)") != std::string::npos);
}

TEST_CASE("pair payload") {
  CartanDatum b3 = build_datum("B3");
  auto j = nlohmann::json::parse(pair_json(b3, {0, 1, 2, 0}));
  CHECK(j["compatible"] == true);
  std::vector<long long> diag = j["product_diag"];
  CHECK(diag == std::vector<long long>{-4});
  std::vector<long long> intro = j["product_diag_intro_normalization"];
  CHECK(intro == std::vector<long long>{4});
  CHECK(j["lambda"].size() == 4);
  CHECK(j["b"].size() == 4);
  std::vector<long long> word = j["word"];
  CHECK(word == std::vector<long long>{1, 2, 3, 1});
}

TEST_CASE("determinism of payloads") {
  CartanDatum e6 = build_datum("E6");
  TildeBTable t = inverse_via_eta(e6);
  CHECK(tables_json(t, 0, false) == tables_json(t, 0, false));
  DynkinQuiver q(e6, parse_heights(e6, "linear"));
  CHECK(quiver_dot(q, false, {-4, 4}) == quiver_dot(q, false, {-4, 4}));
}
