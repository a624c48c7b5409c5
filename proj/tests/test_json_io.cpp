#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mahon/errors.hpp"
#include "mahon/json_io.hpp"

using namespace mahon;
using nlohmann::json;

TEST_CASE("ring elements round-trip through JSON") {
  const CycInt w = CycInt::omega(4, 1) - CycInt(4, 2);
  const json j = cyc_to_json(w);
  CHECK(j["r"] == 4);
  CHECK(j["c"] == json::array({-2, 1}));
  CHECK(cyc_from_json(j) == w);

  const CycInt zero(3);
  CHECK(cyc_from_json(cyc_to_json(zero)) == zero);

  // Unreduced coefficient lists are accepted and canonicalized.
  const json lifted = {{"r", 3}, {"c", json::array({0, 0, 1})}};  // w^2 = -1 - w
  CHECK(cyc_from_json(lifted) == CycInt::omega(3, 2));
}

TEST_CASE("polynomials round-trip with exact coefficients") {
  Poly2 p(3);
  p.add_term(0, 0, CycInt(3, 1));
  p.add_term(2, 1, CycInt::omega(3, 1));
  p.add_term(5, 0, CycInt(3, -7));
  const json j = poly_to_json(p);
  CHECK(j["r"] == 3);
  REQUIRE(j["terms"].size() == 3);
  CHECK(j["terms"][0] == json{{"q", 0}, {"t", 0}, {"c", json::array({1, 0})}});
  CHECK(poly_from_json(j) == p);

  CHECK(poly_from_json(poly_to_json(Poly2(1))) == Poly2(1));
  CHECK(poly_from_json(poly_to_json(Poly2(1))).is_zero());
}

TEST_CASE("elements round-trip and reject invalid windows") {
  const ColoredPerm pi = ColoredPerm::parse(4, "2[1] 1[3] 5 4 3[2]");
  const json j = perm_to_json(pi);
  CHECK(j["sigma"] == json::array({2, 1, 5, 4, 3}));
  CHECK(j["z"] == json::array({1, 3, 0, 0, 2}));
  CHECK(perm_from_json(j) == pi);

  json bad = j;
  bad["sigma"] = json::array({2, 2, 5, 4, 3});
  CHECK_THROWS_AS(perm_from_json(bad), ParseError&);
}

TEST_CASE("verification reports serialize every certified field") {
  VerifyParams p;
  p.n = 3;
  p.r = 1;
  const VerifyReport rep = verify("S.gessel-simion", p);
  const json j = report_to_json(rep);
  CHECK(j["id"] == "S.gessel-simion");
  CHECK(j["params"]["n"] == 3);
  CHECK(j["params"]["r"] == 1);
  CHECK(j["verdict"] == "equal");
  CHECK(j["as_expected"] == true);
  CHECK(j["count"] == 6);
  CHECK(j["ms"].is_number());
  CHECK(poly_from_json(j["lhs"]) == rep.lhs);
  CHECK(poly_from_json(j["diff"]).is_zero());
  CHECK_FALSE(j.contains("witness"));

  VerifyParams d;
  d.n = 2;
  const json erratum = report_to_json(verify("D.len.invA.printed", d));
  CHECK(erratum["verdict"] == "expected-mismatch-confirmed");
  CHECK(erratum["as_expected"] == true);
  CHECK_FALSE(poly_from_json(erratum["diff"]).is_zero());
  CHECK(erratum.contains("witness"));
  CHECK(erratum.contains("note"));
}

TEST_CASE("parameters round-trip") {
  VerifyParams p;
  p.n = 4;
  p.r = 3;
  p.a = 1;
  p.b = 2;
  const json j = params_to_json(p);
  const VerifyParams q = params_from_json(j);
  CHECK(q.n == 4);
  CHECK(q.r == 3);
  CHECK(q.a == 1);
  CHECK(q.b == 2);
}

TEST_CASE("malformed JSON is rejected with a parse error") {
  CHECK_THROWS_AS(cyc_from_json(json{{"r", 2}}), ParseError&);
  CHECK_THROWS_AS(cyc_from_json(json{{"r", 0}, {"c", json::array()}}), ParseError&);
  CHECK_THROWS_AS(cyc_from_json(json{{"r", 2}, {"c", "nope"}}), ParseError&);
  CHECK_THROWS_AS(cyc_from_json(json::array()), ParseError&);
  CHECK_THROWS_AS(poly_from_json(json{{"r", 2}, {"terms", 7}}), ParseError&);
  CHECK_THROWS_AS(poly_from_json(json{{"r", 2}, {"terms", json::array({json{{"q", 1}}})}}),
                  ParseError&);
  CHECK_THROWS_AS(params_from_json(json{{"n", 2}, {"r", 2}, {"a", 0}, {"b", 0.5}}),
                  ParseError&);
}
