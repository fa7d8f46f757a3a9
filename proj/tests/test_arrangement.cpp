#include <doctest.h>

#include <json.hpp>

#include "arrlie/arrangement.hpp"

using namespace arrlie;
using nlohmann::json;

namespace {

json braid3_doc() {
  return json::parse(R"({
    "dimension": 3,
    "hyperplanes": [
      { "name": "H12", "coeffs": ["1", "-1", "0"], "constant": "0" },
      { "name": "H13", "coeffs": ["1", "0", "-1"], "constant": "0" },
      { "name": "H23", "coeffs": ["0", "1", "-1"], "constant": "0" }
    ]
  })");
}

}  // namespace

TEST_CASE("parsing an arrangement file") {
  Arrangement a = parse_arrangement(braid3_doc());
  CHECK(a.dimension == 3);
  CHECK(a.size() == 3);
  CHECK(a.hyperplanes[0].name == "H12");
  CHECK(a.hyperplanes[2].coeffs[1] == Rational(1));

  SUBCASE("unnamed hyperplanes get positional names") {
    json doc = braid3_doc();
    doc["hyperplanes"][1].erase("name");
    Arrangement b = parse_arrangement(doc);
    CHECK(b.hyperplanes[1].name == "H2");
  }
  SUBCASE("forms are normalized to leading coefficient 1") {
    json doc = braid3_doc();
    doc["hyperplanes"][0]["coeffs"] = {"-2", "2", "0"};
    doc["hyperplanes"][0]["constant"] = "4";
    Arrangement b = parse_arrangement(doc);
    CHECK(b.hyperplanes[0].coeffs[0] == Rational(1));
    CHECK(b.hyperplanes[0].coeffs[1] == Rational(-1));
    CHECK(b.hyperplanes[0].constant == Rational(-2));
  }
}

TEST_CASE("arrangement files that must be rejected") {
  json doc = braid3_doc();
  doc["hyperplanes"][1]["coeffs"] = {"-1", "1", "0"};  // proportional to H12
  doc["hyperplanes"][1]["constant"] = "0";
  CHECK_THROWS_AS(parse_arrangement(doc), InputError);

  doc = braid3_doc();
  doc["hyperplanes"][0]["coeffs"] = {"0", "0", "0"};
  CHECK_THROWS_AS(parse_arrangement(doc), InputError);

  doc = braid3_doc();
  doc["hyperplanes"][0]["coeffs"] = {"1", "-1"};  // wrong length
  CHECK_THROWS_AS(parse_arrangement(doc), InputError);

  doc = braid3_doc();
  doc["hyperplanes"][1]["name"] = "H12";  // duplicate name
  CHECK_THROWS_AS(parse_arrangement(doc), InputError);

  doc = braid3_doc();
  doc["dimension"] = 0;
  CHECK_THROWS_AS(parse_arrangement(doc), InputError);

  doc = braid3_doc();
  doc["hyperplanes"][0]["coeffs"][0] = "1.5";  // not a rational literal
  CHECK_THROWS_AS(parse_arrangement(doc), InputError);

  CHECK_THROWS_AS(parse_arrangement(json::parse("{}")), InputError);
}

TEST_CASE("serialize then parse is the identity on normalized input") {
  Arrangement a = parse_arrangement(braid3_doc());
  Arrangement b = parse_arrangement(serialize_arrangement(a));
  CHECK(serialize_arrangement(a) == serialize_arrangement(b));
  CHECK(b.size() == a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.hyperplanes[i].name == b.hyperplanes[i].name);
    CHECK(a.hyperplanes[i].coeffs == b.hyperplanes[i].coeffs);
    CHECK(a.hyperplanes[i].constant == b.hyperplanes[i].constant);
  }
}

TEST_CASE("redundant system shapes and ranks") {
  Arrangement a = parse_arrangement(braid3_doc());
  auto [coeff, aug] = redundant_defining_matrix(a, {0, 1}, 2);
  CHECK(coeff.rows == 4);
  CHECK(coeff.cols == 6);
  CHECK(aug.rows == 4);
  CHECK(aug.cols == 7);
  CHECK(rank(coeff) == 4);  // base rank 2 doubled
  CHECK(rank(aug) == 4);    // central, so still consistent

  auto [c1, a1] = redundant_defining_matrix(a, {0, 1, 2}, 3);
  CHECK(rank(c1) == 6);  // base rank 2 tripled
  CHECK(rank(a1) == 6);
}

TEST_CASE("redundant codimension check on flats") {
  Arrangement a = parse_arrangement(braid3_doc());
  for (int k = 1; k <= 3; ++k) {
    CheckReport rep = verify_redundant_codim(a, {0, 1}, k);
    CHECK(rep.ok);
    CHECK(rep.payload["codim"] == 2);
    CHECK(rep.payload["codim_redundant"] == 2 * k);
    CHECK(rep.payload["nonempty"] == true);
  }
}

TEST_CASE("redundant systems keep empty intersections empty") {
  // parallel hyperplanes x=0 and x=1
  json doc = json::parse(R"({
    "dimension": 1,
    "hyperplanes": [
      { "coeffs": ["1"], "constant": "0" },
      { "coeffs": ["1"], "constant": "1" }
    ]
  })");
  Arrangement a = parse_arrangement(doc);
  for (int k = 1; k <= 3; ++k) {
    CheckReport rep = verify_redundant_codim(a, {0, 1}, k);
    CHECK(rep.ok);
    CHECK(rep.payload["nonempty"] == false);
    CHECK(rep.payload["nonempty_redundant"] == false);
  }
}

TEST_CASE("redundant codimension check over every subset of a small arrangement") {
  Arrangement a = parse_arrangement(braid3_doc());
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> subset;
    for (int b = 0; b < 3; ++b)
      if (mask & (1 << b)) subset.push_back(b);
    for (int k = 1; k <= 4; ++k) CHECK(verify_redundant_codim(a, subset, k).ok);
  }
}
