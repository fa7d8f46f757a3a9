#include <doctest.h>

#include <stdexcept>

#include "arrlie/holonomy.hpp"

using namespace arrlie;
using nlohmann::json;

namespace {

FiberedPresentation load_fib(const std::string& name) {
  return parse_fibered(load_json_file(std::string(CORPUS_DIR) + "/" + name));
}

Arrangement load_arr(const std::string& name) {
  return parse_arrangement(load_json_file(std::string(CORPUS_DIR) + "/" + name));
}

std::vector<Int> ints(std::vector<long long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("construction guards") {
  FiberedPresentation fp = load_fib("braid3.fib.json");
  CHECK_THROWS_AS(build_holonomy(fp, 0), std::invalid_argument);
  json bad = json::parse(R"({"dimension": 2, "levels": [
    {"var": 1, "roots": [{"coeffs": [], "constant": "0"}]},
    {"var": 2, "roots": [{"coeffs": ["0"], "constant": "0"},
                          {"coeffs": ["1"], "constant": "1"}]}]})");
  CHECK_THROWS_AS(build_holonomy(parse_fibered(bad), 1), InputError);
}

TEST_CASE("generators and rendering") {
  HolonomyLie h = build_holonomy(load_fib("braid3.fib.json"), 1);
  CHECK(h.exponents == std::vector<int>{0, 1, 2});
  LieElement g0 = holo_generator(h, 0);
  REQUIRE(g0.components.size() == 1);
  CHECK(g0.components.begin()->first == 2);
  CHECK(holo_str(h, g0) == "level 2: 1");
  CHECK(holo_str(h, holo_zero()) == "0");
  CHECK(holo_str(h, holo_add(g0, holo_generator(h, 1))) == "level 2: 1; level 3: 1");
  CHECK(holo_equal(holo_sub(g0, g0), holo_zero()));
}

TEST_CASE("the derivation action on letters and words") {
  HolonomyLie h = build_holonomy(load_fib("braid3.fib.json"), 1);
  FreeLieElement wall = lie_letter(1, 1);  // the single level-2 generator
  // the level-3 pair {1,2} is incident to the wall, so B_1 moves by [B_1, B_1+B_2]
  CHECK(derivation_apply(h, 2, wall, 3, lie_letter(2, 1)) == lie_basis_element(2, {1, 2}));
  CHECK(derivation_apply(h, 2, wall, 3, lie_letter(2, 2)) ==
        lie_zero(2) - lie_basis_element(2, {1, 2}));
  // Leibniz on a bracketed target
  FreeLieElement v = lie_letter(2, 1);
  FreeLieElement w = lie_letter(2, 2);
  FreeLieElement lhs = derivation_apply(h, 2, wall, 3, bracket(v, w));
  FreeLieElement rhs = bracket(derivation_apply(h, 2, wall, 3, v), w);
  rhs += bracket(v, derivation_apply(h, 2, wall, 3, w));
  CHECK(lhs == rhs);
  CHECK_THROWS_AS(derivation_apply(h, 3, v, 2, wall), std::invalid_argument);
}

TEST_CASE("acting by a bracket is the commutator of the actions") {
  HolonomyLie h = build_holonomy(load_fib("braid4.fib.json"), 1);
  FreeLieElement a = lie_letter(2, 1);  // level-3 letters
  FreeLieElement b = lie_letter(2, 2);
  for (int letter = 1; letter <= 3; ++letter) {
    FreeLieElement v = lie_letter(3, letter);
    FreeLieElement lhs = derivation_apply(h, 3, bracket(a, b), 4, v);
    FreeLieElement rhs = derivation_apply(h, 3, a, 4, derivation_apply(h, 3, b, 4, v));
    rhs -= derivation_apply(h, 3, b, 4, derivation_apply(h, 3, a, 4, v));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("bracket mechanics") {
  HolonomyLie h = build_holonomy(load_fib("braid3.fib.json"), 1);
  LieElement g0 = holo_generator(h, 0);
  LieElement g1 = holo_generator(h, 1);
  LieElement g2 = holo_generator(h, 2);

  LieElement expect;
  expect.components.emplace(3, lie_basis_element(2, {1, 2}));
  CHECK(holo_equal(holo_bracket(h, g0, g1), expect));       // cross level
  CHECK(holo_equal(holo_bracket(h, g1, g2), expect));       // same level, free
  LieElement minus = holo_sub(holo_zero(), expect);
  CHECK(holo_equal(holo_bracket(h, g0, g2), minus));
  CHECK(holo_equal(holo_bracket(h, g1, g0), minus));        // antisymmetric swap
  CHECK(holo_bracket(h, g0, g0).is_zero());

  SUBCASE("bilinearity over mixed-level sums") {
    LieElement x = holo_add(g0, g1);
    LieElement direct = holo_bracket(h, x, g2);
    LieElement split = holo_add(holo_bracket(h, g0, g2), holo_bracket(h, g1, g2));
    CHECK(holo_equal(direct, split));
  }
}

TEST_CASE("generators of disjoint walls commute") {
  HolonomyLie h = build_holonomy(load_fib("braid4.fib.json"), 1);
  // x2 = x1 and x4 = x3 share no incidence pair
  CHECK(holo_bracket(h, holo_generator(h, 0), holo_generator(h, 5)).is_zero());
  CHECK(holo_bracket(h, holo_generator(h, 5), holo_generator(h, 0)).is_zero());
}

TEST_CASE("the Jacobi identity across all generator triples") {
  HolonomyLie h = build_holonomy(load_fib("braid4.fib.json"), 1);
  std::vector<LieElement> g;
  for (int i = 0; i < 6; ++i) g.push_back(holo_generator(h, i));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int l = 0; l < 6; ++l) {
        LieElement sum = holo_bracket(h, holo_bracket(h, g[i], g[j]), g[l]);
        sum = holo_add(std::move(sum), holo_bracket(h, holo_bracket(h, g[j], g[l]), g[i]));
        sum = holo_add(std::move(sum), holo_bracket(h, holo_bracket(h, g[l], g[i]), g[j]));
        CAPTURE(i);
        CAPTURE(j);
        CAPTURE(l);
        CHECK(sum.is_zero());
      }
}

TEST_CASE("sums over flats centralize their supports") {
  struct Case {
    const char* fib;
    long long checked;
  } cases[] = {{"braid3.fib.json", 3}, {"braid4.fib.json", 18}, {"4line.fib.json", 4}};
  for (const auto& c : cases) {
    CAPTURE(c.fib);
    FiberedPresentation fp = load_fib(c.fib);
    for (int k : {1, 2, 3}) {
      HolonomyLie h = build_holonomy(fp, k);
      CheckReport rep = verify_relations(h, build_poset(h.underlying));
      CHECK(rep.ok);
      CHECK(rep.payload["checked"] == c.checked);
    }
  }
}

TEST_CASE("weight-graded dimensions") {
  CHECK(graded_dimensions(build_holonomy(load_fib("braid3.fib.json"), 1), 5) ==
        ints({3, 1, 2, 3, 6}));
  CHECK(graded_dimensions(build_holonomy(load_fib("4line.fib.json"), 1), 5) ==
        ints({4, 3, 8, 18, 48}));
  CHECK(graded_dimensions(build_holonomy(load_fib("braid4.fib.json"), 2), 5) ==
        ints({6, 4, 10, 21, 54}));
}

TEST_CASE("enveloping-algebra series") {
  HolonomyLie h = build_holonomy(load_fib("braid3.fib.json"), 1);
  TruncatedSeries u = uea_series(h, 8);
  TruncatedSeries expect(8);
  // coefficient at t^(2m) is 2^(m+1) - 1
  std::vector<long long> c = {1, 0, 3, 0, 7, 0, 15, 0, 31};
  for (int i = 0; i <= 8; ++i) expect.coeffs[i] = c[i];
  CHECK(u == expect);
  CHECK(loop_homology_series(h, 8) == expect);

  HolonomyLie h2 = build_holonomy(load_fib("braid3.fib.json"), 2);
  CHECK(uea_series(h2, 4).coeffs[4] == 3);  // only weight 1 reaches degree 4 when k = 2
  CHECK(uea_series(h2, 4).coeffs[2] == 0);
}

TEST_CASE("the two series agree on the corpus") {
  for (const char* name : {"braid3.fib.json", "braid4.fib.json", "4line.fib.json"}) {
    CAPTURE(name);
    FiberedPresentation fp = load_fib(name);
    for (int k : {1, 2, 3}) {
      CheckReport rep = verify_series_match(build_holonomy(fp, k), 40);
      CHECK(rep.ok);
    }
  }
}

TEST_CASE("necklace counts factor the exponent polynomial") {
  for (const char* name : {"braid3.fib.json", "braid4.fib.json", "4line.fib.json"}) {
    CAPTURE(name);
    HolonomyLie h = build_holonomy(load_fib(name), 1);
    const int N = 12;
    std::vector<Int> phi = graded_dimensions(h, N);
    TruncatedSeries lhs = TruncatedSeries::one(N);
    for (int n = 1; n <= N; ++n) lhs = mul(lhs, direct_power(N, n, phi[n - 1]));
    TruncatedSeries rhs = TruncatedSeries::one(N);
    for (int d : h.exponents) {
      if (d < 1) continue;
      TruncatedSeries f(N);
      f.coeffs[0] = 1;
      f.coeffs[1] = -d;
      rhs = mul(rhs, f);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("presentations") {
  Arrangement a = load_arr("braid3.json");
  IntersectionPoset p = build_poset(a);
  Presentation pres = emit_presentation(a, p, 2);
  REQUIRE(pres.generators.size() == 3);
  CHECK(pres.generators[0].name == "H12");
  CHECK(pres.generators[0].degree == 2);
  REQUIRE(pres.relations.size() == 3);
  CHECK(pres.relations[0].flat_support == std::vector<std::string>{"H12", "H13", "H23"});
  CHECK(pres.relations[0].hyperplane == "H12");
  CHECK(pres.relations[2].hyperplane == "H23");
  CHECK_FALSE(pres.relations[0].poisson);

  json doc = presentation_to_json(pres);
  CHECK(doc["generators"].size() == 3);
  CHECK(doc["relations"][0]["bracket"] == "lie");
  CHECK(doc["relations"][0]["operator"].is_null());

  SUBCASE("the shifted-bracket variant") {
    Presentation pois = emit_poisson_presentation(a, p, 2, 3);
    CHECK(pois.generators[0].degree == 2);  // 2k + 1 - q
    REQUIRE(pois.relations.size() == 3);
    CHECK(pois.relations[0].poisson);
    CHECK(pois.relations[0].op == "λ_2");
    json pj = presentation_to_json(pois);
    CHECK(pj["relations"][0]["bracket"] == "poisson");
    CHECK(pj["relations"][0]["operator"] == "λ_2");

    Presentation quad = emit_poisson_presentation(a, p, 1, 2);
    CHECK(quad.generators[0].degree == 1);
    CHECK(quad.relations[0].op == "λ_1");

    CHECK_THROWS_AS(emit_poisson_presentation(a, p, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(emit_poisson_presentation(a, p, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(emit_poisson_presentation(a, p, 0, 2), std::invalid_argument);
  }
}

TEST_CASE("dimensions of the presented algebra match the semidirect product") {
  Arrangement a = load_arr("braid3.json");
  IntersectionPoset p = build_poset(a);
  Presentation pres = emit_presentation(a, p, 2);
  HolonomyLie h = build_holonomy(load_fib("braid3.fib.json"), 1);
  CHECK(presented_dims_bruteforce(pres, 5) == graded_dimensions(h, 5));
  // the bracket kind plays no role in the dimension count
  CHECK(presented_dims_bruteforce(emit_poisson_presentation(a, p, 2, 3), 3) ==
        ints({3, 1, 2}));
}

TEST_CASE("presented dimensions on the quadruple of lines") {
  Arrangement a = load_arr("4line.json");
  Presentation pres = emit_presentation(a, build_poset(a), 2);
  REQUIRE(pres.relations.size() == 4);
  CHECK(presented_dims_bruteforce(pres, 4) == ints({4, 3, 8, 18}));
}

TEST_CASE("presented dimensions on six generators") {
  Arrangement a = load_arr("braid4.json");
  Presentation pres = emit_presentation(a, build_poset(a), 2);
  REQUIRE(pres.relations.size() == 18);
  CHECK(presented_dims_bruteforce(pres, 4) == ints({6, 4, 10, 21}));
}

TEST_CASE("free and abelian presentations") {
  Presentation free2;
  free2.generators = {{"A", 1}, {"B", 1}};
  CHECK(presented_dims_bruteforce(free2, 5) == ints({2, 1, 2, 3, 6}));

  Presentation ab = free2;
  ab.relations.push_back({{"A", "B"}, "A", false, ""});
  CHECK(presented_dims_bruteforce(ab, 4) == ints({2, 0, 0, 0}));
}

TEST_CASE("brute-force guard rails") {
  Presentation big;
  for (int i = 0; i < 9; ++i) big.generators.push_back({"G" + std::to_string(i), 1});
  CHECK_THROWS_AS(presented_dims_bruteforce(big, 2), InputError);

  Presentation small;
  small.generators = {{"A", 1}};
  CHECK_THROWS_AS(presented_dims_bruteforce(small, 7), InputError);

  Presentation dup;
  dup.generators = {{"A", 1}, {"A", 1}};
  CHECK_THROWS_AS(presented_dims_bruteforce(dup, 2), std::invalid_argument);

  Presentation unknown;
  unknown.generators = {{"A", 1}};
  unknown.relations.push_back({{"A"}, "Z", false, ""});
  CHECK_THROWS_AS(presented_dims_bruteforce(unknown, 2), std::invalid_argument);
}
