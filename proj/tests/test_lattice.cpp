#include <doctest.h>

#include "arrlie/lattice.hpp"

using namespace arrlie;
using nlohmann::json;

namespace {

Arrangement load_corpus(const std::string& name) {
  return parse_arrangement(load_json_file(std::string(CORPUS_DIR) + "/" + name));
}

std::vector<long long> small_coeffs(const IntPolynomial& p) {
  std::vector<long long> out;
  for (const Int& c : p) out.push_back(c.convert_to<long long>());
  return out;
}

}  // namespace

TEST_CASE("poset of the empty and one-hyperplane arrangements") {
  json doc = json::parse(R"({"dimension": 2, "hyperplanes": []})");
  IntersectionPoset p = build_poset(parse_arrangement(doc));
  CHECK(p.flats.size() == 1);
  CHECK(small_coeffs(poincare_polynomial(p)) == std::vector<long long>{1});

  doc = json::parse(R"({"dimension": 2, "hyperplanes": [{"coeffs":["1","0"],"constant":"0"}]})");
  p = build_poset(parse_arrangement(doc));
  CHECK(p.flats.size() == 2);
  CHECK(small_coeffs(poincare_polynomial(p)) == std::vector<long long>{1, 1});
}

TEST_CASE("poset of three concurrent planes") {
  // the three planes x1=x2, x1=x3, x2=x3 meet in the line x1=x2=x3
  IntersectionPoset p = build_poset(load_corpus("braid3.json"));
  CHECK(p.flats.size() == 5);
  CHECK(p.flats[0].codim == 0);
  CHECK(p.flats[0].mobius == 1);
  for (int x = 1; x <= 3; ++x) {
    CHECK(p.flats[x].codim == 1);
    CHECK(p.flats[x].mobius == -1);
    CHECK(p.flats[x].support.size() == 1);
  }
  CHECK(p.flats[4].codim == 2);
  CHECK(p.flats[4].support == std::vector<int>{0, 1, 2});
  CHECK(p.flats[4].mobius == 2);
  CHECK(small_coeffs(poincare_polynomial(p)) == std::vector<long long>{1, 3, 2});

  SUBCASE("closure lookups") {
    CHECK(p.closure({}) == 0);
    CHECK(p.closure({0}) ==
          [&] {  // the flat whose support is exactly {0}
            for (std::size_t x = 0; x < p.flats.size(); ++x)
              if (p.flats[x].support == std::vector<int>{0}) return static_cast<int>(x);
            return -1;
          }());
    // two of the planes already force the third
    CHECK(p.closure({0, 1}) == 4);
    CHECK(p.closure({1, 0}) == 4);
  }
}

TEST_CASE("poset of three generic lines") {
  IntersectionPoset p = build_poset(load_corpus("generic3.json"));
  CHECK(p.flats.size() == 7);  // ambient + 3 lines + 3 double points
  CHECK(small_coeffs(poincare_polynomial(p)) == std::vector<long long>{1, 3, 3});
  for (const Flat& f : p.flats)
    if (f.codim == 2) CHECK(f.mobius == 1);
}

TEST_CASE("poset of four concurrent lines") {
  IntersectionPoset p = build_poset(load_corpus("4line.json"));
  CHECK(p.flats.size() == 6);
  CHECK(small_coeffs(poincare_polynomial(p)) == std::vector<long long>{1, 4, 3});
  CHECK(p.flats[5].codim == 2);
  CHECK(p.flats[5].mobius == 3);
  CHECK(p.flats[5].support == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("poset of the rank-3 braid-pattern arrangement") {
  IntersectionPoset p = build_poset(load_corpus("braid4.json"));
  CHECK(p.flats.size() == 15);
  CHECK(small_coeffs(poincare_polynomial(p)) == std::vector<long long>{1, 6, 11, 6});
  CHECK(codim2_flats(p).size() == 7);
}

TEST_CASE("poset of four generic planes") {
  IntersectionPoset p = build_poset(load_corpus("generic4.json"));
  CHECK(small_coeffs(poincare_polynomial(p)) == std::vector<long long>{1, 4, 6, 3});
}

TEST_CASE("parallel hyperplanes never close") {
  json doc = json::parse(R"({
    "dimension": 1,
    "hyperplanes": [
      {"coeffs":["1"],"constant":"0"},
      {"coeffs":["1"],"constant":"1"}
    ]})");
  IntersectionPoset p = build_poset(parse_arrangement(doc));
  CHECK(p.flats.size() == 3);
  CHECK(small_coeffs(poincare_polynomial(p)) == std::vector<long long>{1, 2});
  CHECK_FALSE(p.closure({0, 1}).has_value());
}

TEST_CASE("redundant polynomial substitution") {
  IntPolynomial p = {Int(1), Int(3), Int(2)};
  CHECK(poincare_redundant(p, 1) == p);
  CHECK(small_coeffs(poincare_redundant(p, 2)) ==
        std::vector<long long>{1, 0, 0, 3, 0, 0, 2});
  CHECK(small_coeffs(poincare_redundant(p, 3)) ==
        std::vector<long long>{1, 0, 0, 0, 0, 3, 0, 0, 0, 0, 2});
}

TEST_CASE("poset invariants on the corpus") {
  for (const char* name : {"braid3.json", "braid4.json", "4line.json", "generic3.json",
                           "generic4.json"}) {
    CAPTURE(name);
    IntersectionPoset p = build_poset(load_corpus(name));

    // Mobius recursion: sums over lower intervals vanish
    for (std::size_t x = 1; x < p.flats.size(); ++x) {
      Int acc = 0;
      for (std::size_t y = 0; y < p.flats.size(); ++y)
        if (p.leq(static_cast<int>(y), static_cast<int>(x))) acc += p.flats[y].mobius;
      CHECK(acc == 0);
    }
    // signs alternate with codimension
    for (const Flat& f : p.flats) {
      Int signed_mu = (f.codim % 2 == 0) ? f.mobius : -f.mobius;
      CHECK(signed_mu > 0);
    }
    // joins stay inside the poset: stacking two flat systems either turns
    // inconsistent or reproduces a stored flat
    for (std::size_t x = 0; x < p.flats.size(); ++x) {
      for (std::size_t y = x; y < p.flats.size(); ++y) {
        std::vector<int> both = p.flats[x].support;
        both.insert(both.end(), p.flats[y].support.begin(), p.flats[y].support.end());
        Matrix stacked(p.flats[x].system.rows + p.flats[y].system.rows, p.a.dimension + 1);
        stacked.data = p.flats[x].system.data;
        stacked.data.insert(stacked.data.end(), p.flats[y].system.data.begin(),
                            p.flats[y].system.data.end());
        RrefResult rr = rref(stacked);
        bool inconsistent =
            !rr.pivots.empty() && rr.pivots.back() == static_cast<std::size_t>(p.a.dimension);
        std::optional<int> join = p.closure(both);
        if (inconsistent) {
          CHECK_FALSE(join.has_value());
        } else {
          REQUIRE(join.has_value());
          CHECK(p.flats[*join].codim == static_cast<int>(rr.pivots.size()));
        }
      }
    }
  }
}
