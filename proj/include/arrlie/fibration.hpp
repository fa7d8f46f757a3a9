#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arrlie/arrangement.hpp"
#include "arrlie/lattice.hpp"
#include "arrlie/report.hpp"

namespace arrlie {

// Root of the defining polynomial at one level: the function
// g(x_1..x_{j-1}) = coeffs . x + constant, giving the hyperplane x_j = g.
struct RootForm {
  std::vector<Rational> coeffs;  // length j-1
  Rational constant;
};

// Levelwise description of an arrangement built one coordinate at a time:
// level j contributes the hyperplanes x_j = g_{i,j} for its d_j roots.
struct FiberedPresentation {
  int dimension = 0;
  std::vector<std::vector<RootForm>> levels;  // levels[j-1], possibly empty

  std::vector<int> exponents() const;  // d_j = number of roots per level
  std::size_t num_hyperplanes() const;
  // global hyperplane id of root i (1-based) at level j (1-based)
  int global_index(int j, int i) const;
  std::pair<int, int> level_of(int global) const;  // inverse, 1-based
  // defining form of hyperplane (j,i) as a vector (a_1..a_ncoords | c)
  // for the function a.x + c, zero-extended; requires ncoords >= j
  std::vector<Rational> hyperplane_form(int j, int i, int ncoords) const;
  // g_i - g_m at level q as (a_1..a_{q-1} | c)
  std::vector<Rational> root_difference(int q, int i, int m) const;
};

// Reads { "dimension": l, "levels": [ { "var": j, "roots": [ { "coeffs",
// "constant" } ] } ] }.  Levels may appear in any order; missing variables
// get zero roots.  Rejects malformed files, repeated "var" entries, coeff
// length mismatches and duplicate roots within a level.
FiberedPresentation parse_fibered(const nlohmann::json& doc);
nlohmann::json serialize_fibered(const FiberedPresentation& fp);

// The levelwise condition: every difference of two roots at one level is
// either a nonzero constant or proportional to the defining form of a
// hyperplane at a strictly lower level.  Violations are listed as
// {"level": q, "i": i, "m": m} with 1-based root indices.
CheckReport check_fibered(const FiberedPresentation& fp);

// All hyperplanes x_j = g_{i,j} as one arrangement, levels in order,
// named "H<j>.<i>".
Arrangement underlying_arrangement(const FiberedPresentation& fp);

// sets[(q, h)] lists the pairs {i < m} of level-q roots whose difference
// is proportional to the form of hyperplane h (a global index at a level
// below q).  Pairs with constant differences appear nowhere.
struct IncidenceData {
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> sets;
};
IncidenceData incidence_sets(const FiberedPresentation& fp);

// Cross-checks three descriptions of the same incidence: membership of
// {i,m} in sets[(q,h)], the triple (h, H_i, H_m) closing to a codim-2
// flat, and H_i meet H_m being nonempty and contained in h.  The poset
// must belong to underlying_arrangement(fp).
CheckReport verify_incidence_vs_flats(const FiberedPresentation& fp,
                                      const IntersectionPoset& poset);

// Rewrites the arrangement levelwise with coordinates taken in the order
// perm (a permutation of 1..dimension; perm[t-1] is the original variable
// used as the t-th coordinate).  Returns the presentation when the
// levelwise condition holds for that order.
std::optional<FiberedPresentation> fibered_in_order(const Arrangement& a,
                                                    const std::vector<int>& perm);

struct PermutationSearch {
  std::optional<FiberedPresentation> presentation;
  std::vector<int> permutation;  // set when presentation is
};
// Tries every coordinate order in lexicographic order, first hit wins.
PermutationSearch search_permutations(const Arrangement& a);

}  // namespace arrlie
