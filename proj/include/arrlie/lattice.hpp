#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrlie/arrangement.hpp"
#include "arrlie/matrix.hpp"

namespace arrlie {

// A nonempty intersection of hyperplanes.  The support is closed: it lists
// every hyperplane containing the subspace, so flats with equal supports
// are equal and the partial order is support inclusion.
struct Flat {
  std::vector<int> support;  // ascending hyperplane indices
  int codim = 0;
  Matrix system;  // trimmed rref of the augmented defining system; canonical
  Int mobius = 0;
};

struct IntersectionPoset {
  Arrangement a;
  std::vector<Flat> flats;  // sorted by (codim, support); index 0 is the ambient flat

  // Flat index of the intersection of the given hyperplanes, or nullopt
  // when that intersection is empty.  The empty subset yields the ambient flat.
  std::optional<int> closure(const std::vector<int>& subset) const;
  // Order relation: x below y (x's subspace contains y's).
  bool leq(int x, int y) const;
};

// Enumerates all flats by closing the arrangement under intersections,
// then fills in supports and Mobius values via the defining recursion
// (mu(ambient) = 1, lower sums vanish).
IntersectionPoset build_poset(const Arrangement& a);

// coeffs[i] is the t^i coefficient
using IntPolynomial = std::vector<Int>;

// Sum over flats of |mu| * t^codim.
IntPolynomial poincare_polynomial(const IntersectionPoset& p);

// Substitutes t -> t^(2k-1); the redundant arrangement has the same poset
// with every codimension scaled by k and degrees regraded accordingly.
IntPolynomial poincare_redundant(const IntPolynomial& p, int k);

std::vector<int> codim2_flats(const IntersectionPoset& p);

nlohmann::json poset_to_json(const IntersectionPoset& p);

}  // namespace arrlie
