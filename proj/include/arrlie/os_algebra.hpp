#pragma once

#include <cstdint>
#include <vector>

#include "arrlie/lattice.hpp"
#include "arrlie/report.hpp"

namespace arrlie {

// Element of the exterior algebra on one generator per hyperplane.
// Monomials are subsets (bitmask over hyperplane indices), coefficients
// are integers; wedging two overlapping subsets gives zero.
struct ExteriorElement {
  std::map<std::uint64_t, Int> terms;

  void add(std::uint64_t subset, const Int& c) {
    auto it = terms.find(subset);
    if (it == terms.end()) {
      if (c != 0) terms.emplace(subset, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  bool is_zero() const { return terms.empty(); }
};

// Sign of sorting the concatenation T,U into one ascending monomial:
// (-1)^inversions, or 0 when the subsets overlap.
int merge_sign(std::uint64_t t, std::uint64_t u);

// e_T wedge g, left multiplication by the monomial of subset t.
ExteriorElement wedge_monomial(std::uint64_t t, const ExteriorElement& g);

// For ascending S = (s_1 < ... < s_q): sum over p of (-1)^(p-1) e_{S minus s_p}.
ExteriorElement boundary_element(const std::vector<int>& subset);

struct OSIdealGenerator {
  std::vector<int> subset;       // ascending hyperplane indices
  bool empty_intersection;       // true: monomial e_S; false: boundary of S
  ExteriorElement element;
};

// Defining ideal of the quotient algebra: a boundary generator for every
// subset that intersects nonemptily but dependently (codim of the
// intersection below |S|), and a monomial generator for every subset with
// empty intersection.  Subsets of size < 2 never qualify.
std::vector<OSIdealGenerator> ideal_generators(const Arrangement& a,
                                               const IntersectionPoset& p);

// Graded dimensions of the quotient for q = 0..max_q, by exact rank
// computation on the degree-q slice of the ideal (spanned by left
// multiples of the generators).  Independent of the regrading parameter k.
// Preconditions: |a| within the brute-force cap (16, ARRLIE_CAP_OVERRIDE
// raises it) and max_q <= dimension.
std::vector<long long> os_dimensions(const Arrangement& a, const IntersectionPoset& p,
                                     int max_q);

// Compares os_dimensions against the coefficients of the Poincare
// polynomial with t -> t^(2k-1): degree (2k-1)q must carry dim q, all
// other degrees nothing.  Payload lists one row per degree q.
CheckReport verify_os_poincare(const Arrangement& a, const IntersectionPoset& p, int k,
                               int max_q);

}  // namespace arrlie
