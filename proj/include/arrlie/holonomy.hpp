#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrlie/fibration.hpp"
#include "arrlie/free_lie.hpp"
#include "arrlie/lattice.hpp"
#include "arrlie/series.hpp"

namespace arrlie {

// Iterated semidirect product of free Lie algebras, one free factor per
// level of a fiber-type presentation.  Level p acts on every higher level
// q through the incidence sets of its hyperplanes.  With regrading
// parameter k, weight-n elements sit in display degree 2nk.
struct HolonomyLie {
  FiberedPresentation presentation;
  Arrangement underlying;  // hyperplane ids match presentation order
  IncidenceData incidence;
  std::vector<int> exponents;
  int k = 1;
};

// Validates the levelwise condition first; InputError when it fails.
HolonomyLie build_holonomy(const FiberedPresentation& fp, int k);

// Element of the direct sum: one free-Lie component per level that has
// any hyperplanes.  Zero components are never stored.
struct LieElement {
  std::map<int, FreeLieElement> components;  // level j -> element on d_j letters

  bool is_zero() const { return components.empty(); }
};

LieElement holo_zero();
LieElement holo_generator(const HolonomyLie& h, int global);
LieElement holo_add(LieElement x, const LieElement& y);
LieElement holo_sub(LieElement x, const LieElement& y);
bool holo_equal(const LieElement& x, const LieElement& y);
std::string holo_str(const HolonomyLie& h, const LieElement& x);

// Bracket of the semidirect product.  Components on one level use the
// free bracket; a lower level acts on a higher one as a derivation,
// letterwise via [B_m, B_i + B_i'] over the incidence pairs {i,i'}
// containing m, extended along standard factorizations on both sides.
LieElement holo_bracket(const HolonomyLie& h, const LieElement& x, const LieElement& y);

// The derivation action itself: u from level p applied to v from level
// q > p.  Exposed so tests can probe well-definedness directly.
FreeLieElement derivation_apply(const HolonomyLie& h, int p, const FreeLieElement& u, int q,
                                const FreeLieElement& v);

// For every codimension-2 flat X of the underlying arrangement and every
// hyperplane H containing X, the bracket of C_X = sum of the generators
// of the support of X with the generator of H must vanish.
CheckReport verify_relations(const HolonomyLie& h, const IntersectionPoset& poset);

// Weight-n dimension phi_n = sum over levels of the Witt number of d_j,
// for n = 1..max_weight.
std::vector<Int> graded_dimensions(const HolonomyLie& h, int max_weight);

// Hilbert series of the enveloping algebra: product over n >= 1 of
// (1 - t^(2nk))^(-phi_n), truncated at the given order.
TruncatedSeries uea_series(const HolonomyLie& h, int order);

// Product over levels of (1 - d_j t^(2k))^(-1).
TruncatedSeries loop_homology_series(const HolonomyLie& h, int order);

// Coefficientwise comparison of the two series above.
CheckReport verify_series_match(const HolonomyLie& h, int order);

struct Presentation {
  struct Generator {
    std::string name;
    int degree;
  };
  struct Relation {
    std::vector<std::string> flat_support;
    std::string hyperplane;
    bool poisson = false;
    std::string op;  // empty encodes null
  };
  std::vector<Generator> generators;
  std::vector<Relation> relations;
};

// One generator per hyperplane with the given display degree, one
// relation per (codimension-2 flat, supporting hyperplane) pair, flats in
// poset order.  Degree 2k for the graded algebra, 1 for the ungraded one.
Presentation emit_presentation(const Arrangement& a, const IntersectionPoset& p,
                               int generator_degree);

// Poisson-algebra variant: generators in degree 2k+1-q for a formality
// degree q with 1 < q < 2k+1 (std::invalid_argument otherwise); the same
// relation set, wrapped in the degree-shifting bracket operator.
Presentation emit_poisson_presentation(const Arrangement& a, const IntersectionPoset& p,
                                       int k, int q);

nlohmann::json presentation_to_json(const Presentation& pres);

// Weight-graded dimensions of the free Lie algebra on the presentation's
// generators modulo the Lie ideal its relations generate, for weights
// 1..max_weight.  Works entirely in the tensor algebra: the ideal slice
// of weight n is spanned by iterated commutators of generators against
// the relation elements, and its rank is read off in Lyndon coordinates.
// Independent of the bracket engine above, so the two sides can be
// compared as oracle and implementation.  The bracket kind of a relation
// is irrelevant here; only the vanishing matters.
// Caps: at most 8 generators and max_weight <= 6 (ARRLIE_CAP_OVERRIDE raises both).
std::vector<Int> presented_dims_bruteforce(const Presentation& pres, int max_weight);

}  // namespace arrlie
