#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arrlie/matrix.hpp"
#include "arrlie/rational.hpp"
#include "arrlie/report.hpp"

namespace arrlie {

// One affine hyperplane  coeffs . x = constant  in Q^dimension.
// Stored normalized: the first nonzero coefficient is 1.
struct Hyperplane {
  std::string name;
  std::vector<Rational> coeffs;
  Rational constant;
};

struct Arrangement {
  int dimension = 0;
  std::vector<Hyperplane> hyperplanes;

  std::size_t size() const { return hyperplanes.size(); }
  // Row (coeffs | constant) of the augmented system, length dimension+1.
  std::vector<Rational> augmented_row(std::size_t h) const;
};

// Divides the form by its first nonzero coefficient so equal hyperplanes
// compare equal.  Throws InputError when all coefficients vanish.
void normalize_form(std::vector<Rational>& coeffs, Rational& constant);

// Reads { "dimension": l, "hyperplanes": [ { "name"?, "coeffs": [..], "constant" } ] }.
// Coefficients and constants are rational literals ("3", "-1/2").  Unnamed
// hyperplanes get "H<i>" with 1-based i.  Rejects malformed files, length
// mismatches, zero forms, duplicate hyperplanes and duplicate names.
Arrangement parse_arrangement(const nlohmann::json& doc);
nlohmann::json serialize_arrangement(const Arrangement& a);

// Reads a file into JSON; InputError on IO or parse failure.
nlohmann::json load_json_file(const std::string& path);

// Coefficient matrix (rows = chosen hyperplanes) and its augmented form.
Matrix defining_matrix(const Arrangement& a, const std::vector<int>& subset);
Matrix augmented_matrix(const Arrangement& a, const std::vector<int>& subset);

// The k-fold redundant system: coefficient matrix is the k-fold block
// diagonal of A (km x kl); the augmented matrix carries the same
// right-hand side on every block row (km x kl+1).
std::pair<Matrix, Matrix> redundant_defining_matrix(const Arrangement& a,
                                                    const std::vector<int>& subset, int k);

// Checks that the redundant system scales the base system exactly:
// coefficient rank multiplies by k and consistency is preserved, so a
// codimension-r intersection stays nonempty with codimension k*r and an
// empty intersection stays empty.
CheckReport verify_redundant_codim(const Arrangement& a, const std::vector<int>& subset, int k);

}  // namespace arrlie
