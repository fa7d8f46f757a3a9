#include "arrlie/arrangement.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace arrlie {

std::vector<Rational> Arrangement::augmented_row(std::size_t h) const {
  std::vector<Rational> row = hyperplanes[h].coeffs;
  row.push_back(hyperplanes[h].constant);
  return row;
}

void normalize_form(std::vector<Rational>& coeffs, Rational& constant) {
  std::size_t i = 0;
  while (i < coeffs.size() && coeffs[i].is_zero()) ++i;
  if (i == coeffs.size()) throw InputError("hyperplane with zero coefficient vector");
  Rational lead = coeffs[i];
  if (lead == Rational(1)) return;
  for (auto& c : coeffs) c /= lead;
  constant /= lead;
}

static Rational parse_rational_field(const nlohmann::json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": expected a rational literal string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
}

Arrangement parse_arrangement(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("hyperplanes"))
    throw InputError("arrangement file needs \"dimension\" and \"hyperplanes\"");
  if (!doc["dimension"].is_number_integer() || doc["dimension"].get<int>() < 1)
    throw InputError("\"dimension\" must be a positive integer");
  if (!doc["hyperplanes"].is_array()) throw InputError("\"hyperplanes\" must be an array");

  Arrangement a;
  a.dimension = doc["dimension"].get<int>();
  std::map<std::vector<std::string>, std::string> seen_forms;
  std::set<std::string> seen_names;
  std::size_t idx = 0;
  for (const auto& hj : doc["hyperplanes"]) {
    ++idx;
    std::string where = "hyperplane " + std::to_string(idx);
    if (!hj.is_object() || !hj.contains("coeffs") || !hj.contains("constant"))
      throw InputError(where + ": needs \"coeffs\" and \"constant\"");
    if (!hj["coeffs"].is_array() || hj["coeffs"].size() != static_cast<std::size_t>(a.dimension))
      throw InputError(where + ": \"coeffs\" must list exactly " +
                       std::to_string(a.dimension) + " entries");
    Hyperplane h;
    for (const auto& c : hj["coeffs"]) h.coeffs.push_back(parse_rational_field(c, where));
    h.constant = parse_rational_field(hj["constant"], where);
    normalize_form(h.coeffs, h.constant);
    if (hj.contains("name")) {
      if (!hj["name"].is_string() || hj["name"].get<std::string>().empty())
        throw InputError(where + ": \"name\" must be a nonempty string");
      h.name = hj["name"].get<std::string>();
    } else {
      h.name = "H" + std::to_string(idx);
    }
    if (!seen_names.insert(h.name).second)
      throw InputError("duplicate hyperplane name '" + h.name + "'");
    std::vector<std::string> key;
    for (const auto& c : h.coeffs) key.push_back(c.str());
    key.push_back(h.constant.str());
    auto [it, fresh] = seen_forms.insert({key, h.name});
    if (!fresh)
      throw InputError(where + ": duplicates hyperplane '" + it->second + "'");
    a.hyperplanes.push_back(std::move(h));
  }
  return a;
}

nlohmann::json serialize_arrangement(const Arrangement& a) {
  nlohmann::json doc;
  doc["dimension"] = a.dimension;
  doc["hyperplanes"] = nlohmann::json::array();
  for (const auto& h : a.hyperplanes) {
    nlohmann::json hj;
    hj["name"] = h.name;
    hj["coeffs"] = nlohmann::json::array();
    for (const auto& c : h.coeffs) hj["coeffs"].push_back(c.str());
    hj["constant"] = h.constant.str();
    doc["hyperplanes"].push_back(std::move(hj));
  }
  return doc;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

static void check_subset(const Arrangement& a, const std::vector<int>& subset) {
  for (int h : subset)
    if (h < 0 || h >= static_cast<int>(a.size()))
      throw std::invalid_argument("hyperplane index out of range");
}

Matrix defining_matrix(const Arrangement& a, const std::vector<int>& subset) {
  check_subset(a, subset);
  Matrix m(subset.size(), a.dimension);
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (int j = 0; j < a.dimension; ++j) m.at(i, j) = a.hyperplanes[subset[i]].coeffs[j];
  return m;
}

Matrix augmented_matrix(const Arrangement& a, const std::vector<int>& subset) {
  check_subset(a, subset);
  Matrix m(subset.size(), a.dimension + 1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (int j = 0; j < a.dimension; ++j) m.at(i, j) = a.hyperplanes[subset[i]].coeffs[j];
    m.at(i, a.dimension) = a.hyperplanes[subset[i]].constant;
  }
  return m;
}

std::pair<Matrix, Matrix> redundant_defining_matrix(const Arrangement& a,
                                                    const std::vector<int>& subset, int k) {
  if (k < 1) throw std::invalid_argument("redundancy k must be >= 1");
  Matrix base = defining_matrix(a, subset);
  Matrix coeff = base.block_diagonal(k);
  Matrix aug(coeff.rows, coeff.cols + 1);
  for (std::size_t i = 0; i < coeff.rows; ++i) {
    for (std::size_t j = 0; j < coeff.cols; ++j) aug.at(i, j) = coeff.at(i, j);
    aug.at(i, coeff.cols) = a.hyperplanes[subset[i % subset.size()]].constant;
  }
  return {std::move(coeff), std::move(aug)};
}

CheckReport verify_redundant_codim(const Arrangement& a, const std::vector<int>& subset, int k) {
  std::size_t r0 = rank(defining_matrix(a, subset));
  std::size_t ra0 = rank(augmented_matrix(a, subset));
  bool consistent0 = (ra0 == r0);

  auto [coeff, aug] = redundant_defining_matrix(a, subset, k);
  std::size_t rk = rank(coeff);
  std::size_t rak = rank(aug);
  bool consistentk = (rak == rk);

  CheckReport rep;
  nlohmann::json names = nlohmann::json::array();
  for (int h : subset) names.push_back(a.hyperplanes[h].name);
  rep.payload["subset"] = names;
  rep.payload["k"] = k;
  rep.payload["codim"] = r0;
  rep.payload["codim_redundant"] = rk;
  rep.payload["nonempty"] = consistent0;
  rep.payload["nonempty_redundant"] = consistentk;
  rep.ok = (rk == static_cast<std::size_t>(k) * r0) && (consistentk == consistent0);
  return rep;
}

}  // namespace arrlie
