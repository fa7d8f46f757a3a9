#include "arrlie/fibration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "arrlie/matrix.hpp"

namespace arrlie {

std::vector<int> FiberedPresentation::exponents() const {
  std::vector<int> d;
  d.reserve(levels.size());
  for (const auto& lv : levels) d.push_back(static_cast<int>(lv.size()));
  return d;
}

std::size_t FiberedPresentation::num_hyperplanes() const {
  std::size_t n = 0;
  for (const auto& lv : levels) n += lv.size();
  return n;
}

int FiberedPresentation::global_index(int j, int i) const {
  int idx = 0;
  for (int l = 1; l < j; ++l) idx += static_cast<int>(levels[l - 1].size());
  return idx + (i - 1);
}

std::pair<int, int> FiberedPresentation::level_of(int global) const {
  for (std::size_t l = 0; l < levels.size(); ++l) {
    if (global < static_cast<int>(levels[l].size()))
      return {static_cast<int>(l) + 1, global + 1};
    global -= static_cast<int>(levels[l].size());
  }
  throw std::invalid_argument("hyperplane index out of range");
}

std::vector<Rational> FiberedPresentation::hyperplane_form(int j, int i, int ncoords) const {
  if (ncoords < j) throw std::invalid_argument("form does not fit in the requested coordinates");
  const RootForm& g = levels[j - 1][i - 1];
  // x_j - g as the function a.x + c
  std::vector<Rational> form(ncoords + 1);
  for (int t = 0; t < j - 1; ++t) form[t] = -g.coeffs[t];
  form[j - 1] = Rational(1);
  form[ncoords] = -g.constant;
  return form;
}

std::vector<Rational> FiberedPresentation::root_difference(int q, int i, int m) const {
  const RootForm& gi = levels[q - 1][i - 1];
  const RootForm& gm = levels[q - 1][m - 1];
  std::vector<Rational> diff(q);
  for (int t = 0; t < q - 1; ++t) diff[t] = gi.coeffs[t] - gm.coeffs[t];
  diff[q - 1] = gi.constant - gm.constant;
  return diff;
}

static Rational parse_rational_field(const nlohmann::json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": expected a rational literal string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
}

FiberedPresentation parse_fibered(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("levels"))
    throw InputError("fibered file needs \"dimension\" and \"levels\"");
  if (!doc["dimension"].is_number_integer() || doc["dimension"].get<int>() < 1)
    throw InputError("\"dimension\" must be a positive integer");
  if (!doc["levels"].is_array()) throw InputError("\"levels\" must be an array");

  FiberedPresentation fp;
  fp.dimension = doc["dimension"].get<int>();
  fp.levels.resize(fp.dimension);
  std::set<int> seen_vars;
  for (const auto& lj : doc["levels"]) {
    if (!lj.is_object() || !lj.contains("var") || !lj.contains("roots"))
      throw InputError("each level needs \"var\" and \"roots\"");
    if (!lj["var"].is_number_integer()) throw InputError("\"var\" must be an integer");
    int j = lj["var"].get<int>();
    if (j < 1 || j > fp.dimension)
      throw InputError("\"var\" " + std::to_string(j) + " out of range");
    if (!seen_vars.insert(j).second)
      throw InputError("variable " + std::to_string(j) + " listed twice");
    if (!lj["roots"].is_array()) throw InputError("\"roots\" must be an array");
    std::string lw = "level " + std::to_string(j);
    for (const auto& rj : lj["roots"]) {
      if (!rj.is_object() || !rj.contains("coeffs") || !rj.contains("constant"))
        throw InputError(lw + ": each root needs \"coeffs\" and \"constant\"");
      if (!rj["coeffs"].is_array() || rj["coeffs"].size() != static_cast<std::size_t>(j - 1))
        throw InputError(lw + ": root \"coeffs\" must list exactly " + std::to_string(j - 1) +
                         " entries");
      RootForm g;
      for (const auto& c : rj["coeffs"]) g.coeffs.push_back(parse_rational_field(c, lw));
      g.constant = parse_rational_field(rj["constant"], lw);
      fp.levels[j - 1].push_back(std::move(g));
    }
  }
  // duplicate roots collapse two hyperplanes into one; reject them here
  for (int j = 1; j <= fp.dimension; ++j) {
    const auto& roots = fp.levels[j - 1];
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t m = i + 1; m < roots.size(); ++m)
        if (roots[i].coeffs == roots[m].coeffs && roots[i].constant == roots[m].constant)
          throw InputError("level " + std::to_string(j) + ": roots " + std::to_string(i + 1) +
                           " and " + std::to_string(m + 1) + " coincide");
  }
  return fp;
}

nlohmann::json serialize_fibered(const FiberedPresentation& fp) {
  nlohmann::json doc;
  doc["dimension"] = fp.dimension;
  doc["levels"] = nlohmann::json::array();
  for (int j = 1; j <= fp.dimension; ++j) {
    nlohmann::json lj;
    lj["var"] = j;
    lj["roots"] = nlohmann::json::array();
    for (const auto& g : fp.levels[j - 1]) {
      nlohmann::json rj;
      rj["coeffs"] = nlohmann::json::array();
      for (const auto& c : g.coeffs) rj["coeffs"].push_back(c.str());
      rj["constant"] = g.constant.str();
      lj["roots"].push_back(std::move(rj));
    }
    doc["levels"].push_back(std::move(lj));
  }
  return doc;
}

namespace {

bool is_constant_form(const std::vector<Rational>& form) {
  for (std::size_t t = 0; t + 1 < form.size(); ++t)
    if (!form[t].is_zero()) return false;
  return true;
}

// Index of the unique lower-level hyperplane whose form the difference is
// proportional to, or -1 when there is none.
int matching_lower_hyperplane(const FiberedPresentation& fp, int q,
                              const std::vector<Rational>& diff) {
  for (int jp = 1; jp < q; ++jp) {
    for (std::size_t ip = 1; ip <= fp.levels[jp - 1].size(); ++ip) {
      std::vector<Rational> form = fp.hyperplane_form(jp, static_cast<int>(ip), q - 1);
      if (proportional(diff, form)) return fp.global_index(jp, static_cast<int>(ip));
    }
  }
  return -1;
}

}  // namespace

CheckReport check_fibered(const FiberedPresentation& fp) {
  CheckReport rep;
  nlohmann::json violations = nlohmann::json::array();
  for (int q = 1; q <= fp.dimension; ++q) {
    int d = static_cast<int>(fp.levels[q - 1].size());
    for (int i = 1; i <= d; ++i) {
      for (int m = i + 1; m <= d; ++m) {
        std::vector<Rational> diff = fp.root_difference(q, i, m);
        if (is_constant_form(diff)) {
          if (diff[q - 1].is_zero())
            throw std::invalid_argument("duplicate roots at level " + std::to_string(q));
          continue;  // parallel hyperplanes, allowed
        }
        if (matching_lower_hyperplane(fp, q, diff) < 0)
          violations.push_back({{"level", q}, {"i", i}, {"m", m}});
      }
    }
  }
  rep.ok = violations.empty();
  if (!rep.ok) rep.payload["violations"] = std::move(violations);
  rep.payload["exponents"] = fp.exponents();
  return rep;
}

Arrangement underlying_arrangement(const FiberedPresentation& fp) {
  nlohmann::json doc;
  doc["dimension"] = fp.dimension;
  doc["hyperplanes"] = nlohmann::json::array();
  for (int j = 1; j <= fp.dimension; ++j) {
    for (std::size_t i = 1; i <= fp.levels[j - 1].size(); ++i) {
      std::vector<Rational> form = fp.hyperplane_form(j, static_cast<int>(i), fp.dimension);
      nlohmann::json hj;
      hj["name"] = "H" + std::to_string(j) + "." + std::to_string(i);
      hj["coeffs"] = nlohmann::json::array();
      for (int t = 0; t < fp.dimension; ++t) hj["coeffs"].push_back(form[t].str());
      // the form is a.x + c = 0, the file stores a.x = b with b = -c
      hj["constant"] = (-form[fp.dimension]).str();
      doc["hyperplanes"].push_back(std::move(hj));
    }
  }
  return parse_arrangement(doc);
}

IncidenceData incidence_sets(const FiberedPresentation& fp) {
  IncidenceData data;
  for (int q = 2; q <= fp.dimension; ++q) {
    int d = static_cast<int>(fp.levels[q - 1].size());
    for (int i = 1; i <= d; ++i) {
      for (int m = i + 1; m <= d; ++m) {
        std::vector<Rational> diff = fp.root_difference(q, i, m);
        if (is_constant_form(diff)) continue;
        int h = matching_lower_hyperplane(fp, q, diff);
        if (h < 0)
          throw std::invalid_argument("presentation does not satisfy the levelwise condition");
        data.sets[{q, h}].push_back({i, m});
      }
    }
  }
  return data;
}

CheckReport verify_incidence_vs_flats(const FiberedPresentation& fp,
                                      const IntersectionPoset& poset) {
  IncidenceData inc = incidence_sets(fp);
  CheckReport rep;
  nlohmann::json mismatches = nlohmann::json::array();
  long long checked = 0;
  for (int q = 2; q <= fp.dimension; ++q) {
    int d = static_cast<int>(fp.levels[q - 1].size());
    // every hyperplane strictly below level q is a candidate
    for (int jp = 1; jp < q; ++jp) {
      for (std::size_t ip = 1; ip <= fp.levels[jp - 1].size(); ++ip) {
        int h = fp.global_index(jp, static_cast<int>(ip));
        auto it = inc.sets.find({q, h});
        for (int i = 1; i <= d; ++i) {
          for (int m = i + 1; m <= d; ++m) {
            bool in_set = it != inc.sets.end() &&
                          std::find(it->second.begin(), it->second.end(),
                                    std::make_pair(i, m)) != it->second.end();
            int hi = fp.global_index(q, i);
            int hm = fp.global_index(q, m);
            std::optional<int> triple = poset.closure({h, hi, hm});
            bool codim2 = triple && poset.flats[*triple].codim == 2;
            std::optional<int> pair = poset.closure({hi, hm});
            bool contained =
                pair && std::binary_search(poset.flats[*pair].support.begin(),
                                           poset.flats[*pair].support.end(), h);
            ++checked;
            if (in_set != codim2 || in_set != contained) {
              mismatches.push_back({{"level", q},
                                    {"hyperplane", h},
                                    {"i", i},
                                    {"m", m},
                                    {"incidence", in_set},
                                    {"codim2_flat", codim2},
                                    {"pair_contained", contained}});
            }
          }
        }
      }
    }
  }
  rep.ok = mismatches.empty();
  rep.payload["checked"] = checked;
  if (!rep.ok) rep.payload["mismatches"] = std::move(mismatches);
  return rep;
}

std::optional<FiberedPresentation> fibered_in_order(const Arrangement& a,
                                                    const std::vector<int>& perm) {
  int l = a.dimension;
  if (static_cast<int>(perm.size()) != l)
    throw std::invalid_argument("permutation length must equal the dimension");
  FiberedPresentation fp;
  fp.dimension = l;
  fp.levels.resize(l);
  for (const auto& h : a.hyperplanes) {
    // highest position (in the new order) with a nonzero coefficient
    int level = -1;
    for (int t = l; t >= 1; --t) {
      if (!h.coeffs[perm[t - 1] - 1].is_zero()) {
        level = t;
        break;
      }
    }
    // normalize the level coefficient to 1 and move the rest to the root
    Rational lead = h.coeffs[perm[level - 1] - 1];
    RootForm g;
    for (int t = 1; t < level; ++t) g.coeffs.push_back(-(h.coeffs[perm[t - 1] - 1] / lead));
    g.constant = h.constant / lead;
    fp.levels[level - 1].push_back(std::move(g));
  }
  for (auto& roots : fp.levels) {
    std::sort(roots.begin(), roots.end(), [](const RootForm& x, const RootForm& y) {
      for (std::size_t t = 0; t < x.coeffs.size(); ++t)
        if (x.coeffs[t] != y.coeffs[t]) return x.coeffs[t] < y.coeffs[t];
      return x.constant < y.constant;
    });
  }
  CheckReport rep = check_fibered(fp);
  if (!rep.ok) return std::nullopt;
  return fp;
}

PermutationSearch search_permutations(const Arrangement& a) {
  int cap = cap_with_override(8);
  if (a.dimension > cap)
    throw InputError("dimension " + std::to_string(a.dimension) +
                     " exceeds the permutation search cap of " + std::to_string(cap));
  std::vector<int> perm(a.dimension);
  std::iota(perm.begin(), perm.end(), 1);
  PermutationSearch out;
  do {
    std::optional<FiberedPresentation> fp = fibered_in_order(a, perm);
    if (fp) {
      out.presentation = std::move(fp);
      out.permutation = perm;
      return out;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace arrlie
