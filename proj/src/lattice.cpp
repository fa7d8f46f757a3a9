#include "arrlie/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arrlie {

namespace {

// Reduces row against the rref rows of sys (pivot columns already known to
// be the leading entries).  Returns the remainder.
std::vector<Rational> reduce_row(std::vector<Rational> row, const Matrix& sys,
                                 const std::vector<std::size_t>& pivots) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Rational& f = row[pivots[i]];
    if (f.is_zero()) continue;
    Rational c = f;
    for (std::size_t j = 0; j < sys.cols; ++j) row[j] -= c * sys.at(i, j);
  }
  return row;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string matrix_key(const Matrix& m) {
  std::string key;
  for (const auto& x : m.data) {
    key += x.str();
    key += ';';
  }
  return key;
}

}  // namespace

std::optional<int> IntersectionPoset::closure(const std::vector<int>& subset) const {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  // flats are sorted by codimension, so the first support hit is the
  // largest subspace containing the intersection, which is the
  // intersection itself when it is nonempty
  for (std::size_t x = 0; x < flats.size(); ++x) {
    if (std::includes(flats[x].support.begin(), flats[x].support.end(), s.begin(), s.end()))
      return static_cast<int>(x);
  }
  return std::nullopt;
}

bool IntersectionPoset::leq(int x, int y) const {
  return std::includes(flats[y].support.begin(), flats[y].support.end(),
                       flats[x].support.begin(), flats[x].support.end());
}

IntersectionPoset build_poset(const Arrangement& a) {
  IntersectionPoset poset;
  poset.a = a;

  struct Node {
    Matrix sys;                        // trimmed rref, consistent
    std::vector<std::size_t> pivots;
  };
  std::map<std::string, Node> found;
  Node ambient;
  ambient.sys = Matrix(0, a.dimension + 1);
  found.insert({matrix_key(ambient.sys), ambient});

  std::vector<Node> frontier = {ambient};
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      for (std::size_t h = 0; h < a.size(); ++h) {
        std::vector<Rational> rem = reduce_row(a.augmented_row(h), node.sys, node.pivots);
        if (all_zero(rem)) continue;  // hyperplane already contains the flat
        Matrix stacked(node.sys.rows + 1, a.dimension + 1);
        stacked.data = node.sys.data;
        stacked.data.insert(stacked.data.end(), rem.begin(), rem.end());
        RrefResult rr = rref(stacked);
        // a pivot in the constant column marks an empty intersection
        if (!rr.pivots.empty() && rr.pivots.back() == static_cast<std::size_t>(a.dimension))
          continue;
        Node child;
        child.pivots = rr.pivots;
        child.sys = Matrix(rr.pivots.size(), a.dimension + 1);
        std::copy(rr.m.data.begin(), rr.m.data.begin() + child.sys.data.size(),
                  child.sys.data.begin());
        std::string key = matrix_key(child.sys);
        if (found.insert({key, child}).second) next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }

  for (const auto& [key, node] : found) {
    Flat f;
    f.system = node.sys;
    f.codim = static_cast<int>(node.pivots.size());
    for (std::size_t h = 0; h < a.size(); ++h)
      if (all_zero(reduce_row(a.augmented_row(h), node.sys, node.pivots)))
        f.support.push_back(static_cast<int>(h));
    poset.flats.push_back(std::move(f));
  }
  std::sort(poset.flats.begin(), poset.flats.end(), [](const Flat& x, const Flat& y) {
    if (x.codim != y.codim) return x.codim < y.codim;
    return x.support < y.support;
  });

  // mu(ambient) = 1; for every other flat the sum over flats below it
  // (proper support subsets, plus itself) vanishes
  for (std::size_t x = 0; x < poset.flats.size(); ++x) {
    if (x == 0) {
      poset.flats[0].mobius = 1;
      continue;
    }
    Int acc = 0;
    for (std::size_t y = 0; y < x; ++y)
      if (poset.leq(static_cast<int>(y), static_cast<int>(x))) acc += poset.flats[y].mobius;
    poset.flats[x].mobius = -acc;
  }
  return poset;
}

IntPolynomial poincare_polynomial(const IntersectionPoset& p) {
  int deg = 0;
  for (const auto& f : p.flats) deg = std::max(deg, f.codim);
  IntPolynomial poly(deg + 1, Int(0));
  for (const auto& f : p.flats) poly[f.codim] += boost::multiprecision::abs(f.mobius);
  return poly;
}

IntPolynomial poincare_redundant(const IntPolynomial& p, int k) {
  if (k < 1) throw std::invalid_argument("redundancy k must be >= 1");
  if (p.empty()) return p;
  IntPolynomial out((p.size() - 1) * (2 * k - 1) + 1, Int(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[i * (2 * k - 1)] = p[i];
  return out;
}

std::vector<int> codim2_flats(const IntersectionPoset& p) {
  std::vector<int> out;
  for (std::size_t x = 0; x < p.flats.size(); ++x)
    if (p.flats[x].codim == 2) out.push_back(static_cast<int>(x));
  return out;
}

nlohmann::json poset_to_json(const IntersectionPoset& p) {
  nlohmann::json flats = nlohmann::json::array();
  for (const auto& f : p.flats) {
    nlohmann::json fj;
    fj["codim"] = f.codim;
    fj["mobius"] = f.mobius.convert_to<long long>();
    fj["support"] = f.support;
    nlohmann::json names = nlohmann::json::array();
    for (int h : f.support) names.push_back(p.a.hyperplanes[h].name);
    fj["names"] = names;
    nlohmann::json eqs = nlohmann::json::array();
    for (std::size_t i = 0; i < f.system.rows; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < f.system.cols; ++j) row.push_back(f.system.at(i, j).str());
      eqs.push_back(std::move(row));
    }
    fj["system"] = eqs;
    flats.push_back(std::move(fj));
  }
  return nlohmann::json{{"flats", std::move(flats)}};
}

}  // namespace arrlie
