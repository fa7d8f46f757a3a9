#include "arrlie/holonomy.hpp"

#include <algorithm>
#include <stdexcept>

#include "arrlie/row_reduce.hpp"

namespace arrlie {

HolonomyLie build_holonomy(const FiberedPresentation& fp, int k) {
  if (k < 1) throw std::invalid_argument("regrading parameter k must be >= 1");
  CheckReport chk = check_fibered(fp);
  if (!chk.ok)
    throw InputError("presentation does not satisfy the levelwise condition; "
                     "the semidirect product is only defined for fiber-type input");
  HolonomyLie h;
  h.presentation = fp;
  h.underlying = underlying_arrangement(fp);
  h.incidence = incidence_sets(fp);
  h.exponents = fp.exponents();
  h.k = k;
  return h;
}

LieElement holo_zero() { return LieElement{}; }

LieElement holo_generator(const HolonomyLie& h, int global) {
  auto [j, i] = h.presentation.level_of(global);
  LieElement x;
  x.components[j] = lie_letter(h.exponents[j - 1], i);
  return x;
}

LieElement holo_add(LieElement x, const LieElement& y) {
  for (const auto& [q, comp] : y.components) {
    auto it = x.components.find(q);
    if (it == x.components.end()) {
      x.components.emplace(q, comp);
    } else {
      it->second += comp;
      if (it->second.is_zero()) x.components.erase(it);
    }
  }
  return x;
}

LieElement holo_sub(LieElement x, const LieElement& y) {
  LieElement neg = y;
  for (auto& [q, comp] : neg.components) comp *= Int(-1);
  return holo_add(std::move(x), neg);
}

bool holo_equal(const LieElement& x, const LieElement& y) {
  return x.components == y.components;
}

std::string holo_str(const HolonomyLie& h, const LieElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [q, comp] : x.components) {
    if (!out.empty()) out += "; ";
    out += "level " + std::to_string(q) + ": " + comp.str();
  }
  return out;
}

namespace {

// Action of single hyperplanes (lower level) on basis words (higher
// level), memoized per verification pass.
struct DerivationEngine {
  const HolonomyLie& h;
  std::map<std::tuple<int, int, Word>, FreeLieElement> memo;  // (global, q, word)

  // D_H(B_m) = sum over incidence pairs {i,i'} of H at level q that
  // contain m of [B_m, B_i + B_i'].
  FreeLieElement letter_on_letter(int global, int q, int m) {
    int d = h.exponents[q - 1];
    FreeLieElement acc = lie_zero(d);
    auto it = h.incidence.sets.find({q, global});
    if (it == h.incidence.sets.end()) return acc;
    for (const auto& [i, ip] : it->second) {
      if (m != i && m != ip) continue;
      FreeLieElement sum = lie_letter(d, i);
      sum += lie_letter(d, ip);
      acc += bracket(lie_letter(d, m), sum);
    }
    return acc;
  }

  // Leibniz extension along the standard factorization.
  FreeLieElement letter_on_word(int global, int q, const Word& t) {
    if (t.size() == 1) return letter_on_letter(global, q, t[0]);
    auto key = std::make_tuple(global, q, t);
    auto found = memo.find(key);
    if (found != memo.end()) return found->second;
    auto [t1, t2] = standard_factorization(t);
    int d = h.exponents[q - 1];
    FreeLieElement res = bracket(letter_on_word(global, q, t1), lie_basis_element(d, t2));
    res += bracket(lie_basis_element(d, t1), letter_on_word(global, q, t2));
    memo.emplace(key, res);
    return res;
  }

  FreeLieElement letter_apply(int global, int q, const FreeLieElement& v) {
    FreeLieElement out = lie_zero(h.exponents[q - 1]);
    for (const auto& [t, c] : v.terms) {
      FreeLieElement part = letter_on_word(global, q, t);
      part *= c;
      out += part;
    }
    return out;
  }

  // D over a basis word of the acting level: a letter acts directly, a
  // longer word acts as the commutator of the actions of its factors.
  FreeLieElement word_apply(int p, const Word& w, int q, const FreeLieElement& v) {
    if (w.size() == 1) return letter_apply(h.presentation.global_index(p, w[0]), q, v);
    auto [w1, w2] = standard_factorization(w);
    FreeLieElement res = word_apply(p, w1, q, word_apply(p, w2, q, v));
    res -= word_apply(p, w2, q, word_apply(p, w1, q, v));
    return res;
  }
};

}  // namespace

FreeLieElement derivation_apply(const HolonomyLie& h, int p, const FreeLieElement& u, int q,
                                const FreeLieElement& v) {
  if (p >= q) throw std::invalid_argument("the acting level must be strictly lower");
  DerivationEngine engine{h, {}};
  FreeLieElement out = lie_zero(h.exponents[q - 1]);
  for (const auto& [w, c] : u.terms) {
    FreeLieElement part = engine.word_apply(p, w, q, v);
    part *= c;
    out += part;
  }
  return out;
}

LieElement holo_bracket(const HolonomyLie& h, const LieElement& x, const LieElement& y) {
  LieElement out;
  auto accumulate = [&out](int level, FreeLieElement e) {
    if (e.is_zero()) return;
    auto it = out.components.find(level);
    if (it == out.components.end()) {
      out.components.emplace(level, std::move(e));
    } else {
      it->second += e;
      if (it->second.is_zero()) out.components.erase(it);
    }
  };
  for (const auto& [p, xp] : x.components) {
    for (const auto& [q, yq] : y.components) {
      if (p == q) {
        accumulate(p, bracket(xp, yq));
      } else if (p < q) {
        accumulate(q, derivation_apply(h, p, xp, q, yq));
      } else {
        FreeLieElement e = derivation_apply(h, q, yq, p, xp);
        e *= Int(-1);
        accumulate(p, std::move(e));
      }
    }
  }
  return out;
}

CheckReport verify_relations(const HolonomyLie& h, const IntersectionPoset& poset) {
  CheckReport rep;
  nlohmann::json residues = nlohmann::json::array();
  long long checked = 0;
  for (int x : codim2_flats(poset)) {
    const Flat& flat = poset.flats[x];
    LieElement cx = holo_zero();
    for (int hp : flat.support) cx = holo_add(std::move(cx), holo_generator(h, hp));
    for (int hp : flat.support) {
      LieElement r = holo_bracket(h, cx, holo_generator(h, hp));
      ++checked;
      if (!r.is_zero()) {
        nlohmann::json names = nlohmann::json::array();
        for (int s : flat.support) names.push_back(h.underlying.hyperplanes[s].name);
        residues.push_back({{"flat_support", names},
                            {"hyperplane", h.underlying.hyperplanes[hp].name},
                            {"residue", holo_str(h, r)}});
      }
    }
  }
  rep.ok = residues.empty();
  rep.payload["checked"] = checked;
  if (!rep.ok) rep.payload["violations"] = std::move(residues);
  return rep;
}

std::vector<Int> graded_dimensions(const HolonomyLie& h, int max_weight) {
  if (max_weight < 1) throw std::invalid_argument("max_weight must be >= 1");
  std::vector<Int> dims;
  for (int n = 1; n <= max_weight; ++n) {
    Int acc = 0;
    for (int d : h.exponents)
      if (d >= 1) acc += witt_dimension(d, n);
    dims.push_back(acc);
  }
  return dims;
}

TruncatedSeries uea_series(const HolonomyLie& h, int order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  // weights with 2nk beyond the truncation cannot contribute
  for (int n = 1; 2 * n * h.k <= order; ++n) {
    Int phi = 0;
    for (int d : h.exponents)
      if (d >= 1) phi += witt_dimension(d, n);
    if (phi == 0) continue;
    s = mul(s, inverse_power(order, 2 * n * h.k, phi));
  }
  return s;
}

TruncatedSeries loop_homology_series(const HolonomyLie& h, int order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for (int d : h.exponents) {
    if (d < 1) continue;
    s = mul(s, geometric(order, 2 * h.k, Int(d)));
  }
  return s;
}

CheckReport verify_series_match(const HolonomyLie& h, int order) {
  TruncatedSeries u = uea_series(h, order);
  TruncatedSeries l = loop_homology_series(h, order);
  CheckReport rep;
  rep.ok = (u == l);
  rep.payload["uea"] = series_to_json(u);
  rep.payload["loop_homology"] = series_to_json(l);
  return rep;
}

Presentation emit_presentation(const Arrangement& a, const IntersectionPoset& p,
                               int generator_degree) {
  Presentation pres;
  for (const auto& h : a.hyperplanes) pres.generators.push_back({h.name, generator_degree});
  for (int x : codim2_flats(p)) {
    const Flat& flat = p.flats[x];
    std::vector<std::string> support;
    for (int s : flat.support) support.push_back(a.hyperplanes[s].name);
    for (int s : flat.support) {
      Presentation::Relation rel;
      rel.flat_support = support;
      rel.hyperplane = a.hyperplanes[s].name;
      rel.poisson = false;
      pres.relations.push_back(std::move(rel));
    }
  }
  return pres;
}

Presentation emit_poisson_presentation(const Arrangement& a, const IntersectionPoset& p,
                                       int k, int q) {
  if (k < 1) throw std::invalid_argument("regrading parameter k must be >= 1");
  if (!(1 < q && q < 2 * k + 1))
    throw std::invalid_argument("the bracket degree q must satisfy 1 < q < 2k+1");
  Presentation pres = emit_presentation(a, p, 2 * k + 1 - q);
  for (auto& rel : pres.relations) {
    rel.poisson = true;
    rel.op = "λ_" + std::to_string(q - 1);
  }
  return pres;
}

nlohmann::json presentation_to_json(const Presentation& pres) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : pres.generators)
    gens.push_back({{"name", g.name}, {"degree", g.degree}});
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : pres.relations) {
    nlohmann::json rj;
    rj["flat_support"] = r.flat_support;
    rj["hyperplane"] = r.hyperplane;
    rj["bracket"] = r.poisson ? "poisson" : "lie";
    rj["operator"] = r.op.empty() ? nlohmann::json() : nlohmann::json(r.op);
    rels.push_back(std::move(rj));
  }
  return nlohmann::json{{"generators", std::move(gens)}, {"relations", std::move(rels)}};
}

std::vector<Int> presented_dims_bruteforce(const Presentation& pres, int max_weight) {
  int g = static_cast<int>(pres.generators.size());
  int gen_cap = cap_with_override(8);
  int weight_cap = cap_with_override(6);
  if (g > gen_cap)
    throw InputError("presentation with " + std::to_string(g) +
                     " generators exceeds the brute-force cap of " + std::to_string(gen_cap));
  if (max_weight > weight_cap)
    throw InputError("weight " + std::to_string(max_weight) +
                     " exceeds the brute-force cap of " + std::to_string(weight_cap));
  if (max_weight < 1) throw std::invalid_argument("max_weight must be >= 1");

  std::map<std::string, int> letter;  // generator name -> letter 1..g
  for (int i = 0; i < g; ++i) {
    if (!letter.emplace(pres.generators[i].name, i + 1).second)
      throw std::invalid_argument("duplicate generator name '" + pres.generators[i].name + "'");
  }

  // relations as tensor elements: [C_X, C_H] = sum over the support of
  // (h' H - H h'), homogeneous of weight 2
  std::vector<TensorPoly> slice;
  for (const auto& rel : pres.relations) {
    auto hit = letter.find(rel.hyperplane);
    if (hit == letter.end())
      throw std::invalid_argument("relation names unknown generator '" + rel.hyperplane + "'");
    TensorPoly r = tensor_zero(g);
    for (const auto& hp : rel.flat_support) {
      auto sit = letter.find(hp);
      if (sit == letter.end())
        throw std::invalid_argument("relation names unknown generator '" + hp + "'");
      r += tensor_commutator(tensor_word(g, {sit->second}), tensor_word(g, {hit->second}));
    }
    if (!r.is_zero()) slice.push_back(std::move(r));
  }

  std::vector<Int> dims;
  dims.push_back(Int(g));  // weight 1: no relations can reach it
  std::map<Word, TensorPoly> expansion_memo;
  for (int n = 2; n <= max_weight; ++n) {
    if (n > 2) {
      // push the previous slice up by one weight: ad by every generator
      std::vector<TensorPoly> next;
      next.reserve(slice.size() * g);
      for (int a = 1; a <= g; ++a) {
        TensorPoly xa = tensor_word(g, {a});
        for (const auto& v : slice) next.push_back(tensor_commutator(xa, v));
      }
      slice = std::move(next);
    }
    // rank of the weight-n slice in Lyndon coordinates
    std::vector<Word> basis = lyndon_basis(g, n);
    std::map<Word, std::uint64_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);
    IntRowReducer reducer;
    for (const auto& v : slice) {
      FreeLieElement lie = tensor_to_lie(v, expansion_memo);
      IntRowReducer::Row row;
      for (const auto& [w, c] : lie.terms) row[column.at(w)] = c;
      if (!row.empty()) reducer.add_row(std::move(row));
    }
    dims.push_back(witt_dimension(g, n) - Int(reducer.rank()));
  }
  return dims;
}

}  // namespace arrlie
