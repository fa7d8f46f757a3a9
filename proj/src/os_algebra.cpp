#include "arrlie/os_algebra.hpp"

#include <bit>
#include <stdexcept>

#include "arrlie/row_reduce.hpp"

namespace arrlie {

int merge_sign(std::uint64_t t, std::uint64_t u) {
  if (t & u) return 0;
  int inversions = 0;
  for (std::uint64_t rest = u; rest;) {
    int b = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(t >> (b + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

ExteriorElement wedge_monomial(std::uint64_t t, const ExteriorElement& g) {
  ExteriorElement out;
  for (const auto& [u, c] : g.terms) {
    int s = merge_sign(t, u);
    if (s != 0) out.add(t | u, s > 0 ? c : Int(-c));
  }
  return out;
}

ExteriorElement boundary_element(const std::vector<int>& subset) {
  std::uint64_t full = 0;
  for (int s : subset) full |= std::uint64_t(1) << s;
  ExteriorElement out;
  int sign = 1;
  for (int s : subset) {
    out.add(full & ~(std::uint64_t(1) << s), sign);
    sign = -sign;
  }
  return out;
}

std::vector<OSIdealGenerator> ideal_generators(const Arrangement& a,
                                               const IntersectionPoset& p) {
  int n = static_cast<int>(a.size());
  int cap = cap_with_override(16);
  if (n > cap)
    throw InputError("arrangement with " + std::to_string(n) +
                     " hyperplanes exceeds the brute-force cap of " + std::to_string(cap));
  if (n > 62) throw InputError("arrangement too large for subset enumeration");

  // closed supports as bitmasks, in poset order (ascending codimension)
  std::vector<std::uint64_t> supports;
  supports.reserve(p.flats.size());
  for (const auto& f : p.flats) {
    std::uint64_t m = 0;
    for (int h : f.support) m |= std::uint64_t(1) << h;
    supports.push_back(m);
  }
  auto closure_codim = [&](std::uint64_t s) -> int {
    // first flat whose support covers s is the intersection; -1 for empty
    for (std::size_t x = 0; x < supports.size(); ++x)
      if ((supports[x] & s) == s) return p.flats[x].codim;
    return -1;
  };

  std::vector<OSIdealGenerator> gens;
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
    int size = std::popcount(s);
    if (size < 2) continue;
    int codim = closure_codim(s);
    if (codim == static_cast<int>(size)) continue;  // independent, no relation
    OSIdealGenerator g;
    for (int b = 0; b < n; ++b)
      if (s & (std::uint64_t(1) << b)) g.subset.push_back(b);
    if (codim < 0) {
      g.empty_intersection = true;
      g.element.add(s, 1);
    } else {
      g.empty_intersection = false;
      g.element = boundary_element(g.subset);
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<long long> os_dimensions(const Arrangement& a, const IntersectionPoset& p,
                                     int max_q) {
  if (max_q < 0 || max_q > a.dimension)
    throw std::invalid_argument("max_q must lie between 0 and the ambient dimension");
  int n = static_cast<int>(a.size());
  std::vector<OSIdealGenerator> gens = ideal_generators(a, p);

  std::vector<long long> dims;
  dims.push_back(1);  // degree 0: the unit
  for (int q = 1; q <= max_q; ++q) {
    long long full = 1;  // C(n, q)
    for (int i = 0; i < q; ++i) full = full * (n - i) / (i + 1);
    if (n < q) full = 0;

    IntRowReducer reducer;
    for (const auto& g : gens) {
      int d = static_cast<int>(g.subset.size()) - (g.empty_intersection ? 0 : 1);
      if (d > q) continue;
      int tsize = q - d;
      if (tsize > n) continue;
      // walk all subsets of {0..n-1} with tsize elements (Gosper)
      std::uint64_t t = (tsize == 0) ? 0 : (std::uint64_t(1) << tsize) - 1;
      while (true) {
        ExteriorElement row = wedge_monomial(t, g.element);
        if (!row.is_zero()) {
          IntRowReducer::Row r;
          for (const auto& [mask, c] : row.terms) r[mask] = c;
          reducer.add_row(std::move(r));
        }
        if (tsize == 0 || t >= (std::uint64_t(1) << n) - (std::uint64_t(1) << (n - tsize)))
          break;
        std::uint64_t c = t & (~t + 1), rr = t + c;
        t = (((rr ^ t) >> 2) / c) | rr;
      }
    }
    dims.push_back(full - static_cast<long long>(reducer.rank()));
  }
  return dims;
}

CheckReport verify_os_poincare(const Arrangement& a, const IntersectionPoset& p, int k,
                               int max_q) {
  if (k < 1) throw std::invalid_argument("redundancy k must be >= 1");
  std::vector<long long> dims = os_dimensions(a, p, max_q);
  IntPolynomial pr = poincare_redundant(poincare_polynomial(p), k);

  CheckReport rep;
  nlohmann::json table = nlohmann::json::array();
  for (int q = 0; q <= max_q; ++q) {
    std::size_t deg = static_cast<std::size_t>(q) * (2 * k - 1);
    long long expected = deg < pr.size() ? pr[deg].convert_to<long long>() : 0;
    bool okq = (expected == dims[q]);
    table.push_back({{"q", q},
                     {"expected", expected},
                     {"actual", dims[q]},
                     {"status", okq ? "ok" : "mismatch"}});
    if (!okq) rep.ok = false;
  }
  // degrees that are not multiples of 2k-1 must vanish in the redundant
  // polynomial; this holds by construction but is rechecked for the report
  for (std::size_t d = 0; d < pr.size(); ++d)
    if (pr[d] != 0 && d % (2 * k - 1) != 0) rep.ok = false;
  rep.payload["k"] = k;
  rep.payload["table"] = std::move(table);
  return rep;
}

}  // namespace arrlie
