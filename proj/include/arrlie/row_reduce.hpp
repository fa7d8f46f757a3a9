#pragma once

#include <cstdint>
#include <map>

#include "arrlie/rational.hpp"

namespace arrlie {

// Incremental integer row reduction for sparse rows keyed by uint64
// column ids.  Rows are combined with exact integer cross-elimination and
// renormalized by their content, so entries stay small.  Only the rank and
// the pivot rows are kept.
class IntRowReducer {
public:
  using Row = std::map<std::uint64_t, Int>;

  // Reduces row against the stored pivots.  Returns true when a nonzero
  // remainder survives (it becomes a new pivot).
  bool add_row(Row row) {
    while (!row.empty()) {
      std::uint64_t lead = row.begin()->first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        normalize(row);
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      const Row& p = it->second;
      Int a = row.begin()->second;
      Int b = p.begin()->second;  // positive by normalization
      Int g = boost::multiprecision::gcd(boost::multiprecision::abs(a), b);
      Int ca = b / g, cb = a / g;
      for (auto& [col, v] : row) v *= ca;
      for (const auto& [col, v] : p) row[col] -= cb * v;
      drop_zeros(row);
      if (!row.empty()) normalize(row);  // keeps entries near their content
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

private:
  static void drop_zeros(Row& row) {
    for (auto it = row.begin(); it != row.end();)
      it = (it->second == 0) ? row.erase(it) : std::next(it);
  }

  static void normalize(Row& row) {
    Int g = 0;
    for (const auto& [col, v] : row) g = boost::multiprecision::gcd(g, v);
    if (row.begin()->second < 0) g = -g;
    if (g != 1)
      for (auto& [col, v] : row) v /= g;
  }

  std::map<std::uint64_t, Row> pivots_;
};

}  // namespace arrlie
