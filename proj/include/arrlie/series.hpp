#pragma once

#include <vector>

#include <json.hpp>

#include "arrlie/rational.hpp"

namespace arrlie {

// Integer power series truncated at a fixed order (inclusive).
struct TruncatedSeries {
  int order = 0;
  std::vector<Int> coeffs;  // size order+1, coeffs[i] is the t^i coefficient

  explicit TruncatedSeries(int n = 0) : order(n), coeffs(n + 1, Int(0)) {}
  static TruncatedSeries one(int n) {
    TruncatedSeries s(n);
    s.coeffs[0] = 1;
    return s;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order == b.order && a.coeffs == b.coeffs;
  }
};

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplicative inverse; the constant coefficient must be 1 or -1.
TruncatedSeries reciprocal(const TruncatedSeries& a);

// (1 - t^step)^(-exponent) with exponent >= 0, via binomial coefficients.
TruncatedSeries inverse_power(int order, int step, const Int& exponent);

// (1 - t^step)^(+exponent) with exponent >= 0.
TruncatedSeries direct_power(int order, int step, const Int& exponent);

// (1 - c t^step)^(-1), the geometric series in c t^step.
TruncatedSeries geometric(int order, int step, const Int& c);

// { "variable": "t", "truncation": N, "coefficients": [...] }; coefficients
// are JSON numbers when they fit 64 bits and decimal strings beyond that.
nlohmann::json series_to_json(const TruncatedSeries& s);

}  // namespace arrlie
