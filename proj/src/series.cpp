#include "arrlie/series.hpp"

#include <limits>
#include <stdexcept>

namespace arrlie {

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order != b.order) throw std::invalid_argument("series order mismatch");
  TruncatedSeries p(a.order);
  for (int i = 0; i <= a.order; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; i + j <= a.order; ++j) {
      if (b.coeffs[j] == 0) continue;
      p.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return p;
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
  if (a.coeffs[0] != 1 && a.coeffs[0] != -1)
    throw std::invalid_argument("series is not a unit over the integers");
  TruncatedSeries b(a.order);
  Int u = a.coeffs[0];  // self-inverse
  b.coeffs[0] = u;
  for (int n = 1; n <= a.order; ++n) {
    Int acc = 0;
    for (int i = 1; i <= n; ++i) acc += a.coeffs[i] * b.coeffs[n - i];
    b.coeffs[n] = -u * acc;
  }
  return b;
}

TruncatedSeries inverse_power(int order, int step, const Int& exponent) {
  if (step < 1 || exponent < 0) throw std::invalid_argument("bad power series parameters");
  TruncatedSeries s(order);
  // coefficient of t^(step*i) is C(exponent+i-1, i)
  Int binom = 1;
  s.coeffs[0] = 1;
  for (int i = 1; static_cast<long long>(i) * step <= order; ++i) {
    binom *= exponent + i - 1;
    binom /= i;
    s.coeffs[i * step] = binom;
  }
  return s;
}

TruncatedSeries direct_power(int order, int step, const Int& exponent) {
  if (step < 1 || exponent < 0) throw std::invalid_argument("bad power series parameters");
  TruncatedSeries s(order);
  // coefficient of t^(step*i) is (-1)^i C(exponent, i)
  Int binom = 1;
  s.coeffs[0] = 1;
  for (int i = 1; static_cast<long long>(i) * step <= order; ++i) {
    binom *= exponent - (i - 1);
    binom /= i;
    if (binom == 0) break;
    s.coeffs[i * step] = (i % 2 == 0) ? binom : -binom;
  }
  return s;
}

TruncatedSeries geometric(int order, int step, const Int& c) {
  if (step < 1) throw std::invalid_argument("bad power series parameters");
  TruncatedSeries s(order);
  Int acc = 1;
  s.coeffs[0] = 1;
  for (int i = 1; static_cast<long long>(i) * step <= order; ++i) {
    acc *= c;
    s.coeffs[i * step] = acc;
  }
  return s;
}

nlohmann::json series_to_json(const TruncatedSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  static const Int lo = Int(std::numeric_limits<long long>::min());
  static const Int hi = Int(std::numeric_limits<long long>::max());
  for (const Int& c : s.coeffs) {
    if (c >= lo && c <= hi)
      coeffs.push_back(c.convert_to<long long>());
    else
      coeffs.push_back(c.str());
  }
  return nlohmann::json{{"variable", "t"}, {"truncation", s.order}, {"coefficients", coeffs}};
}

}  // namespace arrlie
