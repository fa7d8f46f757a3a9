#include "arrlie/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace arrlie {

void Rational::normalize() {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    den = 1;
    return;
  }
  Int g = boost::multiprecision::gcd(num < 0 ? Int(-num) : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational::Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }

Rational Rational::operator-() const {
  Rational r;
  r.num = -num;
  r.den = den;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num = num * o.den + o.num * den;
  den = den * o.den;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num = num * o.den - o.num * den;
  den = den * o.den;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num *= o.num;
  den *= o.den;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num == 0) throw std::invalid_argument("rational: division by zero");
  num *= o.den;
  den *= o.num;
  normalize();
  return *this;
}

Rational Rational::parse(const std::string& s) {
  auto bad = [&]() -> Rational {
    throw std::invalid_argument("rational: malformed literal '" + s + "'");
  };
  if (s.empty()) return bad();
  size_t i = 0;
  bool negative = s[i] == '-';
  if (s[i] == '+' || s[i] == '-') ++i;
  size_t digits_start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == digits_start) return bad();
  Int n(s.substr(digits_start, i - digits_start));
  if (negative) n = -n;
  if (i == s.size()) return Rational(std::move(n));
  if (s[i] != '/') return bad();
  ++i;
  size_t den_start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == den_start || i != s.size()) return bad();
  Int d(s.substr(den_start));
  if (d == 0) return bad();
  return Rational(std::move(n), std::move(d));
}

std::string Rational::str() const {
  std::string out = num.str();
  if (den != 1) {
    out += '/';
    out += den.str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace arrlie
