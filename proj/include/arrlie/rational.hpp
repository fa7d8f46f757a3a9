#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>

namespace arrlie {

using Int = boost::multiprecision::cpp_int;

// Reduced fraction over arbitrary-precision integers.
// Invariants: gcd(num, den) == 1 and den > 0 at all times.
struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}
  Rational(Int n) : num(std::move(n)) {}
  Rational(Int n, Int d);  // throws std::invalid_argument if d == 0

  bool is_zero() const { return num == 0; }
  // -1, 0, or +1
  int sign() const { return num == 0 ? 0 : (num < 0 ? -1 : 1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Accepts "p" or "p/q" with an optional leading sign on p.
  // Throws std::invalid_argument on anything else (including q == 0).
  static Rational parse(const std::string& s);
  // Inverse of parse: "p" when den == 1, else "p/q".
  std::string str() const;

private:
  void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace arrlie
