#include "arrlie/free_lie.hpp"

#include <stdexcept>

namespace arrlie {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  Word rot = w;
  for (std::size_t s = 1; s < w.size(); ++s) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (!(w < rot)) return false;
  }
  return true;
}

std::vector<Word> lyndon_basis(int d, int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("alphabet and length must be positive");
  std::vector<Word> out;
  Word w = {1};
  while (true) {
    if (static_cast<int>(w.size()) == n) out.push_back(w);
    // periodic extension to length n, then increment the last non-d letter
    std::size_t len = w.size();
    while (w.size() < static_cast<std::size_t>(n)) w.push_back(w[w.size() % len]);
    while (!w.empty() && w.back() == d) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  return out;
}

namespace {

int number_mobius(int m) {
  int primes = 0;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;  // square factor
    ++primes;
  }
  if (m > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

Int int_pow(int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Int witt_dimension(int d, int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("alphabet and length must be positive");
  Int acc = 0;
  for (int m = 1; m <= n; ++m) {
    if (n % m) continue;
    int mu = number_mobius(m);
    if (mu == 0) continue;
    acc += Int(mu) * int_pow(d, n / m);
  }
  return acc / n;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("factorization needs length >= 2");
  // lexicographically smallest proper suffix
  std::size_t best = 1;
  for (std::size_t s = 2; s < w.size(); ++s) {
    if (std::lexicographical_compare(w.begin() + s, w.end(), w.begin() + best, w.end()))
      best = s;
  }
  return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
}

void FreeLieElement::add(const Word& w, const Int& c) {
  auto it = terms.find(w);
  if (it == terms.end()) {
    if (c != 0) terms.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

FreeLieElement& FreeLieElement::operator+=(const FreeLieElement& o) {
  if (alphabet != o.alphabet) throw std::invalid_argument("alphabet mismatch");
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

FreeLieElement& FreeLieElement::operator-=(const FreeLieElement& o) {
  if (alphabet != o.alphabet) throw std::invalid_argument("alphabet mismatch");
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

FreeLieElement& FreeLieElement::operator*=(const Int& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [w, v] : terms) v *= c;
  return *this;
}

FreeLieElement FreeLieElement::graded_component(int n) const {
  FreeLieElement out = lie_zero(alphabet);
  for (const auto& [w, c] : terms)
    if (static_cast<int>(w.size()) == n) out.add(w, c);
  return out;
}

namespace {

std::string bracket_string(const Word& w) {
  if (w.size() == 1) return std::to_string(w[0]);
  auto [u, v] = standard_factorization(w);
  return "[" + bracket_string(u) + "," + bracket_string(v) + "]";
}

}  // namespace

std::string FreeLieElement::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms) {
    Int a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1) out += a.str() + "*";
    out += bracket_string(w);
  }
  return out;
}

FreeLieElement lie_zero(int d) {
  FreeLieElement x;
  x.alphabet = d;
  return x;
}

FreeLieElement lie_letter(int d, int letter) {
  if (letter < 1 || letter > d) throw std::invalid_argument("letter out of range");
  FreeLieElement x = lie_zero(d);
  x.add({letter}, 1);
  return x;
}

FreeLieElement lie_basis_element(int d, const Word& lyndon) {
  if (!is_lyndon(lyndon)) throw std::invalid_argument("not a Lyndon word");
  for (int a : lyndon)
    if (a < 1 || a > d) throw std::invalid_argument("letter out of range");
  FreeLieElement x = lie_zero(d);
  x.add(lyndon, 1);
  return x;
}

namespace {

// Rewrites brackets of basis words into the Lyndon basis; memoized per
// top-level bracket() call.
struct BracketEngine {
  int d;
  std::map<std::pair<Word, Word>, std::map<Word, Int>> memo;

  std::map<Word, Int> words(const Word& u, const Word& v) {
    if (u == v) return {};
    if (v < u) {
      std::map<Word, Int> flip = words(v, u);
      for (auto& [w, c] : flip) c = -c;
      return flip;
    }
    auto key = std::make_pair(u, v);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::map<Word, Int> result;
    bool standard = u.size() == 1;
    Word u1, u2;
    if (!standard) {
      std::tie(u1, u2) = standard_factorization(u);
      standard = !(u2 < v);  // right factor dominates: uv is a basis word
    }
    if (standard) {
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      result[uv] = 1;
    } else {
      // [b(u), b(v)] = [b(u1), [b(u2), b(v)]] - [b(u2), [b(u1), b(v)]]
      std::map<Word, Int> inner2 = words(u2, v);
      for (const auto& [w, c] : inner2) accumulate(result, words(u1, w), c);
      std::map<Word, Int> inner1 = words(u1, v);
      for (const auto& [w, c] : inner1) accumulate(result, words(u2, w), -c);
    }
    memo.emplace(key, result);
    return result;
  }

  static void accumulate(std::map<Word, Int>& into, const std::map<Word, Int>& from,
                         const Int& scale) {
    for (const auto& [w, c] : from) {
      auto it = into.find(w);
      if (it == into.end()) {
        if (c * scale != 0) into.emplace(w, c * scale);
      } else {
        it->second += c * scale;
        if (it->second == 0) into.erase(it);
      }
    }
  }
};

}  // namespace

FreeLieElement bracket(const FreeLieElement& x, const FreeLieElement& y) {
  if (x.alphabet != y.alphabet) throw std::invalid_argument("alphabet mismatch");
  BracketEngine engine{x.alphabet, {}};
  FreeLieElement out = lie_zero(x.alphabet);
  for (const auto& [u, cu] : x.terms) {
    for (const auto& [v, cv] : y.terms) {
      std::map<Word, Int> part = engine.words(u, v);
      for (const auto& [w, c] : part) out.add(w, c * cu * cv);
    }
  }
  return out;
}

void TensorPoly::add(const Word& w, const Int& c) {
  auto it = terms.find(w);
  if (it == terms.end()) {
    if (c != 0) terms.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  if (alphabet != o.alphabet) throw std::invalid_argument("alphabet mismatch");
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  if (alphabet != o.alphabet) throw std::invalid_argument("alphabet mismatch");
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

TensorPoly tensor_zero(int d) {
  TensorPoly p;
  p.alphabet = d;
  return p;
}

TensorPoly tensor_word(int d, const Word& w) {
  TensorPoly p = tensor_zero(d);
  p.add(w, 1);
  return p;
}

TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b) {
  if (a.alphabet != b.alphabet) throw std::invalid_argument("alphabet mismatch");
  TensorPoly p = tensor_zero(a.alphabet);
  for (const auto& [u, cu] : a.terms) {
    for (const auto& [v, cv] : b.terms) {
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      p.add(uv, cu * cv);
    }
  }
  return p;
}

TensorPoly tensor_commutator(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly p = tensor_mul(a, b);
  p -= tensor_mul(b, a);
  return p;
}

namespace {

TensorPoly to_tensor_memo(int d, const Word& w, std::map<Word, TensorPoly>& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  TensorPoly result;
  if (w.size() == 1) {
    result = tensor_word(d, w);
  } else {
    auto [u, v] = standard_factorization(w);
    result = tensor_commutator(to_tensor_memo(d, u, memo), to_tensor_memo(d, v, memo));
  }
  memo.emplace(w, result);
  return result;
}

}  // namespace

TensorPoly to_tensor(int d, const Word& lyndon) {
  if (!is_lyndon(lyndon)) throw std::invalid_argument("not a Lyndon word");
  std::map<Word, TensorPoly> memo;
  return to_tensor_memo(d, lyndon, memo);
}

TensorPoly to_tensor(const FreeLieElement& x) {
  TensorPoly p = tensor_zero(x.alphabet);
  std::map<Word, TensorPoly> memo;
  for (const auto& [w, c] : x.terms) {
    TensorPoly t = to_tensor_memo(x.alphabet, w, memo);
    for (auto& [word, v] : t.terms) p.add(word, v * c);
  }
  return p;
}

FreeLieElement tensor_to_lie(const TensorPoly& p) {
  std::map<Word, TensorPoly> memo;
  return tensor_to_lie(p, memo);
}

FreeLieElement tensor_to_lie(const TensorPoly& p, std::map<Word, TensorPoly>& memo) {
  FreeLieElement out = lie_zero(p.alphabet);
  TensorPoly rest = p;
  while (!rest.is_zero()) {
    // the least word of a Lie element is Lyndon and its basis element
    // reproduces it with coefficient 1, adding only larger words
    const Word w = rest.terms.begin()->first;
    const Int c = rest.terms.begin()->second;
    if (!is_lyndon(w)) throw std::invalid_argument("not a Lie element: stray word");
    TensorPoly t = to_tensor_memo(p.alphabet, w, memo);
    for (const auto& [word, v] : t.terms) rest.add(word, -v * c);
    out.add(w, c);
  }
  return out;
}

}  // namespace arrlie
