#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arrlie/rational.hpp"

namespace arrlie {

// Word over the alphabet {1..d}.  std::map keyed by Word orders words
// lexicographically, which is the order all the Lyndon machinery uses.
using Word = std::vector<int>;

// True when w is strictly smaller than every proper rotation of itself.
bool is_lyndon(const Word& w);

// All Lyndon words of length exactly n over {1..d}, in lexicographic
// order (Duval's generation).
std::vector<Word> lyndon_basis(int d, int n);

// Number of Lyndon words of length n over d letters:
// (1/n) sum over m | n of mobius(m) d^(n/m).
Int witt_dimension(int d, int n);

// For a Lyndon word of length >= 2, splits w = u v where v is the
// longest proper suffix that is Lyndon (equivalently the lexicographically
// smallest proper suffix).  Both halves are Lyndon and u < v.
std::pair<Word, Word> standard_factorization(const Word& w);

// Integer combination of Lyndon-word basis elements of the free Lie
// algebra on d letters.  A Lyndon word stands for its right-normed
// bracketing along standard factorizations.
struct FreeLieElement {
  int alphabet = 0;
  std::map<Word, Int> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const Int& c);
  FreeLieElement& operator+=(const FreeLieElement& o);
  FreeLieElement& operator-=(const FreeLieElement& o);
  FreeLieElement& operator*=(const Int& c);
  friend FreeLieElement operator+(FreeLieElement a, const FreeLieElement& b) { return a += b; }
  friend FreeLieElement operator-(FreeLieElement a, const FreeLieElement& b) { return a -= b; }
  friend bool operator==(const FreeLieElement& a, const FreeLieElement& b) {
    return a.alphabet == b.alphabet && a.terms == b.terms;
  }

  // the part of given word length
  FreeLieElement graded_component(int n) const;
  // bracketed rendering, e.g. "2*[1,[1,2]] - [2,[1,3]]"
  std::string str() const;
};

FreeLieElement lie_zero(int d);
FreeLieElement lie_letter(int d, int letter);
FreeLieElement lie_basis_element(int d, const Word& lyndon);

// Lie bracket, expanded back into the Lyndon basis by the classical
// rewriting: a pair u < v is a basis word uv when |u| = 1 or the right
// factor of u dominates v; otherwise Jacobi against the standard
// factorization of u splits the pair into smaller ones.
FreeLieElement bracket(const FreeLieElement& x, const FreeLieElement& y);

// Elements of the free associative algebra; words are tensor monomials.
struct TensorPoly {
  int alphabet = 0;
  std::map<Word, Int> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const Int& c);
  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.alphabet == b.alphabet && a.terms == b.terms;
  }
};

TensorPoly tensor_zero(int d);
TensorPoly tensor_word(int d, const Word& w);
TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b);
TensorPoly tensor_commutator(const TensorPoly& a, const TensorPoly& b);

// Expansion of the bracketing of a Lyndon word in the tensor algebra
// ([a,b] becoming ab - ba along the standard factorization), extended
// linearly.  Independent route used to cross-check bracket().
TensorPoly to_tensor(int d, const Word& lyndon);
TensorPoly to_tensor(const FreeLieElement& x);

// Writes a Lie element of the tensor algebra back in Lyndon coordinates.
// Works by triangularity: the expansion of basis word w is w plus
// lexicographically larger words.  Throws std::invalid_argument when the
// input is not a Lie element.  The second form shares an expansion cache
// across calls.
FreeLieElement tensor_to_lie(const TensorPoly& p);
FreeLieElement tensor_to_lie(const TensorPoly& p, std::map<Word, TensorPoly>& memo);

}  // namespace arrlie
