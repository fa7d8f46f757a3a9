#pragma once

#include <cstddef>
#include <vector>

#include "arrlie/rational.hpp"

namespace arrlie {

// Dense row-major matrix of rationals.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Rational& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }

  Matrix transpose() const;
  // Copies this matrix k times along the diagonal of an otherwise-zero block matrix.
  Matrix block_diagonal(std::size_t k) const;
};

struct RrefResult {
  Matrix m;                        // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column per pivot row, ascending
};

// Gauss-Jordan elimination with exact pivoting.  The result is the unique
// RREF: leading entries 1, pivot columns cleared above and below.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// True when f == c*g for some nonzero scalar c.  Both vectors must be the
// same length and neither may be all zero (throws std::invalid_argument).
bool proportional(const std::vector<Rational>& f, const std::vector<Rational>& g);

}  // namespace arrlie
