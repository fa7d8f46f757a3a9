#include "arrlie/matrix.hpp"

#include <stdexcept>

namespace arrlie {

Matrix Matrix::transpose() const {
  Matrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::block_diagonal(std::size_t k) const {
  Matrix b(rows * k, cols * k);
  for (std::size_t blk = 0; blk < k; ++blk)
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        b.at(blk * rows + i, blk * cols + j) = at(i, j);
  return b;
}

RrefResult rref(const Matrix& input) {
  RrefResult res;
  res.m = input;
  Matrix& m = res.m;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols && lead < m.rows; ++col) {
    // first nonzero entry at or below the current row
    std::size_t piv = lead;
    while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
    Rational inv = Rational(1) / m.at(lead, col);
    for (std::size_t j = col; j < m.cols; ++j) m.at(lead, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    res.pivots.push_back(col);
    ++lead;
  }
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

bool proportional(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  if (f.size() != g.size()) throw std::invalid_argument("proportional: length mismatch");
  auto all_zero = [](const std::vector<Rational>& v) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  };
  if (all_zero(f) || all_zero(g)) throw std::invalid_argument("proportional: zero vector");
  // locate the first position where either entry is nonzero
  std::size_t i = 0;
  while (f[i].is_zero() && g[i].is_zero()) ++i;
  if (f[i].is_zero() || g[i].is_zero()) return false;
  Rational c = f[i] / g[i];
  for (std::size_t j = i; j < f.size(); ++j)
    if (f[j] != c * g[j]) return false;
  return true;
}

}  // namespace arrlie
