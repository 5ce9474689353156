#include "hexagram/linalg.hpp"

#include <utility>

namespace hexagram {

namespace {

/// Row-reduces in place; returns the pivot count and flips `sign` per swap.
int eliminate(RationalMatrix& m, std::size_t cols, int* sign) {
  int r = 0;
  const int rows = static_cast<int>(m.size());
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int row = r; row < rows; ++row) {
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      std::swap(m[r], m[pivot]);
      if (sign != nullptr) *sign = -*sign;
    }
    for (int row = r + 1; row < rows; ++row) {
      if (m[row][col].is_zero()) continue;
      const Rational factor = m[row][col] / m[r][col];
      for (std::size_t k = col; k < m[row].size(); ++k) m[row][k] -= factor * m[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

int matrix_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return eliminate(m, m.front().size(), nullptr);
}

Rational determinant(RationalMatrix m) {
  int sign = 1;
  const std::size_t n = m.size();
  if (eliminate(m, n, &sign) < static_cast<int>(n)) return Rational(0);
  Rational det(sign);
  for (std::size_t i = 0; i < n; ++i) det *= m[i][i];
  return det;
}

std::optional<std::vector<Rational>> solve_linear(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  if (eliminate(a, n, nullptr) < static_cast<int>(n)) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational rest = a[i][n];
    for (std::size_t k = i + 1; k < n; ++k) rest -= a[i][k] * x[k];
    x[i] = rest / a[i][i];
  }
  return x;
}

}  // namespace hexagram
