#pragma once

// Exact linear algebra over the rationals.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "delaycode/core.hpp"

namespace delaycode {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

namespace detail {

/// Reduced row echelon form in place. Returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(RationalMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t best = a.size();
    for (std::size_t r = row; r < a.size(); ++r) {
      if (a[r][col] == 0) continue;
      if (best == a.size() || abs(a[r][col]) > abs(a[best][col])) best = r;
    }
    if (best == a.size()) continue;
    std::swap(a[row], a[best]);
    const Rational inv = 1 / a[row][col];
    for (Rational& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= factor * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Solves A x = b exactly. A may have more rows than columns. Returns nullopt
/// unless the solution exists and is unique.
inline std::optional<RationalVector> solve_unique(RationalMatrix a, const RationalVector& b) {
  if (a.empty()) return std::nullopt;
  const std::size_t cols = a.front().size();
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  const std::vector<std::size_t> pivots = detail::rref(a, cols);
  if (pivots.size() != cols) return std::nullopt;
  for (std::size_t r = cols; r < a.size(); ++r) {
    if (a[r][cols] != 0) return std::nullopt;
  }
  RationalVector x(cols);
  for (std::size_t r = 0; r < cols; ++r) x[pivots[r]] = a[r][cols];
  return x;
}

/// A basis of { x : A x = 0 }.
inline std::vector<RationalVector> null_space(RationalMatrix a, std::size_t cols) {
  const std::vector<std::size_t> pivots = detail::rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace delaycode
