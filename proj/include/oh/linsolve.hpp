#pragma once

#include <optional>
#include <vector>

#include "oh/scalar.hpp"

namespace oh {

/// One solution of A y = b by Gaussian elimination (free unknowns set to 0),
/// or nullopt when the system is inconsistent. A is rows x cols, row-major.
template <Field K>
std::optional<std::vector<K>> solve_linear(std::vector<std::vector<K>> A, std::vector<K> b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(A[p][c])) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    const K inv = K(1) / A[r][c];
    for (std::size_t j = c; j < cols; ++j) A[r][j] = A[r][j] * inv;
    b[r] = b[r] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(A[i][c])) continue;
      const K f = A[i][c];
      for (std::size_t j = c; j < cols; ++j) A[i][j] = A[i][j] - f * A[r][j];
      b[i] = b[i] - f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!is_zero(b[i])) return std::nullopt;
  std::vector<K> y(cols, K(0));
  for (std::size_t i = 0; i < r; ++i) y[static_cast<std::size_t>(pivot_col[i])] = b[i];
  return y;
}

}  // namespace oh
