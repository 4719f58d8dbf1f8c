#pragma once

// Smith normal form of integer matrices by unimodular row and column
// operations over exact integers.

#include "qcolor/arith.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace qcolor {

using IntMatrix = std::vector<std::vector<BigInt>>;

struct SNFResult {
  /// Elementary divisors d_1 | d_2 | ... , nonnegative, zeros last. One per
  /// min(rows, cols) diagonal position.
  std::vector<BigInt> divisors;
  /// Column transform V with U M V = diag(divisors); present when requested.
  std::optional<IntMatrix> column_transform;

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& d : divisors) r += d != 0;
    return r;
  }
};

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// Pivot rule: the nonzero entry of least absolute value in the trailing
/// submatrix, ties broken by lowest (row, column) index.
inline SNFResult smith_normal_form(IntMatrix a, bool want_transform = false) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  IntMatrix v;
  if (want_transform) v = identity_matrix(cols);

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
    if (want_transform)
      for (auto& row : v) std::swap(row[x], row[y]);
  };
  // col[y] -= q * col[x]
  auto sub_col = [&](std::size_t y, std::size_t x, const BigInt& q) {
    for (auto& row : a) row[y] -= q * row[x];
    if (want_transform)
      for (auto& row : v) row[y] -= q * row[x];
  };

  const std::size_t diag = std::min(rows, cols);
  bool exhausted = false;
  for (std::size_t t = 0; t < diag && !exhausted; ++t) {
    while (true) {
      // Locate the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          BigInt m = abs(a[i][j]);
          if (!piv || m < best) {
            piv = {i, j};
            best = m;
          }
        }
      if (!piv) {
        exhausted = true;
        break;
      }
      std::swap(a[t], a[piv->first]);
      swap_cols(t, piv->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        sub_col(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into row t and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (std::size_t j = t; j < cols; ++j) a[t][j] = -a[t][j];
    }
  }
  SNFResult res;
  res.divisors.resize(diag);
  for (std::size_t t = 0; t < diag; ++t) res.divisors[t] = a[t][t];
  if (want_transform) res.column_transform = std::move(v);
  return res;
}

}  // namespace qcolor
