#pragma once

// Alexander polynomial of a knot diagram from its crossing-relation matrix
// over Z[t, t^-1].

#include "qcolor/diagram.hpp"
#include "qcolor/laurent.hpp"

#include <cstddef>
#include <vector>

namespace qcolor {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Row x for crossing (o, r, l): +1 at column r, (t - 1) at column o, -t at
/// column l, with coinciding columns summed. Substituting t = -k gives the
/// linear crossing relation phi(r) + k phi(l) - (k + 1) phi(o) = 0.
inline PolyMatrix relation_matrix_t(const OrientedDiagram& d) {
  require_valid(d);
  const std::size_t c = d.crossing_count();
  PolyMatrix m(c, std::vector<LaurentPoly>(c));
  const LaurentPoly one = LaurentPoly::constant(1);
  const LaurentPoly t = LaurentPoly::t();
  for (std::size_t i = 0; i < c; ++i) {
    const auto& x = d.crossings()[i];
    m[i][x.right] += one;
    m[i][x.over] += t - one;
    m[i][x.left] -= t;
  }
  return m;
}

/// Fraction-free (Bareiss) determinant over Z[t, t^-1] with row pivoting.
/// The empty matrix has determinant 1.
inline LaurentPoly determinant_bareiss(PolyMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return LaurentPoly::constant(1);
  LaurentPoly prev = LaurentPoly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool lead_zero = a[i][k].is_zero();
      for (std::size_t j = k + 1; j < n; ++j) {
        if (lead_zero) {
          if (a[i][j].is_zero()) continue;
          a[i][j] = divexact(a[k][k] * a[i][j], prev);
        } else {
          a[i][j] = divexact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        }
      }
      a[i][k] = LaurentPoly();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// Laplace expansion along the first row. Exponential; kept as an
/// independent check for small matrices.
inline LaurentPoly determinant_cofactor(const PolyMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return LaurentPoly::constant(1);
  if (n == 1) return a[0][0];
  LaurentPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    PolyMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t jj = 0; jj < n; ++jj)
        if (jj != j) minor[i - 1].push_back(a[i][jj]);
    LaurentPoly term = a[0][j] * determinant_cofactor(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

inline PolyMatrix delete_row_col(const PolyMatrix& m, std::size_t row, std::size_t col) {
  PolyMatrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<LaurentPoly> r;
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (j != col) r.push_back(m[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

/// Normalized first minor with the given row and column removed.
inline LaurentPoly alexander_from_minor(const OrientedDiagram& d, std::size_t row, std::size_t col) {
  auto m = relation_matrix_t(d);
  LaurentPoly det = determinant_bareiss(delete_row_col(m, row, col));
  if (det.is_zero()) throw ValidationError("first minor vanishes identically; not a knot diagram");
  return det.normalized();
}

/// Normalized Alexander polynomial: lowest term at t^0 and value 1 at t = 1.
/// For a knot any single first minor equals the polynomial up to +-t^i, so
/// the last row and column are dropped.
inline LaurentPoly alexander_polynomial(const OrientedDiagram& d) {
  const std::size_t c = d.crossing_count();
  if (c == 0) throw ValidationError("no crossings");
  return alexander_from_minor(d, c - 1, c - 1);
}

}  // namespace qcolor
