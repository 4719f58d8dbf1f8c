#pragma once

// (Z_n, l*k)-colorings: maps arcs -> Z_n with
//   l phi(right) + k phi(left) = (l + k) phi(over)
// at every crossing. Counted exactly through the Smith normal form of the
// integer relation matrix.

#include "qcolor/arith.hpp"
#include "qcolor/diagram.hpp"
#include "qcolor/laurent.hpp"
#include "qcolor/quandle.hpp"
#include "qcolor/smith.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qcolor {

struct LinearColoring {
  std::vector<std::int64_t> assignment;  // indexed by arc id
  LinearQuandleParams params;
};

/// Row per crossing: +l at right, +k at left, -(l+k) at over, coincidences
/// summed. Entries are unreduced; every row sums to 0.
inline IntMatrix relation_matrix(const OrientedDiagram& d, std::int64_t ell, std::int64_t k) {
  require_valid(d);
  const std::size_t c = d.crossing_count();
  IntMatrix m(c, std::vector<BigInt>(c, 0));
  for (std::size_t i = 0; i < c; ++i) {
    const auto& x = d.crossings()[i];
    m[i][x.right] += ell;
    m[i][x.left] += k;
    m[i][x.over] -= ell + k;
  }
  return m;
}

inline IntMatrix relation_matrix(const OrientedDiagram& d, const LinearQuandleParams& p) {
  return relation_matrix(d, p.ell(), p.k());
}

/// Number of x in Z_n^c with M x = 0 given the elementary divisors of M:
/// prod gcd(d_i, n), with gcd(0, n) = n and one factor n per missing column.
inline BigInt solution_count(const SNFResult& snf, std::size_t columns, std::int64_t n) {
  BigInt count = 1;
  for (const auto& d : snf.divisors) count *= d == 0 ? BigInt(n) : BigInt(gcd(d, BigInt(n)));
  for (std::size_t i = snf.divisors.size(); i < columns; ++i) count *= n;
  return count;
}

/// Precomputed SNF for one (diagram, l, k); counts for any modulus coprime
/// to l and k are then a product of gcds.
class LinearColoringEngine {
 public:
  LinearColoringEngine(const OrientedDiagram& d, std::int64_t ell, std::int64_t k)
      : ell_(ell), k_(k), arcs_(d.crossing_count()), snf_(smith_normal_form(relation_matrix(d, ell, k))) {}

  const SNFResult& snf() const noexcept { return snf_; }

  BigInt count(std::int64_t n) const {
    LinearQuandleParams p(n, ell_, k_);  // validates coprimality
    return solution_count(snf_, arcs_, n);
  }
  bool colorable(std::int64_t n) const { return count(n) > n; }

 private:
  std::int64_t ell_, k_;
  std::size_t arcs_;
  SNFResult snf_;
};

inline BigInt coloring_count(const OrientedDiagram& d, const LinearQuandleParams& p) {
  return LinearColoringEngine(d, p.ell(), p.k()).count(p.n());
}

/// True iff a non-constant coloring exists (the count exceeds the n constants).
inline bool is_colorable(const OrientedDiagram& d, const LinearQuandleParams& p) {
  return coloring_count(d, p) > p.n();
}

/// Exhaustive count over all n^c assignments. Exported so tests and tools
/// can use it as an independent oracle.
inline BigInt brute_force_coloring_count(const OrientedDiagram& d, const LinearQuandleParams& p,
                                         std::uint64_t max_assignments = 50'000'000) {
  require_valid(d);
  const int c = d.crossing_count();
  const std::int64_t n = p.n();
  BigInt total = 1;
  for (int i = 0; i < c; ++i) total *= n;
  if (total > max_assignments) throw ScaleError("brute force over " + total.str() + " assignments");
  const std::int64_t ell = mod(p.ell(), n), k = mod(p.k(), n), lk = mod(p.ell() + p.k(), n);
  std::vector<std::int64_t> phi(c, 0);
  BigInt count = 0;
  while (true) {
    bool ok = true;
    for (const auto& x : d.crossings())
      if ((ell * phi[x.right] + k * phi[x.left] - lk * phi[x.over]) % n != 0) {
        ok = false;
        break;
      }
    if (ok) ++count;
    int i = 0;
    while (i < c && ++phi[i] == n) phi[i++] = 0;
    if (i == c) break;
  }
  return count;
}

inline bool satisfies_crossing_conditions(const OrientedDiagram& d, const LinearColoring& col) {
  const auto& p = col.params;
  const std::int64_t n = p.n();
  if (static_cast<int>(col.assignment.size()) != d.crossing_count()) return false;
  for (const auto& x : d.crossings()) {
    std::int64_t v = mul_mod(p.ell(), col.assignment[x.right], n) + mul_mod(p.k(), col.assignment[x.left], n) -
                     mul_mod(p.ell() + p.k(), col.assignment[x.over], n);
    if (mod(v, n) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Alexander-polynomial criterion

struct AlexanderVerdict {
  bool colorable = false;
  std::optional<std::int64_t> prime;    // smallest witness prime p | n
  std::optional<std::int64_t> residue;  // -l^-1 k mod p, a root of delta mod p
};

/// Colorable iff some odd prime p | n has delta(-l^-1 k) = 0 mod p.
inline AlexanderVerdict colorable_by_alexander(const LaurentPoly& delta, const LinearQuandleParams& params) {
  for (std::int64_t p : prime_divisors(params.n())) {
    if (p == 2) continue;
    auto li = inverse_mod(params.ell(), p);
    std::int64_t x = mod(-mul_mod(*li, params.k(), p), p);
    if (eval_mod(delta, x, p) == 0) return {true, p, x};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Explicit colorings

/// Lists colorings from the solution module: with U M V = D, solutions are
/// V y where y_i runs over multiples of n / gcd(d_i, n). Throws ScaleError if
/// the count exceeds `limit` unless `truncate` is set, in which case the
/// first `limit` colorings are returned.
inline std::vector<LinearColoring> enumerate_colorings(const OrientedDiagram& d, const LinearQuandleParams& p,
                                                       std::size_t limit, bool truncate = false) {
  const std::size_t c = d.crossing_count();
  const std::int64_t n = p.n();
  SNFResult snf = smith_normal_form(relation_matrix(d, p), true);
  const BigInt total = solution_count(snf, c, n);
  if (total > limit && !truncate)
    throw ScaleError("coloring count " + total.str() + " exceeds limit " + std::to_string(limit));

  // Generator step and range for each y_i.
  std::vector<std::int64_t> step(c), range(c);
  for (std::size_t i = 0; i < c; ++i) {
    std::int64_t g = n;
    if (i < snf.divisors.size() && snf.divisors[i] != 0) g = BigInt(gcd(snf.divisors[i], BigInt(n))).convert_to<std::int64_t>();
    step[i] = n / g;
    range[i] = g;
  }
  const IntMatrix& v = *snf.column_transform;
  std::vector<std::vector<std::int64_t>> vmod(c, std::vector<std::int64_t>(c));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) vmod[i][j] = mod(v[i][j], n);

  std::vector<LinearColoring> out;
  std::vector<std::int64_t> idx(c, 0);
  while (out.size() < limit) {
    std::vector<std::int64_t> x(c, 0);
    for (std::size_t j = 0; j < c; ++j) {
      if (idx[j] == 0) continue;
      std::int64_t yj = mod(idx[j] * step[j], n);
      for (std::size_t i = 0; i < c; ++i) x[i] = mod(x[i] + mul_mod(vmod[i][j], yj, n), n);
    }
    out.push_back({std::move(x), p});
    std::size_t j = 0;
    while (j < c && ++idx[j] == range[j]) idx[j++] = 0;
    if (j == c) break;
  }
  return out;
}

}  // namespace qcolor
