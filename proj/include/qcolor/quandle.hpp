#pragma once

// Finite quandles as operation tables.
//
// Elements are 0..order-1 and table[a][b] = a * b. Linear quandles
// (Z_n, l*k) use a * b = ((l + k) b - l a) k^-1 mod n.

#include "qcolor/arith.hpp"
#include "qcolor/error.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qcolor {

using Element = int;

class FiniteQuandle {
 public:
  using Table = std::vector<std::vector<Element>>;

  FiniteQuandle() = default;
  /// Stores the table as given; checking is left to verify_quandle_axioms.
  FiniteQuandle(Table table, std::string name = {})
      : table_(std::move(table)), name_(std::move(name)) {}

  int order() const noexcept { return static_cast<int>(table_.size()); }
  Element op(Element a, Element b) const { return table_[a][b]; }
  const Table& table() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const FiniteQuandle& x, const FiniteQuandle& y) {
    return x.table_ == y.table_;
  }

 private:
  Table table_;
  std::string name_;
};

/// Validated (n, l, k) with gcd(n, l) = gcd(n, k) = 1.
class LinearQuandleParams {
 public:
  LinearQuandleParams(std::int64_t n, std::int64_t ell, std::int64_t k) : n_(n), ell_(ell), k_(k) {
    if (n < 2) throw ParameterError("modulus n must be >= 2, got " + std::to_string(n));
    if (ell < 1 || k < 1) throw ParameterError("l and k must be positive integers");
    auto li = inverse_mod(ell, n);
    auto ki = inverse_mod(k, n);
    if (!li) throw ParameterError("gcd(n, l) != 1 for n=" + std::to_string(n) + ", l=" + std::to_string(ell));
    if (!ki) throw ParameterError("gcd(n, k) != 1 for n=" + std::to_string(n) + ", k=" + std::to_string(k));
    ell_inv_ = *li;
    k_inv_ = *ki;
  }

  std::int64_t n() const noexcept { return n_; }
  std::int64_t ell() const noexcept { return ell_; }
  std::int64_t k() const noexcept { return k_; }
  std::int64_t ell_inv() const noexcept { return ell_inv_; }
  std::int64_t k_inv() const noexcept { return k_inv_; }

  /// The equivalent (n, 1, l^-1 k mod n) form. Reduction to 0 is impossible
  /// since both factors are units.
  LinearQuandleParams canonical() const {
    return LinearQuandleParams(n_, 1, mul_mod(ell_inv_, k_, n_));
  }

  /// Catalog-style identifier, e.g. "Z5_1x2".
  std::string id() const {
    return "Z" + std::to_string(n_) + "_" + std::to_string(ell_) + "x" + std::to_string(k_);
  }

  friend bool operator==(const LinearQuandleParams&, const LinearQuandleParams&) = default;

 private:
  std::int64_t n_, ell_, k_;
  std::int64_t ell_inv_ = 0, k_inv_ = 0;
};

inline FiniteQuandle make_linear_quandle(const LinearQuandleParams& p) {
  const std::int64_t n = p.n();
  FiniteQuandle::Table t(n, std::vector<Element>(n));
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) {
      std::int64_t v = mod(mod(p.ell() + p.k(), n) * b - mod(p.ell(), n) * a, n);
      t[a][b] = static_cast<Element>(mul_mod(v, p.k_inv(), n));
    }
  return FiniteQuandle(std::move(t), p.id());
}

// ---------------------------------------------------------------------------
// Axioms

struct AxiomFailure {
  int axiom;                 // 1, 2 or 3
  std::vector<Element> witness;
};

/// Result of verify_quandle_axioms. A malformed table (wrong shape or entry
/// out of range) is reported through `malformed` and no axiom is evaluated.
struct AxiomReport {
  std::optional<std::string> malformed;
  std::array<bool, 3> holds{false, false, false};
  std::vector<AxiomFailure> failures;

  bool well_formed() const { return !malformed.has_value(); }
  bool ok() const { return well_formed() && holds[0] && holds[1] && holds[2]; }
};

/// Witnesses: axiom 1 -> {a}; axiom 2 -> {b, a, a'} with a < a' and
/// a*b = a'*b; axiom 3 -> {a, b, c}. Each is the first violation in
/// lexicographic order of the listed tuple.
inline AxiomReport verify_quandle_axioms(const FiniteQuandle& q) {
  AxiomReport rep;
  const int n = q.order();
  if (n == 0) {
    rep.malformed = "empty table";
    return rep;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(q.table()[a].size()) != n) {
      rep.malformed = "row " + std::to_string(a) + " has length " +
                      std::to_string(q.table()[a].size()) + ", expected " + std::to_string(n);
      return rep;
    }
    for (int b = 0; b < n; ++b)
      if (q.op(a, b) < 0 || q.op(a, b) >= n) {
        rep.malformed = "entry (" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                        std::to_string(q.op(a, b)) + " out of range";
        return rep;
      }
  }

  rep.holds = {true, true, true};
  for (int a = 0; a < n; ++a)
    if (q.op(a, a) != a) {
      rep.holds[0] = false;
      rep.failures.push_back({1, {a}});
      break;
    }

  for (int b = 0; b < n && rep.holds[1]; ++b) {
    std::vector<int> seen(n, -1);
    for (int a = 0; a < n; ++a) {
      int v = q.op(a, b);
      if (seen[v] >= 0) {
        rep.holds[1] = false;
        rep.failures.push_back({2, {b, seen[v], a}});
        break;
      }
      seen[v] = a;
    }
  }

  for (int a = 0; a < n && rep.holds[2]; ++a)
    for (int b = 0; b < n && rep.holds[2]; ++b)
      for (int c = 0; c < n; ++c)
        if (q.op(q.op(a, b), c) != q.op(q.op(a, c), q.op(b, c))) {
          rep.holds[2] = false;
          rep.failures.push_back({3, {a, b, c}});
          break;
        }
  return rep;
}

// ---------------------------------------------------------------------------
// Orbits of linear quandles

struct OrbitDecomposition {
  std::int64_t orbit_count = 0;
  std::vector<std::vector<Element>> orbits;
};

inline OrbitDecomposition orbit_decomposition(const LinearQuandleParams& p) {
  OrbitDecomposition od;
  const std::int64_t d = std::gcd(p.n(), p.ell() + p.k());
  od.orbit_count = d;
  for (std::int64_t i = 0; i < d; ++i) {
    std::vector<Element> orbit;
    for (std::int64_t m = 0; m < p.n() / d; ++m) orbit.push_back(static_cast<Element>(m * d + i));
    od.orbits.push_back(std::move(orbit));
  }
  return od;
}

/// Number of orbits of Q under the maps a -> a*b. Columns are bijections, so
/// these are the connected components of the graph a -- a*b. Works for any
/// table, linear or not.
inline int orbit_count(const FiniteQuandle& q) {
  const int n = q.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int count = n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = find(a), y = find(q.op(a, b));
      if (x != y) {
        parent[x] = y;
        --count;
      }
    }
  return count;
}

// ---------------------------------------------------------------------------
// Homomorphisms and isomorphism

/// True iff l1 k1^-1 == l2 k2^-1 (mod n). Sufficient for isomorphism, never
/// evidence of non-isomorphism.
inline bool linear_isomorphic_sufficient(const LinearQuandleParams& p1, const LinearQuandleParams& p2) {
  if (p1.n() != p2.n()) throw ParameterError("modulus mismatch");
  const std::int64_t n = p1.n();
  return mul_mod(p1.ell(), p1.k_inv(), n) == mul_mod(p2.ell(), p2.k_inv(), n);
}

inline bool is_homomorphism(std::span<const Element> f, const FiniteQuandle& q1, const FiniteQuandle& q2) {
  if (static_cast<int>(f.size()) != q1.order())
    throw ParameterError("map is not total on the source quandle");
  for (Element v : f)
    if (v < 0 || v >= q2.order()) throw ParameterError("map value outside the target quandle");
  for (int a = 0; a < q1.order(); ++a)
    for (int b = 0; b < q1.order(); ++b)
      if (f[q1.op(a, b)] != q2.op(f[a], f[b])) return false;
  return true;
}

namespace detail {

// Partial bijection search. After each choice the map is closed under the
// operation (f(a*b) := f(a)*'f(b)), so f is effectively fixed on a
// generating set and the rest is forced.
class IsoSearch {
 public:
  IsoSearch(const FiniteQuandle& a, const FiniteQuandle& b)
      : q1_(a), q2_(b), n_(a.order()), f_(n_, -1), used_(n_, false) {}

  bool run() { return extend(); }

 private:
  bool extend() {
    int next = -1;
    for (int x = 0; x < n_; ++x)
      if (f_[x] < 0) {
        next = x;
        break;
      }
    if (next < 0) return true;
    for (int y = 0; y < n_; ++y) {
      if (used_[y]) continue;
      std::vector<int> trail;
      if (assign(next, y, trail) && close(trail) && extend()) return true;
      undo(trail);
    }
    return false;
  }

  bool assign(int x, int y, std::vector<int>& trail) {
    if (f_[x] >= 0) return f_[x] == y;
    if (used_[y]) return false;
    f_[x] = y;
    used_[y] = true;
    trail.push_back(x);
    return true;
  }

  bool close(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n_; ++a) {
        if (f_[a] < 0) continue;
        for (int b = 0; b < n_; ++b) {
          if (f_[b] < 0) continue;
          int x = q1_.op(a, b), y = q2_.op(f_[a], f_[b]);
          if (f_[x] >= 0) {
            if (f_[x] != y) return false;
          } else {
            if (!assign(x, y, trail)) return false;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (int x : trail) {
      used_[f_[x]] = false;
      f_[x] = -1;
    }
  }

  const FiniteQuandle& q1_;
  const FiniteQuandle& q2_;
  int n_;
  std::vector<int> f_;
  std::vector<bool> used_;
};

}  // namespace detail

inline constexpr int kMaxIsomorphismOrder = 10;

/// Exhaustive isomorphism test. Order mismatch returns false; orders above
/// kMaxIsomorphismOrder raise ScaleError.
inline bool brute_force_isomorphic(const FiniteQuandle& q1, const FiniteQuandle& q2) {
  if (q1.order() != q2.order()) return false;
  if (q1.order() > kMaxIsomorphismOrder)
    throw ScaleError("isomorphism search capped at order " + std::to_string(kMaxIsomorphismOrder));
  return detail::IsoSearch(q1, q2).run();
}

// ---------------------------------------------------------------------------
// Catalog

/// Z2[t]/(t^2+t+1) with 0, 1, t, 1+t encoded as 0..3 (bit 0 = constant
/// term, bit 1 = coefficient of t); a * b = t a + (1 + t) b.
inline FiniteQuandle make_tetrahedron_quandle() {
  auto times_t = [](int x) {
    int c0 = x & 1, c1 = (x >> 1) & 1;
    // (c0 + c1 t) t = c1 + (c0 + c1) t, using t^2 = t + 1.
    return c1 | ((c0 ^ c1) << 1);
  };
  FiniteQuandle::Table t(4, std::vector<Element>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = times_t(a) ^ (b ^ times_t(b));
  return FiniteQuandle(std::move(t), "S4");
}

namespace detail {

inline FiniteQuandle from_one_based(const std::array<std::array<int, 6>, 6>& m, std::string name) {
  FiniteQuandle::Table t(6, std::vector<Element>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) t[i][j] = m[i][j] - 1;
  return FiniteQuandle(std::move(t), std::move(name));
}

// Operation matrices as published, 1-based, (i, j) entry = i * j.
inline constexpr std::array<std::array<int, 6>, 6> kQS6OneBased{{
    {1, 1, 5, 6, 3, 4},
    {2, 2, 6, 5, 4, 3},
    {5, 6, 3, 3, 1, 2},
    {6, 5, 4, 4, 2, 1},
    {3, 4, 1, 2, 5, 5},
    {4, 3, 2, 1, 6, 6},
}};

inline constexpr std::array<std::array<int, 6>, 6> kQS6PrimeOneBased{{
    {1, 1, 6, 5, 3, 4},
    {2, 2, 5, 6, 4, 3},
    {5, 6, 3, 3, 2, 1},
    {6, 5, 4, 4, 1, 2},
    {4, 3, 1, 2, 5, 5},
    {3, 4, 2, 1, 6, 6},
}};

}  // namespace detail

inline FiniteQuandle make_qs6() { return detail::from_one_based(detail::kQS6OneBased, "QS6"); }
inline FiniteQuandle make_qs6_prime() { return detail::from_one_based(detail::kQS6PrimeOneBased, "QS6p"); }

/// Indecomposable quandles of the given order (3..7), in catalog order.
inline std::vector<FiniteQuandle> catalog_indecomposable(int order) {
  std::vector<FiniteQuandle> out;
  switch (order) {
    case 3:
      out.push_back(make_linear_quandle({3, 1, 1}));
      break;
    case 4:
      out.push_back(make_tetrahedron_quandle());
      break;
    case 5:
      for (int k = 1; k <= 3; ++k) out.push_back(make_linear_quandle({5, 1, k}));
      break;
    case 6:
      out.push_back(make_qs6());
      out.push_back(make_qs6_prime());
      break;
    case 7:
      for (int k = 1; k <= 5; ++k) out.push_back(make_linear_quandle({7, 1, k}));
      break;
    default:
      throw ParameterError("catalog covers orders 3..7, got " + std::to_string(order));
  }
  return out;
}

/// All twelve catalog quandles, ascending order.
inline std::vector<FiniteQuandle> full_catalog() {
  std::vector<FiniteQuandle> out;
  for (int ord = 3; ord <= 7; ++ord)
    for (auto& q : catalog_indecomposable(ord)) out.push_back(std::move(q));
  return out;
}

inline std::optional<FiniteQuandle> catalog_lookup(const std::string& name) {
  for (auto& q : full_catalog())
    if (q.name() == name) return q;
  return std::nullopt;
}

/// "Z7_1x3" -> "(Z7,1*3)"; other names pass through.
inline std::string display_name(const std::string& name) {
  if (name.size() > 1 && name[0] == 'Z') {
    auto us = name.find('_');
    auto x = name.find('x', us == std::string::npos ? 0 : us);
    if (us != std::string::npos && x != std::string::npos)
      return "(" + name.substr(0, us) + "," + name.substr(us + 1, x - us - 1) + "*" + name.substr(x + 1) + ")";
  }
  if (name == "QS6p") return "QS6'";
  return name;
}

}  // namespace qcolor
