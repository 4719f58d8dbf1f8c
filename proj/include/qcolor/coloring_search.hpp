#pragma once

// Finite decision procedures built on the Alexander polynomial, and a
// backtracking engine for colorings by arbitrary finite quandles.

#include "qcolor/arith.hpp"
#include "qcolor/diagram.hpp"
#include "qcolor/laurent.hpp"
#include "qcolor/quandle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcolor {

// ---------------------------------------------------------------------------
// Linear colorability from the Alexander polynomial

struct LinearWitness {
  std::int64_t p;  // odd prime dividing n
  std::int64_t k;  // 1 <= k <= p-1 with delta(-k) = 0 mod p
  friend bool operator==(const LinearWitness&, const LinearWitness&) = default;
};

struct LinearColorabilityVerdict {
  bool colorable = false;
  std::optional<LinearWitness> witness;
};

namespace detail {

inline std::optional<std::int64_t> first_root(const LaurentPoly& delta, std::int64_t p) {
  for (std::int64_t k = 1; k <= p - 1; ++k)
    if (eval_mod(delta, -k, p) == 0) return k;
  return std::nullopt;
}

}  // namespace detail

/// Linear n-colorable iff delta(-k) = 0 mod p for some odd prime p | n and
/// some k in 1..p-1. Primes and k are scanned ascending; the first hit is
/// the witness.
inline LinearColorabilityVerdict is_linear_n_colorable(const LaurentPoly& delta, std::int64_t n) {
  if (n < 2) throw ParameterError("n must be >= 2");
  for (std::int64_t p : prime_divisors(n)) {
    if (p == 2) continue;
    if (auto k = detail::first_root(delta, p)) return {true, LinearWitness{p, *k}};
  }
  return {};
}

/// k and n = |delta(-k)| such that the knot is (Z_n, 1*k)-colorable.
struct BoundConstruction {
  std::int64_t k = 0;
  BigInt n_bound;
};

/// Smallest k with gcd(k, a_0) = 1 and k >= max_{1<=i<=d-1} |a_i / a_d| + 1.
/// Throws ParameterError for delta = 1 (no bound exists) and
/// std::logic_error if the resulting n is not odd, coprime to k and > k+1.
inline BoundConstruction colorability_bound(const LaurentPoly& delta) {
  LaurentPoly p = delta.normalized();
  const int d = p.high();
  if (p.is_zero() || d == 0)
    throw ParameterError("no bound exists for a trivial Alexander polynomial; knot may not be linearly colorable");
  const BigInt lead = abs(p.coeff(d));
  const BigInt a0 = p.coeff(0);
  // k >= x + 1 for rational x = |a_i|/|a_d|  <=>  k >= ceil(x) + 1.
  BigInt kmin = 1;
  for (int i = 1; i <= d - 1; ++i) {
    BigInt ai = abs(p.coeff(i));
    BigInt ceil_ratio = (ai + lead - 1) / lead;
    if (ceil_ratio + 1 > kmin) kmin = ceil_ratio + 1;
  }
  BigInt k = kmin;
  while (gcd(k, a0) != 1) ++k;
  BoundConstruction out;
  out.k = k.convert_to<std::int64_t>();
  out.n_bound = abs(p.eval(-k));
  if (out.n_bound % 2 == 0 || gcd(out.n_bound, k) != 1 || out.n_bound <= k + 1)
    throw std::logic_error("bound construction invariant violated");
  return out;
}

struct LinearMinOrder {
  std::int64_t n = 0;
  LinearWitness witness{};
};

/// Least n >= 3 for which the knot is linear n-colorable, scanning
/// n = 3, 4, 5, ... and stopping no later than colorability_bound().n_bound.
inline LinearMinOrder minimal_linear_order(const LaurentPoly& delta) {
  const BoundConstruction bound = colorability_bound(delta);
  std::map<std::int64_t, std::optional<std::int64_t>> root_cache;
  auto root = [&](std::int64_t p) {
    auto it = root_cache.find(p);
    if (it == root_cache.end()) it = root_cache.emplace(p, detail::first_root(delta, p)).first;
    return it->second;
  };
  for (std::int64_t n = 3; n <= bound.n_bound; ++n) {
    for (std::int64_t p : prime_divisors(n)) {
      if (p == 2) continue;
      if (auto k = root(p)) return {n, {p, *k}};
    }
  }
  throw std::logic_error("no linear coloring found below the proven bound");
}

// ---------------------------------------------------------------------------
// Generic quandle colorings: psi(right) * psi(over) = psi(left).

using QuandleColoring = std::vector<Element>;

inline bool is_quandle_coloring(const OrientedDiagram& d, const FiniteQuandle& q, std::span<const Element> psi) {
  if (static_cast<int>(psi.size()) != d.arc_count()) return false;
  for (Element v : psi)
    if (v < 0 || v >= q.order()) return false;
  for (const auto& x : d.crossings())
    if (q.op(psi[x.right], psi[x.over]) != psi[x.left]) return false;
  return true;
}

struct SearchLimits {
  int max_order = 16;
  int max_arcs = 4096;
  std::uint64_t max_nodes = 200'000'000;
};

namespace detail {

class QuandleColoringSearch {
 public:
  using Visitor = std::function<bool(const QuandleColoring&)>;  // return false to stop

  QuandleColoringSearch(const OrientedDiagram& d, const FiniteQuandle& q, SearchLimits lim)
      : d_(d), q_(q), lim_(lim), n_(d.arc_count()), psi_(n_, -1), touching_(n_) {
    require_valid(d);
    if (q.order() > lim.max_order)
      throw ScaleError("quandle order " + std::to_string(q.order()) + " above cap " + std::to_string(lim.max_order));
    if (n_ > lim.max_arcs)
      throw ScaleError("diagram has " + std::to_string(n_) + " arcs, cap is " + std::to_string(lim.max_arcs));
    auto rep = verify_quandle_axioms(q);
    if (!rep.ok()) throw ParameterError("table is not a quandle");

    const int ord = q.order();
    inverse_.assign(ord, std::vector<Element>(ord));
    for (int a = 0; a < ord; ++a)
      for (int b = 0; b < ord; ++b) inverse_[q.op(a, b)][b] = a;

    const auto& xs = d.crossings();
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (ArcId a : {xs[i].over, xs[i].right, xs[i].left}) touching_[a].push_back(i);
    for (auto& v : touching_) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    // Breadth-first arc order from arc 0 through crossing adjacency.
    std::vector<bool> seen(n_, false);
    std::queue<ArcId> bfs;
    bfs.push(0);
    seen[0] = true;
    while (!bfs.empty()) {
      ArcId a = bfs.front();
      bfs.pop();
      order_.push_back(a);
      for (std::size_t xi : touching_[a])
        for (ArcId b : {xs[xi].over, xs[xi].right, xs[xi].left})
          if (!seen[b]) {
            seen[b] = true;
            bfs.push(b);
          }
    }
  }

  void run(const Visitor& visit) {
    visit_ = &visit;
    stopped_ = false;
    recurse(0);
  }

 private:
  void recurse(std::size_t pos) {
    if (stopped_) return;
    if (++nodes_ > lim_.max_nodes) throw ScaleError("coloring search exceeded node budget");
    while (pos < order_.size() && psi_[order_[pos]] >= 0) ++pos;
    if (pos == order_.size()) {
      if (!(*visit_)(psi_)) stopped_ = true;
      return;
    }
    const ArcId arc = order_[pos];
    for (Element v = 0; v < q_.order() && !stopped_; ++v) {
      std::vector<ArcId> trail;
      if (assign_and_propagate(arc, v, trail)) recurse(pos + 1);
      for (ArcId a : trail) psi_[a] = -1;
    }
  }

  bool assign_and_propagate(ArcId arc, Element v, std::vector<ArcId>& trail) {
    std::vector<ArcId> work{arc};
    psi_[arc] = v;
    trail.push_back(arc);
    const auto& xs = d_.crossings();
    while (!work.empty()) {
      ArcId a = work.back();
      work.pop_back();
      for (std::size_t xi : touching_[a]) {
        const auto& x = xs[xi];
        Element o = psi_[x.over], r = psi_[x.right], l = psi_[x.left];
        if (o >= 0 && r >= 0) {
          Element want = q_.op(r, o);
          if (l >= 0) {
            if (l != want) return false;
          } else {
            psi_[x.left] = want;
            trail.push_back(x.left);
            work.push_back(x.left);
          }
        } else if (o >= 0 && l >= 0) {
          Element want = inverse_[l][o];
          psi_[x.right] = want;
          trail.push_back(x.right);
          work.push_back(x.right);
        }
      }
    }
    return true;
  }

  const OrientedDiagram& d_;
  const FiniteQuandle& q_;
  SearchLimits lim_;
  int n_;
  QuandleColoring psi_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<std::vector<Element>> inverse_;
  std::vector<ArcId> order_;
  const Visitor* visit_ = nullptr;
  bool stopped_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Number of maps arcs -> Q with psi(right) * psi(over) = psi(left) at every
/// crossing. Always >= |Q| because constant maps color everything.
inline BigInt quandle_coloring_count(const OrientedDiagram& d, const FiniteQuandle& q, SearchLimits lim = {}) {
  BigInt count = 0;
  detail::QuandleColoringSearch s(d, q, lim);
  s.run([&](const QuandleColoring&) {
    ++count;
    return true;
  });
  return count;
}

/// Up to `limit` colorings, in search order.
inline std::vector<QuandleColoring> enumerate_quandle_colorings(const OrientedDiagram& d, const FiniteQuandle& q,
                                                                std::size_t limit, SearchLimits lim = {}) {
  std::vector<QuandleColoring> out;
  if (limit == 0) return out;
  detail::QuandleColoringSearch s(d, q, lim);
  s.run([&](const QuandleColoring& c) {
    out.push_back(c);
    return out.size() < limit;
  });
  return out;
}

/// First non-constant coloring, if any.
inline std::optional<QuandleColoring> find_nontrivial_quandle_coloring(const OrientedDiagram& d,
                                                                        const FiniteQuandle& q,
                                                                        SearchLimits lim = {}) {
  std::optional<QuandleColoring> found;
  detail::QuandleColoringSearch s(d, q, lim);
  s.run([&](const QuandleColoring& c) {
    for (Element v : c)
      if (v != c[0]) {
        found = c;
        return false;
      }
    return true;
  });
  return found;
}

inline bool is_quandle_colorable(const OrientedDiagram& d, const FiniteQuandle& q, SearchLimits lim = {}) {
  return find_nontrivial_quandle_coloring(d, q, lim).has_value();
}

/// Exhaustive count over all |Q|^c maps; independent oracle for small inputs.
inline BigInt brute_force_quandle_coloring_count(const OrientedDiagram& d, const FiniteQuandle& q,
                                                 std::uint64_t max_assignments = 50'000'000) {
  require_valid(d);
  const int c = d.arc_count();
  const int ord = q.order();
  BigInt total = 1;
  for (int i = 0; i < c; ++i) total *= ord;
  if (total > max_assignments) throw ScaleError("brute force over " + total.str() + " assignments");
  std::vector<Element> psi(c, 0);
  BigInt count = 0;
  while (true) {
    if (is_quandle_coloring(d, q, psi)) ++count;
    int i = 0;
    while (i < c && ++psi[i] == ord) psi[i++] = 0;
    if (i == c) break;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Minimal quandle order over the built-in catalog

struct QuandleMinOrder {
  std::optional<int> order;  // nullopt: no catalog quandle of order <= 7 colors it
  std::string witness;       // catalog name of the first coloring quandle at `order`
  /// Colorability of every catalog quandle, in catalog order.
  std::vector<std::pair<std::string, bool>> colorable;

  bool geq8() const { return !order.has_value(); }
};

inline constexpr const char* kGeq8Verdict = "≥ 8 (relative to the order-≤7 catalog)";

/// Evaluates every catalog quandle (orders 3..7, including order 6) and
/// returns the smallest order with a non-trivial coloring. Throws
/// std::logic_error if a cross-check fails: an order-6 hit without a
/// (Z3,1*1) hit, or disagreement inside the pairs (Z5,1*2)/(Z5,1*3),
/// (Z7,1*2)/(Z7,1*4), (Z7,1*3)/(Z7,1*5).
inline QuandleMinOrder minimal_quandle_order(const OrientedDiagram& d, SearchLimits lim = {}) {
  QuandleMinOrder res;
  std::map<std::string, bool> hit;
  for (const auto& q : full_catalog()) {
    bool c = is_quandle_colorable(d, q, lim);
    hit[q.name()] = c;
    res.colorable.emplace_back(q.name(), c);
    if (c && !res.order) {
      res.order = q.order();
      res.witness = q.name();
    }
  }
  if ((hit["QS6"] || hit["QS6p"]) && !hit["Z3_1x1"])
    throw std::logic_error("order-6 coloring without a 3-coloring");
  if (hit["Z5_1x2"] != hit["Z5_1x3"] || hit["Z7_1x2"] != hit["Z7_1x4"] || hit["Z7_1x3"] != hit["Z7_1x5"])
    throw std::logic_error("inverse-pair colorability mismatch");
  if (res.order == 6) throw std::logic_error("minimal quandle order resolved to 6");
  return res;
}

}  // namespace qcolor
