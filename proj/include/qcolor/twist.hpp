#pragma once

// Twist knots: c - 2 half-twists closed off by a two-crossing clasp.
// Diagram generation, closed-form Alexander polynomials, and the
// residue-class classification of colorability and minimal quandle order.

#include "qcolor/arith.hpp"
#include "qcolor/diagram.hpp"
#include "qcolor/error.hpp"
#include "qcolor/laurent.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcolor {

// ---------------------------------------------------------------------------
// 4-plat closures

/// sigma_{pos+1}^{sign}: a crossing between strand positions pos and pos+1.
struct PlatCrossing {
  int pos;
  int sign;
};

/// Closes a 4-strand braid word with caps joining positions (0,1), (2,3) on
/// top and cups joining the same pairs at the bottom. For a positive
/// crossing the strand running from position pos (top) to pos+1 (bottom)
/// passes over. Throws ValidationError if the closure has several components.
inline OrientedDiagram diagram_from_plat(const std::vector<PlatCrossing>& word) {
  const int levels = static_cast<int>(word.size());
  if (levels == 0) throw ValidationError("empty plat word");
  for (const auto& w : word)
    if (w.pos < 0 || w.pos > 2 || (w.sign != 1 && w.sign != -1))
      throw ValidationError("plat crossing outside 4 strands");

  struct Visit {
    int crossing;
    bool over;
    int dx, dy;  // direction of travel; y points up
  };
  std::vector<Visit> visits;
  auto swap_pos = [](const PlatCrossing& w, int p) { return p == w.pos ? p + 1 : p == w.pos + 1 ? w.pos : p; };

  int pos = 0;
  do {
    for (int j = 0; j < levels; ++j) {  // downward pass
      const auto& w = word[j];
      if (pos != w.pos && pos != w.pos + 1) continue;
      int np = swap_pos(w, pos);
      bool over = w.sign > 0 ? pos == w.pos : pos == w.pos + 1;
      visits.push_back({j, over, np - pos, -1});
      pos = np;
    }
    pos ^= 1;  // cup
    for (int j = levels - 1; j >= 0; --j) {  // upward pass
      const auto& w = word[j];
      if (pos != w.pos && pos != w.pos + 1) continue;
      int np = swap_pos(w, pos);
      bool over = w.sign > 0 ? np == w.pos : np == w.pos + 1;
      visits.push_back({j, over, np - pos, 1});
      pos = np;
    }
    pos ^= 1;  // cap
    if (visits.size() > 2 * word.size()) throw std::logic_error("plat traversal did not close");
  } while (pos != 0);

  if (visits.size() != 2 * word.size()) throw ValidationError("plat closure is not a knot");

  // Start right after an under-passage so arc 0 begins there.
  const std::size_t total = visits.size();
  std::size_t last_under = 0;
  for (std::size_t i = 0; i < total; ++i)
    if (!visits[i].over) last_under = i;
  struct Slot {
    int over = -1, in = -1;
    int vx = 0, vy = 0, ux = 0, uy = 0;
  };
  std::vector<Slot> slots(levels);
  int arc = 0;
  for (std::size_t s = 0; s < total; ++s) {
    const Visit& v = visits[(last_under + 1 + s) % total];
    Slot& sl = slots[v.crossing];
    if (v.over) {
      sl.over = arc;
      sl.vx = v.dx;
      sl.vy = v.dy;
    } else {
      sl.in = arc;
      sl.ux = v.dx;
      sl.uy = v.dy;
      ++arc;
    }
  }
  std::vector<CrossingTriple> xs;
  for (const auto& sl : slots) {
    const int out = (sl.in + 1) % arc;
    // The incoming under-segment lies at -u; it is on the right of the
    // over-strand when it has positive component along (vy, -vx).
    const bool in_right = (-sl.ux) * sl.vy + (-sl.uy) * (-sl.vx) > 0;
    xs.push_back({sl.over, in_right ? sl.in : out, in_right ? out : sl.in});
  }
  OrientedDiagram d(std::move(xs));
  require_valid(d);
  return d;
}

// ---------------------------------------------------------------------------
// Twist knots

inline void require_twist_crossings(int c) {
  if (c < 3) throw ParameterError("twist knots need c >= 3, got " + std::to_string(c));
}

/// The plat closure of sigma_2^(c-2) sigma_1^-1 sigma_2: a twist region of
/// c - 2 crossings followed by a clasp, realized with continued fraction
/// [c-2, 1, 1] = [c-2, 2].
inline OrientedDiagram twist_diagram(int c) {
  require_twist_crossings(c);
  std::vector<PlatCrossing> word(c - 2, PlatCrossing{1, 1});
  word.push_back({0, -1});
  word.push_back({1, 1});
  return diagram_from_plat(word);
}

inline LaurentPoly twist_alexander(int c) {
  require_twist_crossings(c);
  if (c % 2 == 0) {
    long long h = (c - 2) / 2;
    return LaurentPoly({-h, c - 1LL, -h});
  }
  long long h = (c - 1) / 2;
  return LaurentPoly({h, -(c - 2LL), h});
}

struct TwistLinearVerdict {
  bool colorable = false;
  /// True only for prime n, where the residue condition is an iff; for
  /// composite n only the "if" direction is established.
  bool iff_guaranteed = false;
};

/// Even c = 2nm + 2p colors iff p = (k+1)^-2 (k^2+k+1) mod n; odd
/// c = 2nm + 2p + 1 iff p = (k+1)^-2 k mod n.
inline TwistLinearVerdict twist_linear_colorable(int c, std::int64_t n, std::int64_t k) {
  require_twist_crossings(c);
  if (n < 2) throw ParameterError("n must be >= 2");
  if (k < 1) throw ParameterError("k must be positive");
  if (!inverse_mod(k, n)) throw ParameterError("gcd(n, k) != 1");
  if (mod(k + 1, n) == 0) throw ParameterError("gcd(n, k+1) = n");
  auto kp1_inv = inverse_mod(k + 1, n);
  if (!kp1_inv) throw ParameterError("k+1 is not invertible modulo composite n");
  const std::int64_t inv2 = mul_mod(*kp1_inv, *kp1_inv, n);
  std::int64_t target, p;
  if (c % 2 == 0) {
    target = mul_mod(inv2, mod(k * k + k + 1, n), n);
    p = mod(c / 2, n);
  } else {
    target = mul_mod(inv2, mod(k, n), n);
    p = mod((c - 1) / 2, n);
  }
  return {p == target, is_prime(n)};
}

/// Tetrahedron-quandle colorable iff c = 4m - 1 or 4m.
inline bool twist_s4_colorable(int c) {
  require_twist_crossings(c);
  return c % 4 == 0 || c % 4 == 3;
}

// ---------------------------------------------------------------------------
// Minimal quandle order

struct TwistVerdict {
  std::optional<int> q_value;  // nullopt means >= 8
  std::string witness;         // catalog name, empty for >= 8
  int case_index = 5;          // which of the five residue cases fired (1..5)

  bool geq8() const { return !q_value.has_value(); }
  friend bool operator==(const TwistVerdict&, const TwistVerdict&) = default;
};

/// One (r, s) family of the order-5 and order-7 cases:
/// c = base * (blocks * period + r) + s.
struct ResidueFamily {
  std::vector<int> r_values;
  std::vector<int> s_values;
  const char* witness;
};

struct TwistCase {
  int order;
  int base;    // 10 for order 5, 14 for order 7
  int period;  // 6 and 30
  std::vector<ResidueFamily> families;
};

inline const std::array<TwistCase, 2>& twist_family_cases() {
  static const std::array<TwistCase, 2> cases{{
      {5, 10, 6,
       {
           {{1, 3}, {4}, "Z5_1x1"},
           {{1, 3}, {7}, "Z5_1x2"},
           {{2, 4}, {6}, "Z5_1x2"},
           {{2, 4}, {9}, "Z5_1x1"},
       }},
      {7, 14, 30,
       {
           {{0, 4, 10, 12, 22, 24}, {5}, "Z7_1x1"},
           {{1, 3, 13, 15, 21, 25}, {11}, "Z7_1x3"},
           {{4, 8, 14, 16, 26, 28}, {6}, "Z7_1x3"},
           {{5, 7, 13, 17, 23, 25}, {0, 3}, "Z7_1x2"},
           {{5, 7, 17, 19, 25, 29}, {12}, "Z7_1x1"},
       }},
  }};
  return cases;
}

/// Residue tables: modulus (60 or 420) and residue -> witness quandle name.
struct TwistResidueTable {
  int order;
  int modulus;
  std::map<int, std::string> residues;
};

/// Expands every (r, s) family into residues base*r + s modulo base*period.
inline std::vector<TwistResidueTable> expand_twist_residues() {
  std::vector<TwistResidueTable> out;
  for (const auto& tc : twist_family_cases()) {
    TwistResidueTable t{tc.order, tc.base * tc.period, {}};
    for (const auto& fam : tc.families)
      for (int r : fam.r_values)
        for (int s : fam.s_values) {
          auto [it, inserted] = t.residues.emplace((tc.base * r + s) % t.modulus, fam.witness);
          if (!inserted && it->second != fam.witness) throw std::logic_error("overlapping residue families");
        }
    out.push_back(std::move(t));
  }
  return out;
}

/// The order-5 / order-7 conditions evaluated by direct search for the
/// block count: exists blocks >= 0 with c = base*(blocks*period + r) + s.
/// Returns the witness of the first matching family.
inline std::optional<std::string> twist_family_literal(const TwistCase& tc, int c) {
  for (const auto& fam : tc.families)
    for (int r : fam.r_values)
      for (int s : fam.s_values)
        for (int blocks = 0; tc.base * (blocks * tc.period + r) + s <= c; ++blocks)
          if (tc.base * (blocks * tc.period + r) + s == c) return std::string(fam.witness);
  return std::nullopt;
}

inline TwistVerdict twist_min_quandle_order(int c) {
  require_twist_crossings(c);
  if (c % 3 == 0) return {3, "Z3_1x1", 1};
  switch (c % 12) {
    case 4:
    case 7:
    case 8:
    case 11:
      return {4, "S4", 2};
  }
  static const std::vector<TwistResidueTable> tables = expand_twist_residues();
  int case_index = 3;
  for (const auto& t : tables) {
    auto it = t.residues.find(c % t.modulus);
    if (it != t.residues.end()) return {t.order, it->second, case_index};
    ++case_index;
  }
  return {std::nullopt, "", 5};
}

}  // namespace qcolor
