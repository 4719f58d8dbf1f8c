#pragma once

// Oriented knot diagrams as crossing triples (over, right, left).
//
// Cutting a c-crossing knot diagram at its undercrossings leaves c arcs.
// At each crossing `over` is the arc passing over, and `right` / `left` are
// the two under-arcs on either hand of the over-arc's direction of travel.

#include "qcolor/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace qcolor {

using ArcId = int;

struct CrossingTriple {
  ArcId over = 0;
  ArcId right = 0;
  ArcId left = 0;
  friend bool operator==(const CrossingTriple&, const CrossingTriple&) = default;
};

class OrientedDiagram {
 public:
  OrientedDiagram() = default;
  explicit OrientedDiagram(std::vector<CrossingTriple> crossings) : crossings_(std::move(crossings)) {}

  const std::vector<CrossingTriple>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int arc_count() const noexcept { return crossing_count(); }

  friend bool operator==(const OrientedDiagram&, const OrientedDiagram&) = default;

 private:
  std::vector<CrossingTriple> crossings_;
};

struct ValidationReport {
  bool ok = true;
  std::string invariant;               // short name of the violated invariant
  std::optional<std::size_t> crossing; // offending crossing index, if any
  std::string message;

  static ValidationReport failure(std::string inv, std::optional<std::size_t> x, std::string msg) {
    return {false, std::move(inv), x, std::move(msg)};
  }
};

namespace detail {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t components() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) n += find(i) == i;
    return n;
  }
  std::vector<std::size_t> parent;
};

}  // namespace detail

/// Checks: c >= 1; ids in range; right != left unless c = 1; every arc fills
/// exactly two under-slots (it ends at one undercrossing and starts at
/// another); the right-left pairs chain all arcs into one cycle; the
/// over/under graph is connected.
inline ValidationReport validate(const OrientedDiagram& d) {
  const auto& xs = d.crossings();
  const int c = d.crossing_count();
  if (c == 0) return ValidationReport::failure("nonempty", std::nullopt, "no crossings");

  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (ArcId id : {xs[i].over, xs[i].right, xs[i].left})
      if (id < 0 || id >= c)
        return ValidationReport::failure("id_range", i,
                                         "id out of range: " + std::to_string(id) + " at crossing " +
                                             std::to_string(i) + " (arc ids are 0.." +
                                             std::to_string(c - 1) + ")");
    if (c > 1 && xs[i].right == xs[i].left)
      return ValidationReport::failure("distinct_under", i,
                                       "right and left arcs coincide at crossing " + std::to_string(i));
  }

  std::vector<int> slots(c, 0);
  for (const auto& x : xs) {
    ++slots[x.right];
    ++slots[x.left];
  }
  for (int a = 0; a < c; ++a)
    if (slots[a] != 2) {
      std::size_t where = 0;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i].right == a || xs[i].left == a) {
          where = i;
          break;
        }
      return ValidationReport::failure(
          "under_slots", slots[a] ? std::optional<std::size_t>(where) : std::nullopt,
          "arc " + std::to_string(a) + " fills " + std::to_string(slots[a]) +
              " under-slots, expected 2");
    }

  detail::UnionFind under(c);
  for (const auto& x : xs) under.unite(x.right, x.left);
  if (under.components() != 1)
    return ValidationReport::failure("single_component", std::nullopt,
                                     "under-arcs do not form a single cycle (more than one component)");

  detail::UnionFind all(c);
  for (const auto& x : xs) {
    all.unite(x.right, x.left);
    all.unite(x.over, x.right);
  }
  if (all.components() != 1)
    return ValidationReport::failure("connected", std::nullopt, "diagram is not connected");
  return {};
}

inline void require_valid(const OrientedDiagram& d) {
  auto rep = validate(d);
  if (!rep.ok) throw ValidationError(rep.message);
}

// ---------------------------------------------------------------------------
// Triple text format: one `X over right left` per line, `#` comments.

inline std::string serialize_triples(const OrientedDiagram& d) {
  std::ostringstream os;
  for (const auto& x : d.crossings()) os << "X " << x.over << ' ' << x.right << ' ' << x.left << '\n';
  return os.str();
}

inline OrientedDiagram parse_triples(std::string_view text) {
  std::vector<CrossingTriple> xs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    std::string tag;
    if (!(is >> tag)) continue;
    if (tag != "X") throw ParseError("expected 'X', got '" + tag + "'", line_no);
    std::vector<long long> ids;
    std::string tok;
    while (is >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok.empty()) throw ParseError("not an arc id: '" + tok + "'", line_no);
      if (v < 0 || v > 1'000'000'000) throw ParseError("arc id out of range: " + tok, line_no);
      ids.push_back(v);
    }
    if (ids.size() != 3)
      throw ParseError("expected 3 arc ids, got " + std::to_string(ids.size()), line_no);
    xs.push_back({static_cast<ArcId>(ids[0]), static_cast<ArcId>(ids[1]), static_cast<ArcId>(ids[2])});
    if (end == text.size()) break;
  }
  if (xs.empty()) throw ParseError("no crossings");
  OrientedDiagram d(std::move(xs));
  require_valid(d);
  return d;
}

// ---------------------------------------------------------------------------
// Oriented PD codes.
//
// X[a,b,c,d] lists edge labels counterclockwise starting from the incoming
// under-edge a; c is the outgoing under-edge. Labels 1..2n increase by one
// along the orientation (mod 2n). The over-strand runs d->b when b follows d,
// otherwise b->d. Placing a to the south, b is east, c north and d west: an
// over-strand travelling d->b (eastward) has the incoming under-edge on its
// right, one travelling b->d has it on its left.

struct PDCrossing {
  int a, b, c, d;
};

inline std::vector<PDCrossing> parse_pd_crossings(std::string_view text) {
  std::vector<PDCrossing> out;
  std::size_t line_no = 1;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size()) {
      if (text[i] == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else if (text[i] == '\n') {
        ++line_no;
        ++i;
      } else if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' || text[i] == ';') {
        ++i;
      } else {
        break;
      }
    }
  };
  // Tolerate a PD[...] wrapper.
  skip_ws();
  bool wrapped = false;
  if (text.substr(i, 3) == "PD[") {
    i += 3;
    wrapped = true;
  }
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (wrapped && text[i] == ']') {
      ++i;
      skip_ws();
      if (i < text.size()) throw ParseError("trailing input after PD[...]", line_no);
      break;
    }
    if (text[i] != 'X') throw ParseError(std::string("expected 'X[', got '") + text[i] + "'", line_no);
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw ParseError("expected '[' after X", line_no);
    ++i;
    std::vector<int> labels;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated crossing", line_no);
      if (text[i] == ']') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(std::string("unexpected character '") + text[i] + "' in crossing", line_no);
      long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000'000) throw ParseError("edge label too large", line_no);
        ++i;
      }
      labels.push_back(static_cast<int>(v));
    }
    if (labels.size() != 4)
      throw ParseError("expected 4 edge labels, got " + std::to_string(labels.size()), line_no);
    out.push_back({labels[0], labels[1], labels[2], labels[3]});
  }
  if (out.empty()) throw ParseError("no crossings");
  return out;
}

inline OrientedDiagram diagram_from_pd(const std::vector<PDCrossing>& pd) {
  const int n = static_cast<int>(pd.size());
  const int edges = 2 * n;
  std::vector<int> count(edges + 1, 0);
  for (const auto& x : pd)
    for (int e : {x.a, x.b, x.c, x.d}) {
      if (e < 1 || e > edges)
        throw ValidationError("edge label " + std::to_string(e) + " outside 1.." + std::to_string(edges));
      ++count[e];
    }
  for (int e = 1; e <= edges; ++e)
    if (count[e] != 2)
      throw ValidationError("edge label " + std::to_string(e) + " appears " + std::to_string(count[e]) +
                            " times, expected exactly 2");

  detail::UnionFind comp(edges + 1);
  for (const auto& x : pd) {
    comp.unite(x.a, x.c);
    comp.unite(x.b, x.d);
  }
  std::size_t roots = 0;
  for (int e = 1; e <= edges; ++e) roots += comp.find(e) == static_cast<std::size_t>(e);
  if (roots != 1) throw ValidationError("knots only: PD code has " + std::to_string(roots) + " components");

  auto succ = [edges](int e) { return e % edges + 1; };
  std::vector<bool> starts_arc(edges + 1, false);
  for (std::size_t i = 0; i < pd.size(); ++i) {
    if (pd[i].c != succ(pd[i].a))
      throw ValidationError("inconsistent orientation at crossing " + std::to_string(i) +
                            ": outgoing under-edge must follow the incoming one");
    if (pd[i].b != succ(pd[i].d) && pd[i].d != succ(pd[i].b))
      throw ValidationError("inconsistent orientation at crossing " + std::to_string(i) +
                            ": over-edges are not consecutive");
    starts_arc[pd[i].c] = true;
  }

  // Arc ids follow the orientation, starting with the arc that contains edge 1.
  std::vector<int> arc_of(edges + 1, -1);
  int first_start = 1;
  while (!starts_arc[first_start]) first_start = succ(first_start);
  int arc = -1;
  for (int step = 0, e = first_start; step < edges; ++step, e = succ(e)) {
    if (starts_arc[e]) ++arc;
    arc_of[e] = arc;
  }
  const int shift = arc_of[1];
  for (int e = 1; e <= edges; ++e) arc_of[e] = (arc_of[e] - shift + n) % n;

  std::vector<CrossingTriple> xs;
  xs.reserve(pd.size());
  for (const auto& x : pd) {
    bool over_d_to_b = x.b == succ(x.d);
    ArcId in = arc_of[x.a], out = arc_of[x.c];
    CrossingTriple t{arc_of[x.b], over_d_to_b ? in : out, over_d_to_b ? out : in};
    xs.push_back(t);
  }
  OrientedDiagram d(std::move(xs));
  require_valid(d);
  return d;
}

inline OrientedDiagram parse_oriented_pd(std::string_view text) {
  return diagram_from_pd(parse_pd_crossings(text));
}

}  // namespace qcolor
