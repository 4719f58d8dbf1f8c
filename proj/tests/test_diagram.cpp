#include "corpus.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace qcolor;

namespace {

// Checks the two-slot and connectivity invariants directly.
bool slots_and_connectivity_hold(const OrientedDiagram& d) {
  const int c = d.arc_count();
  std::vector<int> slots(c, 0);
  std::vector<std::vector<int>> adj(c);
  for (const auto& x : d.crossings()) {
    ++slots[x.right];
    ++slots[x.left];
    adj[x.right].push_back(x.left);
    adj[x.left].push_back(x.right);
    adj[x.over].push_back(x.right);
    adj[x.right].push_back(x.over);
  }
  for (int s : slots)
    if (s != 2) return false;
  std::vector<bool> seen(c, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b : adj[a])
      if (!seen[b]) {
        seen[b] = true;
        ++reached;
        stack.push_back(b);
      }
  }
  return reached == c;
}

}  // namespace

TEST(Validate, Trefoil) {
  auto d = corpus::trefoil();
  EXPECT_TRUE(validate(d).ok);
  EXPECT_TRUE(slots_and_connectivity_hold(d));
  EXPECT_EQ(d.crossing_count(), 3);
  EXPECT_EQ(d.arc_count(), 3);
}

TEST(Validate, DegenerateUnknots) {
  EXPECT_TRUE(validate(corpus::unknot1()).ok);
  EXPECT_TRUE(validate(OrientedDiagram({{0, 0, 1}, {1, 1, 0}})).ok);
}

TEST(Validate, IdOutOfRange) {
  auto rep = validate(OrientedDiagram({{0, 2, 1}, {1, 0, 2}, {3, 1, 0}}));
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.invariant, "id_range");
  EXPECT_EQ(rep.crossing, 2u);
  EXPECT_NE(rep.message.find("id out of range"), std::string::npos);
}

TEST(Validate, OtherViolations) {
  EXPECT_EQ(validate(OrientedDiagram{}).invariant, "nonempty");

  auto rep = validate(OrientedDiagram({{0, 1, 1}, {1, 0, 1}}));
  EXPECT_EQ(rep.invariant, "distinct_under");
  EXPECT_EQ(rep.crossing, 0u);

  rep = validate(OrientedDiagram({{0, 2, 1}, {1, 0, 2}, {2, 1, 1}}));
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.invariant, "distinct_under");
  EXPECT_EQ(rep.crossing, 2u);

  rep = validate(OrientedDiagram({{0, 0, 1}, {1, 0, 2}, {2, 1, 0}}));
  EXPECT_EQ(rep.invariant, "under_slots");

  // Two separate one-crossing kinks: the under-arcs form two cycles.
  rep = validate(OrientedDiagram({{0, 0, 1}, {1, 1, 0}, {2, 2, 3}, {3, 3, 2}}));
  EXPECT_EQ(rep.invariant, "single_component");

  EXPECT_THROW(require_valid(OrientedDiagram({{5, 0, 0}})), ValidationError);
}

TEST(ParseTriples, Trefoil) {
  auto d = parse_triples("X 0 2 1\nX 1 0 2\nX 2 1 0");
  EXPECT_EQ(d, corpus::trefoil());
  EXPECT_TRUE(validate(d).ok);
}

TEST(ParseTriples, CommentsAndBlankLines) {
  auto d = parse_triples("# trefoil\n\nX 0 2 1   # first\n  X 1 0 2\r\nX 2 1 0\n\n");
  EXPECT_EQ(d, corpus::trefoil());
}

TEST(ParseTriples, Errors) {
  try {
    parse_triples("");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("no crossings"), std::string::npos);
  }
  try {
    parse_triples("X 0 2");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_NE(std::string(e.what()).find("expected 3 arc ids"), std::string::npos);
  }
  try {
    parse_triples("X 0 2 1\n# c\nY 1 0 2\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_triples("X 0 a 1"), ParseError);
  EXPECT_THROW(parse_triples("X 0 2 1\nX 1 0 2\nX 2 1 7"), ValidationError);
}

TEST(ParseTriples, RoundTrip) {
  std::vector<OrientedDiagram> ds{corpus::trefoil(), corpus::unknot1(), corpus::figure8(), corpus::knot_10_124()};
  for (int c = 3; c <= 20; ++c) ds.push_back(twist_diagram(c));
  for (const auto& d : ds) EXPECT_EQ(parse_triples(serialize_triples(d)), d);
}

TEST(ParseOrientedPd, LeftTrefoil) {
  auto d = parse_oriented_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]");
  EXPECT_EQ(d.crossing_count(), 3);
  EXPECT_TRUE(validate(d).ok);
  // All 27 assignments checked against the crossing condition of (Z3,1*1).
  int count = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        int psi[3] = {a, b, c};
        bool ok = true;
        for (const auto& x : d.crossings()) ok = ok && (psi[x.right] + psi[x.left] - 2 * psi[x.over]) % 3 == 0;
        count += ok;
      }
  EXPECT_EQ(count, 9);
}

TEST(ParseOrientedPd, FigureEight) {
  auto d = parse_oriented_pd("X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]");
  EXPECT_EQ(d.crossing_count(), 4);
  EXPECT_TRUE(validate(d).ok);
  EXPECT_TRUE(slots_and_connectivity_hold(d));
}

TEST(ParseOrientedPd, SignConventionFixesRightAndLeft) {
  // X[1,4,2,5]: edge 5 follows edge 4, so the over-strand runs b -> d and
  // the incoming under-arc is on the left. Pinning the exact triples locks
  // the convention.
  auto d = parse_oriented_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]");
  EXPECT_EQ(d.crossings()[0], (CrossingTriple{2, 1, 0}));
  EXPECT_EQ(d.crossings()[1], (CrossingTriple{0, 2, 1}));
  EXPECT_EQ(d.crossings()[2], (CrossingTriple{1, 0, 2}));
}

TEST(ParseOrientedPd, Wrappers) {
  auto plain = parse_oriented_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  EXPECT_EQ(parse_oriented_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]"), plain);
  EXPECT_EQ(parse_oriented_pd("# comment\nX[1, 4, 2, 5],\nX[3,6,4,1]\nX[5,2,6,3]\n"), plain);
}

TEST(ParseOrientedPd, Errors) {
  try {
    parse_oriented_pd("X[1,3,2,4], X[3,1,4,2]");
    FAIL() << "expected knots-only rejection";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("knots only"), std::string::npos);
  }
  EXPECT_THROW(parse_oriented_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,6]"), ValidationError);
  EXPECT_THROW(parse_oriented_pd("X[1,4,3,5], X[2,6,4,1], X[5,2,6,3]"), ValidationError);
  EXPECT_THROW(parse_oriented_pd("X[1,4,2], X[3,6,4,1]"), ParseError);
  EXPECT_THROW(parse_oriented_pd(""), ParseError);
  EXPECT_THROW(parse_oriented_pd("X(1,4,2,5)"), ParseError);
}

TEST(ParseOrientedPd, OutputAlwaysValid) {
  for (const char* file : {"trefoil_left.pd", "figure8.pd", "10_124.pd"}) {
    auto d = parse_oriented_pd(corpus::read_data(file));
    EXPECT_TRUE(validate(d).ok) << file;
    EXPECT_TRUE(slots_and_connectivity_hold(d)) << file;
  }
}

TEST(Diagram, MirrorSwapsEllAndK) {
  // Swapping right and left at every crossing mirrors the diagram; counts
  // for (n, l, k) on the mirror equal counts for (n, k, l) on the original.
  auto mirror = [](const OrientedDiagram& d) {
    std::vector<CrossingTriple> xs;
    for (auto x : d.crossings()) xs.push_back({x.over, x.left, x.right});
    return OrientedDiagram(xs);
  };
  for (const auto& [name, d] : corpus::small_diagrams()) {
    auto m = mirror(d);
    EXPECT_TRUE(validate(m).ok) << name;
    for (int n : {3, 5, 7})
      for (int ell = 1; ell < n; ++ell)
        for (int k = 1; k < n; ++k)
          EXPECT_EQ(coloring_count(m, {n, ell, k}), coloring_count(d, {n, k, ell})) << name;
  }
}

TEST(Diagram, RandomRelabelingKeepsValidity) {
  std::mt19937 rng(7);
  for (int c = 3; c <= 12; ++c) {
    auto d = twist_diagram(c);
    std::vector<int> perm(c);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<CrossingTriple> xs;
    for (auto x : d.crossings()) xs.push_back({perm[x.over], perm[x.right], perm[x.left]});
    std::shuffle(xs.begin(), xs.end(), rng);
    OrientedDiagram r(xs);
    EXPECT_TRUE(validate(r).ok);
    EXPECT_EQ(alexander_polynomial(r), alexander_polynomial(d));
  }
}
