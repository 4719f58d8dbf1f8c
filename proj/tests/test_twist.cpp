#include "corpus.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace qcolor;

TEST(TwistDiagram, SmallCases) {
  auto d3 = twist_diagram(3);
  EXPECT_EQ(d3.crossing_count(), 3);
  EXPECT_EQ(alexander_polynomial(d3), (LaurentPoly{1, -1, 1}));
  auto d4 = twist_diagram(4);
  EXPECT_EQ(d4.crossing_count(), 4);
  EXPECT_EQ(alexander_polynomial(d4), (LaurentPoly{-1, 3, -1}));
  EXPECT_THROW(twist_diagram(2), ParameterError);
}

TEST(TwistDiagram, ValidAndMatchesClosedForm) {
  for (int c = 3; c <= 40; ++c) {
    auto d = twist_diagram(c);
    EXPECT_EQ(d.crossing_count(), c);
    EXPECT_TRUE(validate(d).ok) << c;
    EXPECT_EQ(alexander_polynomial(d), twist_alexander(c)) << c;
  }
}

TEST(TwistDiagram, PlatClosureRejectsLinks) {
  EXPECT_THROW(diagram_from_plat({{1, 1}, {1, 1}}), ValidationError);
  EXPECT_THROW(diagram_from_plat({}), ValidationError);
  EXPECT_THROW(diagram_from_plat({{3, 1}}), ValidationError);
}

TEST(TwistAlexander, ClosedForms) {
  EXPECT_EQ(twist_alexander(4), (LaurentPoly{-1, 3, -1}));
  EXPECT_EQ(twist_alexander(5), (LaurentPoly{2, -3, 2}));
  EXPECT_EQ(twist_alexander(3), (LaurentPoly{1, -1, 1}));
  for (int c = 3; c <= 100; ++c) {
    EXPECT_EQ(twist_alexander(c).eval_at_one(), 1);
    EXPECT_TRUE(is_knot_normal_form(twist_alexander(c)));
  }
  EXPECT_THROW(twist_alexander(2), ParameterError);
}

TEST(TwistLinear, Examples) {
  auto v = twist_linear_colorable(4, 5, 1);
  EXPECT_TRUE(v.colorable);
  EXPECT_TRUE(v.iff_guaranteed);
  EXPECT_TRUE(twist_linear_colorable(6, 5, 2).colorable);
  EXPECT_FALSE(twist_linear_colorable(5, 3, 1).colorable);
  EXPECT_THROW(twist_linear_colorable(5, 5, 4), ParameterError);
  EXPECT_THROW(twist_linear_colorable(5, 6, 2), ParameterError);
  EXPECT_THROW(twist_linear_colorable(2, 5, 1), ParameterError);
  EXPECT_FALSE(twist_linear_colorable(9, 15, 1).iff_guaranteed);
}

TEST(TwistLinear, AgreesWithMatrixForPrimes) {
  for (int c = 3; c <= 40; ++c) {
    auto d = twist_diagram(c);
    for (std::int64_t n : {3, 5, 7, 11, 13}) {
      for (std::int64_t k = 1; k <= n - 2; ++k)
        EXPECT_EQ(twist_linear_colorable(c, n, k).colorable, is_colorable(d, {n, 1, k})) << c << " " << n << " " << k;
    }
  }
}

TEST(TwistLinear, IfDirectionForCompositeModuli) {
  for (int c = 3; c <= 40; ++c) {
    auto d = twist_diagram(c);
    for (std::int64_t n : {9, 15, 21, 25, 35})
      for (std::int64_t k = 1; k < n; ++k) {
        if (std::gcd(n, k) != 1 || std::gcd(n, k + 1) != 1) continue;
        auto v = twist_linear_colorable(c, n, k);
        EXPECT_FALSE(v.iff_guaranteed);
        if (v.colorable) EXPECT_TRUE(is_colorable(d, {n, 1, k})) << c << " " << n << " " << k;
      }
  }
}

TEST(TwistS4, Examples) {
  EXPECT_TRUE(twist_s4_colorable(3));
  EXPECT_TRUE(twist_s4_colorable(4));
  EXPECT_FALSE(twist_s4_colorable(5));
  auto s4 = make_tetrahedron_quandle();
  for (int c = 3; c <= 40; ++c) EXPECT_EQ(twist_s4_colorable(c), is_quandle_colorable(twist_diagram(c), s4)) << c;
}

TEST(TwistClassifier, Golden) {
  auto v = twist_min_quandle_order(3);
  EXPECT_EQ(v.q_value, 3);
  EXPECT_EQ(v.witness, "Z3_1x1");
  v = twist_min_quandle_order(4);
  EXPECT_EQ(v.q_value, 4);
  EXPECT_EQ(v.witness, "S4");
  v = twist_min_quandle_order(14);
  EXPECT_EQ(v.q_value, 5);
  EXPECT_EQ(v.witness, "Z5_1x1");
  v = twist_min_quandle_order(5);
  EXPECT_EQ(v.q_value, 7);
  EXPECT_EQ(v.witness, "Z7_1x1");
  EXPECT_THROW(twist_min_quandle_order(2), ParameterError);

  std::vector<std::optional<int>> expected{3, 4, 7, 3, 4, 4, 3, std::nullopt, 4, 3, std::nullopt, 5};
  for (int c = 3; c <= 14; ++c) EXPECT_EQ(twist_min_quandle_order(c).q_value, expected[c - 3]) << c;
}

TEST(TwistClassifier, MatchesSearchOverCatalog) {
  for (int c = 3; c <= 40; ++c) {
    auto v = twist_min_quandle_order(c);
    auto r = minimal_quandle_order(twist_diagram(c));
    EXPECT_EQ(v.q_value, r.order) << c;
    EXPECT_EQ(v.witness, r.witness) << c;
  }
}

TEST(TwistClassifier, ResidueTablesMatchLiteralFamilies) {
  const auto tables = expand_twist_residues();
  ASSERT_EQ(tables.size(), 2u);
  EXPECT_EQ(tables[0].modulus, 60);
  EXPECT_EQ(tables[1].modulus, 420);
  const auto& cases = twist_family_cases();
  for (int c = 3; c <= 2000; ++c)
    for (std::size_t i = 0; i < 2; ++i) {
      auto it = tables[i].residues.find(c % tables[i].modulus);
      std::optional<std::string> from_table;
      if (it != tables[i].residues.end()) from_table = it->second;
      ASSERT_EQ(from_table, twist_family_literal(cases[i], c)) << c;
    }
}

TEST(TwistClassifier, ExactlyOneCaseFires) {
  const auto tables = expand_twist_residues();
  for (int c = 3; c <= 5000; ++c) {
    int fired = 0;
    fired += c % 3 == 0;
    fired += c % 12 == 4 || c % 12 == 7 || c % 12 == 8 || c % 12 == 11;
    for (const auto& t : tables) fired += t.residues.count(c % t.modulus) > 0;
    ASSERT_LE(fired, 1) << c;
    auto v = twist_min_quandle_order(c);
    EXPECT_EQ(v.geq8(), fired == 0) << c;
    EXPECT_GE(v.case_index, 1);
    EXPECT_LE(v.case_index, 5);
  }
}
