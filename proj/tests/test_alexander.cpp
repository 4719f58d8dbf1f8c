#include "corpus.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qcolor;

namespace {

const LaurentPoly kT = LaurentPoly::t();
const LaurentPoly kOne = LaurentPoly::constant(1);

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = mod(b, m);
  for (; e > 0; e >>= 1, b = mul_mod(b, b, m))
    if (e & 1) r = mul_mod(r, b, m);
  return r;
}

}  // namespace

TEST(Laurent, ArithmeticAndPrinting) {
  LaurentPoly p{1, -1, 1};
  EXPECT_EQ(p.to_string(), "t^2 - t + 1");
  EXPECT_EQ((LaurentPoly{-1, 3, -1}).to_string(), "-t^2 + 3t - 1");
  EXPECT_EQ(LaurentPoly{}.to_string(), "0");
  EXPECT_EQ(kOne.to_string(), "1");
  EXPECT_EQ((LaurentPoly{0, 0, 5}).to_string(), "5t^2");
  EXPECT_EQ((LaurentPoly({1, 2}, -1)).to_string(), "2 + t^-1");

  EXPECT_EQ((kT + kOne) * (kT - kOne), LaurentPoly({-1, 0, 1}));
  EXPECT_EQ(-(kT - kOne), kOne - kT);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(divexact((kT + kOne) * p, kT + kOne), p);
  EXPECT_THROW(divexact(p, kT + kOne), std::domain_error);

  EXPECT_EQ(p.span(), 2);
  EXPECT_EQ(p.eval_at_one(), 1);
  EXPECT_EQ(p.eval(-1), 3);
  EXPECT_EQ(p.eval(-2), 7);
}

TEST(Laurent, Normalization) {
  // -t^3 * (t^2 - t + 1)
  LaurentPoly raw({-1, 1, -1}, 3);
  EXPECT_EQ(raw.normalized(), (LaurentPoly{1, -1, 1}));
  LaurentPoly shifted({1, -3, 1}, -4);
  EXPECT_EQ(shifted.normalized(), (LaurentPoly{-1, 3, -1}));
  EXPECT_TRUE(is_knot_normal_form(LaurentPoly{1, -1, 1}));
  EXPECT_FALSE(is_knot_normal_form(LaurentPoly{1, 1}));
  EXPECT_FALSE(is_knot_normal_form(LaurentPoly{2, -3, 1, 1}));
}

TEST(EvalMod, Examples) {
  LaurentPoly tre{1, -1, 1};
  EXPECT_EQ(eval_mod(tre, -1, 3), 0);
  EXPECT_EQ(eval_mod(tre, -1, 5), 3);
  for (std::int64_t m = 2; m < 40; ++m) EXPECT_EQ(eval_mod(twist_alexander(17), 1, m), 1 % m);
  EXPECT_EQ(eval_mod(corpus::delta_10_124(), -21, 31), 0);
  EXPECT_EQ(eval_mod(corpus::delta_10_124(), -3, 31), 0);
}

TEST(EvalMod, MatchesExactEvaluation) {
  std::mt19937 rng(11);
  for (int c = 3; c <= 30; ++c) {
    auto delta = twist_alexander(c);
    for (int trial = 0; trial < 20; ++trial) {
      std::int64_t x = static_cast<std::int64_t>(rng() % 2001) - 1000;
      std::int64_t m = 2 + rng() % 1000;
      EXPECT_EQ(eval_mod(delta, x, m), mod(delta.eval(x), m));
    }
  }
}

TEST(RelationMatrixT, Examples) {
  auto m = relation_matrix_t(corpus::unknot1());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_TRUE(m[0][0].is_zero());

  m = relation_matrix_t(corpus::trefoil());
  std::vector<LaurentPoly> base{kT - kOne, -kT, kOne};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(m[i][j], base[(j - i + 3) % 3]) << i << "," << j;
}

TEST(RelationMatrixT, RowsSumToZero) {
  for (const auto& [name, d] : corpus::knots()) {
    for (const auto& row : relation_matrix_t(d)) {
      LaurentPoly s;
      for (const auto& e : row) s = s + e;
      EXPECT_TRUE(s.is_zero()) << name;
    }
  }
}

TEST(RelationMatrixT, SpecializesToLinearMatrix) {
  for (const auto& [name, d] : corpus::knots()) {
    auto mt = relation_matrix_t(d);
    for (int n : {3, 5, 7, 11, 31})
      for (int k = 1; k < n; k += 2) {
        auto mz = relation_matrix(d, 1, k);
        for (std::size_t i = 0; i < mt.size(); ++i)
          for (std::size_t j = 0; j < mt.size(); ++j)
            ASSERT_EQ(mod(mt[i][j].eval(-k), n), mod(mz[i][j], n)) << name;
      }
  }
}

TEST(Alexander, Examples) {
  EXPECT_EQ(alexander_polynomial(corpus::trefoil()), (LaurentPoly{1, -1, 1}));
  EXPECT_EQ(alexander_polynomial(corpus::unknot1()), kOne);
  EXPECT_EQ(alexander_polynomial(twist_diagram(4)), (LaurentPoly{-1, 3, -1}));
  EXPECT_EQ(alexander_polynomial(corpus::figure8()), (LaurentPoly{-1, 3, -1}));
  EXPECT_EQ(alexander_polynomial(corpus::trefoil_left()), (LaurentPoly{1, -1, 1}));
  EXPECT_EQ(alexander_polynomial(corpus::trefoil_kinked()), (LaurentPoly{1, -1, 1}));
  EXPECT_EQ(alexander_polynomial(corpus::knot_10_124()), corpus::delta_10_124());
  EXPECT_EQ(alexander_polynomial(OrientedDiagram({{0, 0, 1}, {1, 1, 0}})), kOne);
  EXPECT_THROW(alexander_polynomial(OrientedDiagram{}), ValidationError);
}

TEST(Alexander, NormalFormOnCorpus) {
  for (const auto& [name, d] : corpus::knots()) {
    auto delta = alexander_polynomial(d);
    EXPECT_TRUE(is_knot_normal_form(delta)) << name;
    EXPECT_EQ(delta.eval_at_one(), 1);
    EXPECT_EQ(delta.low(), 0);
    EXPECT_EQ(delta.span() % 2, 0);
    for (int i = 0; i <= delta.span(); ++i) EXPECT_EQ(delta.coeff(i), delta.coeff(delta.span() - i)) << name;
    EXPECT_EQ(abs(delta.coeff(delta.span() / 2)) % 2, 1) << name;
  }
}

TEST(Alexander, EveryMinorGivesTheSamePolynomial) {
  for (const auto& [name, d] : corpus::small_diagrams()) {
    if (d.arc_count() < 2) continue;
    auto delta = alexander_polynomial(d);
    for (int r = 0; r < d.arc_count(); ++r)
      for (int c = 0; c < d.arc_count(); ++c) EXPECT_EQ(alexander_from_minor(d, r, c), delta) << name << " " << r << "," << c;
  }
}

TEST(Alexander, BareissMatchesCofactor) {
  std::vector<OrientedDiagram> ds;
  for (const auto& [name, d] : corpus::small_diagrams()) ds.push_back(d);
  for (int c = 7; c <= 9; ++c) ds.push_back(twist_diagram(c));
  for (const auto& d : ds) {
    auto m = relation_matrix_t(d);
    EXPECT_TRUE(determinant_bareiss(m).is_zero());
    if (d.arc_count() < 2) continue;
    auto minor = delete_row_col(m, 0, 0);
    EXPECT_EQ(determinant_bareiss(minor), determinant_cofactor(minor));
  }
}

TEST(Alexander, DeterminantOfSmallMatrices) {
  PolyMatrix empty;
  EXPECT_EQ(determinant_bareiss(empty), kOne);
  EXPECT_EQ(determinant_cofactor(empty), kOne);
  PolyMatrix m{{kT, kOne}, {kOne, kT}};
  EXPECT_EQ(determinant_bareiss(m), kT * kT - kOne);
  PolyMatrix pivot{{LaurentPoly{}, kOne}, {kOne, kT}};
  EXPECT_EQ(determinant_bareiss(pivot), -kOne);
}

TEST(Alexander, PalindromicIdentityModP) {
  for (const auto& [name, d] : corpus::knots()) {
    auto delta = alexander_polynomial(d);
    const int deg = delta.span();
    for (std::int64_t p : {3, 5, 7, 11, 13, 31})
      for (std::int64_t k = 1; k < p; ++k) {
        std::int64_t kinv = *inverse_mod(k, p);
        std::int64_t lhs = eval_mod(delta, -kinv, p);
        std::int64_t rhs = mul_mod(pow_mod(-kinv, deg, p), eval_mod(delta, -k, p), p);
        EXPECT_EQ(lhs, rhs) << name << " p=" << p << " k=" << k;
      }
  }
}
