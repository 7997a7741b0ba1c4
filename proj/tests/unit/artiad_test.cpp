#include <gtest/gtest.h>

#include "jacobi49/artiad.hpp"

using namespace jacobi49;

TEST(CubicTest, ThreeRootsForPrimesOneModSeven) {
  for (Int p = 29; p < 2000; p += 14) {
    if (is_prime(p)) {
      EXPECT_EQ(cubic_roots(p).size(), 3u) << p;
    }
  }
}

TEST(ClassifyTest, RejectsBadInput) {
  EXPECT_THROW(classify(23), InputError);
  EXPECT_THROW(classify(196), InputError);
  EXPECT_THROW(classify(197, 4), InputError);
}

TEST(ClassifyTest, SmallPrimesAreConsistent) {
  for (Int p = 29; p < 3000; p += 14) {
    if (!is_prime(p)) continue;
    const auto c = classify(p);
    EXPECT_TRUE(c.classifiers_agree()) << p;
    EXPECT_TRUE(c.index_formula_ok) << p;
    EXPECT_TRUE(c.mod49_relation) << p;
    EXPECT_EQ(c.kind, PrimeKind::ordinary) << p;
  }
}

TEST(ClassifyTest, IndexOfSevenAt197) {
  const auto c = classify(197);
  EXPECT_EQ(c.ind7, 146);
  EXPECT_EQ(c.ind7_formula_value, 146 % 7);
  ASSERT_TRUE(c.conditions.has_value());
  EXPECT_TRUE(c.artiad_criterion_agrees.value());
  EXPECT_TRUE(c.hyperartiad_criterion_agrees.value());
  ASSERT_TRUE(c.simplified.has_value());
  EXPECT_TRUE(c.simplified->holds);
}

TEST(ClassifyTest, NoCriterionEvidenceOffClass) {
  const auto c = classify(29);
  EXPECT_FALSE(c.conditions.has_value());
  EXPECT_FALSE(c.simplified.has_value());
}

TEST(ClassifyTest, FirstArtiadOneModFourteen) {
  const auto c = classify(14197);
  EXPECT_NE(c.kind, PrimeKind::ordinary);
  EXPECT_TRUE(c.via_cubic);
  EXPECT_TRUE(c.via_x);
  for (Int p = 29; p < 14197; p += 14) {
    if (!is_prime(p)) continue;
    ASSERT_FALSE(classify_via_x(lw_from_tables(dickson_hurwitz(cyclotomic_numbers<7>(FieldCtx(p)))))) << p;
  }
}

TEST(ClassifyTest, FirstArtiadOneModFortyNine) {
  const auto c = classify(60271);
  EXPECT_EQ(c.kind, PrimeKind::artiad);
  EXPECT_EQ(c.ind7 % 7, 1);
  ASSERT_TRUE(c.conditions.has_value());
  EXPECT_TRUE(c.conditions->low_coeffs_vanish);
  EXPECT_TRUE(c.conditions->c6_condition);
  ASSERT_TRUE(c.simplified.has_value());
  const auto& t = *c.simplified;
  EXPECT_TRUE(t.low_terms_vanish);
  EXPECT_EQ(t.actual[6], t.artiad_form[6]);
  // The t^7 coefficient follows -3 c6 + 3 ind7 + 2 x5 rather than -3 c6 + ind7 + 2 x5.
  EXPECT_TRUE(t.rescaled_form_matches);
  EXPECT_FALSE(t.artiad_form_matches);
  EXPECT_FALSE(c.conditions->c7_condition);
}

TEST(ClassifyTest, GeneratorDoesNotChangeKind) {
  for (Int p : {197, 491, 14197}) {
    const Int g2 = next_generator(p, find_generator(p));
    EXPECT_EQ(classify(p).kind, classify(p, g2).kind) << p;
  }
}

TEST(SimplifiedCongruenceTest, OrdinaryPrimesDiffer) {
  for (Int p : {197, 491, 883, 1373}) {
    const auto c = classify(p);
    ASSERT_TRUE(c.simplified.has_value());
    if (c.simplified->any_low_coeff_nonzero) {
      EXPECT_FALSE(c.simplified->artiad_form_matches) << p;
      EXPECT_FALSE(c.simplified->hyperartiad_form_matches) << p;
    }
  }
}
