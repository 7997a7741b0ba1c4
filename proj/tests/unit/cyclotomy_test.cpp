#include <gtest/gtest.h>

#include <vector>

#include "jacobi49/cyclotomy.hpp"

using namespace jacobi49;

namespace {

const std::vector<std::vector<Int>> kCyc7At29 = {
    {0, 1, 0, 0, 2, 0, 0}, {1, 0, 1, 0, 0, 1, 1}, {0, 1, 0, 1, 1, 1, 0}, {0, 0, 1, 2, 0, 1, 0},
    {2, 0, 1, 0, 0, 0, 1}, {0, 1, 1, 1, 0, 0, 1}, {0, 1, 0, 0, 1, 1, 1}};

}  // namespace

TEST(CyclotomicNumbersTest, OrderSevenAt29) {
  const FieldCtx ctx(29);
  const auto cyc = cyclotomic_numbers<7>(ctx);
  EXPECT_EQ(cyc.counts.rows(), kCyc7At29);
  EXPECT_EQ(cyc.counts.total(), 27);
}

TEST(CyclotomicNumbersTest, TotalsAndSymmetry) {
  for (Int p : {29, 43, 113, 197}) {
    const FieldCtx ctx(p);
    const auto cyc7 = cyclotomic_numbers<7>(ctx);
    EXPECT_EQ(cyc7.counts.total(), p - 2);
    EXPECT_TRUE(has_six_fold_symmetry(cyc7)) << p;
  }
  const auto cyc49 = cyclotomic_numbers<49>(FieldCtx(197));
  EXPECT_EQ(cyc49.counts.total(), 195);
  EXPECT_TRUE(has_six_fold_symmetry(cyc49));
  EXPECT_EQ(cyc49(0, 0), 0);
  EXPECT_EQ(cyc49(1, 1), 0);
  EXPECT_EQ(cyc49(3, 5), 0);
}

TEST(JacobiSumTest, OrderSevenAt29) {
  const FieldCtx ctx(29);
  const auto j = jacobi_sum<7>(ctx, 1, 1).canonical();
  const std::array<Int, 7> expected = {-2, -2, -6, -2, 0, -3, 0};
  EXPECT_EQ(j.coeffs(), expected);
  EXPECT_EQ(jacobi_from_cyc(cyclotomic_numbers<7>(ctx), 1, 1), j);
}

TEST(JacobiSumTest, TrivialCharacters) {
  const FieldCtx ctx(197);
  EXPECT_EQ(jacobi_sum_variant<49>(ctx, 0, 0), CycInt<49>::constant(195));
  EXPECT_EQ(jacobi_sum<49>(ctx, 1, 0), CycInt<49>::constant(-1));
  EXPECT_EQ(jacobi_sum_variant<49>(ctx, 0, 5), CycInt<49>::constant(-1));
}

TEST(JacobiSumTest, FourierPathExhaustive113) {
  const FieldCtx ctx(113);
  const auto cyc = cyclotomic_numbers<7>(ctx);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) EXPECT_EQ(jacobi_from_cyc(cyc, a, b), jacobi_sum<7>(ctx, a, b)) << a << "," << b;
}

TEST(JacobiSumTest, InverseTransformRoundTrip29) {
  const FieldCtx ctx(29);
  const auto cyc = cyclotomic_numbers<7>(ctx);
  const auto all = all_jacobi_sums<7>(ctx);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) EXPECT_EQ(cyc_from_jacobi<7>(all, a, b), cyc(a, b));
}

TEST(JacobiSumTest, InverseTransformOrder49) {
  const FieldCtx ctx(197);
  const auto cyc = cyclotomic_numbers<49>(ctx);
  const auto all = all_jacobi_sums<49>(ctx);
  int nonzero = 0;
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {3, 5}, {0, 1}, {2, 9}, {10, 20}, {48, 47}}) {
    EXPECT_EQ(cyc_from_jacobi<49>(all, a, b), cyc(a, b));
  }
  for (int b = 0; b < 49; ++b) {
    EXPECT_EQ(cyc_from_jacobi<49>(all, 0, b), cyc(0, b));
    nonzero += cyc(0, b) != 0;
  }
  EXPECT_GT(nonzero, 0);
}

TEST(JacobiSumTest, InverseTransformRejectsCorruptedInput) {
  const FieldCtx ctx(29);
  auto all = all_jacobi_sums<7>(ctx);
  all[8] = all[8] + CycInt<7>::monomial(2);
  EXPECT_THROW(cyc_from_jacobi<7>(all, 1, 1), IdentityViolation);
}

TEST(DicksonHurwitzTest, ColumnsAt197) {
  const auto dh = dickson_hurwitz(cyclotomic_numbers<7>(FieldCtx(197)));
  const std::vector<Int> expected = {26, 24, 24, 30, 38, 23, 30};
  for (int i = 0; i < 7; ++i) EXPECT_EQ(dh(i, 1), expected[i]) << i;
}

TEST(DicksonHurwitzTest, Identities) {
  for (Int p : {29, 113, 197}) {
    const auto dh = dickson_hurwitz(cyclotomic_numbers<7>(FieldCtx(p)));
    EXPECT_TRUE(check_dh_identities(dh).all()) << p;
    EXPECT_EQ(dh(0, 0), dh.f() - 1);
    for (int i = 1; i < 7; ++i) EXPECT_EQ(dh(i, 0), dh.f());
  }
  EXPECT_TRUE(check_dh_identities(dickson_hurwitz(cyclotomic_numbers<49>(FieldCtx(197)))).all());
}

TEST(DicksonHurwitzTest, ReflectionIsAboutMinusOneMinusJ) {
  const auto dh = dickson_hurwitz(cyclotomic_numbers<7>(FieldCtx(29)));
  EXPECT_EQ(dh(0, 2), 3);
  EXPECT_EQ(dh(0, 5), 4);  // so B(i,j) = B(i, e-j-i) fails at i = 0
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) EXPECT_EQ(dh(i, j), dh(i, 6 - j));
}

TEST(DicksonHurwitzTest, JacobiFromDiagonalSums) {
  const FieldCtx c29(29);
  const auto dh7 = dickson_hurwitz(cyclotomic_numbers<7>(c29));
  for (int j = 0; j < 7; ++j) EXPECT_EQ(jacobi_via_dh(dh7, j), jacobi_sum<7>(c29, 1, j)) << j;
  const FieldCtx c197(197);
  const auto dh49 = dickson_hurwitz(cyclotomic_numbers<49>(c197));
  for (int j : {0, 1, 2, 7, 30, 48}) EXPECT_EQ(jacobi_via_dh(dh49, j), jacobi_sum<49>(c197, 1, j)) << j;
}

TEST(DicksonHurwitzTest, OddCofactorUnsupported) {
  // Only f = (p-1)/7 matters here, so the table need not come from a prime.
  DHTable<7> table{};
  table.p = 43;
  EXPECT_NO_THROW(jacobi_via_dh(table, 1));
  table.p = 36;
  EXPECT_THROW(jacobi_via_dh(table, 1), UnsupportedCase);
}

TEST(JacobiPropertiesTest, AllPairsOrderSeven) {
  for (Int p : {29, 43, 71, 113, 127}) {
    const FieldCtx ctx(p);
    JacobiPropertyReport rep;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) check_jacobi_properties_for_pair<7>(ctx, i, j, true, rep);
    EXPECT_TRUE(rep.ok()) << p << ": " << (rep.notes.empty() ? "" : rep.notes.front());
    EXPECT_EQ(rep.pairs_checked, 49);
    for (int i = 1; i < 7; ++i) EXPECT_TRUE(check_diagonal_equalities<7>(ctx, i));
  }
}

TEST(JacobiPropertiesTest, ModulusAtOrder49) {
  const FieldCtx ctx(197);
  JacobiPropertyReport rep;
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 1}, {2, 5}, {7, 14}, {13, 40}})
    check_jacobi_properties_for_pair<49>(ctx, i, j, true, rep);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.modulus_checks, 4);
  EXPECT_TRUE(check_diagonal_equalities<49>(ctx, 3));
}

TEST(SixFoldClassTest, OrbitOfOneTwo) {
  const auto cls = six_fold_class<7>(1, 2);
  std::vector<std::pair<Int, Int>> members(cls.begin(), cls.end());
  std::sort(members.begin(), members.end());
  const std::vector<std::pair<Int, Int>> expected = {{1, 2}, {2, 1}, {1, 6}, {6, 1}, {5, 6}, {6, 5}};
  auto sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(members, sorted);
}
