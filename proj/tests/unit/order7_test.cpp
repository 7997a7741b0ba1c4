#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "jacobi49/order7.hpp"

using namespace jacobi49;

namespace {

LWSolution lw_for(Int p, Int gamma) { return lw_from_tables(dickson_hurwitz(cyclotomic_numbers<7>(FieldCtx(p, gamma)))); }
LWSolution lw_for(Int p) { return lw_for(p, find_generator(p)); }

bool in_orbit(const std::array<LWSolution, 6>& orb, const LWSolution& s) {
  return std::find(orb.begin(), orb.end(), s) != orb.end();
}

}  // namespace

TEST(TUDecompTest, KnownPrimes) {
  EXPECT_EQ(tu_decompose(29).t, 1);
  EXPECT_EQ(tu_decompose(29).u, 2);
  EXPECT_EQ(tu_decompose(113).t, 1);
  EXPECT_EQ(tu_decompose(113).u, 4);
  EXPECT_EQ(tu_decompose(197).t, -13);
  EXPECT_EQ(tu_decompose(197).u, 2);
  for (Int p : {43, 71, 127, 491, 883, 1373}) {
    const auto tu = tu_decompose(p);
    EXPECT_EQ(tu.t * tu.t + 7 * tu.u * tu.u, p);
    EXPECT_EQ(mod(tu.t, 7), 1);
    EXPECT_GT(tu.u, 0);
  }
  EXPECT_THROW(tu_decompose(31), InputError);
}

TEST(LWExtractionTest, KnownSextuples) {
  EXPECT_EQ(lw_for(29), (LWSolution{{1, -2, -3, -2, -1, 1}}));
  EXPECT_EQ(lw_for(197), (LWSolution{{-13, -6, 1, -8, -5, 1}}));
}

TEST(LWExtractionTest, NormParityAndCongruence) {
  for (Int p : {29, 43, 71, 113, 127, 197, 211, 239, 281, 337, 379, 421, 449, 463, 491}) {
    const auto s = lw_for(p);
    const auto d = verify_diophantine(s, p);
    EXPECT_TRUE(d.norm) << p;
    EXPECT_EQ(lw_norm(s), 72 * p);
    EXPECT_EQ(mod(s[1], 7), 1) << p;
    EXPECT_TRUE(lw_parity_ok(s)) << p;
    EXPECT_TRUE(d.aux1) << p;
    EXPECT_TRUE(d.aux2_fitted) << p;
  }
}

TEST(LWExtractionTest, StatedSecondAuxiliaryFails) {
  const auto d = verify_diophantine(lw_for(197), 197);
  EXPECT_FALSE(d.aux2_stated);
  EXPECT_FALSE(d.aux2_x2_reading);
}

TEST(LWExtractionTest, TrivialSolutionsSatisfyNorm) {
  for (Int p : {29, 197}) {
    for (const auto& s : trivial_solutions(tu_decompose(p))) {
      EXPECT_EQ(lw_norm(s), 72 * p);
      EXPECT_TRUE(verify_diophantine(s, p).aux1);
    }
  }
}

TEST(OrbitTest, ClosedUnderReapplication) {
  for (Int p : {29, 113, 197, 491}) {
    const auto orb = orbit(lw_for(p));
    for (const auto& member : orb)
      for (const auto& image : orbit(member)) EXPECT_TRUE(in_orbit(orb, image)) << p;
  }
}

TEST(OrbitTest, StatedSecondMapBreaksClosure) {
  const auto s = lw_for(197);
  const auto orb = orbit(s);
  // Fourth component +x2 instead of -x2.
  const LWSolution stated{{s[1], s[3], -s[4], s[2], -(s[5] + 3 * s[6]) / 2, (s[5] - s[6]) / 2}};
  EXPECT_FALSE(in_orbit(orb, stated));
}

TEST(OrbitTest, GeneratorChangeMovesAlongOrbit) {
  for (Int p : {197, 491}) {
    const Int g = find_generator(p);
    const auto orb = orbit(lw_for(p, g));
    for (Int a : {3, 5, 9, 11, 13, 15, 17, 19}) {
      if (std::gcd(a, p - 1) != 1) continue;
      const Int ga = static_cast<Int>(powmod(static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(a), p));
      const auto k = static_cast<std::size_t>(mod(a, 7) - 1);
      EXPECT_EQ(lw_for(p, ga), orb[k]) << "p=" << p << " a=" << a;
    }
  }
}

TEST(OrderSevenTableTest, ReconstructsDirectTable) {
  for (Int p : {29, 43, 71, 113, 127, 197, 491}) {
    const auto cyc = cyclotomic_numbers<7>(FieldCtx(p));
    const auto s = lw_from_tables(dickson_hurwitz(cyc));
    const auto tu = tu_decompose(p);
    const auto m = match_table(s, tu, cyc);
    EXPECT_TRUE(m.matches) << p;
    EXPECT_TRUE(m.t_consistent) << p;
    EXPECT_NE(m.u_sign, 0);
    EXPECT_EQ(cyc7_from_lw(s, tu, p, m.u_sign).counts, cyc.counts) << p;
    EXPECT_FALSE(m.stated_01_matches) << p;
  }
}

TEST(OrderSevenTableTest, SignOfUDependsOnPrime) {
  std::vector<int> signs;
  for (Int p : {29, 43, 71, 113, 127, 197, 211, 239, 281, 337}) {
    const auto cyc = cyclotomic_numbers<7>(FieldCtx(p));
    signs.push_back(match_table(lw_from_tables(dickson_hurwitz(cyc)), tu_decompose(p), cyc).u_sign);
  }
  EXPECT_NE(std::count(signs.begin(), signs.end(), 1), 0);
  EXPECT_NE(std::count(signs.begin(), signs.end(), -1), 0);
}
