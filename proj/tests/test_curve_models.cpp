#include "maxcurve/curve_models.hpp"

#include <gtest/gtest.h>

using namespace maxcurve;

TEST(CurveModels, ParametersFromS) {
  const auto c = params_from_s(Family::SuzukiCover, 1);
  EXPECT_EQ(c.p, 2);
  EXPECT_EQ(c.q0, 2);
  EXPECT_EQ(c.q, 8);
  EXPECT_EQ(c.m, 5);
  const auto r = params_from_s(Family::ReeCover, 1);
  EXPECT_EQ(r.p, 3);
  EXPECT_EQ(r.q0, 3);
  EXPECT_EQ(r.q, 27);
  EXPECT_EQ(r.m, 19);
  EXPECT_EQ(params_from_s(Family::SuzukiCover, 2).m, 25);
  EXPECT_THROW(params_from_s(Family::SuzukiCover, 0), std::invalid_argument);
  EXPECT_THROW(params_from_s(Family::ReeBase, 10), std::invalid_argument);
  EXPECT_THROW(with_family(c, Family::ReeBase), std::invalid_argument);
}

TEST(CurveModels, FamilyNamesRoundTrip) {
  for (auto f : {Family::SuzukiBase, Family::SuzukiCover, Family::ReeBase, Family::ReeCover})
    EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_FALSE(parse_family("hermitian").has_value());
}

TEST(CurveModels, KnownGenera) {
  EXPECT_EQ(genus(params_from_s(Family::SuzukiBase, 1)), 14);
  EXPECT_EQ(genus(params_from_s(Family::SuzukiCover, 1)), 196);
  EXPECT_EQ(genus(params_from_s(Family::SuzukiCover, 2)), 15376);
  EXPECT_EQ(genus(params_from_s(Family::ReeBase, 1)), 3627);
  EXPECT_EQ(genus(params_from_s(Family::ReeCover, 1)), 246051);
}

// The cover is a cyclic degree-m extension of the base, totally ramified exactly over the
// rational places (q^2+1 resp. q^3+1 of them) and tame.
TEST(CurveModels, CoverGenusFromTameRiemannHurwitz) {
  for (int s = 1; s <= 9; ++s) {
    for (bool suz : {true, false}) {
      const auto base = params_from_s(suz ? Family::SuzukiBase : Family::ReeBase, s);
      const auto cover = with_family(base, suz ? Family::SuzukiCover : Family::ReeCover);
      const BigInt lhs = 2 * genus(cover) - 2;
      const BigInt rhs = BigInt(cover.m) * (2 * genus(base) - 2) + BigInt(cover.m - 1) * rational_place_count(cover);
      EXPECT_EQ(lhs, rhs) << "s=" << s << " suzuki=" << suz;
      EXPECT_EQ(cover_two_g_minus_2(cover), lhs);
    }
  }
}

TEST(CurveModels, HasseWeilTarget) {
  EXPECT_EQ(hasse_weil_target(4096, 196), 29185);
  EXPECT_EQ(hasse_weil_target(4096, 14), 4097 + 2 * 14 * 64);
  EXPECT_THROW(hasse_weil_target(8, 1), NotASquare);
  EXPECT_THROW(hasse_weil_target(19683, 1), NotASquare);
}

TEST(CurveModels, HermitianCoverAnalysisSuzuki) {
  const auto c = params_from_s(Family::SuzukiCover, 1);
  const auto r9 = hermitian_cover_analysis(c, 9);
  EXPECT_EQ(r9.delta, 520);
  EXPECT_EQ(r9.delta, 8 * 8 * 8 + 8);
  EXPECT_TRUE(r9.in_window);
  EXPECT_TRUE(hermitian_cover_analysis(c, 10).in_window);
  EXPECT_FALSE(hermitian_cover_analysis(c, 8).in_window);
  EXPECT_FALSE(hermitian_cover_analysis(c, 11).in_window);
  for (int g = 1; g <= 12; ++g) {
    const auto rec = hermitian_cover_analysis(c, g);
    // H_{q^2}: genus q^2(q^2-1)/2
    EXPECT_EQ(rec.hermitian_two_g_minus_2, BigInt(64) * 63 - 2);
    EXPECT_EQ(rec.quotient_two_g_minus_2, cover_two_g_minus_2(c));
  }
}

TEST(CurveModels, HermitianCoverAnalysisRee) {
  const auto c = params_from_s(Family::ReeCover, 1);
  const BigInt q = 27;
  const auto rec = hermitian_cover_analysis(c, 784);
  EXPECT_EQ(rec.delta, 3 * q * (q * q * q + 1));
  EXPECT_EQ(rec.delta, 1594404);
  EXPECT_TRUE(rec.in_window);
  EXPECT_TRUE(rec.excluded);  // (q+1)^2 is ruled out even though the genus coincides
  const BigInt hg = q * q * q * (q * q * q - 1) / 2;
  EXPECT_EQ(rec.hermitian_two_g_minus_2, 2 * hg - 2);
  EXPECT_EQ((rec.hermitian_two_g_minus_2 - rec.delta) / 784, 2 * BigInt(246051) - 2);
  EXPECT_TRUE(hermitian_cover_analysis(c, 757).excluded);
  EXPECT_FALSE(hermitian_cover_analysis(c, 770).excluded);
  EXPECT_TRUE(hermitian_cover_analysis(c, 787).in_window);
  EXPECT_FALSE(hermitian_cover_analysis(c, 788).in_window);
  EXPECT_THROW(hermitian_cover_analysis(params_from_s(Family::ReeBase, 1), 784), std::invalid_argument);
}
