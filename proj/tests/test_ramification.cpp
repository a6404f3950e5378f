#include "maxcurve/ramification.hpp"

#include <gtest/gtest.h>

using namespace maxcurve;

namespace {

const CurveParams S8 = params_from_s(Family::SuzukiCover, 1);
const CurveParams R27 = params_from_s(Family::ReeCover, 1);

}  // namespace

TEST(Ramification, TableExamples) {
  EXPECT_EQ(i_sigma({true, ClassTag::Order2, false}, S8), 26);
  EXPECT_EQ(i_sigma({true, ClassTag::TauPower, false}, S8), 65);
  EXPECT_EQ(i_sigma({true, ClassTag::Order4, false}, S8), 6);
  EXPECT_EQ(i_sigma({true, ClassTag::DivQMinus1, true}, S8), 2);
  EXPECT_EQ(i_sigma({true, ClassTag::DivMSpecialJ, true}, S8), 20);
  EXPECT_EQ(i_sigma({false, ClassTag::Order3Central, false}, R27), 704);
  EXPECT_EQ(i_sigma({false, ClassTag::TauPower, false}, R27), 19684);
  EXPECT_EQ(i_sigma({false, ClassTag::DivMSpecialJ, true}, R27), 6 * 19);
  EXPECT_EQ(i_sigma({false, ClassTag::Order3NonCentral, false}, R27), 704 - 19 * 27);
}

TEST(Ramification, UnknownClasses) {
  EXPECT_THROW(i_sigma({true, ClassTag::Order9, false}, S8), UnknownClass);
  EXPECT_THROW(i_sigma({false, ClassTag::Order4, false}, R27), UnknownClass);
  EXPECT_THROW(i_sigma({true, ClassTag::TauPower, true}, S8), UnknownClass);
  EXPECT_THROW(i_sigma({false, ClassTag::Order2, false}, S8), UnknownClass);  // family mismatch
}

TEST(Ramification, Filtrations) {
  const auto fs = filtration(S8);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].last_index, 5);
  EXPECT_EQ(fs[1].last_index, 25);
  EXPECT_EQ(fs[1].last_index, 65 - 5 * 8);
  EXPECT_EQ(fs[0].order, 64);
  EXPECT_EQ(fs[1].order, 8);
  const auto fr = filtration(R27);
  ASSERT_EQ(fr.size(), 3u);
  EXPECT_EQ(fr.back().last_index, 703);
  EXPECT_EQ(fr.back().last_index, 27 * 27 - 27 + 1);
  for (int s = 1; s <= 9; ++s)
    for (auto f : {Family::SuzukiCover, Family::ReeCover}) EXPECT_NO_THROW(filtration(params_from_s(f, s)));
}

// i(sigma) counts the indices i >= 0 with sigma in G^{(i)}: G^{(0)} plus the stretch of the deepest group.
TEST(Ramification, WildValuesFromFiltration) {
  for (int s = 1; s <= 6; ++s) {
    const auto c = params_from_s(Family::SuzukiCover, s);
    const auto f = filtration(c);
    EXPECT_EQ(i_from_filtration(f, 1), i_sigma({true, ClassTag::Order2, false}, c));
    EXPECT_EQ(i_from_filtration(f, 0), i_sigma({true, ClassTag::Order4, false}, c));
    const auto r = params_from_s(Family::ReeCover, s);
    const auto g = filtration(r);
    EXPECT_EQ(i_from_filtration(g, 2), i_sigma({false, ClassTag::Order3Central, false}, r));
    EXPECT_EQ(i_from_filtration(g, 0), i_sigma({false, ClassTag::Order9, false}, r));
  }
}

TEST(Ramification, DeltaAndRh) {
  EXPECT_EQ(delta_from_composition({}, S8), 0);
  const Composition cm{{{true, ClassTag::TauPower, false}, 4}};
  EXPECT_EQ(delta_from_composition(cm, S8), 260);
  EXPECT_EQ(genus_from_rh(390, 1, 0), 196);
  EXPECT_EQ(genus_from_rh(390, 5, 260), 14);
  EXPECT_EQ(genus_from_rh(BigInt(19684) * 25, 19, BigInt(18) * 19684), 3627);
  EXPECT_THROW(genus_from_rh(390, 7, 0), RhError);
  EXPECT_THROW(genus_from_rh(390, 1, 1000), RhError);
  EXPECT_FALSE(try_genus_from_rh(390, 0, 0).has_value());
  EXPECT_THROW(delta_from_composition({{{true, ClassTag::Order2, false}, -1}}, S8), std::invalid_argument);
}

TEST(Ramification, DeltaTameGeneral) {
  EXPECT_EQ(delta_tame_general(1, 0, 0, S8), 0);
  EXPECT_EQ(delta_tame_general(5, 0, 0, S8), 260);
  EXPECT_EQ(delta_tame_general(1, 17, 0, S8), 17);
  EXPECT_EQ(delta_tame_general(5, 3, 4, S8), 260 + 35);
  EXPECT_THROW(delta_tame_general(3, 0, 0, S8), std::invalid_argument);
}

namespace {

// genus of the base curve modulo a cyclic group of order r whose nontrivial elements are tame
// and each fix `fixed` places
BigInt base_quotient_genus(const CurveParams& c, std::int64_t r, std::int64_t fixed) {
  const CurveParams b = with_family(c, c.suzuki() ? Family::SuzukiBase : Family::ReeBase);
  const BigInt num = 2 * genus(b) - 2 - BigInt(r - 1) * fixed;
  EXPECT_EQ(num % r, 0);
  return (num / r + 2) / 2;
}

// Delta of the cover group C_r x C_n with C_r tame and each element of C_r fixing `fixed` places of
// the first orbit (all of which are totally ramified in the cover).
BigInt cover_delta(const CurveParams& c, std::int64_t r, std::int64_t n, std::int64_t fixed) {
  return BigInt(n - 1) * rational_place_count(c) + BigInt(r - 1) * n * fixed;
}

}  // namespace

// g_L - g_{bar L} identity against explicit RH on both curves.
TEST(Ramification, TameShiftIdentity) {
  struct Case {
    CurveParams c;
    std::int64_t r, fixed;
  };
  for (const Case k : {Case{S8, 7, 2}, Case{S8, 13, 0}, Case{R27, 37, 0}, Case{R27, 13, 2}, Case{R27, 7, 0}}) {
    for (std::int64_t n : {std::int64_t{1}, k.c.m}) {
      const BigInt order = BigInt(k.r) * n;
      const BigInt gl = genus_from_rh(cover_two_g_minus_2(k.c), order, cover_delta(k.c, k.r, n, k.fixed));
      const BigInt gbar = base_quotient_genus(k.c, k.r, k.fixed);
      EXPECT_EQ(tame_genus_shift(n, order, k.c), Rational(gl - gbar)) << "r=" << k.r << " n=" << n;
      if (n == k.c.m) {
        EXPECT_EQ(gl, gbar);
      }
    }
  }
}

TEST(Ramification, TameContainingCmIdentity) {
  for (auto [c, r, fixed] : {std::tuple{S8, 7, 2}, std::tuple{S8, 13, 0}, std::tuple{R27, 13, 2}, std::tuple{R27, 37, 0}}) {
    const BigInt relations = BigInt(r - 1) * fixed;
    EXPECT_EQ(delta_tame_containing_cm(relations, c), cover_delta(c, r, c.m, fixed));
  }
}
