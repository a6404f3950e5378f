#include "maxcurve/genus_catalog.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace maxcurve;

namespace {

const CurveParams S8 = params_from_s(Family::SuzukiCover, 1);
const CurveParams S32 = params_from_s(Family::SuzukiCover, 2);
const CurveParams R27 = params_from_s(Family::ReeCover, 1);

QuotientSpec spec(Kind k, const CurveParams& c) {
  QuotientSpec s;
  s.kind = k;
  s.params = c;
  return s;
}

const SpectrumResult& cached(const CurveParams& c) {
  static std::map<std::pair<bool, int>, SpectrumResult> cache;
  const auto key = std::make_pair(c.suzuki(), c.s);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, spectrum(c, 2)).first;
  return it->second;
}

}  // namespace

TEST(GenusCatalog, KindNames) {
  for (const auto& [k, name] : kind_names()) {
    EXPECT_EQ(parse_kind(name), k);
    EXPECT_EQ(kind_name(k), name);
    EXPECT_EQ(kind_is_suzuki(k), name.rfind("SZ", 0) == 0);
  }
  EXPECT_FALSE(parse_kind("SZ-Z9").has_value());
}

TEST(GenusCatalog, SuzukiTwoGroupExamples) {
  auto b = spec(Kind::SZ_B2, S8);
  b.v = 1;
  b.u = 1;
  const auto v = validate(b);
  EXPECT_TRUE(v.valid);
  EXPECT_TRUE(v.existence_certified);
  EXPECT_EQ(evaluate(b).delta, 26);
  EXPECT_EQ(genus_via_delta(b), 92);
  EXPECT_EQ(genus_closed(b), 92);
  b.v = 2;
  EXPECT_EQ(genus_closed(b), 45);
  EXPECT_EQ(genus_via_delta(b), 45);
  b.v = 3;
  b.u = 3;
  EXPECT_EQ(genus_closed(b), 14);
  EXPECT_EQ(genus_via_delta(b), 14);
  b.v = 4;
  b.u = 1;
  EXPECT_FALSE(validate(b).valid);
  EXPECT_THROW(genus_via_delta(b), InvalidSpec);
}

TEST(GenusCatalog, CyclicExamples) {
  auto b1 = spec(Kind::SZ_B1, S8);
  b1.r = 7;
  b1.n = 5;
  EXPECT_EQ(genus_closed(b1), 2);
  EXPECT_EQ(genus_via_delta(b1), 2);
  b1.r = 3;
  EXPECT_FALSE(validate(b1).valid);

  auto b4 = spec(Kind::SZ_B4, S8);
  b4.r = 7;
  b4.n = 5;
  const auto rec = evaluate(b4);
  EXPECT_TRUE(rec.valid);
  EXPECT_EQ(rec.order, 70);
  EXPECT_EQ(rec.delta, 530);
  EXPECT_EQ(*rec.genus_delta, 0);

  auto p1 = spec(Kind::RE_P1, R27);
  p1.r = 1;
  p1.n = 19;
  EXPECT_EQ(genus_closed(p1), 3627);
  EXPECT_EQ(genus_via_delta(p1), 3627);
  p1.n = 1;
  EXPECT_EQ(genus_closed(p1), 246051);
  EXPECT_EQ(genus_via_delta(p1), 246051);
}

TEST(GenusCatalog, ReeThreeGroupCertifiedByCorollary) {
  auto b = spec(Kind::RE_B, R27);
  b.w = b.v = b.u = 3;
  b.r = 2;
  b.n = 1;
  const auto rec = evaluate(b);
  EXPECT_TRUE(rec.valid);
  EXPECT_TRUE(rec.existence_certified);
  EXPECT_EQ(*rec.genus_delta, 4381);
}

TEST(GenusCatalog, FamilyAndDivisibilityChecks) {
  auto s = spec(Kind::RE_P1, S8);
  EXPECT_FALSE(validate(s).valid);
  auto t = spec(Kind::SZ_B1, S8);
  t.n = 3;
  EXPECT_FALSE(validate(t).valid);
  auto u = spec(Kind::SZ_B1, params_from_s(Family::SuzukiBase, 1));
  EXPECT_FALSE(validate(u).valid);
}

class Sweep : public ::testing::TestWithParam<int> {
 protected:
  const CurveParams& cover() const {
    static const CurveParams cs[] = {S8, S32, R27};
    return cs[GetParam()];
  }
};

TEST_P(Sweep, DualPathEqualityOrDocumented) {
  const auto& res = cached(cover());
  EXPECT_GT(res.records.size(), 0u);
  std::size_t mism = 0;
  for (const auto& r : res.records) {
    ASSERT_TRUE(r.genus_delta.has_value());
    ASSERT_TRUE(r.genus_closed.has_value()) << kind_name(r.spec.kind);
    if (*r.genus_closed == Rational(*r.genus_delta)) {
      EXPECT_FALSE(r.mismatch);
      continue;
    }
    ++mism;
    EXPECT_TRUE(r.mismatch);
    EXPECT_EQ(r.notes.rfind("documented:", 0), 0u) << kind_name(r.spec.kind) << ' ' << r.spec.param_string() << ": " << r.notes;
  }
  EXPECT_EQ(mism, res.mismatches.size());
  if (cover().suzuki()) {
    EXPECT_EQ(mism, 0u);
  }
}

TEST_P(Sweep, GeneraBoundedAndIntegral) {
  const auto& res = cached(cover());
  const BigInt gc = genus(cover());
  for (const auto& r : res.records) {
    EXPECT_GE(*r.genus_delta, 0);
    EXPECT_LE(*r.genus_delta, gc);
    // RH re-check from the recorded order and delta
    EXPECT_EQ(cover_two_g_minus_2(cover()), r.order * (2 * *r.genus_delta - 2) + r.delta);
    EXPECT_EQ(r.delta, delta_from_composition(composition(r.spec), cover()));
  }
  EXPECT_TRUE(std::is_sorted(res.genera.begin(), res.genera.end()));
  EXPECT_TRUE(std::adjacent_find(res.genera.begin(), res.genera.end()) == res.genera.end());
}

TEST_P(Sweep, BoundaryCollapses) {
  const auto& res = cached(cover());
  const CurveParams base = with_family(cover(), cover().suzuki() ? Family::SuzukiBase : Family::ReeBase);
  std::set<Kind> trivial_kinds, cm_kinds;
  for (const auto& r : res.records) {
    if (r.order == 1) {
      EXPECT_EQ(*r.genus_delta, genus(cover())) << kind_name(r.spec.kind);
      trivial_kinds.insert(r.spec.kind);
    }
    if (r.order == cover().m && r.spec.n == cover().m) {
      EXPECT_EQ(*r.genus_delta, genus(base)) << kind_name(r.spec.kind);
      cm_kinds.insert(r.spec.kind);
    }
  }
  EXPECT_GE(trivial_kinds.size(), 2u);
  EXPECT_GE(cm_kinds.size(), 2u);
  EXPECT_TRUE(std::binary_search(res.genera.begin(), res.genera.end(), genus(cover())));
  EXPECT_TRUE(std::binary_search(res.genera.begin(), res.genera.end(), genus(base)));
}

TEST_P(Sweep, ThreadIndependence) {
  const auto one = spectrum(cover(), 1);
  const auto& many = cached(cover());
  EXPECT_EQ(one.genera, many.genera);
  EXPECT_EQ(one.records.size(), many.records.size());
}

INSTANTIATE_TEST_SUITE_P(Covers, Sweep, ::testing::Values(0, 1, 2),
                         [](const auto& info) { return std::string(info.param == 0 ? "q8" : info.param == 1 ? "q32" : "q27"); });

// Containing C_m, the quotient genus equals that of the image on the base curve; checked against
// explicit RH on the base curve for cyclic images.
TEST(GenusCatalog, SameGenusAsBaseQuotient) {
  auto c1 = spec(Kind::SZ_C1, S8);
  c1.r = 13;
  c1.n = 5;
  EXPECT_EQ(genus_via_delta(c1), 2);  // 26 = 13(2g-2)
  c1.n = 1;
  EXPECT_EQ(genus_via_delta(c1), (390 / 13 + 2) / 2);
  auto b1 = spec(Kind::SZ_B1, S8);
  b1.r = 7;
  b1.n = 5;
  EXPECT_EQ(genus_via_delta(b1), (26 - 12) / 7 / 2 + 1);  // base: 26 = 7(2g-2) + 6*2
}

TEST(GenusCatalog, Table1) {
  const auto q8 = table1_check("F_{2^12}");
  EXPECT_EQ(q8.missing, std::vector<std::int64_t>{13});
  const auto q32 = table1_check(*table1_row("F_{2^20}"), cached(S32).genera);
  EXPECT_EQ(q32.missing, std::vector<std::int64_t>{247});
  const auto q27 = table1_check(*table1_row("F_{3^18}"), cached(R27).genera);
  EXPECT_TRUE(q27.contained);
  EXPECT_THROW(table1_check("F_{5^2}"), std::invalid_argument);
  EXPECT_EQ(table1_row(true, 1)->genera.size(), 4u);
  EXPECT_EQ(table1_row(true, 2)->genera.size(), 28u);
  EXPECT_EQ(table1_row(false, 1)->genera.size(), 55u);
}
