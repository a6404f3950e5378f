#include "maxcurve/group_action.hpp"

#include <gtest/gtest.h>

using namespace maxcurve;

namespace {

const ActionContext& ctx() {
  static const ActionContext c = make_action_context(params_from_s(Family::SuzukiCover, 1));
  return c;
}

bool satisfies(const Field& F, const Point3& p) {
  // y^8 + y = x^2 (x^8 + x), t^5 = x^8 + x, checked by repeated multiplication
  auto p8 = [&](Element e) { return F.sqr(F.sqr(F.sqr(e))); };
  const Element s = F.add(p8(p.x), p.x);
  const Element t5 = F.mul(F.sqr(F.sqr(p.t)), p.t);
  return F.add(p8(p.y), p.y) == F.mul(F.sqr(p.x), s) && t5 == s;
}

}  // namespace

TEST(GroupAction, PlaceSet) {
  const PlaceSet& P = ctx().places;
  const Field& F = P.field();
  ASSERT_EQ(P.size(), 29185u);
  std::size_t t0 = 0, rational = 0;
  for (std::uint32_t id = 1; id < P.size(); ++id) {
    ASSERT_TRUE(satisfies(F, P.point(id)));
    ASSERT_EQ(P.find(P.point(id)), id);
    t0 += P.point(id).t.is_zero();
    rational += P.is_fq_rational(id);
  }
  EXPECT_EQ(t0, 64u);
  EXPECT_EQ(rational, 64u);
  EXPECT_TRUE(P.is_fq_rational(PlaceSet::kInfinity));
  EXPECT_FALSE(P.find({F.one(), F.one(), F.one()}).has_value());
  EXPECT_EQ(P.subfield().size(), 8u);
  EXPECT_THROW(PlaceSet::build(params_from_s(Family::SuzukiCover, 2)), PlaceSet::OutOfScopeGroup);
}

TEST(GroupAction, PermutationBasics) {
  const auto& c = ctx();
  const Automorphism g = gen_gamma(c.places, c.lambda);
  EXPECT_EQ(element_order(g), 5u);
  EXPECT_TRUE(is_identity(power(g, 5)));
  EXPECT_TRUE(is_identity(compose(g, inverse(g))));
  EXPECT_EQ(power(g, 3).perm, compose(g, compose(g, g)).perm);
  EXPECT_EQ(power(g, 7).perm, power(g, 2).perm);
  EXPECT_EQ(fixed_points(identity_automorphism(10)), 10u);
}

TEST(GroupAction, StabilizerConstruction) {
  const auto& c = ctx();
  const Field& F = c.places.field();
  const Element A = c.primitive_fq;
  EXPECT_EQ(c.r_inv, 3);
  const Automorphism s = gen_stabilizer(c.places, A, F.one(), F.zero(), c.delta_for(A));
  EXPECT_EQ(s.perm[PlaceSet::kInfinity], PlaceSet::kInfinity);
  EXPECT_THROW(gen_stabilizer(c.places, F.zero(), F.zero(), F.zero(), F.zero()), GroupActionError);
  EXPECT_THROW(gen_stabilizer(c.places, A, F.zero(), F.zero(), A), GroupActionError);  // A^5 != A
  EXPECT_THROW(gen_stabilizer(c.places, c.lambda, F.zero(), F.zero(), F.one()), GroupActionError);  // not in F_q
  EXPECT_THROW(gen_stabilizer(c.places, F.one(), c.lambda, F.zero(), F.one()), GroupActionError);
  // every delta with delta^5 = A works, not only A^3: these differ by powers of gamma
  std::size_t ok = 0;
  for (std::uint64_t i = 1; i < F.size(); ++i)
    if (F.pow(F.from_index(i), 5) == A) {
      gen_stabilizer(c.places, A, F.zero(), F.zero(), F.from_index(i));
      ++ok;
    }
  EXPECT_EQ(ok, 5u);
  // with A != 1 and b != 0 the x-coefficient of y' must be A b^{q0}; plain b^{q0} breaks the equation
  const Element b = F.one(), A3 = F.pow(A, 3);
  const auto plain = permutation_from_map(c.places, [&](const Point3& p) {
    return Point3{F.add(F.mul(A, p.x), b), F.add(F.mul(A3, p.y), F.mul(F.pow(b, 2), p.x)), F.mul(c.delta_for(A), p.t)};
  });
  EXPECT_FALSE(plain.has_value());
}

TEST(GroupAction, LiteralThetaReadingOnlyForUnitA) {
  const auto& c = ctx();
  const Field& F = c.places.field();
  for (const Element& a : c.places.subfield()) {
    if (a.is_zero()) continue;
    EXPECT_EQ(literal_theta_preserves(c.places, a, F.zero(), F.one()), a == F.one()) << F.index(a);
  }
}

TEST(GroupAction, StabilizerClosureOrder) {
  const auto gens = stabilizer_generators(ctx());
  EXPECT_EQ(group_order(gens), 448u);
  for (const auto& g : gens) EXPECT_EQ(g.perm[PlaceSet::kInfinity], PlaceSet::kInfinity);
  EXPECT_EQ(orbit_size_of(PlaceSet::kInfinity, gens), 1u);
  EXPECT_THROW(group_order(gens, 100), GroupActionError);
}

TEST(GroupAction, GammaFixesShortOrbitPointwise) {
  const auto& c = ctx();
  const Field& F = c.places.field();
  const Automorphism g = gen_gamma(c.places, c.lambda);
  for (std::uint32_t id = 0; id < c.places.size(); ++id) {
    const bool on_t0 = id == PlaceSet::kInfinity || c.places.point(id).t.is_zero();
    ASSERT_EQ(g.perm[id] == id, on_t0);
  }
  EXPECT_THROW(gen_gamma(c.places, F.one()), GroupActionError);
  EXPECT_THROW(gen_gamma(c.places, c.primitive_fq), GroupActionError);
}

TEST(GroupAction, PhiCompletion) {
  const auto& c = ctx();
  const PlaceSet& P = c.places;
  const Field& F = P.field();
  PhiCompletion info;
  const Automorphism phi = gen_phi(P, &info);
  ASSERT_EQ(info.beta_zero.size(), 1u);
  const Point3& o = P.point(info.beta_zero[0]);
  EXPECT_TRUE(o.x.is_zero() && o.y.is_zero() && o.t.is_zero());
  EXPECT_EQ(phi.perm[info.beta_zero[0]], PlaceSet::kInfinity);
  EXPECT_EQ(phi.perm[PlaceSet::kInfinity], info.beta_zero[0]);
  EXPECT_EQ(element_order(phi), 2u);
  EXPECT_EQ(fixed_points(phi), 1u);
  // images off the exceptional set satisfy the equations and follow the formula
  for (std::uint32_t id = 1; id < P.size(); id += 13) {
    if (id == info.beta_zero[0]) continue;
    const Point3& p = P.point(id);
    const Element y4 = F.sqr(F.sqr(p.y));
    const Element alpha = F.add(y4, F.pow(p.x, 5));
    const Element beta = F.add(F.mul(p.x, y4), F.sqr(F.sqr(alpha)));
    const Point3 img{F.div(alpha, beta), F.div(p.y, beta), F.div(p.t, beta)};
    ASSERT_TRUE(satisfies(F, img));
    ASSERT_EQ(P.find(img), phi.perm[id]);
  }
}

TEST(GroupAction, OrbitsAndCommutation) {
  const auto& c = ctx();
  auto gens = stabilizer_generators(c);
  gens.push_back(gen_phi(c.places));
  const Automorphism g = gen_gamma(c.places, c.lambda);
  for (const auto& h : gens) EXPECT_TRUE(commute(g, h)) << h.tag;
  auto all = gens;
  all.push_back(g);
  EXPECT_EQ(orbit_sizes(c.places.size(), all), (std::vector<std::size_t>{65, 29120}));
  EXPECT_EQ(orbit_size_of(PlaceSet::kInfinity, all), 65u);
  // without gamma the long orbit is still transitive: the lifted group acts on the cover
  EXPECT_EQ(orbit_sizes(c.places.size(), gens), (std::vector<std::size_t>{65, 29120}));
}

TEST(GroupAction, RandomSearchIsSeededAndExact) {
  const auto& c = ctx();
  auto gens = stabilizer_generators(c);
  gens.push_back(gen_phi(c.places));
  const auto a = find_element_of_order(gens, 13, 99);
  const auto b = find_element_of_order(gens, 13, 99);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->perm, b->perm);
  EXPECT_EQ(element_order(*a), 13u);
  EXPECT_FALSE(find_element_of_order(gens, 11, 1, 200).has_value());
}

TEST(GroupAction, FixedPointTable) {
  const auto v = verify_group(params_from_s(Family::SuzukiCover, 1));
  EXPECT_TRUE(v.orbits_ok);
  EXPECT_TRUE(v.stabilizer_ok);
  EXPECT_TRUE(v.phi_ok);
  EXPECT_TRUE(v.gamma_commutes);
  EXPECT_TRUE(v.theta_literal_only_a1);
  for (const auto& r : v.rows) {
    if (r.cls == "div_m_special_j") continue;
    EXPECT_TRUE(r.ok) << r.name << " expected " << r.expected << " observed " << r.observed;
  }
}

// For an order-m sigma in the lifted group, the fixed places of sigma * gamma^j over j = 1..m-1
// add up to 4m: sigma fixes four base places, each with a full fibre of m places.
TEST(GroupAction, TwistedOrderFiveCosetSum) {
  const auto& c = ctx();
  auto gens = stabilizer_generators(c);
  gens.push_back(gen_phi(c.places));
  const Automorphism g = gen_gamma(c.places, c.lambda);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto s = find_element_of_order(gens, 5, seed);
    ASSERT_TRUE(s);
    EXPECT_EQ(fixed_points(*s), 0u);
    std::size_t sum = 0;
    for (std::uint64_t j = 1; j < 5; ++j) sum += fixed_points(compose(*s, power(g, j)));
    EXPECT_EQ(sum, 20u);
  }
}

TEST(GroupAction, WildClassesViaFiltration) {
  const auto c = params_from_s(Family::SuzukiCover, 1);
  const auto f = filtration(c);
  EXPECT_EQ(i_from_filtration(f, 1), i_sigma({true, ClassTag::Order2, false}, c));
  EXPECT_EQ(i_from_filtration(f, 0), i_sigma({true, ClassTag::Order4, false}, c));
  // G^{(1)} at the infinite place is the Sylow 2-subgroup of the stabilizer: order q^2 = 64
  auto gens = stabilizer_generators(ctx());
  gens.erase(gens.begin());
  EXPECT_EQ(group_order(gens), 64u);
  EXPECT_EQ(BigInt(group_order(gens)), f[0].order);
}

TEST(GroupAction, BasisIndependence) {
  const auto v = verify_group(params_from_s(Family::SuzukiCover, 1), std::vector<int>{1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1});
  EXPECT_EQ(v.modulus, "x^12 + x^6 + x^4 + x + 1");
  EXPECT_EQ(v.orbits, (std::vector<std::size_t>{65, 29120}));
  EXPECT_EQ(v.stabilizer_order, 448u);
  EXPECT_TRUE(v.phi_ok);
}
