#ifndef MAXCURVE_GROUP_ACTION_HPP
#define MAXCURVE_GROUP_ACTION_HPP

#include "maxcurve/curve_models.hpp"
#include "maxcurve/gf.hpp"
#include "maxcurve/ramification.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace maxcurve {

class GroupActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point3 {
  Element x, y, t;
};

// Rational places of the Suzuki cover over F_{q^4}. Id 0 is the infinite place.
class PlaceSet {
 public:
  static constexpr std::uint32_t kInfinity = 0;

  static PlaceSet build(const CurveParams& c, std::optional<std::vector<int>> modulus = std::nullopt) {
    if (!c.suzuki() || c.q != 8) throw OutOfScopeGroup("the group action is materialized for q = 8 only");
    return PlaceSet(c, make_field(2, 4 * c.d, std::move(modulus)));
  }

  const CurveParams& params() const { return params_; }
  const Field& field() const { return F_; }
  std::size_t size() const { return pts_.size(); }
  bool is_infinity(std::uint32_t id) const { return id == kInfinity; }
  const Point3& point(std::uint32_t id) const { return pts_.at(id); }

  std::optional<std::uint32_t> find(const Point3& p) const {
    auto it = index_.find(key(p));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool on_curve(const Point3& p) const {
    const Element s = F_.add(F_.pow(p.x, q_), p.x);
    const Element lhs_y = F_.add(F_.pow(p.y, q_), p.y);
    return lhs_y == F_.mul(F_.pow(p.x, q0_), s) && F_.pow(p.t, m_) == s;
  }

  // rational over F_q: the infinite place and affine places with x, y in F_q and t = 0
  bool is_fq_rational(std::uint32_t id) const {
    if (id == kInfinity) return true;
    const auto& p = pts_[id];
    return p.t.is_zero() && F_.in_subfield(p.x, params_.d) && F_.in_subfield(p.y, params_.d);
  }

  // elements of the subfield F_q inside F_{q^4}, in field order
  const std::vector<Element>& subfield() const { return fq_; }

  class OutOfScopeGroup : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

 private:
  PlaceSet(const CurveParams& c, Field F)
      : params_(c), F_(std::move(F)), q_(c.q), q0_(c.q0), m_(c.m) {
    const std::uint64_t N = F_.size();
    std::vector<std::vector<Element>> ysol(N), tsol(N);
    for (std::uint64_t i = 0; i < N; ++i) {
      const Element e = F_.from_index(i);
      ysol[F_.index(F_.add(F_.pow(e, q_), e))].push_back(e);
      tsol[F_.index(F_.pow(e, m_))].push_back(e);
      if (F_.in_subfield(e, c.d)) fq_.push_back(e);
    }
    pts_.push_back({});
    for (std::uint64_t i = 0; i < N; ++i) {
      const Element x = F_.from_index(i);
      const Element s = F_.add(F_.pow(x, q_), x);
      const Element rhs = F_.mul(F_.pow(x, q0_), s);
      for (const Element& y : ysol[F_.index(rhs)])
        for (const Element& t : tsol[F_.index(s)]) {
          index_.emplace(key({x, y, t}), static_cast<std::uint32_t>(pts_.size()));
          pts_.push_back({x, y, t});
        }
    }
  }

  std::uint64_t key(const Point3& p) const {
    return (F_.index(p.x) << 40) | (F_.index(p.y) << 20) | F_.index(p.t);
  }

  CurveParams params_;
  Field F_;
  std::uint64_t q_, q0_, m_;
  std::vector<Point3> pts_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<Element> fq_;
};

struct Automorphism {
  std::vector<std::uint32_t> perm;
  std::string tag;
};

inline Automorphism identity_automorphism(std::size_t n) {
  Automorphism a;
  a.perm.resize(n);
  std::iota(a.perm.begin(), a.perm.end(), 0u);
  a.tag = "identity";
  return a;
}

// a after b
inline Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism r;
  r.perm.resize(b.perm.size());
  for (std::size_t i = 0; i < b.perm.size(); ++i) r.perm[i] = a.perm[b.perm[i]];
  r.tag = "composite";
  return r;
}

inline Automorphism inverse(const Automorphism& a) {
  Automorphism r;
  r.perm.resize(a.perm.size());
  for (std::size_t i = 0; i < a.perm.size(); ++i) r.perm[a.perm[i]] = static_cast<std::uint32_t>(i);
  r.tag = "composite";
  return r;
}

inline bool is_identity(const Automorphism& a) {
  for (std::size_t i = 0; i < a.perm.size(); ++i)
    if (a.perm[i] != i) return false;
  return true;
}

inline std::size_t fixed_points(const Automorphism& a) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.perm.size(); ++i) n += (a.perm[i] == i);
  return n;
}

inline std::uint64_t element_order(const Automorphism& a) {
  std::vector<char> seen(a.perm.size(), 0);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < a.perm.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = a.perm[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

inline Automorphism power(const Automorphism& a, std::uint64_t e) {
  Automorphism r;
  r.perm.resize(a.perm.size());
  std::vector<char> seen(a.perm.size(), 0);
  std::vector<std::uint32_t> cycle;
  for (std::size_t i = 0; i < a.perm.size(); ++i) {
    if (seen[i]) continue;
    cycle.clear();
    for (std::uint32_t j = static_cast<std::uint32_t>(i); !seen[j]; j = a.perm[j]) {
      seen[j] = 1;
      cycle.push_back(j);
    }
    const std::size_t L = cycle.size();
    for (std::size_t k = 0; k < L; ++k) r.perm[cycle[k]] = cycle[(k + e % L) % L];
  }
  r.tag = "composite";
  return r;
}

inline bool commute(const Automorphism& a, const Automorphism& b) {
  for (std::size_t i = 0; i < a.perm.size(); ++i)
    if (a.perm[b.perm[i]] != b.perm[a.perm[i]]) return false;
  return true;
}

// Build a permutation from a coordinate map on affine places; the infinite place is sent to
// `infinity_image`. Returns nullopt if some image is not a place of the curve.
inline std::optional<Automorphism> permutation_from_map(const PlaceSet& P, const std::function<Point3(const Point3&)>& f,
                                                        std::uint32_t infinity_image = PlaceSet::kInfinity) {
  Automorphism a;
  a.perm.resize(P.size());
  a.perm[PlaceSet::kInfinity] = infinity_image;
  for (std::uint32_t id = 1; id < P.size(); ++id) {
    auto img = P.find(f(P.point(id)));
    if (!img) return std::nullopt;
    a.perm[id] = *img;
  }
  std::vector<char> hit(P.size(), 0);
  for (auto v : a.perm) {
    if (hit[v]) return std::nullopt;
    hit[v] = 1;
  }
  return a;
}

inline Automorphism gen_stabilizer(const PlaceSet& P, Element A, Element b, Element c, Element delta) {
  const Field& F = P.field();
  const auto& cp = P.params();
  if (A.is_zero() || !F.in_subfield(A, cp.d)) throw GroupActionError("A must be a nonzero element of F_q");
  if (!F.in_subfield(b, cp.d) || !F.in_subfield(c, cp.d)) throw GroupActionError("b and c must lie in F_q");
  if (F.pow(delta, cp.m) != A) throw GroupActionError("delta^m must equal A");
  const Element Aq = F.pow(A, cp.q0 + 1);
  const Element bq = F.mul(A, F.pow(b, cp.q0));  // x-coefficient A b^{q0} keeps y^q + y = x^{q0}(x^q + x)
  auto a = permutation_from_map(P, [&](const Point3& p) {
    return Point3{F.add(F.mul(A, p.x), b), F.add(F.add(F.mul(Aq, p.y), F.mul(bq, p.x)), c), F.mul(delta, p.t)};
  });
  if (!a) throw GroupActionError("stabilizer image violates a curve equation");
  a->tag = "stabilizer";
  return *a;
}

// The literal reading with t -> A t; true iff it maps places to places.
inline bool literal_theta_preserves(const PlaceSet& P, Element A, Element b, Element c) {
  const Field& F = P.field();
  const auto& cp = P.params();
  const Element Aq = F.pow(A, cp.q0 + 1);
  const Element bq = F.mul(A, F.pow(b, cp.q0));
  return permutation_from_map(P, [&](const Point3& p) {
           return Point3{F.add(F.mul(A, p.x), b), F.add(F.add(F.mul(Aq, p.y), F.mul(bq, p.x)), c), F.mul(A, p.t)};
         }).has_value();
}

inline Automorphism gen_gamma(const PlaceSet& P, Element lambda) {
  const Field& F = P.field();
  const std::uint64_t m = P.params().m;
  if (F.pow(lambda, m) != F.one()) throw GroupActionError("lambda^m must be 1");
  for (std::uint64_t d = 1; d < m; ++d)
    if (m % d == 0 && F.pow(lambda, d) == F.one()) throw GroupActionError("lambda must have exact order m");
  auto a = permutation_from_map(P, [&](const Point3& p) { return Point3{p.x, p.y, F.mul(lambda, p.t)}; });
  if (!a) throw GroupActionError("gamma image violates a curve equation");
  a->tag = "gamma";
  return *a;
}

struct PhiCompletion {
  std::vector<std::uint32_t> beta_zero;  // affine places where beta vanishes
  std::vector<std::pair<std::uint32_t, std::uint32_t>> completed;  // source -> image pairs added
};

// (x,y,t) -> (alpha/beta, y/beta, t/beta) where beta != 0, completed to the unique bijection that is
// an involution with exactly one fixed place (p-rank zero forces a single fixed place for 2-elements).
inline Automorphism gen_phi(const PlaceSet& P, PhiCompletion* info = nullptr) {
  const Field& F = P.field();
  const auto& cp = P.params();
  const std::uint64_t tq0 = 2 * cp.q0;
  const std::size_t N = P.size();
  constexpr std::uint32_t kUnset = ~0u;
  std::vector<std::uint32_t> perm(N, kUnset);
  std::vector<char> hit(N, 0);
  std::vector<std::uint32_t> sources{PlaceSet::kInfinity};
  for (std::uint32_t id = 1; id < N; ++id) {
    const Point3& p = P.point(id);
    const Element y2 = F.pow(p.y, tq0);
    const Element alpha = F.add(y2, F.pow(p.x, tq0 + 1));
    const Element beta = F.add(F.mul(p.x, y2), F.pow(alpha, tq0));
    if (beta.is_zero()) {
      sources.push_back(id);
      if (info) info->beta_zero.push_back(id);
      continue;
    }
    const Element ib = F.inv(beta);
    auto img = P.find({F.mul(alpha, ib), F.mul(p.y, ib), F.mul(p.t, ib)});
    if (!img) throw GroupActionError("phi image violates a curve equation");
    if (hit[*img]) throw GroupActionError("phi is not injective");
    perm[id] = *img;
    hit[*img] = 1;
  }
  std::vector<std::uint32_t> targets;
  for (std::uint32_t id = 0; id < N; ++id)
    if (!hit[id]) targets.push_back(id);
  if (targets.size() != sources.size() || sources.size() > 8) throw GroupActionError("phi admits no bijective completion");

  std::size_t base_fixed = 0;
  for (std::uint32_t id = 0; id < N; ++id) base_fixed += (perm[id] == id);
  std::vector<std::size_t> order(targets.size());
  std::iota(order.begin(), order.end(), 0);
  std::optional<std::vector<std::uint32_t>> chosen;
  int survivors = 0;
  do {
    std::vector<std::uint32_t> cand = perm;
    std::size_t fixed = base_fixed;
    for (std::size_t k = 0; k < sources.size(); ++k) {
      cand[sources[k]] = targets[order[k]];
      fixed += (sources[k] == targets[order[k]]);
    }
    if (fixed != 1) continue;
    bool invol = true;
    for (std::uint32_t s : sources) invol = invol && cand[cand[s]] == s;
    if (!invol) continue;
    ++survivors;
    chosen = std::move(cand);
  } while (std::next_permutation(order.begin(), order.end()));
  if (survivors != 1) throw GroupActionError("phi completion is not unique (" + std::to_string(survivors) + " candidates)");
  if (info)
    for (std::uint32_t s : sources) info->completed.push_back({s, (*chosen)[s]});
  Automorphism a{std::move(*chosen), "phi"};
  return a;
}

inline std::vector<std::size_t> orbit_sizes(std::size_t n, const std::vector<Automorphism>& gens) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<std::uint32_t(std::uint32_t)> root = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& g : gens)
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto a = root(i), b = root(g.perm[i]);
      if (a != b) parent[a] = b;
    }
  std::unordered_map<std::uint32_t, std::size_t> count;
  for (std::uint32_t i = 0; i < n; ++i) ++count[root(i)];
  std::vector<std::size_t> sizes;
  for (const auto& [k, v] : count) sizes.push_back(v);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::size_t orbit_size_of(std::uint32_t start, const std::vector<Automorphism>& gens) {
  std::unordered_set<std::uint32_t> seen{start};
  std::vector<std::uint32_t> stack{start};
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& g : gens)
      if (seen.insert(g.perm[v]).second) stack.push_back(g.perm[v]);
  }
  return seen.size();
}

// Order of the generated group by explicit closure; throws past `limit` elements.
inline std::size_t group_order(const std::vector<Automorphism>& gens, std::size_t limit = 4096) {
  struct Hash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
      std::size_t h = 1469598103934665603ull;
      for (auto x : v) h = (h ^ x) * 1099511628211ull;
      return h;
    }
  };
  if (gens.empty()) return 1;
  std::unordered_set<std::vector<std::uint32_t>, Hash> seen;
  std::vector<Automorphism> frontier{identity_automorphism(gens.front().perm.size())};
  seen.insert(frontier.front().perm);
  while (!frontier.empty()) {
    std::vector<Automorphism> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Automorphism h = compose(g, e);
        if (seen.insert(h.perm).second) {
          if (seen.size() > limit) throw GroupActionError("group closure exceeded limit");
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

// Random products of generators until one has order divisible by `target`; returns the
// appropriate power, which has order exactly `target`.
inline std::optional<Automorphism> find_element_of_order(const std::vector<Automorphism>& gens, std::uint64_t target,
                                                         std::uint64_t seed = 20240611, int max_tries = 100000) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, 24);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Automorphism w = gens[pick(rng)];
    for (int l = len(rng); l > 1; --l) w = compose(gens[pick(rng)], w);
    const std::uint64_t o = element_order(w);
    if (o % target == 0) {
      Automorphism r = power(w, o / target);
      r.tag = "search";
      return r;
    }
  }
  return std::nullopt;
}

// Field helpers for the q = 8 setting.
struct ActionContext {
  PlaceSet places;
  Element primitive_fq;  // generator of F_q^*
  Element lambda;        // element of exact order m
  std::int64_t r_inv;    // r with r*m = 1 mod (q-1)

  Element delta_for(Element A) const { return places.field().pow(A, static_cast<std::uint64_t>(r_inv)); }
};

inline ActionContext make_action_context(const CurveParams& c, std::optional<std::vector<int>> modulus = std::nullopt) {
  PlaceSet P = PlaceSet::build(c, std::move(modulus));
  const Field& F = P.field();
  Element prim{};
  for (const Element& e : P.subfield()) {
    if (e.is_zero() || e == F.one()) continue;
    bool ok = true;
    for (std::int64_t d = 1; d < c.q - 1; ++d)
      if ((c.q - 1) % d == 0 && F.pow(e, d) == F.one()) ok = false;
    if (ok) {
      prim = e;
      break;
    }
  }
  Element lambda{};
  for (std::uint64_t i = 2; i < F.size(); ++i) {
    const Element e = F.from_index(i);
    if (F.pow(e, c.m) == F.one() && e != F.one()) {
      lambda = e;
      break;
    }
  }
  std::int64_t rinv = 1;
  while ((rinv * c.m) % (c.q - 1) != 1) ++rinv;
  return {std::move(P), prim, lambda, rinv};
}

// Basis of F_q over F_2 (powers of a primitive element).
inline std::vector<Element> fq_basis(const ActionContext& ctx) {
  const Field& F = ctx.places.field();
  std::vector<Element> b;
  Element e = F.one();
  for (int i = 0; i < ctx.places.params().d; ++i) {
    b.push_back(e);
    e = F.mul(e, ctx.primitive_fq);
  }
  return b;
}

// Generators of the stabilizer of the infinite place inside the lifted Suzuki group.
inline std::vector<Automorphism> stabilizer_generators(const ActionContext& ctx) {
  const Field& F = ctx.places.field();
  std::vector<Automorphism> g;
  const Element A = ctx.primitive_fq;
  g.push_back(gen_stabilizer(ctx.places, A, F.zero(), F.zero(), ctx.delta_for(A)));
  for (const Element& b : fq_basis(ctx)) g.push_back(gen_stabilizer(ctx.places, F.one(), b, F.zero(), F.one()));
  for (const Element& c : fq_basis(ctx)) g.push_back(gen_stabilizer(ctx.places, F.one(), F.zero(), c, F.one()));
  return g;
}


struct VerificationRow {
  std::string name;
  std::string cls;
  std::int64_t expected = 0;
  std::int64_t observed = 0;
  bool ok = false;
  std::string detail;
};

struct GroupVerification {
  std::string modulus;
  std::uint64_t seed = 0;
  std::size_t places = 0;
  std::vector<std::size_t> orbits;
  bool orbits_ok = false;
  std::size_t stabilizer_order = 0;
  bool stabilizer_ok = false;
  std::vector<Point3> phi_beta_zero;
  bool phi_ok = false;
  bool gamma_commutes = false;
  bool theta_literal_only_a1 = false;
  std::vector<VerificationRow> rows;

  bool ok() const {
    bool all = orbits_ok && stabilizer_ok && phi_ok && gamma_commutes && theta_literal_only_a1;
    for (const auto& r : rows) all = all && r.ok;
    return all;
  }
};

// Brute-force check of orbit structure and fixed-place counts against the contribution table at q = 8.
inline GroupVerification verify_group(const CurveParams& c, std::optional<std::vector<int>> modulus = std::nullopt,
                                      std::uint64_t seed = 20240611) {
  ActionContext ctx = make_action_context(c, std::move(modulus));
  const PlaceSet& P = ctx.places;
  const Field& F = P.field();
  GroupVerification v;
  v.modulus = F.modulus_string();
  v.seed = seed;
  v.places = P.size();

  const auto stab = stabilizer_generators(ctx);
  PhiCompletion info;
  const Automorphism phi = gen_phi(P, &info);
  const Automorphism gam = gen_gamma(P, ctx.lambda);
  for (auto id : info.beta_zero) v.phi_beta_zero.push_back(P.point(id));
  v.phi_ok = element_order(phi) == 2 && fixed_points(phi) == 1;

  std::vector<Automorphism> lifted = stab;
  lifted.push_back(phi);
  std::vector<Automorphism> all = lifted;
  all.push_back(gam);
  v.orbits = orbit_sizes(P.size(), all);
  const std::size_t q = static_cast<std::size_t>(c.q);
  v.orbits_ok = v.orbits == std::vector<std::size_t>{q * q + 1, P.size() - (q * q + 1)};
  v.stabilizer_order = group_order(stab);
  v.stabilizer_ok = v.stabilizer_order == q * q * (q - 1);
  v.gamma_commutes = true;
  for (const auto& g : lifted) v.gamma_commutes = v.gamma_commutes && commute(g, gam);

  v.theta_literal_only_a1 = literal_theta_preserves(P, F.one(), F.one(), F.zero());
  for (const Element& a : P.subfield())
    if (!a.is_zero() && a != F.one()) v.theta_literal_only_a1 = v.theta_literal_only_a1 && !literal_theta_preserves(P, a, F.zero(), F.zero());

  auto add_row = [&](std::string name, ClassTag tag, bool twisted, const Automorphism& g, std::string detail = "") {
    VerificationRow r;
    r.name = std::move(name);
    r.cls = tag_name(tag) + (twisted ? "*tau^k" : "");
    const bool wild = tag == ClassTag::Order2 || tag == ClassTag::Order4;
    r.expected = wild ? 1 : static_cast<std::int64_t>(i_sigma({true, tag, twisted}, c));
    r.observed = static_cast<std::int64_t>(fixed_points(g));
    r.ok = r.expected == r.observed;
    r.detail = std::move(detail);
    v.rows.push_back(std::move(r));
  };

  for (std::uint64_t k = 1; k < static_cast<std::uint64_t>(c.m); ++k)
    add_row("tau^" + std::to_string(k), ClassTag::TauPower, false, power(gam, k));

  const Element A = ctx.primitive_fq;
  const Automorphism s7 = gen_stabilizer(P, A, F.zero(), F.zero(), ctx.delta_for(A));
  const Element b = fq_basis(ctx).back();
  const Automorphism s2 = gen_stabilizer(P, F.one(), F.zero(), b, F.one());
  const Automorphism s4 = gen_stabilizer(P, F.one(), b, F.one(), F.one());
  const auto s13 = find_element_of_order(lifted, static_cast<std::uint64_t>(c.q + 2 * c.q0 + 1), seed);
  const auto s5 = find_element_of_order(lifted, static_cast<std::uint64_t>(c.m), seed);
  if (!s13 || !s5) throw GroupActionError("random search did not produce the requested element orders");

  add_row("order " + std::to_string(element_order(s7)) + " (A primitive)", ClassTag::DivQMinus1, false, s7);
  add_row("order " + std::to_string(element_order(s2)) + " (1,0,c,1)", ClassTag::Order2, false, s2);
  add_row("order " + std::to_string(element_order(s4)) + " (1,b,c,1), b != 0", ClassTag::Order4, false, s4);
  add_row("phi (order " + std::to_string(element_order(phi)) + ")", ClassTag::Order2, false, phi);
  add_row("order " + std::to_string(element_order(*s13)), ClassTag::DivQPlus2q0Plus1, false, *s13);
  add_row("order " + std::to_string(element_order(*s5)), ClassTag::DivMPlain, false, *s5);
  for (std::uint64_t j = 1; j < static_cast<std::uint64_t>(c.m); ++j) {
    const Automorphism gj = power(gam, j);
    const std::string tw = " * tau^" + std::to_string(j);
    add_row("order 7" + tw, ClassTag::DivQMinus1, true, compose(s7, gj));
    add_row("order 2" + tw, ClassTag::Order2, true, compose(s2, gj));
    add_row("order 4" + tw, ClassTag::Order4, true, compose(s4, gj));
    add_row("order 13" + tw, ClassTag::DivQPlus2q0Plus1, true, compose(*s13, gj));
  }

  // sigma of order m: exactly one j should give the special value, all others 0
  VerificationRow sp;
  sp.name = "order 5 * tau^j, special j";
  sp.cls = tag_name(ClassTag::DivMSpecialJ);
  sp.expected = static_cast<std::int64_t>(i_sigma({true, ClassTag::DivMSpecialJ, true}, c));
  std::int64_t hits = 0, others_zero = 1, sum = 0;
  std::string counts;
  for (std::uint64_t j = 1; j < static_cast<std::uint64_t>(c.m); ++j) {
    const auto f = static_cast<std::int64_t>(fixed_points(compose(*s5, power(gam, j))));
    sum += f;
    counts += (counts.empty() ? "" : ",") + std::to_string(f);
    if (f == sp.expected) ++hits;
    else if (f != 0) others_zero = 0;
  }
  sp.observed = hits == 1 ? sp.expected : 0;
  sp.ok = hits == 1 && others_zero;
  sp.detail = "fixed counts for j=1.." + std::to_string(c.m - 1) + ": " + counts + " (sum " + std::to_string(sum) + ")";
  v.rows.push_back(std::move(sp));
  return v;
}

}  // namespace maxcurve

#endif  // MAXCURVE_GROUP_ACTION_HPP
