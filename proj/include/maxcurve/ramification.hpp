#ifndef MAXCURVE_RAMIFICATION_HPP
#define MAXCURVE_RAMIFICATION_HPP

#include "maxcurve/curve_models.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maxcurve {

enum class ClassTag {
  TauPower,
  Order2,
  Order4,
  Order3Central,
  Order3NonCentral,
  Order9,
  Order6,
  DivQMinus1,
  DivQPlus1,
  DivQPlus2q0Plus1,
  DivQPlus3q0Plus1,
  DivMPlain,
  DivMSpecialJ,
};

inline std::string tag_name(ClassTag t) {
  switch (t) {
    case ClassTag::TauPower: return "tau_power";
    case ClassTag::Order2: return "order2";
    case ClassTag::Order4: return "order4";
    case ClassTag::Order3Central: return "order3_central";
    case ClassTag::Order3NonCentral: return "order3_noncentral";
    case ClassTag::Order9: return "order9";
    case ClassTag::Order6: return "order6";
    case ClassTag::DivQMinus1: return "div_q_minus_1";
    case ClassTag::DivQPlus1: return "div_q_plus_1";
    case ClassTag::DivQPlus2q0Plus1: return "div_q_plus_2q0_plus_1";
    case ClassTag::DivQPlus3q0Plus1: return "div_q_plus_3q0_plus_1";
    case ClassTag::DivMPlain: return "div_m_plain";
    case ClassTag::DivMSpecialJ: return "div_m_special_j";
  }
  return "?";
}

// sigma in the lifted simple group (twisted = false) or sigma * tau^k with tau^k != id (twisted = true)
struct ContributionClass {
  bool suzuki = true;
  ClassTag tag = ClassTag::TauPower;
  bool twisted = false;
};

class UnknownClass : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool class_exists(const ContributionClass& c) {
  using T = ClassTag;
  if (c.tag == T::TauPower) return !c.twisted;
  if (c.tag == T::DivMPlain || c.tag == T::DivMSpecialJ) return true;
  if (c.suzuki) {
    return c.tag == T::Order2 || c.tag == T::Order4 || c.tag == T::DivQMinus1 || c.tag == T::DivQPlus2q0Plus1;
  }
  return c.tag == T::Order3Central || c.tag == T::Order3NonCentral || c.tag == T::Order9 || c.tag == T::Order2 ||
         c.tag == T::Order6 || c.tag == T::DivQMinus1 || c.tag == T::DivQPlus1 || c.tag == T::DivQPlus3q0Plus1;
}

// i(sigma). For div_m_special_j this is the value of the single special pair; the other
// products sigma * tau^j with sigma of order dividing m contribute 0 (div_m_plain).
inline BigInt i_sigma(const ContributionClass& c, const CurveParams& p) {
  if (!class_exists(c) || c.suzuki != p.suzuki()) throw UnknownClass("unknown contribution class " + tag_name(c.tag));
  const BigInt q = p.q, q0 = p.q0, m = p.m;
  using T = ClassTag;
  if (c.suzuki) {
    switch (c.tag) {
      case T::TauPower: return q * q + 1;
      case T::Order2: return c.twisted ? BigInt(1) : m * (2 * q0 + 1) + 1;
      case T::Order4: return c.twisted ? BigInt(1) : m + 1;
      case T::DivQMinus1: return 2;
      case T::DivQPlus2q0Plus1: return 0;
      case T::DivMPlain: return 0;
      case T::DivMSpecialJ: return 4 * m;
      default: break;
    }
  } else {
    switch (c.tag) {
      case T::TauPower: return q * q * q + 1;
      case T::Order3Central: return c.twisted ? BigInt(1) : q * q - q + 2;
      case T::Order3NonCentral: return c.twisted ? BigInt(1) : q * q - q + 2 - m * q;
      case T::Order9: return c.twisted ? BigInt(1) : m + 1;
      case T::Order2: return q + 1;
      case T::Order6: return 1;
      case T::DivQMinus1: return 2;
      case T::DivQPlus1: return 0;
      case T::DivQPlus3q0Plus1: return 0;
      case T::DivMPlain: return 0;
      case T::DivMSpecialJ: return 6 * m;
      default: break;
    }
  }
  throw UnknownClass("unknown contribution class " + tag_name(c.tag));
}

struct FiltrationStep {
  std::string label;
  BigInt order;       // |G^{(i)}| on this stretch
  BigInt last_index;  // last i at which this subgroup is G^{(i)}
};

using RamificationFiltration = std::vector<FiltrationStep>;

// Lower ramification groups at the infinite place for i >= 1 (G^{(0)} is the full stabilizer).
inline RamificationFiltration filtration(const CurveParams& p) {
  const BigInt q = p.q, q0 = p.q0, m = p.m;
  RamificationFiltration f;
  if (p.suzuki()) {
    f.push_back({"sylow2", q * q, m});
    f.push_back({"involutions", q, m * (2 * q0 + 1)});
    if (m * (2 * q0 + 1) != q * q + 1 - m * q) throw std::logic_error("Suzuki filtration bound");
  } else {
    f.push_back({"T", q * q * q, m});
    f.push_back({"T'", q * q, m * (3 * q0 + 1)});
    f.push_back({"Z(T)", q, m * (q + 3 * q0 + 1)});
    if (m * (q + 3 * q0 + 1) != q * q - q + 1) throw std::logic_error("Ree filtration bound");
  }
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i].last_index <= f[i - 1].last_index) throw std::logic_error("filtration indices not increasing");
  return f;
}

// i(sigma) for a wild sigma whose deepest filtration group is step `level`:
// sigma lies in G^{(0)}, ..., G^{(last_index(level))}.
inline BigInt i_from_filtration(const RamificationFiltration& f, std::size_t level) {
  return f.at(level).last_index + 1;
}

using Composition = std::vector<std::pair<ContributionClass, BigInt>>;

inline BigInt delta_from_composition(const Composition& comp, const CurveParams& p) {
  BigInt d = 0;
  for (const auto& [cls, mult] : comp) {
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    d += mult * i_sigma(cls, p);
  }
  return d;
}

class RhError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline std::optional<BigInt> try_genus_from_rh(const BigInt& two_g_minus_2_cover, const BigInt& order, const BigInt& delta) {
  if (order < 1) return std::nullopt;
  const BigInt num = two_g_minus_2_cover - delta + 2 * order;
  if (num % (2 * order) != 0) return std::nullopt;
  BigInt g = num / (2 * order);
  if (g < 0) return std::nullopt;
  return g;
}

inline BigInt genus_from_rh(const BigInt& two_g_minus_2_cover, const BigInt& order, const BigInt& delta) {
  auto g = try_genus_from_rh(two_g_minus_2_cover, order, delta);
  if (!g) throw RhError("Riemann-Hurwitz gives a non-integral or negative genus");
  return *g;
}

inline BigInt delta_tame_general(const BigInt& l_cm, const BigInt& n1, const BigInt& n2, const CurveParams& p) {
  if (l_cm < 1 || BigInt(p.m) % l_cm != 0) throw std::invalid_argument("|L cap C_m| must divide m");
  return (l_cm - 1) * rational_place_count(p) + l_cm * n1 + l_cm * n2;
}

// g_L - g_{bar L} for tame L whose nontrivial image elements fix only places of the non-tame orbit
inline Rational tame_genus_shift(const BigInt& l_cm, const BigInt& order, const CurveParams& p) {
  const BigInt q = p.q, q0 = p.q0;
  BigInt num;
  if (p.suzuki()) num = (q * q + 1) * (q - l_cm - 1) - 2 * l_cm * (q0 * q - q0 - 1);
  else num = (q * q * q + 1) * (q - 1) - l_cm * (q * q * q + 3 * q0 * q * q + q * q - q - 3 * q0 - 1);
  return Rational(num, 2 * order);
}

// Delta_L for tame L containing C_m, from the total number of nontrivial fixed-place relations of bar L
// on the base curve's rational places over the maximality field
inline BigInt delta_tame_containing_cm(const BigInt& base_fixed_relations, const CurveParams& p) {
  const BigInt q = p.q, q0 = p.q0;
  if (p.suzuki()) return (q - 2 * q0) * (q * q + 1) + (q - 2 * q0 + 1) * base_fixed_relations;
  return (q - 3 * q0) * (q * q * q + 1) + (q - 3 * q0 + 1) * base_fixed_relations;
}

}  // namespace maxcurve

#endif  // MAXCURVE_RAMIFICATION_HPP
