#ifndef MAXCURVE_CURVE_MODELS_HPP
#define MAXCURVE_CURVE_MODELS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace maxcurve {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

enum class Family { SuzukiBase, SuzukiCover, ReeBase, ReeCover };

inline bool is_suzuki(Family f) { return f == Family::SuzukiBase || f == Family::SuzukiCover; }
inline bool is_cover(Family f) { return f == Family::SuzukiCover || f == Family::ReeCover; }

inline std::string family_name(Family f) {
  switch (f) {
    case Family::SuzukiBase: return "suzuki-base";
    case Family::SuzukiCover: return "suzuki-cover";
    case Family::ReeBase: return "ree-base";
    case Family::ReeCover: return "ree-cover";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "suzuki-base") return Family::SuzukiBase;
  if (s == "suzuki-cover") return Family::SuzukiCover;
  if (s == "ree-base") return Family::ReeBase;
  if (s == "ree-cover") return Family::ReeCover;
  return std::nullopt;
}

struct CurveParams {
  Family family = Family::SuzukiCover;
  int s = 1;
  int p = 2;          // characteristic
  int d = 3;          // q = p^d, d = 2s+1
  std::int64_t q0 = 2;
  std::int64_t q = 8;
  std::int64_t m = 5;

  bool suzuki() const { return is_suzuki(family); }
};

inline CurveParams params_from_s(Family family, int s) {
  if (s < 1 || s > 9) throw std::invalid_argument("s must be in [1, 9]");
  CurveParams c;
  c.family = family;
  c.s = s;
  c.p = is_suzuki(family) ? 2 : 3;
  c.d = 2 * s + 1;
  c.q0 = 1;
  for (int i = 0; i < s; ++i) c.q0 *= c.p;
  c.q = c.p * c.q0 * c.q0;
  c.m = c.q - c.p * c.q0 + 1;
  const BigInt q = c.q, q0 = c.q0;
  if (c.suzuki()) {
    if ((q * q + 1) != (q + 2 * q0 + 1) * (q - 2 * q0 + 1)) throw std::logic_error("Suzuki factorization");
    if ((q * q + 1) % c.m != 0) throw std::logic_error("m does not divide q^2+1");
  } else {
    if ((q * q * q + 1) != (q + 1) * (q + 3 * q0 + 1) * (q - 3 * q0 + 1)) throw std::logic_error("Ree factorization");
    if ((q * q * q + 1) % c.m != 0) throw std::logic_error("m does not divide q^3+1");
  }
  return c;
}

inline CurveParams with_family(CurveParams c, Family f) {
  if (is_suzuki(f) != c.suzuki()) throw std::invalid_argument("family mismatch");
  c.family = f;
  return c;
}

inline BigInt genus(const CurveParams& c) {
  const BigInt q = c.q, q0 = c.q0;
  switch (c.family) {
    case Family::SuzukiBase: return q0 * (q - 1);
    case Family::SuzukiCover: return (q * q * q - 2 * q * q + q) / 2;
    case Family::ReeBase: return 3 * q0 * (q - 1) * (q + q0 + 1) / 2;
    case Family::ReeCover: return (q * q * q * q - 2 * q * q * q + q) / 2;
  }
  return 0;
}

// 2g - 2 of the cover curve
inline BigInt cover_two_g_minus_2(const CurveParams& c) {
  const BigInt q = c.q;
  return c.suzuki() ? (q * q + 1) * (q - 2) : (q * q * q + 1) * (q - 2);
}

// number of places over the rational place set of the base curve: q^2+1 or q^3+1
inline BigInt rational_place_count(const CurveParams& c) {
  const BigInt q = c.q;
  return c.suzuki() ? q * q + 1 : q * q * q + 1;
}

class NotASquare : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline BigInt hasse_weil_target(const BigInt& ell, const BigInt& g) {
  const BigInt r = boost::multiprecision::sqrt(ell);
  if (r * r != ell) throw NotASquare("field size is not a perfect square");
  return ell + 1 + 2 * g * r;
}

struct HermitianCoverRecord {
  BigInt delta;
  bool in_window = false;
  bool excluded = false;
  BigInt hermitian_two_g_minus_2;
  BigInt quotient_two_g_minus_2;  // (hermitian 2g-2 - delta) / |G|, exact by construction
};

// Quotients of the Hermitian curve H_{q^2} (Suzuki) or H_{q^3} (Ree) by G that would be
// isomorphic to the cover curve; delta is forced by Riemann-Hurwitz.
inline HermitianCoverRecord hermitian_cover_analysis(const CurveParams& c, const BigInt& group_order) {
  if (!is_cover(c.family)) throw std::invalid_argument("hermitian_cover_analysis needs a cover family");
  if (group_order < 1) throw std::invalid_argument("group order must be positive");
  const BigInt q = c.q;
  HermitianCoverRecord rec;
  if (c.suzuki()) {
    rec.hermitian_two_g_minus_2 = q * q * q * q - q * q - 2;
    rec.delta = rec.hermitian_two_g_minus_2 - group_order * (q * q * q - 2 * q * q + q - 2);
    rec.in_window = (q + 1 <= group_order) && (group_order <= q + 2);
  } else {
    rec.hermitian_two_g_minus_2 = q * q * q * q * q * q - q * q * q - 2;
    rec.delta = rec.hermitian_two_g_minus_2 - group_order * (q * q * q * q - 2 * q * q * q + q - 2);
    rec.in_window = (q * q + q + 1 <= group_order) && (group_order <= q * q + 2 * q + 4);
    rec.excluded = (group_order == q * q + q + 1) || (group_order == q * q + 2 * q + 1);
  }
  rec.quotient_two_g_minus_2 = (rec.hermitian_two_g_minus_2 - rec.delta) / group_order;
  return rec;
}

}  // namespace maxcurve

#endif  // MAXCURVE_CURVE_MODELS_HPP
