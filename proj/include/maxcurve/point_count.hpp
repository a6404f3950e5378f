#ifndef MAXCURVE_POINT_COUNT_HPP
#define MAXCURVE_POINT_COUNT_HPP

#include "maxcurve/curve_models.hpp"
#include "maxcurve/gf.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace maxcurve {

class OutOfScope : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CountOptions {
  int threads = 1;
  bool allow_long = false;
  std::optional<std::vector<int>> modulus;  // override the default modulus of GF(p^(d r))
};

struct CountReport {
  CurveParams params;
  int r = 1;
  std::uint64_t ell = 0;
  std::uint64_t count = 0;
  std::optional<BigInt> target;  // absent when ell is not a square
  bool is_maximal = false;
  std::string note;
  std::string modulus;
  int threads = 1;
  double seconds = 0.0;
};

// Desk-scale guard. Returns an empty string when allowed.
inline std::string count_scope_problem(const CurveParams& c, int r, bool allow_long) {
  if (c.suzuki()) {
    if (c.q != 8 && c.q != 32) return "Suzuki counts are supported for q in {8, 32}";
    if (r != 1 && r != 2 && r != 4) return "Suzuki counts are supported for r in {1, 2, 4}";
    return {};
  }
  if (c.q != 27) return "Ree counts are supported for q = 27";
  if (r == 6) return allow_long ? std::string{} : "the F_{q^6} Ree count is long-running and needs --long";
  if (r != 1 && r != 2 && r != 3) return "Ree counts are supported for r in {1, 2, 3} (6 with --long)";
  return {};
}

namespace detail {

struct CountKernel {
  const Field& F;
  const CurveParams& c;
  LinearMap frob_q;   // x -> x^q
  LinearMap frob_q0;  // x -> x^q0
  const LinearMap& trace_q;
  std::uint64_t q;
  std::uint64_t residue_exp;
  std::uint64_t roots;  // gcd(m, ell - 1)

  CountKernel(const Field& field, const CurveParams& cp)
      : F(field),
        c(cp),
        frob_q(field.frobenius_map(cp.d)),
        frob_q0(field.frobenius_map(cp.s)),
        trace_q(field.trace_map(cp.d)),
        q(static_cast<std::uint64_t>(cp.q)) {
    const std::uint64_t m = static_cast<std::uint64_t>(cp.m);
    roots = std::gcd(m, field.size() - 1);
    residue_exp = (field.size() - 1) / roots;
  }

  std::uint64_t at(Element x) const {
    const Element s = F.sub(frob_q.apply(x), x);  // x^q - x (= x^q + x in char 2)
    const Element xq0 = frob_q0.apply(x);
    if (!trace_q.apply(F.mul(xq0, s)).is_zero()) return 0;
    std::uint64_t mult = q;
    if (!c.suzuki()) {
      if (!trace_q.apply(F.mul(F.sqr(xq0), s)).is_zero()) return 0;
      mult *= q;
    }
    if (!is_cover(c.family)) return mult;
    if (s.is_zero()) return mult;
    return F.pow(s, residue_exp) == F.one() ? mult * roots : 0;
  }
};

}  // namespace detail

inline int default_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

inline CountReport count_points(const CurveParams& c, int r, const CountOptions& opt = {}) {
  if (const auto why = count_scope_problem(c, r, opt.allow_long); !why.empty()) throw OutOfScope(why);
  const auto t0 = std::chrono::steady_clock::now();
  const Field F = make_field(c.p, c.d * r, opt.modulus);
  const detail::CountKernel kernel(F, c);

  const std::uint64_t total = F.size();
  const int T = std::max(1, std::min<int>(opt.threads, 256));
  std::vector<std::uint64_t> partial(T, 0);
  auto work = [&](int id) {
    const std::uint64_t lo = total * id / T;
    const std::uint64_t hi = total * (id + 1) / T;
    Element x = F.from_index(lo);
    std::uint64_t acc = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      acc += kernel.at(x);
      x = F.next(x);
    }
    partial[id] = acc;
  };
  if (T == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int id = 0; id < T; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }

  CountReport rep;
  rep.params = c;
  rep.r = r;
  rep.ell = total;
  rep.count = 1;
  for (auto v : partial) rep.count += v;
  rep.modulus = F.modulus_string();
  rep.threads = T;
  try {
    rep.target = hasse_weil_target(BigInt(total), genus(c));
    if (BigInt(rep.count) > *rep.target) throw std::logic_error("count exceeds the Hasse-Weil bound");
    rep.is_maximal = (BigInt(rep.count) == *rep.target);
  } catch (const NotASquare&) {
    rep.note = "field size is not a square; maximality is not defined";
    rep.is_maximal = false;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline bool verify_maximal(const CurveParams& c, int r, const CountOptions& opt = {}) {
  return count_points(c, r, opt).is_maximal;
}

// Affine solutions over F_q lying on t = 0, by exhaustive search over F_q.
inline std::uint64_t count_affine_t0_over_fq(const CurveParams& c) {
  const Field F = make_field(c.p, c.d);
  const auto q = static_cast<std::uint64_t>(c.q);
  const auto powq0 = [&](Element a) { return F.pow(a, static_cast<std::uint64_t>(c.q0)); };
  std::uint64_t n = 0;
  for (std::uint64_t ix = 0; ix < q; ++ix) {
    const Element x = F.from_index(ix);
    const Element s = F.sub(F.pow(x, q), x);
    if (!s.is_zero()) continue;  // t = 0 forces x^q = x
    const Element rhs_y = F.mul(powq0(x), s);
    const Element rhs_z = F.mul(F.sqr(powq0(x)), s);
    std::uint64_t ny = 0, nz = 0;
    for (std::uint64_t iy = 0; iy < q; ++iy) {
      const Element y = F.from_index(iy);
      const Element lhs = F.sub(F.pow(y, q), y);
      if (lhs == rhs_y) ++ny;
      if (lhs == rhs_z) ++nz;
    }
    n += c.suzuki() ? ny : ny * nz;
  }
  return n;
}

}  // namespace maxcurve

#endif  // MAXCURVE_POINT_COUNT_HPP
