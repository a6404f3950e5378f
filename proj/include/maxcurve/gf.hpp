#ifndef MAXCURVE_GF_HPP
#define MAXCURVE_GF_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxcurve {

// Field element. Characteristic 2: coefficient i is bit i of lo.
// Characteristic 3: two bitplanes, trit 1 sets bit i of lo, trit 2 sets bit i of hi.
struct Element {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  friend bool operator==(const Element&, const Element&) = default;
  bool is_zero() const { return (lo | hi) == 0; }
};

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// dense polynomials over GF(p), constant term first, no trailing zeros
using Poly = std::vector<int>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& f, int p) {
  trim(a);
  const int df = static_cast<int>(f.size()) - 1;
  const int inv_lead = (f.back() == 1) ? 1 : 2;  // p in {2,3}
  while (static_cast<int>(a.size()) - 1 >= df) {
    const int shift = static_cast<int>(a.size()) - 1 - df;
    const int c = (a.back() * inv_lead) % p;
    for (int i = 0; i <= df; ++i) a[shift + i] = ((a[shift + i] - c * f[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), f, p);
}

inline Poly poly_sub(Poly a, const Poly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  trim(a);
  return a;
}

inline Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^e) mod f
inline Poly frobenius_power_of_x(const Poly& f, int p, unsigned e) {
  Poly r = poly_mod({0, 1}, f, p);
  for (unsigned i = 0; i < e; ++i) {
    Poly acc{1};
    for (int j = 0; j < p; ++j) acc = poly_mulmod(acc, r, f, p);
    r = std::move(acc);
  }
  return r;
}

inline std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

// Rabin irreducibility test for a monic polynomial of degree k over GF(p).
inline bool is_irreducible(const std::vector<int>& modulus, int p) {
  detail::Poly f = modulus;
  detail::trim(f);
  if (f.size() < 2) return false;
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  if (f[0] == 0) return false;
  const detail::Poly x{0, 1};
  if (detail::poly_sub(detail::frobenius_power_of_x(f, p, k), x, p).size() != 0) return false;
  for (unsigned r : detail::prime_factors(k)) {
    auto g = detail::poly_gcd(f, detail::poly_sub(detail::frobenius_power_of_x(f, p, k / r), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// First irreducible found scanning lower-term weight 1,2,3,... then positions, then coefficients.
inline std::vector<int> default_modulus(int p, int k) {
  if (k == 1) return {0, 1};
  std::vector<int> f(k + 1, 0);
  f[k] = 1;
  for (int weight = 1; weight <= k; ++weight) {
    // positions: 0 is always included, others chosen ascending
    std::vector<int> pos(weight);
    std::vector<int> idx(weight - 1);
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
      pos[0] = 0;
      for (int i = 1; i < weight; ++i) pos[i] = idx[i - 1];
      const int ncoef = static_cast<int>(detail::ipow(p - 1, weight));
      for (int cc = 0; cc < ncoef; ++cc) {
        int t = cc;
        std::fill(f.begin(), f.end() - 1, 0);
        for (int i = weight - 1; i >= 0; --i) {
          f[pos[i]] = 1 + t % (p - 1);
          t /= (p - 1);
        }
        if (is_irreducible(f, p)) return f;
      }
      // next combination of weight-1 values from [1, k-1]
      int i = weight - 2;
      while (i >= 0 && idx[i] == k - 1 - (weight - 2 - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < weight - 1; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw FieldError("no irreducible polynomial found");
}

class Field;

// GF(p)-linear endomorphism stored by the images of the basis vectors.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(int p, std::vector<Element> cols) : p_(p), cols_(std::move(cols)) {}

  Element apply(Element e) const {
    if (p_ == 2) {
      std::uint32_t r = 0;
      for (std::uint32_t bits = e.lo; bits; bits &= bits - 1) r ^= cols_[std::countr_zero(bits)].lo;
      return {r, 0};
    }
    Element r{};
    for (std::uint32_t bits = e.lo; bits; bits &= bits - 1) r = add3(r, cols_[std::countr_zero(bits)]);
    for (std::uint32_t bits = e.hi; bits; bits &= bits - 1) r = sub3(r, cols_[std::countr_zero(bits)]);
    return r;
  }

  static Element add3(Element x, Element y) {
    const std::uint32_t t = (x.lo | y.hi) ^ (x.hi | y.lo);
    return {(x.hi | y.hi) ^ t, (x.lo | y.lo) ^ t};
  }
  static Element neg3(Element x) { return {x.hi, x.lo}; }
  static Element sub3(Element x, Element y) { return add3(x, neg3(y)); }

 private:
  int p_ = 2;
  std::vector<Element> cols_;
};

class Field {
 public:
  static Field make(int p, int k, std::optional<std::vector<int>> modulus = std::nullopt) {
    if (p != 2 && p != 3) throw FieldError("unsupported characteristic " + std::to_string(p));
    if (k < 1 || (p == 2 && k > 20) || (p == 3 && k > 18))
      throw FieldError("unsupported degree " + std::to_string(k) + " for p=" + std::to_string(p));
    std::vector<int> f = modulus ? *modulus : default_modulus(p, k);
    for (int& c : f) c = ((c % p) + p) % p;
    detail::trim(f);
    if (static_cast<int>(f.size()) != k + 1 || f.back() != 1) throw FieldError("modulus must be monic of degree k");
    if (!is_irreducible(f, p)) throw FieldError("modulus is reducible");
    return Field(p, k, std::move(f));
  }

  int p() const { return p_; }
  int k() const { return k_; }
  std::uint64_t size() const { return size_; }
  const std::vector<int>& modulus() const { return modulus_; }

  std::string modulus_string() const {
    std::string out;
    for (int i = k_; i >= 0; --i) {
      const int c = modulus_[i];
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      if (c != 1 || i == 0) out += std::to_string(c);
      if (i > 0) out += (c != 1 ? "*x" : "x");
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

  Element zero() const { return {}; }
  Element one() const { return {1u, 0u}; }

  Element from_int(long long c) const {
    const int r = static_cast<int>(((c % p_) + p_) % p_);
    if (r == 0) return {};
    return r == 1 ? Element{1u, 0u} : Element{0u, 1u};
  }

  // index = sum c_i p^i; iteration by increasing index is the canonical field order
  Element from_index(std::uint64_t idx) const {
    if (p_ == 2) return {static_cast<std::uint32_t>(idx), 0};
    Element e{};
    for (int i = 0; i < k_; ++i) {
      const auto d = idx % 3;
      idx /= 3;
      if (d == 1) e.lo |= 1u << i;
      if (d == 2) e.hi |= 1u << i;
    }
    return e;
  }

  std::uint64_t index(Element e) const {
    if (p_ == 2) return e.lo;
    std::uint64_t idx = 0;
    for (int i = k_ - 1; i >= 0; --i) idx = idx * 3 + ((e.lo >> i) & 1u) + 2 * ((e.hi >> i) & 1u);
    return idx;
  }

  // successor in index order (wraps to zero)
  Element next(Element e) const {
    if (p_ == 2) return {(e.lo + 1) & mask_, 0};
    for (int i = 0; i < k_; ++i) {
      const std::uint32_t b = 1u << i;
      if (e.lo & b) {
        e.lo &= ~b;
        e.hi |= b;
        return e;
      }
      if (e.hi & b) {
        e.hi &= ~b;
        continue;
      }
      e.lo |= b;
      return e;
    }
    return e;
  }

  std::vector<int> coeffs(Element e) const {
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i) c[i] = ((e.lo >> i) & 1u) + 2 * ((e.hi >> i) & 1u);
    return c;
  }

  Element from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > k_) throw FieldError("too many coefficients");
    Element e{};
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int d = ((c[i] % p_) + p_) % p_;
      if (d == 1) e.lo |= 1u << i;
      if (d == 2) e.hi |= 1u << i;
    }
    return e;
  }

  Element add(Element a, Element b) const {
    if (p_ == 2) return {a.lo ^ b.lo, 0};
    return LinearMap::add3(a, b);
  }
  Element neg(Element a) const { return p_ == 2 ? a : LinearMap::neg3(a); }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    if (p_ == 2) {
      std::uint64_t prod = 0;
      const std::uint64_t aa = a.lo;
      for (std::uint32_t bits = b.lo; bits; bits &= bits - 1) prod ^= aa << std::countr_zero(bits);
      for (int bit = 2 * k_ - 2; bit >= k_; --bit)
        if ((prod >> bit) & 1u) prod ^= full2_ << (bit - k_);
      return {static_cast<std::uint32_t>(prod), 0};
    }
    Element r{};
    const std::uint32_t top = 1u << k_;
    for (int i = k_ - 1; i >= 0; --i) {
      r.lo <<= 1;
      r.hi <<= 1;
      if (r.lo & top) {
        r.lo &= ~top;
        r = LinearMap::add3(r, neg_low3_);
      } else if (r.hi & top) {
        r.hi &= ~top;
        r = LinearMap::add3(r, low3_);
      }
      if ((b.lo >> i) & 1u) r = LinearMap::add3(r, a);
      else if ((b.hi >> i) & 1u) r = LinearMap::sub3(r, a);
    }
    return r;
  }

  Element sqr(Element a) const { return mul(a, a); }

  // fixed-window (4 bit) exponentiation; exponent reduced modulo p^k - 1 for nonzero bases
  Element pow(Element a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.is_zero()) return zero();
    e %= (size_ - 1);
    if (e == 0) return one();
    Element table[16];
    table[0] = one();
    for (int i = 1; i < 16; ++i) table[i] = mul(table[i - 1], a);
    const int nbits = 64 - std::countl_zero(e);
    int shift = ((nbits + 3) / 4) * 4 - 4;
    Element r = table[(e >> shift) & 15u];
    for (shift -= 4; shift >= 0; shift -= 4) {
      r = sqr(sqr(sqr(sqr(r))));
      const unsigned w = (e >> shift) & 15u;
      if (w) r = mul(r, table[w]);
    }
    return r;
  }

  Element inv(Element a) const {
    if (a.is_zero()) throw FieldError("inverse of zero");
    return pow(a, size_ - 2);
  }

  Element div(Element a, Element b) const {
    if (b.is_zero()) throw FieldError("division by zero");
    return mul(a, inv(b));
  }

  // e -> e^(p^j) as a precomputed linear map
  LinearMap frobenius_map(int j) const {
    std::vector<Element> cols(k_);
    for (int i = 0; i < k_; ++i) {
      Element e{1u << i, 0};
      for (int t = 0; t < j % k_; ++t) e = frob_.apply(e);
      cols[i] = e;
    }
    return LinearMap(p_, std::move(cols));
  }

  Element frobenius(Element e) const { return frob_.apply(e); }

  const LinearMap& trace_map(int sub_degree) const {
    if (sub_degree < 1 || k_ % sub_degree != 0)
      throw FieldError("subfield degree " + std::to_string(sub_degree) + " does not divide " + std::to_string(k_));
    return traces_[sub_degree];
  }

  Element subfield_trace(Element e, int sub_degree) const { return trace_map(sub_degree).apply(e); }

  bool in_subfield(Element e, int d) const {
    Element x = e;
    for (int i = 0; i < d; ++i) x = frob_.apply(x);
    return x == e;
  }

  // degree d with p^d = qsub, or -1
  int log_p(std::uint64_t qsub) const {
    int d = 0;
    std::uint64_t v = 1;
    while (v < qsub) {
      v *= static_cast<std::uint64_t>(p_);
      ++d;
    }
    return v == qsub ? d : -1;
  }

  // number of y in the field with y^q - y = c (y^q + y = c in characteristic 2)
  std::uint64_t artin_schreier_count(Element c, std::uint64_t qsub) const {
    const int d = log_p(qsub);
    if (d < 1 || k_ % d != 0) throw FieldError("subfield size " + std::to_string(qsub) + " not contained in the field");
    return subfield_trace(c, d).is_zero() ? qsub : 0;
  }

  // t^m = s, for m dividing p^k - 1
  std::uint64_t mth_root_count(Element s, std::uint64_t m) const {
    if (m == 0 || (size_ - 1) % m != 0)
      throw FieldError(std::to_string(m) + " does not divide " + std::to_string(size_ - 1));
    if (s.is_zero()) return 1;
    return pow(s, (size_ - 1) / m) == one() ? m : 0;
  }

  // t^m = s for arbitrary m >= 1; gcd(m, p^k - 1) roots when s is a power residue
  std::uint64_t kummer_count(Element s, std::uint64_t m) const {
    if (m == 0) throw FieldError("m must be positive");
    if (s.is_zero()) return 1;
    const std::uint64_t g = std::gcd(m, size_ - 1);
    return pow(s, (size_ - 1) / g) == one() ? g : 0;
  }

 private:
  Field(int p, int k, std::vector<int> f) : p_(p), k_(k), modulus_(std::move(f)) {
    size_ = detail::ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(k));
    mask_ = (k >= 32) ? ~0u : ((1u << k) - 1u);
    if (p == 2) {
      for (int i = 0; i <= k; ++i)
        if (modulus_[i]) full2_ |= std::uint64_t{1} << i;
    } else {
      std::vector<int> low(modulus_.begin(), modulus_.begin() + k);
      low3_ = from_coeffs(low);
      neg_low3_ = LinearMap::neg3(low3_);
    }
    std::vector<Element> cols(k);
    for (int i = 0; i < k; ++i) {
      Element e{1u << i, 0};
      Element r = one();
      for (int t = 0; t < p; ++t) r = mul(r, e);
      cols[i] = r;
    }
    frob_ = LinearMap(p, cols);
    traces_.resize(k + 1);
    for (int d = 1; d <= k; ++d) {
      if (k % d) continue;
      const LinearMap step = frobenius_map(d);
      std::vector<Element> tc(k);
      for (int i = 0; i < k; ++i) {
        Element e{1u << i, 0};
        Element acc{};
        for (int j = 0; j < k / d; ++j) {
          acc = add(acc, e);
          e = step.apply(e);
        }
        tc[i] = acc;
      }
      traces_[d] = LinearMap(p, std::move(tc));
    }
  }

  int p_;
  int k_;
  std::vector<int> modulus_;
  std::uint64_t size_ = 0;
  std::uint32_t mask_ = 0;
  std::uint64_t full2_ = 0;
  Element low3_{};
  Element neg_low3_{};
  LinearMap frob_;
  std::vector<LinearMap> traces_;
};

inline Field make_field(int p, int k, std::optional<std::vector<int>> modulus = std::nullopt) {
  return Field::make(p, k, std::move(modulus));
}

}  // namespace maxcurve

#endif  // MAXCURVE_GF_HPP
