#pragma once

#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "qalg/error.hpp"

namespace qalg {

namespace detail {

// Small-polynomial arithmetic over F_p with coefficients in [0,p).
using FpVec = std::vector<long>;

inline void fp_trim(FpVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}
inline long fp_mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}
inline FpVec fp_add(const FpVec& a, const FpVec& b, long p) {
  FpVec r = a.size() >= b.size() ? a : b;
  const FpVec& s = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < s.size(); ++i) r[i] = fp_mod(r[i] + s[i], p);
  fp_trim(r);
  return r;
}
inline FpVec fp_neg(const FpVec& a, long p) {
  FpVec r = a;
  for (auto& x : r) x = fp_mod(-x, p);
  return r;
}
inline FpVec fp_sub(const FpVec& a, const FpVec& b, long p) { return fp_add(a, fp_neg(b, p), p); }
inline FpVec fp_mul(const FpVec& a, const FpVec& b, long p) {
  if (a.empty() || b.empty()) return {};
  FpVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = fp_mod(r[i + j] + a[i] * b[j], p);
  fp_trim(r);
  return r;
}
inline long fp_inv_scalar(long a, long p) {
  long t = 0, nt = 1, r = p, nr = fp_mod(a, p);
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  require(r == 1, errc::division_by_zero, "non-invertible residue");
  return fp_mod(t, p);
}
inline FpVec fp_rem(FpVec a, const FpVec& b, long p) {
  long inv = fp_inv_scalar(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    long q = fp_mod(a.back() * inv, p);
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] = fp_mod(a[off + i] - q * b[i], p);
    fp_trim(a);
  }
  return a;
}
// extended gcd: returns (g, s) with s*a = g mod m, g monic
inline std::pair<FpVec, FpVec> fp_half_xgcd(const FpVec& a, const FpVec& m, long p) {
  FpVec r0 = m, r1 = a, s0 = {}, s1 = {1};
  while (!r1.empty()) {
    // divide r0 by r1
    FpVec q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    FpVec rem = r0;
    long inv = fp_inv_scalar(r1.back(), p);
    while (rem.size() >= r1.size() && !rem.empty()) {
      long c = fp_mod(rem.back() * inv, p);
      size_t off = rem.size() - r1.size();
      q[off] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[off + i] = fp_mod(rem[off + i] - c * r1[i], p);
      fp_trim(rem);
    }
    fp_trim(q);
    FpVec s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  if (!r0.empty() && r0.back() != 1) {
    long inv = fp_inv_scalar(r0.back(), p);
    for (auto& x : r0) x = fp_mod(x * inv, p);
    for (auto& x : s0) x = fp_mod(x * inv, p);
  }
  return {r0, s0};
}

inline bool fp_irreducible(const FpVec& f, long p) {
  // No roots, then trial division by every monic polynomial of degree <= deg/2.
  long k = static_cast<long>(f.size()) - 1;
  for (long a = 0; a < p; ++a) {
    long v = 0;
    for (size_t i = f.size(); i-- > 0;) v = fp_mod(v * a + f[i], p);
    if (v == 0) return false;
  }
  for (long d = 2; 2 * d <= k; ++d) {
    FpVec g(static_cast<size_t>(d) + 1, 0);
    g[static_cast<size_t>(d)] = 1;
    long count = 1;
    for (long i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      long t = idx;
      for (long i = 0; i < d; ++i) {
        g[static_cast<size_t>(i)] = t % p;
        t /= p;
      }
      if (fp_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct FFCtx {
  long p;
  int k;
  FpVec modulus;  // monic irreducible of degree k over F_p
};

inline bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Deterministic modulus: first monic irreducible of degree k in lexicographic
// order of (c0, c1, ..., c_{k-1}).  Reproduces the customary small moduli
// (w^2+w+1 for F_4, x^2+1 for F_9, x^4+x+1 for F_16).
inline std::shared_ptr<const FFCtx> ff_ctx(long p, int k) {
  require(is_prime_long(p), errc::bad_parameters, "characteristic must be prime");
  require(k >= 1 && k <= 16, errc::bad_parameters, "extension degree out of range");
  static std::map<std::pair<long, int>, std::shared_ptr<const FFCtx>> cache;
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FpVec f(static_cast<size_t>(k) + 1, 0);
  f[static_cast<size_t>(k)] = 1;
  std::shared_ptr<const FFCtx> ctx;
  if (k == 1) {
    ctx = std::make_shared<const FFCtx>(FFCtx{p, k, FpVec{0, 1}});
  } else {
    long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      long t = idx;
      for (int i = 0; i < k; ++i) {
        f[static_cast<size_t>(i)] = t % p;
        t /= p;
      }
      if (fp_irreducible(f, p)) {
        ctx = std::make_shared<const FFCtx>(FFCtx{p, k, f});
        break;
      }
    }
    require(ctx != nullptr, errc::internal, "no irreducible modulus found");
  }
  cache[key] = ctx;
  return ctx;
}

}  // namespace detail

// Element of F_{p^k} in the power basis of a fixed irreducible modulus.
class FFElem {
 public:
  FFElem() : FFElem(2, 1) {}
  FFElem(long p, int k) : ctx_(detail::ff_ctx(p, k)), coords_(static_cast<size_t>(k), 0) {}
  FFElem(long p, int k, long value) : FFElem(p, k) { coords_[0] = detail::fp_mod(value, p); }
  FFElem(long p, int k, std::vector<long> coords) : ctx_(detail::ff_ctx(p, k)) {
    require(static_cast<int>(coords.size()) == k, errc::parse_error,
            "finite-field coordinate count != degree");
    for (auto& c : coords) c = detail::fp_mod(c, p);
    coords_ = std::move(coords);
  }

  // The class of the adjoined generator w (for k >= 2).
  static FFElem generator(long p, int k) {
    FFElem e(p, k);
    require(k >= 2, errc::bad_parameters, "prime field has no adjoined generator");
    e.coords_[1] = 1;
    return e;
  }

  long characteristic() const { return ctx_->p; }
  int extension_degree() const { return ctx_->k; }
  const std::vector<long>& coords() const { return coords_; }

  bool is_zero() const {
    for (long c : coords_)
      if (c != 0) return false;
    return true;
  }
  bool is_one() const {
    if (coords_[0] != 1) return false;
    for (size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) return false;
    return true;
  }

  FFElem zero() const { return FFElem(ctx_->p, ctx_->k); }
  FFElem one() const { return FFElem(ctx_->p, ctx_->k, 1); }

  friend bool operator==(const FFElem& a, const FFElem& b) {
    return a.ctx_->p == b.ctx_->p && a.ctx_->k == b.ctx_->k && a.coords_ == b.coords_;
  }
  friend bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }

  FFElem operator-() const {
    FFElem r(*this);
    for (auto& c : r.coords_) c = detail::fp_mod(-c, ctx_->p);
    return r;
  }
  friend FFElem operator+(const FFElem& a, const FFElem& b) {
    a.check_same(b);
    FFElem r(a);
    for (size_t i = 0; i < r.coords_.size(); ++i)
      r.coords_[i] = detail::fp_mod(r.coords_[i] + b.coords_[i], a.ctx_->p);
    return r;
  }
  friend FFElem operator-(const FFElem& a, const FFElem& b) { return a + (-b); }
  friend FFElem operator*(const FFElem& a, const FFElem& b) {
    a.check_same(b);
    detail::FpVec prod = detail::fp_mul(a.vec(), b.vec(), a.ctx_->p);
    return a.from_vec(detail::fp_rem(std::move(prod), a.ctx_->modulus, a.ctx_->p));
  }
  FFElem inverse() const {
    require(!is_zero(), errc::division_by_zero, "inverse of zero field element");
    auto [g, s] = detail::fp_half_xgcd(vec(), ctx_->modulus, ctx_->p);
    require(g.size() == 1 && g[0] == 1, errc::internal, "modulus not irreducible");
    return from_vec(detail::fp_rem(std::move(s), ctx_->modulus, ctx_->p));
  }
  friend FFElem operator/(const FFElem& a, const FFElem& b) { return a * b.inverse(); }

  FFElem mul_int(long n) const {
    FFElem r(*this);
    long m = detail::fp_mod(n, ctx_->p);
    for (auto& c : r.coords_) c = detail::fp_mod(c * m, ctx_->p);
    return r;
  }

  FFElem pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FFElem r = one(), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  std::string str() const {
    std::string s;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      if (!first) s += "+";
      if (i == 0 || coords_[i] != 1) s += std::to_string(coords_[i]);
      if (i == 1) s += "w";
      if (i > 1) s += "w^" + std::to_string(i);
      first = false;
    }
    return first ? "0" : s;
  }
  friend std::ostream& operator<<(std::ostream& os, const FFElem& e) { return os << e.str(); }

 private:
  detail::FpVec vec() const {
    detail::FpVec v(coords_);
    detail::fp_trim(v);
    return v;
  }
  FFElem from_vec(detail::FpVec v) const {
    FFElem r(ctx_->p, ctx_->k);
    for (size_t i = 0; i < v.size(); ++i) r.coords_[i] = v[i];
    return r;
  }
  void check_same(const FFElem& o) const {
    require(ctx_->p == o.ctx_->p && ctx_->k == o.ctx_->k, errc::mixed_field_operands,
            "finite-field operands from different fields");
  }

  std::shared_ptr<const detail::FFCtx> ctx_;
  std::vector<long> coords_;
};

}  // namespace qalg
