#pragma once

#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "qalg/poly.hpp"
#include "qalg/rational.hpp"

namespace qalg {

namespace detail {

// Phi_d over Q, computed by exact division: x^d - 1 = prod_{e|d} Phi_e.
inline Poly<Rational> cyclotomic_polynomial(int d) {
  static std::map<int, Poly<Rational>> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<Rational> xd(static_cast<size_t>(d) + 1, Rational(0));
  xd[0] = Rational(-1);
  xd[static_cast<size_t>(d)] = Rational(1);
  Poly<Rational> num{std::vector<Rational>(xd)};
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto [q, r] = divmod(num, cyclotomic_polynomial(e));
    require(r.is_zero(), errc::internal, "cyclotomic division not exact");
    num = q;
  }
  cache[d] = num;
  return num;
}

struct CycloCtx {
  int d;
  Poly<Rational> modulus;  // Phi_d
  int phi;                 // deg Phi_d
};

inline std::shared_ptr<const CycloCtx> cyclo_ctx(int d) {
  static std::map<int, std::shared_ptr<const CycloCtx>> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  auto mod = cyclotomic_polynomial(d);
  auto ctx = std::make_shared<const CycloCtx>(CycloCtx{d, mod, mod.degree()});
  cache[d] = ctx;
  return ctx;
}

}  // namespace detail

// Element of Q(rho_d) in the power basis 1, rho, ..., rho^{phi(d)-1} modulo
// the d-th cyclotomic polynomial.  rho is the distinguished primitive d-th
// root of unity (the class of x).
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int d) : ctx_(detail::cyclo_ctx(d)), coords_(ctx_->phi, Rational(0)) {}
  Cyclotomic(int d, const Rational& r) : Cyclotomic(d) { coords_[0] = r; }
  Cyclotomic(int d, std::vector<Rational> coords) : ctx_(detail::cyclo_ctx(d)) {
    require(static_cast<int>(coords.size()) == ctx_->phi, errc::parse_error,
            "cyclotomic coordinate count != phi(d)");
    coords_ = std::move(coords);
  }

  // The distinguished primitive d-th root of unity.
  static Cyclotomic rho(int d) {
    require(d >= 1, errc::bad_parameters, "order must be >= 1");
    Cyclotomic r(d);
    if (r.ctx_->phi == 1) {
      // d = 1 or 2: rho is 1 or -1.
      r.coords_[0] = Rational(d == 1 ? 1 : -1);
    } else {
      r.coords_[1] = Rational(1);
    }
    return r;
  }

  int order() const { return ctx_->d; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_one() const {
    if (!coords_[0].is_one()) return false;
    for (size_t i = 1; i < coords_.size(); ++i)
      if (!coords_[i].is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
      if (!coords_[i].is_zero()) return false;
    return true;
  }
  Rational rational_part() const { return coords_[0]; }

  Cyclotomic zero() const { return Cyclotomic(ctx_->d); }
  Cyclotomic one() const { return Cyclotomic(ctx_->d, Rational(1)); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.ctx_->d == b.ctx_->d && a.coords_ == b.coords_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic operator-() const {
    Cyclotomic r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    Cyclotomic r(a);
    for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    Poly<Rational> p = a.as_poly() * b.as_poly();
    return Cyclotomic(a.ctx_, p % a.ctx_->modulus);
  }

  Cyclotomic inverse() const {
    require(!is_zero(), errc::division_by_zero, "inverse of zero cyclotomic");
    auto [g, s, t] = xgcd(as_poly(), ctx_->modulus);
    require(g.degree() == 0, errc::internal, "cyclotomic modulus not coprime");
    (void)t;
    return Cyclotomic(ctx_, s.scaled(g[0].inverse()) % ctx_->modulus);
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  Cyclotomic mul_int(long n) const {
    Cyclotomic r(*this);
    for (auto& c : r.coords_) c = c.mul_int(n);
    return r;
  }
  Cyclotomic scaled(const Rational& q) const {
    Cyclotomic r(*this);
    for (auto& c : r.coords_) c *= q;
    return r;
  }

  Cyclotomic pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic r = one(), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  // Multiplicative order when finite (roots of unity), 0 otherwise capped.
  int mult_order(int cap = 10'000) const {
    Cyclotomic p = *this;
    for (int k = 1; k <= cap; ++k) {
      if (p.is_one()) return k;
      p = p * *this;
    }
    return 0;
  }

  std::string str() const {
    std::string s;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i].is_zero()) continue;
      if (!first) s += " + ";
      s += coords_[i].str();
      if (i >= 1) s += "*r^" + std::to_string(i);
      first = false;
    }
    if (first) s = "0";
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

 private:
  Cyclotomic(std::shared_ptr<const detail::CycloCtx> ctx, const Poly<Rational>& p)
      : ctx_(std::move(ctx)), coords_(ctx_->phi, Rational(0)) {
    for (int i = 0; i <= p.degree(); ++i) coords_[static_cast<size_t>(i)] = p[i];
  }
  Poly<Rational> as_poly() const { return Poly<Rational>(std::vector<Rational>(coords_)); }
  void check_same(const Cyclotomic& o) const {
    require(ctx_->d == o.ctx_->d, errc::mixed_field_operands,
            "cyclotomic operands from different orders");
  }

  std::shared_ptr<const detail::CycloCtx> ctx_;
  std::vector<Rational> coords_;
};

// primitive_root_of_unity: rho_d with multiplicative order exactly d.
inline Cyclotomic primitive_root_of_unity(int d) { return Cyclotomic::rho(d); }

}  // namespace qalg
