#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "qalg/poly.hpp"

namespace qalg {

// Univariate rational function over a coefficient field K, kept in lowest
// terms with a monic denominator.  Provides the infinite fields of positive
// characteristic (F_2(t) and iterated towers) the higher modules need.
template <class K>
class RatFunc {
 public:
  RatFunc() = default;  // zero over an unknown context: only used transiently
  explicit RatFunc(const K& k) : num_(Poly<K>::constant(k)), den_(Poly<K>::constant(k.one())) {}
  RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
    require(!den_.is_zero(), errc::division_by_zero, "rational function with zero denominator");
    normalize();
  }

  static RatFunc variable(const K& ctx) {
    return RatFunc(Poly<K>::linear(ctx.zero(), ctx.one()), Poly<K>::constant(ctx.one()));
  }
  static RatFunc from_poly(Poly<K> p, const K& ctx) {
    return RatFunc(std::move(p), Poly<K>::constant(ctx.one()));
  }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  K ctx() const { return den_.lead(); }  // denominator is monic and nonzero

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_[0].is_one(); }

  RatFunc zero() const { return RatFunc(Poly<K>(), den_one()); }
  RatFunc one() const { return RatFunc(den_one(), den_one()); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc operator-() const { return RatFunc(-num_, den_, already_normal{}); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  RatFunc inverse() const {
    require(!is_zero(), errc::division_by_zero, "inverse of zero rational function");
    return RatFunc(den_, num_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc mul_int(long n) const {
    if (is_zero()) return *this;
    return RatFunc(num_.scaled(ctx().one().mul_int(n)), den_);
  }

  RatFunc scaled_by(const K& k) const {
    if (is_zero()) return *this;
    return RatFunc(num_.scaled(k), den_);
  }

  RatFunc pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r = one(), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(" << num_ << ")";
    if (den_.degree() > 0 || !(den_.degree() == 0 && den_[0].is_one())) os << "/(" << den_ << ")";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

 private:
  struct already_normal {};
  RatFunc(Poly<K> num, Poly<K> den, already_normal) : num_(std::move(num)), den_(std::move(den)) {}

  Poly<K> den_one() const { return Poly<K>::constant(den_.lead().one()); }

  void normalize() {
    if (num_.is_zero()) {
      den_ = den_one();
      return;
    }
    Poly<K> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    if (!den_.lead().is_one()) {
      K inv = den_.lead().inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly<K> num_;
  Poly<K> den_;
};

}  // namespace qalg
