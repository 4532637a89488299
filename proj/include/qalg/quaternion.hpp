#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include "qalg/rational.hpp"

namespace qalg {

// Hamilton quaternion over an exact coefficient field K, basis (1, i, j, ij)
// with i^2 = j^2 = -1 and ji = -ij.  The default K = Rational gives the
// rational quaternions; symbolic coefficient fields (e.g. Q(r)) and interval
// coordinates reuse the same arithmetic.
template <class K = Rational>
struct Quat {
  K c1, ci, cj, ck;

  Quat() : c1(), ci(), cj(), ck() {}
  explicit Quat(const K& scalar)
      : c1(scalar), ci(scalar.zero()), cj(scalar.zero()), ck(scalar.zero()) {}
  Quat(K a, K b, K c, K d) : c1(std::move(a)), ci(std::move(b)), cj(std::move(c)), ck(std::move(d)) {}

  static Quat unit(const K& ctx) { return Quat(ctx.one(), ctx.zero(), ctx.zero(), ctx.zero()); }
  static Quat i(const K& ctx) { return Quat(ctx.zero(), ctx.one(), ctx.zero(), ctx.zero()); }
  static Quat j(const K& ctx) { return Quat(ctx.zero(), ctx.zero(), ctx.one(), ctx.zero()); }
  static Quat ij(const K& ctx) { return Quat(ctx.zero(), ctx.zero(), ctx.zero(), ctx.one()); }

  bool is_zero() const { return c1.is_zero() && ci.is_zero() && cj.is_zero() && ck.is_zero(); }
  bool is_one() const { return c1.is_one() && ci.is_zero() && cj.is_zero() && ck.is_zero(); }
  bool is_scalar() const { return ci.is_zero() && cj.is_zero() && ck.is_zero(); }
  bool is_pure_imaginary() const { return c1.is_zero(); }

  Quat zero() const { return Quat(c1.zero(), c1.zero(), c1.zero(), c1.zero()); }
  Quat one() const { return unit(c1); }

  friend bool operator==(const Quat& a, const Quat& b) {
    return a.c1 == b.c1 && a.ci == b.ci && a.cj == b.cj && a.ck == b.ck;
  }
  friend bool operator!=(const Quat& a, const Quat& b) { return !(a == b); }

  Quat operator-() const { return Quat(-c1, -ci, -cj, -ck); }
  friend Quat operator+(const Quat& a, const Quat& b) {
    return Quat(a.c1 + b.c1, a.ci + b.ci, a.cj + b.cj, a.ck + b.ck);
  }
  friend Quat operator-(const Quat& a, const Quat& b) { return a + (-b); }

  friend Quat operator*(const Quat& a, const Quat& b) {
    return Quat(a.c1 * b.c1 - a.ci * b.ci - a.cj * b.cj - a.ck * b.ck,
                a.c1 * b.ci + a.ci * b.c1 + a.cj * b.ck - a.ck * b.cj,
                a.c1 * b.cj - a.ci * b.ck + a.cj * b.c1 + a.ck * b.ci,
                a.c1 * b.ck + a.ci * b.cj - a.cj * b.ci + a.ck * b.c1);
  }

  Quat scaled(const K& k) const { return Quat(c1 * k, ci * k, cj * k, ck * k); }
  Quat mul_int(long n) const {
    return Quat(c1.mul_int(n), ci.mul_int(n), cj.mul_int(n), ck.mul_int(n));
  }

  Quat conj() const { return Quat(c1, -ci, -cj, -ck); }
  K norm() const { return c1 * c1 + ci * ci + cj * cj + ck * ck; }
  K re() const { return c1; }
  Quat real_part() const { return Quat(c1, c1.zero(), c1.zero(), c1.zero()); }
  Quat im() const { return Quat(c1.zero(), ci, cj, ck); }

  Quat inverse() const {
    K n = norm();
    require(!n.is_zero(), errc::division_by_zero, "inverse of non-invertible quaternion");
    K ninv = n.inverse();
    return conj().scaled(ninv);
  }
  friend Quat operator/(const Quat& a, const Quat& b) { return a * b.inverse(); }

  Quat pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Quat r = one(), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const K& c, const char* sym) {
      if (c.is_zero()) return;
      if (!first) os << " + ";
      os << "(" << c << ")" << sym;
      first = false;
    };
    emit(c1, "");
    emit(ci, "i");
    emit(cj, "j");
    emit(ck, "ij");
    if (first) os << "0";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Quat& q) { return os << q.str(); }
};

using Quaternion = Quat<Rational>;

inline Quaternion quat(long a, long b, long c, long d) {
  return Quaternion(Rational(a), Rational(b), Rational(c), Rational(d));
}

}  // namespace qalg
