#pragma once

#include <ostream>
#include <sstream>

#include "qalg/rational.hpp"

namespace qalg {

// Complex numbers over an exact field K (Gaussian rationals for K = Rational).
template <class K = Rational>
struct Complex {
  K re, im;

  Complex() : re(), im() {}
  explicit Complex(const K& r) : re(r), im(r.zero()) {}
  Complex(K r, K i) : re(std::move(r)), im(std::move(i)) {}

  static Complex unit_i(const K& ctx) { return Complex(ctx.zero(), ctx.one()); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_one() const { return re.is_one() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  Complex zero() const { return Complex(re.zero(), re.zero()); }
  Complex one() const { return Complex(re.one(), re.zero()); }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

  Complex operator-() const { return Complex(-re, -im); }
  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re + b.re, a.im + b.im);
  }
  friend Complex operator-(const Complex& a, const Complex& b) { return a + (-b); }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }

  Complex conj() const { return Complex(re, -im); }
  K norm() const { return re * re + im * im; }

  Complex inverse() const {
    K n = norm();
    require(!n.is_zero(), errc::division_by_zero, "inverse of zero complex");
    K ninv = n.inverse();
    return Complex(re * ninv, -(im * ninv));
  }
  friend Complex operator/(const Complex& a, const Complex& b) { return a * b.inverse(); }

  Complex mul_int(long n) const { return Complex(re.mul_int(n), im.mul_int(n)); }

  std::string str() const {
    std::ostringstream os;
    os << "(" << re << (im.is_zero() ? "" : (", " + [&] {
      std::ostringstream t;
      t << im;
      return t.str();
    }())) << (im.is_zero() ? ")" : " i)");
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Complex& c) { return os << c.str(); }
};

}  // namespace qalg
