#pragma once

#include <ostream>

#include "qalg/rational.hpp"

namespace qalg {

// Closed rational interval [lo, hi]; exact endpoint arithmetic.
struct Interval {
  Rational lo, hi;

  Interval() : lo(0), hi(0) {}
  explicit Interval(const Rational& point) : lo(point), hi(point) {}
  Interval(const Rational& l, const Rational& h) : lo(l), hi(h) {
    require(l <= h, errc::bad_parameters, "interval endpoints out of order");
  }

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  Rational mag() const { return max(lo.abs(), hi.abs()); }  // sup |x|

  friend Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }
  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
  }
  friend Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
  }
  Interval inverse() const {
    require(!contains_zero(), errc::division_by_zero, "interval straddles zero");
    return Interval(hi.inverse(), lo.inverse());
  }
  friend Interval operator/(const Interval& a, const Interval& b) { return a * b.inverse(); }

  Interval mul_int(long n) const {
    Interval r(lo.mul_int(n), lo.mul_int(n));
    return n >= 0 ? Interval(lo.mul_int(n), hi.mul_int(n)) : Interval(hi.mul_int(n), lo.mul_int(n));
  }

  bool is_zero() const { return is_point() && lo.is_zero(); }  // exact zero only
  Interval zero() const { return Interval(Rational(0)); }
  Interval one() const { return Interval(Rational(1)); }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }

  friend std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    if (iv.is_point()) return os << iv.lo;
    return os << "[" << iv.lo << ", " << iv.hi << "]";
  }
};

}  // namespace qalg
