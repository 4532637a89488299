#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <ostream>
#include <string>

#include "qalg/error.hpp"

namespace qalg {

// Exact rational with arbitrary-precision numerator/denominator, always in
// canonical form (gcd 1, positive denominator).  Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) { v_.canonicalize(); }
  Rational(long n, long d) : v_(n, d) {
    require(d != 0, errc::division_by_zero, "rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& v) : v_(v) {}

  // Parses "p", "p/q" or a decimal like "-1.25" (scaled exactly).
  static Rational parse(const std::string& s) {
    std::string t = s;
    if (t.empty()) fail(errc::parse_error, "empty rational literal");
    auto dot = t.find('.');
    if (dot != std::string::npos && t.find('/') == std::string::npos) {
      std::string digits = t.substr(0, dot) + t.substr(dot + 1);
      size_t frac = t.size() - dot - 1;
      mpz_class num;
      if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
        fail(errc::parse_error, "bad rational literal '" + s + "'");
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      mpq_class q(num, den);
      q.canonicalize();
      return Rational(q);
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
      fail(errc::parse_error, "bad rational literal '" + s + "'");
    if (q.get_den() == 0) fail(errc::division_by_zero, "rational with zero denominator");
    q.canonicalize();
    return Rational(q);
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    require(!o.is_zero(), errc::division_by_zero, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const {
    require(!is_zero(), errc::division_by_zero, "inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational mul_int(long n) const { return Rational(mpq_class(v_ * n)); }

  Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational r(1), b(*this);
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  // Exact square root when this is a square of a rational.
  std::optional<Rational> sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = num(), d = den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(rn, rd));
  }

  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  double to_double() const { return v_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace qalg
