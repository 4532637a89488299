#pragma once

#include <algorithm>
#include <ostream>
#include <utility>
#include <vector>

#include "qalg/error.hpp"

namespace qalg {

// Dense univariate polynomial over a coefficient ring K, ascending degree,
// trailing zeros trimmed (zero polynomial = empty coefficient vector).
//
// K must provide +, -, *, unary -, ==, is_zero(), zero(), one() and
// mul_int(long); division-based operations additionally need inverse().
// No element of K is ever created from scratch, so context-carrying
// coefficient types (finite fields, cyclotomics) work unchanged.
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const K& k) { return Poly(std::vector<K>{k}); }
  // c0 + c1 x
  static Poly linear(const K& c0, const K& c1) { return Poly(std::vector<K>{c0, c1}); }
  // x^n with the context of `one_like`
  static Poly monomial(const K& one_like, int n, const K& coeff) {
    std::vector<K> c(static_cast<size_t>(n) + 1, one_like.zero());
    c.back() = coeff;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  const K& operator[](size_t i) const { return c_[i]; }
  const K& lead() const { return c_.back(); }

  // Coefficient of x^i, or zero in the context of `ctx` when absent.
  K coeff_or_zero(size_t i, const K& ctx) const {
    return i < c_.size() ? c_[i] : ctx.zero();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    std::vector<K> r;
    r.reserve(c_.size());
    for (const auto& k : c_) r.push_back(-k);
    return Poly(std::move(r));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const auto& longer = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& shorter = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    std::vector<K> r = longer;
    for (size_t i = 0; i < shorter.size(); ++i) r[i] = r[i] + shorter[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, a.c_[0].zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }

  Poly scaled(const K& k) const {
    std::vector<K> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c * k);
    return Poly(std::move(r));
  }

  Poly shifted(int n) const {  // multiply by x^n
    if (is_zero() || n == 0) return *this;
    std::vector<K> r(c_.size() + static_cast<size_t>(n), c_[0].zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i + n] = c_[i];
    return Poly(std::move(r));
  }

  // Horner evaluation; for noncommutative K the coefficients stay on the left.
  K eval(const K& x) const {
    if (is_zero()) return x.zero();
    K acc = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i].mul_int(static_cast<long>(i)));
    return Poly(std::move(r));
  }

  // Substitute x -> q(x).
  Poly compose(const Poly& q) const {
    Poly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * q + constant(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<K> c_;
};

// Quotient and remainder; requires invertible leading coefficient (field K,
// commutative).  Coefficients are combined as dividend - q*divisor.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  require(!b.is_zero(), errc::division_by_zero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<K>(), a};
  K inv_lead = b.lead().inverse();
  std::vector<K> rem = a.coeffs();
  std::vector<K> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, inv_lead.zero());
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    K q = rem[k + b.degree()] * inv_lead;
    quo[k] = q;
    for (int i = 0; i <= b.degree(); ++i) rem[k + i] = rem[k + i] - q * b[i];
  }
  return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).first;
}
template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).second;
}

template <class K>
Poly<K> monic(const Poly<K>& p) {
  if (p.is_zero() || p.lead().is_one()) return p;
  return p.scaled(p.lead().inverse());
}

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> xgcd(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0, s1, t0, t1;
  if (!a.is_zero())
    s0 = Poly<K>::constant(a.lead().one());
  else if (!b.is_zero())
    s0 = Poly<K>();
  if (!b.is_zero())
    t1 = Poly<K>::constant(b.lead().one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = r0.lead().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Yun's square-free decomposition: p = prod f_i^i with the f_i square-free
// and pairwise coprime.  Characteristic zero only.
template <class K>
std::vector<Poly<K>> squarefree_decomposition(const Poly<K>& p) {
  std::vector<Poly<K>> out;  // out[i] is the factor of multiplicity i+1
  if (p.degree() <= 0) return out;
  Poly<K> a = monic(p);
  Poly<K> g = gcd(a, a.derivative());
  if (g.degree() == 0) {
    out.push_back(a);
    return out;
  }
  Poly<K> w = a / g;
  Poly<K> y = a.derivative() / g;
  while (true) {
    Poly<K> z = y - w.derivative();
    if (z.is_zero()) {
      out.push_back(monic(w));
      break;
    }
    Poly<K> f = gcd(w, z);
    out.push_back(monic(f));
    w = w / f;
    y = z / f;
  }
  return out;
}

template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
  auto fs = squarefree_decomposition(p);
  if (fs.empty()) return monic(p);
  Poly<K> r = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) r = r * fs[i];
  return monic(r);
}

template <class K>
std::ostream& operator<<(std::ostream& os, const Poly<K>& p) {
  if (p.is_zero()) return os << "0";
  for (int i = p.degree(); i >= 0; --i) {
    if (p[i].is_zero() && p.degree() > 0) continue;
    if (i != p.degree()) os << " + ";
    os << "(" << p[i] << ")";
    if (i > 0) os << "*x^" << i;
  }
  return os;
}

}  // namespace qalg
