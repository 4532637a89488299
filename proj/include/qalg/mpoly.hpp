#pragma once

#include <array>
#include <map>
#include <ostream>
#include <sstream>

#include "qalg/poly.hpp"

namespace qalg {

// Sparse multivariate polynomial in N commuting central variables with
// coefficients in a (possibly noncommutative) ring K.
template <class K, int N>
class MPoly {
 public:
  using Exp = std::array<int, N>;

  MPoly() = default;
  static MPoly constant(const K& k) {
    MPoly p;
    p.add_term(Exp{}, k);
    return p;
  }
  static MPoly variable(int idx, const K& one) {
    Exp e{};
    e[static_cast<size_t>(idx)] = 1;
    MPoly p;
    p.add_term(e, one);
    return p;
  }

  const std::map<Exp, K>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly operator-() const {
    MPoly r;
    for (const auto& [e, k] : terms_) r.terms_[e] = -k;
    return r;
  }
  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, k] : b.terms_) r.add_term(e, k);
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ka] : a.terms_)
      for (const auto& [eb, kb] : b.terms_) {
        Exp e;
        for (int i = 0; i < N; ++i) e[static_cast<size_t>(i)] = ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
        r.add_term(e, ka * kb);
      }
    return r;
  }

  MPoly scaled(const K& k) const {  // right scale; fine for central scalars
    MPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * k);
    return r;
  }
  MPoly scaled_left(const K& k) const {
    MPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e, k * c);
    return r;
  }

  // Evaluate at central points given as ring elements.
  K eval(const std::array<K, N>& x, const K& zero) const {
    K acc = zero;
    for (const auto& [e, c] : terms_) {
      K t = c;
      for (int i = 0; i < N; ++i)
        for (int p = 0; p < e[static_cast<size_t>(i)]; ++p) t = t * x[static_cast<size_t>(i)];
      acc = acc + t;
    }
    return acc;
  }

  // Collapse onto variable `idx`, requiring all other exponents zero.
  Poly<K> restrict_to(int idx) const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
      for (int i = 0; i < N; ++i)
        require(i == idx || e[static_cast<size_t>(i)] == 0, errc::internal,
                "restriction with live foreign variable");
      deg = std::max(deg, e[static_cast<size_t>(idx)]);
    }
    if (deg < 0) return Poly<K>();
    std::vector<K> cs(static_cast<size_t>(deg) + 1, terms_.begin()->second.zero());
    for (const auto& [e, c] : terms_) cs[static_cast<size_t>(e[static_cast<size_t>(idx)])] = c;
    return Poly<K>(std::move(cs));
  }

  // Substitute var `idx` = 0.
  MPoly at_zero(int idx) const {
    MPoly r;
    for (const auto& [e, c] : terms_)
      if (e[static_cast<size_t>(idx)] == 0) r.add_term(e, c);
    return r;
  }

  void add_term(const Exp& e, const K& k) {
    if (k.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, k);
    } else {
      it->second = it->second + k;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      os << "(" << c << ")";
      for (int i = 0; i < N; ++i)
        if (e[static_cast<size_t>(i)] > 0) os << " v" << i << "^" << e[static_cast<size_t>(i)];
      first = false;
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

 private:
  std::map<Exp, K> terms_;
};

}  // namespace qalg
