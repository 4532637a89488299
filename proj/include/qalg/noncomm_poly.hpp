#pragma once

#include <array>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "qalg/poly.hpp"
#include "qalg/quaternion.hpp"

namespace qalg {

// ---------------------------------------------------------------------------
// Standard (left) polynomials H_L[z]: coefficients on the left, the variable
// central.  Substitution follows the standard form and is NOT a ring
// homomorphism for non-real points.
// ---------------------------------------------------------------------------

using StandardPoly = Poly<Quaternion>;

inline constexpr int kDegreeCap = 16;

inline void check_degree_cap(int deg) {
  require(deg <= kDegreeCap, errc::degree_cap, "polynomial degree exceeds the desk-scale cap");
}

inline Quaternion substitute_standard(const StandardPoly& f, const Quaternion& z0) {
  return f.eval(z0);
}

// ---------------------------------------------------------------------------
// General polynomials H_G[z]: z commutes with the center only.  Canonical
// basis: words  q0 z s1 z s2 ... z sm  with the left coefficient q0 an
// arbitrary quaternion and every interleaved slot si one of 1, i, j, ij.
// Interior scalars are fused into the left coefficient, so equality is
// structural equality of the term map.
// ---------------------------------------------------------------------------

namespace detail {

inline const std::array<Quaternion, 4>& quat_basis() {
  static const std::array<Quaternion, 4> b = {quat(1, 0, 0, 0), quat(0, 1, 0, 0), quat(0, 0, 1, 0),
                                              quat(0, 0, 0, 1)};
  return b;
}

// coordinates of q in the basis (1, i, j, ij)
inline std::array<Rational, 4> quat_coords(const Quaternion& q) {
  return {q.c1, q.ci, q.cj, q.ck};
}

}  // namespace detail

class GeneralPoly {
 public:
  using Word = std::vector<uint8_t>;  // slot values 0..3 = basis 1, i, j, ij

  GeneralPoly() = default;
  static GeneralPoly constant(const Quaternion& q) {
    GeneralPoly p;
    p.add_term(Word{}, q);
    return p;
  }
  static GeneralPoly variable() {
    GeneralPoly p;
    p.add_term(Word{0}, quat(1, 0, 0, 0));
    return p;
  }
  static GeneralPoly from_standard(const Poly<Quaternion>& f) {
    GeneralPoly p;
    for (int k = 0; k <= f.degree(); ++k)
      p.add_term(Word(static_cast<size_t>(k), 0), f[static_cast<size_t>(k)]);
    return p;
  }

  const std::map<Word, Quaternion>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const {
    int d = -1;
    for (const auto& [w, q] : terms_) d = std::max(d, static_cast<int>(w.size()));
    return d;
  }

  friend bool operator==(const GeneralPoly& a, const GeneralPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const GeneralPoly& a, const GeneralPoly& b) { return !(a == b); }

  GeneralPoly operator-() const {
    GeneralPoly r;
    for (const auto& [w, q] : terms_) r.terms_[w] = -q;
    return r;
  }
  friend GeneralPoly operator+(const GeneralPoly& a, const GeneralPoly& b) {
    GeneralPoly r = a;
    for (const auto& [w, q] : b.terms_) r.add_term(w, q);
    return r;
  }
  friend GeneralPoly operator-(const GeneralPoly& a, const GeneralPoly& b) { return a + (-b); }

  friend GeneralPoly operator*(const GeneralPoly& a, const GeneralPoly& b) {
    GeneralPoly r;
    for (const auto& [wa, qa] : a.terms_) {
      for (const auto& [wb, qb] : b.terms_) {
        check_degree_cap(static_cast<int>(wa.size() + wb.size()));
        if (wa.empty()) {
          r.add_term(wb, qa * qb);
          continue;
        }
        // fuse: ... z s_m | q_b z t_1 ... -> decompose (s_m * q_b) over the basis
        Quaternion fused = detail::quat_basis()[wa.back()] * qb;
        auto coords = detail::quat_coords(fused);
        for (uint8_t u = 0; u < 4; ++u) {
          if (coords[u].is_zero()) continue;
          Word w(wa.begin(), wa.end() - 1);
          w.push_back(u);
          w.insert(w.end(), wb.begin(), wb.end());
          r.add_term(w, qa.scaled(coords[u]));
        }
      }
    }
    return r;
  }

  GeneralPoly scaled_left(const Quaternion& q) const { return constant(q) * *this; }

  // Ring-homomorphism substitution.
  Quaternion substitute(const Quaternion& z0) const {
    Quaternion acc = z0.zero();
    for (const auto& [w, q] : terms_) {
      Quaternion t = q;
      for (uint8_t s : w) t = t * z0 * detail::quat_basis()[s];
      acc = acc + t;
    }
    return acc;
  }

  // Image under the epimorphism onto H_L[z]: every coefficient moves left.
  Poly<Quaternion> to_standard() const {
    int d = degree();
    if (d < 0) return Poly<Quaternion>();
    std::vector<Quaternion> coeffs(static_cast<size_t>(d) + 1, quat(0, 0, 0, 0));
    for (const auto& [w, q] : terms_) {
      Quaternion c = q;
      for (uint8_t s : w) c = c * detail::quat_basis()[s];
      coeffs[w.size()] = coeffs[w.size()] + c;
    }
    return Poly<Quaternion>(std::move(coeffs));
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    static const char* names[4] = {"", "i", "j", "ij"};
    for (const auto& [w, q] : terms_) {
      if (!first) os << " + ";
      os << "(" << q << ")";
      for (uint8_t s : w) {
        os << " z";
        if (s) os << " " << names[s];
      }
      first = false;
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const GeneralPoly& p) { return os << p.str(); }

  void add_term(const Word& w, const Quaternion& q) {
    if (q.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, q);
    } else {
      it->second = it->second + q;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  std::map<Word, Quaternion> terms_;
};

inline Quaternion substitute_general(const GeneralPoly& f, const Quaternion& z0) {
  return f.substitute(z0);
}
inline Poly<Quaternion> to_standard(const GeneralPoly& f) { return f.to_standard(); }

// ---------------------------------------------------------------------------
// The group ring of the free monoid on x1..x4 over the quaternions; variables
// commute with all coefficients, so left coefficients are canonical.
// ---------------------------------------------------------------------------

class FreeMonoidPoly {
 public:
  using Word = std::vector<uint8_t>;  // letters 1..4

  FreeMonoidPoly() = default;
  static FreeMonoidPoly constant(const Quaternion& q) {
    FreeMonoidPoly p;
    p.add_term(Word{}, q);
    return p;
  }
  static FreeMonoidPoly variable(int k) {
    require(k >= 1 && k <= 4, errc::index_out_of_range, "variable index must be in 1..4");
    FreeMonoidPoly p;
    p.add_term(Word{static_cast<uint8_t>(k)}, quat(1, 0, 0, 0));
    return p;
  }

  const std::map<Word, Quaternion>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  friend bool operator==(const FreeMonoidPoly& a, const FreeMonoidPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FreeMonoidPoly& a, const FreeMonoidPoly& b) { return !(a == b); }

  FreeMonoidPoly operator-() const {
    FreeMonoidPoly r;
    for (const auto& [w, q] : terms_) r.terms_[w] = -q;
    return r;
  }
  friend FreeMonoidPoly operator+(const FreeMonoidPoly& a, const FreeMonoidPoly& b) {
    FreeMonoidPoly r = a;
    for (const auto& [w, q] : b.terms_) r.add_term(w, q);
    return r;
  }
  friend FreeMonoidPoly operator-(const FreeMonoidPoly& a, const FreeMonoidPoly& b) {
    return a + (-b);
  }
  friend FreeMonoidPoly operator*(const FreeMonoidPoly& a, const FreeMonoidPoly& b) {
    FreeMonoidPoly r;
    for (const auto& [wa, qa] : a.terms_)
      for (const auto& [wb, qb] : b.terms_) {
        check_degree_cap(static_cast<int>(wa.size() + wb.size()));
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(w, qa * qb);
      }
    return r;
  }

  FreeMonoidPoly conj_coefficients() const {
    FreeMonoidPoly r;
    for (const auto& [w, q] : terms_) r.terms_[w] = q.conj();
    return r;
  }

  void add_term(const Word& w, const Quaternion& q) {
    if (q.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, q);
    } else {
      it->second = it->second + q;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, q] : terms_) {
      if (!first) os << " + ";
      os << "(" << q << ")";
      for (uint8_t s : w) os << " x" << int(s);
      first = false;
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const FreeMonoidPoly& p) {
    return os << p.str();
  }

 private:
  std::map<Word, Quaternion> terms_;
};

// ---------------------------------------------------------------------------
// The isomorphism h : H_G[z] -> H<x1..x4>, h(z) = x1 + i x2 + j x3 + ij x4.
// ---------------------------------------------------------------------------

inline FreeMonoidPoly h_iso(const GeneralPoly& f) {
  FreeMonoidPoly out;
  for (const auto& [w, q] : f.terms()) {
    check_degree_cap(static_cast<int>(w.size()));
    // expand every z into sum_u e_u x_{u+1}; coefficients stay in order
    std::vector<std::pair<FreeMonoidPoly::Word, Quaternion>> acc{{{}, q}};
    for (uint8_t s : w) {
      std::vector<std::pair<FreeMonoidPoly::Word, Quaternion>> next;
      next.reserve(acc.size() * 4);
      for (auto& [word, coeff] : acc) {
        for (uint8_t u = 0; u < 4; ++u) {
          FreeMonoidPoly::Word nw = word;
          nw.push_back(static_cast<uint8_t>(u + 1));
          next.emplace_back(std::move(nw),
                            coeff * detail::quat_basis()[u] * detail::quat_basis()[s]);
        }
      }
      acc = std::move(next);
    }
    for (auto& [word, coeff] : acc) out.add_term(word, coeff);
  }
  return out;
}

namespace detail {

// Closed-form co-images of the four generators (scaled sums of conjugates of
// z); validated in the tests against h_iso and the iterative algorithm.
inline const std::array<GeneralPoly, 4>& coimage_table() {
  static const std::array<GeneralPoly, 4> table = [] {
    std::array<GeneralPoly, 4> t;
    auto term = [](long num, long den, const Quaternion& c, uint8_t slot) {
      GeneralPoly g;
      g.add_term(GeneralPoly::Word{slot}, c.scaled(Rational(num, den)));
      return g;
    };
    const Quaternion one = quat(1, 0, 0, 0), qi = quat(0, 1, 0, 0), qj = quat(0, 0, 1, 0),
                     qk = quat(0, 0, 0, 1);
    // h^{-1}(x1) = 1/4 ( z - i z i - j z j - ij z ij )
    t[0] = term(1, 4, one, 0) + term(-1, 4, qi, 1) + term(-1, 4, qj, 2) + term(-1, 4, qk, 3);
    // h^{-1}(x2) = -1/4 ( i z + ij z j - j z ij + z i )
    t[1] = term(-1, 4, qi, 0) + term(-1, 4, qk, 2) + term(1, 4, qj, 3) + term(-1, 4, one, 1);
    // h^{-1}(x3) = -1/4 ( j z - ij z i + i z ij + z j )
    t[2] = term(-1, 4, qj, 0) + term(1, 4, qk, 1) + term(-1, 4, qi, 3) + term(-1, 4, one, 2);
    // h^{-1}(x4) = -1/4 ( ij z - i z j + j z i + z ij )
    t[3] = term(-1, 4, qk, 0) + term(1, 4, qi, 2) + term(-1, 4, qj, 1) + term(-1, 4, one, 3);
    return t;
  }();
  return table;
}

}  // namespace detail

inline GeneralPoly h_inv(const FreeMonoidPoly& g) {
  GeneralPoly out;
  for (const auto& [w, q] : g.terms()) {
    check_degree_cap(static_cast<int>(w.size()));
    GeneralPoly t = GeneralPoly::constant(q);
    for (uint8_t letter : w) t = t * detail::coimage_table()[letter - 1];
    out = out + t;
  }
  return out;
}

// Pointwise conjugation as a polynomial identity: substituting any z0 into
// conjugate_poly(f) gives the quaternion conjugate of f(z0).
inline GeneralPoly conjugate_poly(const GeneralPoly& f) {
  return h_inv(h_iso(f).conj_coefficients());
}

// Annihilation iteration recovering h^{-1}(x_k) from scratch.  Conjugators
// are basis elements chosen deterministically (first of i, j, ij that has the
// required (anti)commutation), a sum step for k = 1 and a difference step for
// k >= 2.
inline GeneralPoly coimage_algorithm(int k) {
  require(k >= 1 && k <= 4, errc::index_out_of_range, "generator index must be in 1..4");
  const FreeMonoidPoly::Word target{static_cast<uint8_t>(k)};
  GeneralPoly p = GeneralPoly::variable();
  for (int step = 0; step < 64; ++step) {
    FreeMonoidPoly image = h_iso(p);
    auto it = image.terms().find(target);
    require(it != image.terms().end(), errc::internal, "target monomial vanished");
    Quaternion c = it->second;
    if (image.is_monomial()) return GeneralPoly::constant(c.inverse()) * p;
    // first surviving monomial besides the target
    const std::pair<const FreeMonoidPoly::Word, Quaternion>* victim = nullptr;
    for (const auto& t : image.terms())
      if (t.first != target) {
        victim = &t;
        break;
      }
    const Quaternion q = victim->second;
    const auto& basis = detail::quat_basis();
    GeneralPoly next;
    bool done = false;
    for (uint8_t a = 1; a < 4 && !done; ++a) {
      const Quaternion& u = basis[a];
      bool q_comm = (u * q == q * u);
      bool c_comm = (u * c == c * u);
      GeneralPoly conj = GeneralPoly::constant(u) * p * GeneralPoly::constant(u.inverse());
      if (k == 1) {
        // sum step: kills coefficients anti-commuting with u, keeps scalars
        if (!q_comm && c_comm) {
          next = conj + p;
          done = true;
        }
      } else {
        // difference step: kills coefficients commuting with u, keeps x_k
        if (q_comm && !c_comm) {
          next = conj - p;
          done = true;
        }
      }
    }
    require(done, errc::internal, "no basis conjugator applies");
    p = next;
  }
  fail(errc::internal, "co-image iteration did not terminate");
}

// ---------------------------------------------------------------------------
// Wedderburn decomposition of standard polynomials.
// ---------------------------------------------------------------------------

// Monic p with f = p * (z - a); requires f monic and f(a) = 0.
inline StandardPoly wedderburn_factor(const StandardPoly& f, const Quaternion& a) {
  require(!f.is_zero() && f.lead().is_one(), errc::bad_parameters,
          "factorization requires a monic polynomial");
  require(substitute_standard(f, a).is_zero(), errc::not_a_root,
          "given point is not a root of the polynomial");
  int n = f.degree();
  require(n >= 1, errc::bad_parameters, "degree must be at least 1");
  std::vector<Quaternion> b(static_cast<size_t>(n), quat(0, 0, 0, 0));
  b[static_cast<size_t>(n - 1)] = f.lead();
  for (int kk = n - 1; kk >= 1; --kk)
    b[static_cast<size_t>(kk - 1)] = f[static_cast<size_t>(kk)] + b[static_cast<size_t>(kk)] * a;
  StandardPoly p{std::move(b)};
  return p;
}

// Root transport: for f = g*h with f(z0) = 0 and h(z0) != 0,
// b = h(z0) z0 h(z0)^{-1} is a root of g.
inline Quaternion wedderburn_transport(const StandardPoly& g, const StandardPoly& h,
                                       const Quaternion& z0) {
  StandardPoly f = g * h;
  require(substitute_standard(f, z0).is_zero(), errc::not_a_root,
          "point is not a root of the product");
  Quaternion hv = substitute_standard(h, z0);
  require(!hv.is_zero(), errc::root_of_right_factor,
          "transport undefined: point is a root of the right factor");
  Quaternion b = hv * z0 * hv.inverse();
  require(substitute_standard(g, b).is_zero(), errc::internal, "transported point not a root");
  return b;
}

}  // namespace qalg
