#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qalg/interval.hpp"
#include "qalg/mpoly.hpp"
#include "qalg/noncomm_poly.hpp"
#include "qalg/quaternion.hpp"
#include "qalg/rational_function.hpp"
#include "qalg/real_roots.hpp"

namespace qalg {

// ---------------------------------------------------------------------------
// The (r, N) split: f(z0) = g(r0, N0) x0 + h(r0, N0) with r0 = Re(z0),
// x0 = Im(z0), N0 = -x0^2.
// ---------------------------------------------------------------------------

using RNPoly = MPoly<Quaternion, 2>;  // variables: 0 = r, 1 = N

struct SplitPair {
  RNPoly g, h;
};

inline SplitPair split_gh(const StandardPoly& f) {
  require(!f.is_zero(), errc::zero_polynomial, "split of the zero polynomial");
  const Quaternion one = quat(1, 0, 0, 0);
  RNPoly r = RNPoly::variable(0, one), N = RNPoly::variable(1, one);
  // z^k = G_k x + H_k:  G_{k+1} = r G_k + H_k,  H_{k+1} = -N G_k + r H_k
  RNPoly G = RNPoly(), H = RNPoly::constant(one);
  SplitPair out;
  out.g = RNPoly();
  out.h = RNPoly();
  for (int k = 0; k <= f.degree(); ++k) {
    const Quaternion& a = f[static_cast<size_t>(k)];
    if (!a.is_zero()) {
      out.g = out.g + G.scaled_left(a);
      out.h = out.h + H.scaled_left(a);
    }
    RNPoly Gn = r * G + H;
    RNPoly Hn = -(N * G) + r * H;
    G = std::move(Gn);
    H = std::move(Hn);
  }
  return out;
}

inline Quaternion eval_rn(const RNPoly& p, const Rational& r0, const Rational& N0) {
  Quaternion acc = quat(0, 0, 0, 0);
  for (const auto& [e, c] : p.terms())
    acc = acc + c.scaled(r0.pow(e[0]) * N0.pow(e[1]));
  return acc;
}

// restriction to r = 0: a one-variable polynomial in N
inline Poly<Quaternion> restrict_r0(const RNPoly& p) { return p.at_zero(0).restrict_to(1); }

enum class RootVerdict { both_vanish, norm_eq_holds, not_a_root };

struct RootCondition {
  RootVerdict verdict;
  std::optional<Quaternion> x0;  // set for norm_eq_holds
};

// Tests the norm-equation characterization at an exact candidate (r0, N0):
//   -g conj(g) g N = h conj(g) h.
// When it holds with g != 0, x0 = -g^{-1} h is pure imaginary of norm N0 and
// z0 = r0 + x0 is a root.
inline RootCondition check_root_condition(const SplitPair& pair, const Rational& r0,
                                          const Rational& N0) {
  require(N0.sign() >= 0, errc::negative_norm, "candidate norm must be nonnegative");
  Quaternion gv = eval_rn(pair.g, r0, N0);
  Quaternion hv = eval_rn(pair.h, r0, N0);
  if (gv.is_zero() && hv.is_zero()) return {RootVerdict::both_vanish, std::nullopt};
  if (gv.is_zero()) return {RootVerdict::not_a_root, std::nullopt};
  Quaternion lhs = (-(gv * gv.conj() * gv)).scaled(N0);
  Quaternion rhs = hv * gv.conj() * hv;
  if (lhs != rhs) return {RootVerdict::not_a_root, std::nullopt};
  Quaternion x0 = -(gv.inverse() * hv);
  return {RootVerdict::norm_eq_holds, x0};
}

// ---------------------------------------------------------------------------
// Root reports: exact quaternions, certified algebraic roots (coordinates are
// rational functions of one isolated real algebraic number), and spheres of
// roots (infinite families).
// ---------------------------------------------------------------------------

using QF = RatFunc<Rational>;
using QuatF = Quat<QF>;

struct AlgebraicQuat {
  QuatF coords;       // coordinates as rational functions of t
  IsolatedRoot where;  // the defining real algebraic number t

  // Exact zero test of a coordinate expression at t.
  static bool vanishes_at(const QF& v, const IsolatedRoot& t) {
    return root_satisfies(t, v.num());
  }
  bool well_defined() const {
    for (const QF* c : {&coords.c1, &coords.ci, &coords.cj, &coords.ck})
      if (root_satisfies(where, c->den())) return false;
    return true;
  }
  // Residual of a standard polynomial at this root, decided exactly.
  bool is_root_of(const StandardPoly& f) const {
    QuatF z0 = coords;
    QuatF acc(z0.c1.zero(), z0.c1.zero(), z0.c1.zero(), z0.c1.zero());
    for (int k = f.degree(); k >= 0; --k) {
      acc = acc * z0;
      const Quaternion& a = f[static_cast<size_t>(k)];
      acc = acc + QuatF(QF::from_poly(RealPoly::constant(a.c1), Rational(1)),
                        QF::from_poly(RealPoly::constant(a.ci), Rational(1)),
                        QF::from_poly(RealPoly::constant(a.cj), Rational(1)),
                        QF::from_poly(RealPoly::constant(a.ck), Rational(1)));
    }
    for (const QF* c : {&acc.c1, &acc.ci, &acc.cj, &acc.ck})
      if (!vanishes_at(*c, where)) return false;
    return true;
  }
  // Interval box of the coordinates, refined until each side is <= width.
  Quat<Interval> box(const Rational& width) const {
    IsolatedRoot t = where;
    for (int iter = 0; iter < 20000; ++iter) {
      Interval ti = t.enclosure();
      bool ok = true;
      std::array<Interval, 4> out;
      const QF* cs[4] = {&coords.c1, &coords.ci, &coords.cj, &coords.ck};
      for (int c = 0; c < 4 && ok; ++c) {
        Interval den = interval_eval(cs[c]->den(), ti);
        if (den.contains_zero()) {
          ok = false;
          break;
        }
        out[static_cast<size_t>(c)] = interval_eval(cs[c]->num(), ti) / den;
        if (out[static_cast<size_t>(c)].width() > width) ok = false;
      }
      if (ok) return Quat<Interval>(out[0], out[1], out[2], out[3]);
      if (t.is_exact()) break;
      t = refine_root(t, t.bracket.width() / Rational(2));
    }
    fail(errc::internal, "could not certify interval box at requested width");
  }
};

// A sphere of roots: all z with Re(z) = re and N(Im z) = the norm value.
struct Sphere {
  Rational re{0};
  IsolatedRoot norm;  // positive real algebraic number (often exact rational)
};

struct RootReport {
  std::vector<Quaternion> exact;          // substitution residual exactly zero
  std::vector<AlgebraicQuat> algebraic;   // certified irrational-coordinate roots
  std::vector<Sphere> spheres;            // infinite families
  bool complete = true;                   // whether the enumeration is exhaustive
  std::string note;

  bool has_infinite_family() const { return !spheres.empty(); }
  void add_exact(const Quaternion& q) {
    for (const auto& e : exact)
      if (e == q) return;
    exact.push_back(q);
  }
};

// Interval residual helper for tests: evaluates f over a coordinate box.
inline Quat<Interval> residual_box(const StandardPoly& f, const Quat<Interval>& z) {
  Quat<Interval> acc{Interval(), Interval(), Interval(), Interval()};
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * z;
    const Quaternion& a = f[static_cast<size_t>(k)];
    acc = acc + Quat<Interval>(Interval(a.c1), Interval(a.ci), Interval(a.cj), Interval(a.ck));
  }
  return acc;
}

namespace detail {

inline std::vector<RealPoly> quat_coord_polys(const Poly<Quaternion>& p) {
  std::vector<RealPoly> out(4);
  std::array<std::vector<Rational>, 4> cs;
  for (auto& v : cs) v.assign(static_cast<size_t>(p.degree()) + 1, Rational(0));
  for (int k = 0; k <= p.degree(); ++k) {
    cs[0][static_cast<size_t>(k)] = p[static_cast<size_t>(k)].c1;
    cs[1][static_cast<size_t>(k)] = p[static_cast<size_t>(k)].ci;
    cs[2][static_cast<size_t>(k)] = p[static_cast<size_t>(k)].cj;
    cs[3][static_cast<size_t>(k)] = p[static_cast<size_t>(k)].ck;
  }
  for (int c = 0; c < 4; ++c) out[static_cast<size_t>(c)] = RealPoly(std::move(cs[static_cast<size_t>(c)]));
  return out;
}

// gcd of the nonzero coordinate polynomials (zero when all vanish)
inline RealPoly coord_gcd(const Poly<Quaternion>& p) {
  RealPoly g;
  for (auto& c : quat_coord_polys(p)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? monic(c) : gcd(g, c);
  }
  return g;
}

inline Poly<Quaternion> conj_coeffs(const Poly<Quaternion>& p) {
  std::vector<Quaternion> cs;
  for (int k = 0; k <= p.degree(); ++k) cs.push_back(p[static_cast<size_t>(k)].conj());
  return Poly<Quaternion>(std::move(cs));
}

// Lift a quaternion-coefficient polynomial in a central real variable to
// coordinates over Q(t).
inline QuatF eval_quatpoly_ratfunc(const Poly<Quaternion>& p) {
  auto cs = quat_coord_polys(p);
  return QuatF(QF::from_poly(cs[0], Rational(1)), QF::from_poly(cs[1], Rational(1)),
               QF::from_poly(cs[2], Rational(1)), QF::from_poly(cs[3], Rational(1)));
}

// Is the unique root of `t` strictly positive? (refines brackets as needed)
inline bool root_is_positive(IsolatedRoot t) {
  if (t.is_exact()) return t.exact->sign() > 0;
  for (int it = 0; it < 512; ++it) {
    if (t.bracket.lo.sign() > 0) return true;
    if (t.bracket.hi.sign() <= 0) return false;
    if (detail::sign_at(*t.factor, Rational(0)) == 0) return false;  // root is 0 (not a bracket case)
    t = refine_root(t, t.bracket.width() / Rational(2));
    if (t.is_exact()) return t.exact->sign() > 0;
  }
  fail(errc::internal, "sign of algebraic number undecided");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Pure imaginary roots and the infinitude dichotomy.
// ---------------------------------------------------------------------------

// All pure-imaginary roots of f: spheres where g(N) and h(N) share a positive
// real root, isolated roots from the norm equation otherwise.
inline RootReport pure_imaginary_roots(const StandardPoly& f) {
  require(!f.is_zero(), errc::zero_polynomial, "no root analysis for the zero polynomial");
  RootReport report;
  SplitPair sp = split_gh(f);
  Poly<Quaternion> g = restrict_r0(sp.g), h = restrict_r0(sp.h);

  // common real solutions of g = 0 and h = 0
  RealPoly common;
  {
    bool any = false;
    for (const Poly<Quaternion>* p : {&g, &h})
      for (auto& c : detail::quat_coord_polys(*p)) {
        if (c.is_zero()) continue;
        common = any ? gcd(common, c) : monic(c);
        any = true;
      }
    if (!any) fail(errc::zero_polynomial, "both split polynomials vanish identically");
  }
  if (common.degree() >= 1) {
    for (auto& root : isolate_real_roots(common)) {
      if (root.is_exact() && root.exact->is_zero()) {
        report.add_exact(quat(0, 0, 0, 0));  // z = 0
      } else if (detail::root_is_positive(root)) {
        report.spheres.push_back(Sphere{Rational(0), root});
      }
    }
  }

  // isolated candidates from -g conj(g) g N - h conj(g) h = 0
  if (!g.is_zero()) {
    Poly<Quaternion> gbar = detail::conj_coeffs(g);
    Poly<Quaternion> Npoly{std::vector<Quaternion>{quat(0, 0, 0, 0), quat(1, 0, 0, 0)}};
    Poly<Quaternion> eq = -(g * gbar * g * Npoly) - h * gbar * h;
    RealPoly D = detail::coord_gcd(eq);
    require(!D.is_zero(), errc::internal, "norm equation degenerated");
    if (D.degree() >= 1) {
      for (auto& root : isolate_real_roots(D)) {
        if (root.is_exact()) {
          const Rational& N0 = *root.exact;
          if (N0.sign() < 0) continue;
          Quaternion gv = substitute_standard(g, Quaternion(N0, Rational(0), Rational(0), Rational(0)));
          Quaternion hv = substitute_standard(h, Quaternion(N0, Rational(0), Rational(0), Rational(0)));
          if (gv.is_zero()) continue;  // sphere case already recorded
          Quaternion z0 = -(gv.inverse() * hv);
          if (substitute_standard(f, z0).is_zero()) report.add_exact(z0);
        } else {
          if (!detail::root_is_positive(root)) continue;
          // z0(t) = -g(t)^{-1} h(t) over Q(t)
          QuatF gt = detail::eval_quatpoly_ratfunc(g);
          QuatF ht = detail::eval_quatpoly_ratfunc(h);
          if (AlgebraicQuat::vanishes_at(gt.norm(), root)) continue;  // g vanishes: sphere case
          AlgebraicQuat aq{-(gt.inverse() * ht), root};
          if (aq.well_defined() && aq.is_root_of(f)) report.algebraic.push_back(std::move(aq));
        }
      }
    }
  }
  return report;
}

// Proposition-style dichotomy: does f have infinitely many pure imaginary
// roots?  (Common positive real solution of g(N) = h(N) = 0.)
inline bool has_infinitely_many_pure_imaginary_roots(const StandardPoly& f) {
  return pure_imaginary_roots(f).has_infinite_family();
}

// ---------------------------------------------------------------------------
// Quadratic equations z^2 + a z + b = 0: complete casework.
// ---------------------------------------------------------------------------

namespace detail {

// appends roots of w^2 = c (c scalar, possibly negative) shifted by -s
inline void scalar_square_roots(RootReport& rep, const Rational& c, const Rational& s,
                                const StandardPoly& f_orig) {
  if (c.is_zero()) {
    rep.add_exact(Quaternion(-s, Rational(0), Rational(0), Rational(0)));
    return;
  }
  if (c.sign() > 0) {
    if (auto sq = c.sqrt_exact()) {
      for (int sign : {1, -1}) {
        Quaternion z0(Rational(sign) * *sq - s, Rational(0), Rational(0), Rational(0));
        if (substitute_standard(f_orig, z0).is_zero()) rep.add_exact(z0);
      }
    } else {
      RealPoly def{std::vector<Rational>{-c, Rational(0), Rational(1)}};  // t^2 - c
      for (auto& root : isolate_real_roots(def)) {
        QF t = QF::variable(Rational(1));
        QF sh = QF(-s);
        AlgebraicQuat aq{QuatF(t + sh, t.zero(), t.zero(), t.zero()), root};
        if (aq.is_root_of(f_orig)) rep.algebraic.push_back(std::move(aq));
      }
    }
  } else {
    // negative scalar: the whole sphere of imaginaries with N = -c, Re = -s
    IsolatedRoot n0;
    n0.exact = -c;
    rep.spheres.push_back(Sphere{-s, n0});
  }
}

}  // namespace detail

// Every root of z^2 + a z + b = 0, following the real-part / norm casework.
inline RootReport solve_quadratic(const Quaternion& a, const Quaternion& b) {
  const Quaternion ONE = quat(1, 0, 0, 0);
  StandardPoly f_orig{std::vector<Quaternion>{b, a, ONE}};
  RootReport rep;

  // shift z = w - s so the linear coefficient becomes pure imaginary
  Rational s = a.re() / Rational(2);
  Quaternion ash = a.im();
  Quaternion bsh = Quaternion(s * s, Rational(0), Rational(0), Rational(0)) - a.scaled(s) + b;
  StandardPoly f_sh{std::vector<Quaternion>{bsh, ash, ONE}};
  auto push_exact = [&](const Quaternion& w) {
    Quaternion z0 = w - Quaternion(s, Rational(0), Rational(0), Rational(0));
    if (substitute_standard(f_orig, z0).is_zero()) rep.add_exact(z0);
  };
  auto push_algebraic = [&](AlgebraicQuat aq) {
    // coordinates already include the shift
    if (aq.well_defined() && aq.is_root_of(f_orig)) rep.algebraic.push_back(std::move(aq));
  };

  if (ash.is_zero()) {
    Quaternion c = -bsh;  // w^2 = c
    if (c.is_scalar()) {
      detail::scalar_square_roots(rep, c.re(), s, f_orig);
      return rep;
    }
    // non-scalar c: w = t + Im(c)/(2t), 4t^4 - 4 Re(c) t^2 - N(Im c) = 0
    Rational u = c.re(), v = c.im().norm();
    RealPoly quart{std::vector<Rational>{-v, Rational(0), Rational(-4) * u, Rational(0), Rational(4)}};
    for (auto& root : isolate_real_roots(quart)) {
      if (root.is_exact()) {
        const Rational& alpha = *root.exact;
        if (alpha.is_zero()) continue;
        Quaternion w = Quaternion(alpha, Rational(0), Rational(0), Rational(0)) +
                       c.im().scaled((Rational(2) * alpha).inverse());
        push_exact(w);
      } else {
        QF t = QF::variable(Rational(1));
        QF inv2t = (t.mul_int(2)).inverse();
        QuatF w(t + QF(-s), inv2t.scaled_by(c.im().ci),
                inv2t.scaled_by(c.im().cj), inv2t.scaled_by(c.im().ck));
        push_algebraic(AlgebraicQuat{w, root});
      }
    }
    return rep;
  }

  // a (shifted) is nonzero pure imaginary
  const Quaternion& aq = ash;
  Rational alpha = aq.norm();  // a^2 = -alpha
  Quaternion d = (bsh - aq * bsh * aq.inverse()).scaled(Rational(1, 2));
  Quaternion comm = bsh - d;  // = m + n a
  Rational m = comm.re();
  Rational n(0);
  if (!comm.im().is_zero()) {
    // comm.im() = n * aq.im(); read n off any nonzero coordinate
    const std::array<Rational, 4> ci{comm.im().c1, comm.im().ci, comm.im().cj, comm.im().ck};
    const std::array<Rational, 4> ai{aq.c1, aq.ci, aq.cj, aq.ck};
    for (int k = 1; k < 4; ++k)
      if (!ai[static_cast<size_t>(k)].is_zero()) {
        n = ci[static_cast<size_t>(k)] / ai[static_cast<size_t>(k)];
        break;
      }
    require(comm.im() == aq.scaled(n), errc::internal, "commuting part not in R[a]");
  }

  if (d.is_zero()) {
    // commutative case: w = (-a +- sqrt(D))/2 over R[a], D = -alpha - 4m - 4n a
    Rational u = -alpha - Rational(4) * m, v = Rational(-4) * n;
    if (v.is_zero()) {
      if (u.sign() >= 0) {
        if (auto x = u.sqrt_exact()) {
          for (int sign : {1, -1})
            push_exact((-aq + Quaternion(Rational(sign) * *x, Rational(0), Rational(0), Rational(0)))
                           .scaled(Rational(1, 2)));
        } else {
          RealPoly def{std::vector<Rational>{-u, Rational(0), Rational(1)}};
          for (auto& root : isolate_real_roots(def)) {
            QF t = QF::variable(Rational(1));
            QF half(Rational(1, 2));
            QuatF w((t * half) + QF(-s),
                    QF(aq.ci * Rational(-1, 2)),
                    QF(aq.cj * Rational(-1, 2)),
                    QF(aq.ck * Rational(-1, 2)));
            push_algebraic(AlgebraicQuat{w, root});
          }
        }
      } else {
        Rational ysq = -u / alpha;  // D = (y a)^2 with y^2 = -u/alpha
        if (auto y = ysq.sqrt_exact()) {
          for (int sign : {1, -1})
            push_exact(aq.scaled((Rational(sign) * *y - Rational(1)) / Rational(2)));
        } else {
          RealPoly def{std::vector<Rational>{-ysq, Rational(0), Rational(1)}};
          for (auto& root : isolate_real_roots(def)) {
            QF t = QF::variable(Rational(1));
            QF fac = (t - t.one()).scaled_by(Rational(1, 2));
            QuatF w(QF(-s), fac.scaled_by(aq.ci), fac.scaled_by(aq.cj),
                    fac.scaled_by(aq.ck));
            push_algebraic(AlgebraicQuat{w, root});
          }
        }
      }
    } else {
      // sqrt(u + v a) = x + y a with 4x^4 - 4u x^2 - alpha v^2 = 0, y = v/(2x)
      RealPoly quart{std::vector<Rational>{-alpha * v * v, Rational(0), Rational(-4) * u,
                                           Rational(0), Rational(4)}};
      for (auto& root : isolate_real_roots(quart)) {
        if (root.is_exact()) {
          const Rational& x = *root.exact;
          if (x.is_zero()) continue;
          Rational y = v / (Rational(2) * x);
          Quaternion w = (Quaternion(x, Rational(0), Rational(0), Rational(0)) + aq.scaled(y) - aq)
                             .scaled(Rational(1, 2));
          push_exact(w);
        } else {
          QF t = QF::variable(Rational(1));
          QF y = QF(v) / t.mul_int(2);
          QF half(Rational(1, 2));
          auto coord = [&](const Rational& acoord) {
            return (y - y.one()).scaled_by(acoord) * half;
          };
          QuatF w(t * half + QF(-s), coord(aq.ci), coord(aq.cj),
                  coord(aq.ck));
          push_algebraic(AlgebraicQuat{w, root});
        }
      }
    }
    return rep;
  }

  // general case: d != 0, b - d = m + n a
  Rational delta = d.norm();  // d^2 = -delta
  if (!n.is_zero()) {
    // 16 r^6 + (8 alpha + 16 m) r^4 + (alpha(4m+alpha) - 4 alpha n^2 - 4 delta) r^2 - alpha^2 n^2
    RealPoly sext{std::vector<Rational>{
        -(alpha * alpha * n * n), Rational(0),
        alpha * (Rational(4) * m + alpha) - Rational(4) * alpha * n * n - Rational(4) * delta,
        Rational(0), Rational(8) * alpha + Rational(16) * m, Rational(0), Rational(16)}};
    for (auto& root : isolate_real_roots(sext)) {
      if (root.is_exact()) {
        const Rational& r0 = *root.exact;
        if (r0.is_zero()) continue;
        Quaternion tr = Quaternion(Rational(2) * r0, Rational(0), Rational(0), Rational(0)) + aq;
        Quaternion x0 = -(tr.inverse() *
                          (aq.scaled((r0 + n) / (Rational(2) * r0)) * tr + d));
        push_exact(Quaternion(r0, Rational(0), Rational(0), Rational(0)) + x0);
      } else {
        QF t = QF::variable(Rational(1));
        QuatF tr(t.mul_int(2), QF(aq.ci), QF(aq.cj),
                 QF(aq.ck));
        QuatF aqf(t.zero(), QF(aq.ci), QF(aq.cj),
                  QF(aq.ck));
        QuatF df(QF(d.c1), QF(d.ci),
                 QF(d.cj), QF(d.ck));
        QF fac = (t + QF(n)) / t.mul_int(2);
        QuatF x0 = -(tr.inverse() * (aqf.scaled(fac) * tr + df));
        QuatF w(t + x0.c1 + QF(-s), x0.ci, x0.cj, x0.ck);
        push_algebraic(AlgebraicQuat{w, root});
      }
    }
    return rep;
  }

  // n = 0, branch r = 0: N^2 - (alpha + 2m) N + m^2 + delta = 0
  {
    RealPoly nq{std::vector<Rational>{m * m + delta, -(alpha + Rational(2) * m), Rational(1)}};
    for (auto& root : isolate_real_roots(nq)) {
      if (root.is_exact()) {
        const Rational& N0 = *root.exact;
        if (N0.sign() < 0) continue;
        Quaternion x0 = -(aq.inverse() * (d + Quaternion(m - N0, Rational(0), Rational(0), Rational(0))));
        push_exact(x0);
      } else {
        if (!detail::root_is_positive(root)) continue;
        QF t = QF::variable(Rational(1));
        QuatF ainv = QuatF(t.zero(), QF(aq.ci), QF(aq.cj),
                           QF(aq.ck))
                         .inverse();
        QuatF inner(QF(m + d.c1) - t, QF(d.ci),
                    QF(d.cj), QF(d.ck));
        QuatF x0 = -(ainv * inner);
        QuatF w(x0.c1 + QF(-s), x0.ci, x0.cj, x0.ck);
        push_algebraic(AlgebraicQuat{w, root});
      }
    }
  }
  // n = 0, branch r != 0: 16 r^4 + (8 alpha + 16 m) r^2 + alpha(4m+alpha) - 4 delta
  {
    RealPoly rq{std::vector<Rational>{alpha * (Rational(4) * m + alpha) - Rational(4) * delta,
                                      Rational(0), Rational(8) * alpha + Rational(16) * m,
                                      Rational(0), Rational(16)}};
    for (auto& root : isolate_real_roots(rq)) {
      if (root.is_exact()) {
        const Rational& r0 = *root.exact;
        if (r0.is_zero()) continue;
        Quaternion tr = Quaternion(Rational(2) * r0, Rational(0), Rational(0), Rational(0)) + aq;
        Quaternion x0 = -(tr.inverse() * (aq.scaled(Rational(1, 2)) * tr + d));
        push_exact(Quaternion(r0, Rational(0), Rational(0), Rational(0)) + x0);
      } else {
        QF t = QF::variable(Rational(1));
        QuatF tr(t.mul_int(2), QF(aq.ci), QF(aq.cj),
                 QF(aq.ck));
        QuatF aqf(t.zero(), QF(aq.ci * Rational(1, 2)),
                  QF(aq.cj * Rational(1, 2)),
                  QF(aq.ck * Rational(1, 2)));
        QuatF df(QF(d.c1), QF(d.ci),
                 QF(d.cj), QF(d.ck));
        QuatF x0 = -(tr.inverse() * (aqf * tr + df));
        QuatF w(t + x0.c1 + QF(-s), x0.ci, x0.cj, x0.ck);
        push_algebraic(AlgebraicQuat{w, root});
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Two-sided quadratic z^2 + a z b + c: the real norm constraint whose root
// count bounds the pure-imaginary roots with pairwise distinct norms by 2.
// ---------------------------------------------------------------------------

inline RealPoly two_sided_imaginary_norms(const Quaternion& a, const Quaternion& b,
                                          const Quaternion& c) {
  require(!a.is_zero() && !b.is_zero() && !c.is_zero(), errc::zero_coefficient,
          "two-sided norm constraint needs nonzero coefficients");
  Quaternion ai = a.inverse(), bi = b.inverse();
  Quaternion q2 = ai * bi * ai * bi;
  Quaternion q1 = quat(1, 0, 0, 0) - ai * bi * ai * c * bi - ai * c * bi * ai * bi;
  Quaternion q0 = ai * c * bi * ai * c * bi;
  Poly<Quaternion> p{std::vector<Quaternion>{q0, q1, q2}};
  RealPoly content = detail::coord_gcd(p);
  require(!content.is_zero(), errc::internal, "two-sided constraint degenerated");
  return content;
}

// ---------------------------------------------------------------------------
// Cubic pipeline: pure-imaginary root, Wedderburn deflation, quadratic solve,
// transport back, full linear factorization.
// ---------------------------------------------------------------------------

struct CubicSolution {
  RootReport report;
  std::vector<StandardPoly> factors;  // monic linear, product equals f
  StandardPoly norm_equation;          // the real content used for the search
};

inline CubicSolution solve_cubic_with_imaginary_root(const StandardPoly& f) {
  require(f.degree() == 3, errc::bad_parameters, "cubic pipeline needs degree 3");
  require(f.lead().is_one(), errc::bad_parameters, "cubic pipeline needs a monic polynomial");
  const Quaternion ONE = quat(1, 0, 0, 0);
  CubicSolution sol;
  RootReport pim = pure_imaginary_roots(f);
  for (auto& sp : pim.spheres) sol.report.spheres.push_back(sp);
  for (auto& aq : pim.algebraic) sol.report.algebraic.push_back(aq);
  for (auto& e : pim.exact) sol.report.add_exact(e);

  // pick the exact pure-imaginary root of smallest norm for deflation
  std::optional<Quaternion> pivot;
  for (const auto& e : pim.exact) {
    if (!e.is_pure_imaginary()) continue;
    if (!pivot || e.norm() < pivot->norm()) pivot = e;
  }

  bool all_real = true;
  for (int k = 0; k <= f.degree(); ++k)
    if (!f[static_cast<size_t>(k)].is_scalar()) all_real = false;

  if (!pivot && all_real) {
    // real-coefficient cubic: rational real root + quadratic remainder
    RealPoly rp = detail::quat_coord_polys(f)[0];
    std::optional<Rational> rr;
    for (auto& root : isolate_real_roots(rp))
      if (root.is_exact() && (!rr || *root.exact < *rr)) rr = root.exact;
    if (rr) pivot = Quaternion(*rr, Rational(0), Rational(0), Rational(0));
  }

  if (!pivot) {
    if (!sol.report.exact.empty() || !sol.report.spheres.empty() ||
        !sol.report.algebraic.empty()) {
      sol.report.complete = false;
      sol.report.note = "no exact deflation pivot; partial report";
      return sol;
    }
    fail(errc::no_imaginary_root_found,
         "no pure-imaginary root; diagnostic g/h data in the split");
  }

  sol.report.add_exact(*pivot);
  StandardPoly p = wedderburn_factor(f, *pivot);
  StandardPoly lin_pivot{std::vector<Quaternion>{-*pivot, ONE}};

  // roots of the quadratic cofactor
  RootReport rq = solve_quadratic(p[1], p[0]);
  if (!rq.spheres.empty() || !rq.algebraic.empty()) sol.report.complete = rq.algebraic.empty();
  for (auto& sp : rq.spheres) {
    // every sphere point is a root of p; they are roots of f only when they
    // sit in the fiber of the transport; report them with a note
    sol.report.spheres.push_back(sp);
    sol.report.note = "quadratic cofactor has a sphere of roots";
  }
  // transport each exact quadratic root back through the pivot factor
  for (const auto& broot : rq.exact) {
    // roots z0 of f with transport b: z0^2 - (pivot + b) z0 + b pivot = 0
    RootReport back = solve_quadratic(-(*pivot + broot), broot * *pivot);
    for (const auto& cand : back.exact)
      if (substitute_standard(f, cand).is_zero()) sol.report.add_exact(cand);
    for (auto& aq : back.algebraic)
      if (aq.is_root_of(f)) sol.report.algebraic.push_back(aq);
  }

  // full linear factorization when the cofactor has an exact root
  std::optional<Quaternion> qroot;
  for (const auto& broot : rq.exact)
    if (!qroot || broot.norm() < qroot->norm()) qroot = broot;
  if (qroot) {
    StandardPoly left = wedderburn_factor(p, *qroot);
    sol.factors = {left, StandardPoly{std::vector<Quaternion>{-*qroot, ONE}}, lin_pivot};
    StandardPoly prod = left;
    for (size_t i = 1; i < sol.factors.size(); ++i) prod = prod * sol.factors[i];
    require(prod == f, errc::internal, "factorization failed to reexpand");
  } else {
    sol.factors = {p, lin_pivot};
    sol.report.complete = false;
  }
  return sol;
}

}  // namespace qalg
