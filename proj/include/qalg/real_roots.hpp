#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <vector>

#include "qalg/interval.hpp"
#include "qalg/poly.hpp"
#include "qalg/rational.hpp"

namespace qalg {

using RealPoly = Poly<Rational>;

// One distinct real root: either an exact rational point or an open isolating
// interval (sign change of a square-free factor), refinable to any width.
struct IsolatedRoot {
  std::optional<Rational> exact;
  Interval bracket;                       // meaningful when !exact
  std::shared_ptr<const RealPoly> factor;  // square-free factor owning the root
  int multiplicity = 1;

  bool is_exact() const { return exact.has_value(); }
  Interval enclosure() const { return exact ? Interval(*exact) : bracket; }
  double approx() const { return exact ? exact->to_double() : bracket.mid().to_double(); }
};

namespace detail {

inline int sign_at(const RealPoly& p, const Rational& x) { return p.eval(x).sign(); }

inline std::vector<RealPoly> sturm_sequence(const RealPoly& p) {
  std::vector<RealPoly> s;
  s.push_back(p);
  RealPoly d = p.derivative();
  if (d.is_zero()) return s;
  s.push_back(d);
  while (true) {
    RealPoly r = s[s.size() - 2] % s.back();
    if (r.is_zero()) break;
    s.push_back(-r);
  }
  return s;
}

inline int sign_variations(const std::vector<RealPoly>& sturm, const Rational& x) {
  int count = 0, prev = 0;
  for (const auto& q : sturm) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Number of distinct real roots of the (square-free) polynomial in (a, b].
inline int roots_in(const std::vector<RealPoly>& sturm, const Rational& a, const Rational& b) {
  return sign_variations(sturm, a) - sign_variations(sturm, b);
}

// All positive divisors, via trial division; nullopt when the factorization
// exceeds the effort cap (callers then fall back to interval output).
inline std::optional<std::vector<mpz_class>> positive_divisors(mpz_class n, long prime_cap = 1000000) {
  n = abs(n);
  if (n == 0) return std::nullopt;
  std::vector<std::pair<mpz_class, int>> fac;
  for (mpz_class d = 2; d * d <= n && d <= prime_cap; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
  }
  if (n > 1) {
    if (n > prime_cap && !mpz_probab_prime_p(n.get_mpz_t(), 30)) return std::nullopt;
    fac.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{1};
  for (auto& [p, e] : fac) {
    size_t base = divs.size();
    mpz_class pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
    if (divs.size() > 100000) return std::nullopt;
  }
  return divs;
}

// Exact rational roots of a square-free polynomial, removed by deflation.
// Returns the deflated polynomial; found roots are appended to `roots`.
inline RealPoly extract_rational_roots(RealPoly f, std::vector<Rational>& roots) {
  if (f.degree() < 1) return f;
  // root at zero
  while (f.degree() >= 1 && f[0].is_zero()) {
    roots.push_back(Rational(0));
    std::vector<Rational> c(f.coeffs().begin() + 1, f.coeffs().end());
    f = RealPoly(std::move(c));
  }
  if (f.degree() < 1) return f;
  // integer-content version: scale coefficients to integers
  mpz_class lcm_den = 1;
  for (const auto& c : f.coeffs()) {
    mpz_class d = c.den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    lcm_den = lcm_den / g * d;
  }
  std::vector<mpz_class> ic;
  for (const auto& c : f.coeffs()) ic.push_back(c.num() * (lcm_den / c.den()));
  auto dnum = positive_divisors(ic.front());
  auto dden = positive_divisors(ic.back());
  if (!dnum || !dden) return f;  // too expensive; leave roots as intervals
  for (const auto& pn : *dnum) {
    for (const auto& qd : *dden) {
      for (int s : {1, -1}) {
        Rational cand(mpq_class(s * pn, qd));
        while (f.degree() >= 1 && f.eval(cand).is_zero()) {
          roots.push_back(cand);
          RealPoly lin{std::vector<Rational>{-cand, Rational(1)}};
          f = f / lin;
        }
      }
    }
  }
  return f;
}

inline Rational cauchy_bound(const RealPoly& p) {
  Rational m(0);
  const Rational lead = p.lead();
  for (int i = 0; i < p.degree(); ++i) m = max(m, (p[i] / lead).abs());
  return m + Rational(1);
}

}  // namespace detail

inline IsolatedRoot refine_root(const IsolatedRoot& r, const Rational& width);

// Distinct real roots of p, exact where rational, otherwise isolating
// intervals; multiplicities from the square-free decomposition.
inline std::vector<IsolatedRoot> isolate_real_roots(const RealPoly& p) {
  require(!p.is_zero(), errc::zero_polynomial, "cannot isolate roots of the zero polynomial");
  std::vector<IsolatedRoot> out;
  if (p.degree() < 1) return out;
  auto layers = squarefree_decomposition(p);
  for (size_t li = 0; li < layers.size(); ++li) {
    const int mult = static_cast<int>(li) + 1;
    if (layers[li].degree() < 1) continue;
    std::vector<Rational> ratroots;
    RealPoly f = detail::extract_rational_roots(layers[li], ratroots);
    for (const auto& r : ratroots) {
      IsolatedRoot ir;
      ir.exact = r;
      ir.multiplicity = mult;
      out.push_back(std::move(ir));
    }
    if (f.degree() >= 1) {
      auto fptr = std::make_shared<const RealPoly>(f);
      auto sturm = detail::sturm_sequence(f);
      Rational bound = detail::cauchy_bound(f);
      // invariant: endpoints are never roots
      std::vector<Interval> stack{Interval(-bound, bound)};
      std::vector<Interval> found;
      while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        int n = detail::roots_in(sturm, iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
          found.push_back(iv);
          continue;
        }
        Rational mid = iv.mid();
        if (detail::sign_at(f, mid) == 0) {
          // rational midpoint root missed by the rational-root pass
          IsolatedRoot ir;
          ir.exact = mid;
          ir.multiplicity = mult;
          out.push_back(std::move(ir));
          Rational w = iv.width() / Rational(4);
          while (detail::sign_at(f, mid - w) == 0 || detail::sign_at(f, mid + w) == 0 ||
                 detail::roots_in(sturm, mid - w, mid) > 1)
            w /= Rational(2);
          stack.push_back(Interval(iv.lo, mid - w));
          stack.push_back(Interval(mid + w, iv.hi));
        } else {
          stack.push_back(Interval(iv.lo, mid));
          stack.push_back(Interval(mid, iv.hi));
        }
      }
      for (auto& iv : found) {
        IsolatedRoot ir;
        ir.bracket = iv;
        ir.factor = fptr;
        ir.multiplicity = mult;
        out.push_back(std::move(ir));
      }
    }
  }
  // sort ascending, refining intervals until the order is decided
  auto lower = [](const IsolatedRoot& r) { return r.exact ? *r.exact : r.bracket.lo; };
  auto upper = [](const IsolatedRoot& r) { return r.exact ? *r.exact : r.bracket.hi; };
  std::sort(out.begin(), out.end(),
            [&](const IsolatedRoot& a, const IsolatedRoot& b) { return lower(a) < lower(b); });
  // distinct roots: shrink overlapping brackets (roots of coprime factors differ)
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < out.size(); ++i) {
      if (upper(out[i]) >= lower(out[i + 1]) &&
          !(out[i].is_exact() && out[i + 1].is_exact())) {
        for (auto* r : {&out[i], &out[i + 1]}) {
          if (!r->is_exact()) *r = refine_root(*r, r->bracket.width() / Rational(4));
        }
        changed = true;
      }
    }
    std::sort(out.begin(), out.end(),
              [&](const IsolatedRoot& a, const IsolatedRoot& b) { return lower(a) < lower(b); });
  }
  return out;
}

// Shrinks the bracket below `width` by sign-preserving bisection.
inline IsolatedRoot refine_root(const IsolatedRoot& r, const Rational& width) {
  if (r.is_exact()) return r;
  require(width.sign() > 0, errc::requires_positive_width,
          "interval root refinement needs positive width");
  IsolatedRoot out = r;
  const RealPoly& f = *out.factor;
  int slo = detail::sign_at(f, out.bracket.lo);
  while (out.bracket.width() > width) {
    Rational mid = out.bracket.mid();
    int smid = detail::sign_at(f, mid);
    if (smid == 0) {
      out.exact = mid;
      return out;
    }
    if (smid == slo)
      out.bracket = Interval(mid, out.bracket.hi);
    else
      out.bracket = Interval(out.bracket.lo, mid);
  }
  return out;
}

// True when the unique root of `r` (possibly exact) is also a root of q.
// Exact decision via gcd and sign counting; no numeric tolerance involved.
inline bool root_satisfies(const IsolatedRoot& r, const RealPoly& q) {
  if (q.is_zero()) return true;
  if (r.is_exact()) return q.eval(*r.exact).is_zero();
  RealPoly g = gcd(*r.factor, q);
  if (g.degree() < 1) return false;
  int a = detail::sign_at(g, r.bracket.lo);
  int b = detail::sign_at(g, r.bracket.hi);
  if (a == 0 || b == 0) return true;  // cannot happen for true brackets of *factor
  return a != b;
}

// Interval evaluation of a polynomial over a box (Horner on intervals).
inline Interval interval_eval(const RealPoly& p, const Interval& x) {
  if (p.is_zero()) return Interval(Rational(0));
  Interval acc(p.lead());
  for (int i = p.degree() - 1; i >= 0; --i) acc = acc * x + Interval(p[i]);
  return acc;
}

}  // namespace qalg
