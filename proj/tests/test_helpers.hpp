#pragma once

#include <random>
#include <vector>

#include "qalg/cyclotomic.hpp"
#include "qalg/finite_field.hpp"
#include "qalg/rational.hpp"
#include "qalg/rational_function.hpp"

namespace qalg::testing {

// All sampling in the test suites goes through one seeded engine per test so
// reruns are reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(eng_);
  }

  Rational rational(long bound = 5, long den_bound = 3) {
    long den = integer(1, den_bound);
    return Rational(integer(-bound, bound), den);
  }
  Rational nonzero_rational(long bound = 5, long den_bound = 3) {
    for (;;) {
      Rational r = rational(bound, den_bound);
      if (!r.is_zero()) return r;
    }
  }

  Cyclotomic cyclotomic(int d, long bound = 3) {
    Cyclotomic z(d);
    std::vector<Rational> coords;
    for (size_t i = 0; i < z.coords().size(); ++i) coords.push_back(rational(bound, 2));
    return Cyclotomic(d, coords);
  }
  Cyclotomic nonzero_cyclotomic(int d, long bound = 3) {
    for (;;) {
      Cyclotomic c = cyclotomic(d, bound);
      if (!c.is_zero()) return c;
    }
  }

  FFElem ff(long p, int k) {
    std::vector<long> coords;
    for (int i = 0; i < k; ++i) coords.push_back(integer(0, p - 1));
    return FFElem(p, k, coords);
  }
  FFElem nonzero_ff(long p, int k) {
    for (;;) {
      FFElem e = ff(p, k);
      if (!e.is_zero()) return e;
    }
  }

  template <class K>
  RatFunc<K> ratfunc(const K& ctx, int max_deg = 2) {
    auto poly = [&](int dmax, bool nonzero) {
      for (;;) {
        std::vector<K> cs;
        int d = static_cast<int>(integer(0, dmax));
        for (int i = 0; i <= d; ++i) cs.push_back(random_elem(ctx));
        Poly<K> p{std::move(cs)};
        if (!nonzero || !p.is_zero()) return p;
      }
    };
    return RatFunc<K>(poly(max_deg, false), poly(max_deg, true));
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  Rational random_elem(const Rational&) { return rational(); }
  FFElem random_elem(const FFElem& ctx) {
    return ff(ctx.characteristic(), ctx.extension_degree());
  }
  template <class K>
  RatFunc<K> random_elem(const RatFunc<K>& ctx) {
    return ratfunc(ctx.ctx(), 1);
  }

  std::mt19937_64 eng_;
};

}  // namespace qalg::testing
