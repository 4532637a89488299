#include <catch2/catch_amalgamated.hpp>

#include "qalg/real_roots.hpp"
#include "test_helpers.hpp"

using namespace qalg;
using qalg::testing::Rng;

namespace {

RealPoly from_longs(std::vector<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.push_back(Rational(c));
  return RealPoly(std::move(v));
}

}  // namespace

TEST_CASE("norm cubic has exact roots 1 (double) and 2") {
  // N^3 - 4N^2 + 5N - 2
  RealPoly p = from_longs({-2, 5, -4, 1});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  REQUIRE(roots[0].is_exact());
  REQUIRE(*roots[0].exact == Rational(1));
  REQUIRE(roots[0].multiplicity == 2);
  REQUIRE(roots[1].is_exact());
  REQUIRE(*roots[1].exact == Rational(2));
  REQUIRE(roots[1].multiplicity == 1);
}

TEST_CASE("x^2+1 has no real roots") {
  REQUIRE(isolate_real_roots(from_longs({1, 0, 1})).empty());
}

TEST_CASE("x^2-2 gives two refinable brackets") {
  auto roots = isolate_real_roots(from_longs({-2, 0, 1}));
  REQUIRE(roots.size() == 2);
  for (auto& r : roots) REQUIRE(!r.is_exact());
  auto neg = refine_root(roots[0], Rational(1, 1000));
  auto pos = refine_root(roots[1], Rational(1, 1000));
  REQUIRE(pos.bracket.width() <= Rational(1, 1000));
  REQUIRE(neg.bracket.width() <= Rational(1, 1000));
  // sqrt(2) = 1.41421356...
  REQUIRE(pos.bracket.lo < Rational(141422, 100000));
  REQUIRE(pos.bracket.hi > Rational(141421, 100000));
  REQUIRE(neg.bracket.hi < Rational(0));
  // the bracket still encloses the same sign change
  REQUIRE(detail::sign_at(*pos.factor, pos.bracket.lo) !=
          detail::sign_at(*pos.factor, pos.bracket.hi));
}

TEST_CASE("refine_root contract cases") {
  auto roots = isolate_real_roots(from_longs({-2, 0, 1}));
  REQUIRE_THROWS_AS(refine_root(roots[1], Rational(0)), error);
  auto exact = isolate_real_roots(from_longs({-1, 1}));
  REQUIRE(exact.size() == 1);
  // exact points pass through untouched
  auto same = refine_root(exact[0], Rational(0));
  REQUIRE(same.is_exact());
  REQUIRE(*same.exact == Rational(1));
}

TEST_CASE("zero polynomial is rejected") {
  REQUIRE_THROWS_AS(isolate_real_roots(RealPoly()), error);
}

TEST_CASE("products of random linear rational factors are recovered") {
  Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    int nfactors = static_cast<int>(rng.integer(1, 6));
    std::map<Rational, int> expected;
    RealPoly p = RealPoly::constant(rng.nonzero_rational(3, 2));
    for (int k = 0; k < nfactors; ++k) {
      Rational r = rng.rational(4, 3);
      expected[r] += 1;
      p = p * RealPoly{std::vector<Rational>{-r, Rational(1)}};
    }
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == expected.size());
    for (auto& ir : roots) {
      REQUIRE(ir.is_exact());
      auto it = expected.find(*ir.exact);
      REQUIRE(it != expected.end());
      REQUIRE(it->second == ir.multiplicity);
    }
  }
}

TEST_CASE("mixed rational and irrational roots stay separated") {
  // (x-1)(x^2-2)(x^2-3): roots -sqrt3, -sqrt2, 1, sqrt2, sqrt3
  RealPoly p = from_longs({-1, 1}) * from_longs({-2, 0, 1}) * from_longs({-3, 0, 1});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 5);
  // ascending order with disjoint enclosures
  for (size_t i = 0; i + 1 < roots.size(); ++i) {
    Rational hi = roots[i].enclosure().hi;
    Rational lo = roots[i + 1].enclosure().lo;
    REQUIRE(hi < lo);
  }
  REQUIRE(roots[2].is_exact());
  REQUIRE(*roots[2].exact == Rational(1));
}

TEST_CASE("root_satisfies decides exactly") {
  // the sqrt2 bracket satisfies x^2-2 and (x^2-2)(x-5), but not x^2-3
  auto roots = isolate_real_roots(from_longs({-2, 0, 1}));
  auto& r = roots[1];
  REQUIRE(root_satisfies(r, from_longs({-2, 0, 1})));
  REQUIRE(root_satisfies(r, from_longs({-2, 0, 1}) * from_longs({-5, 1})));
  REQUIRE(!root_satisfies(r, from_longs({-3, 0, 1})));
  REQUIRE(!root_satisfies(r, from_longs({-5, 1})));
}

TEST_CASE("interval evaluation brackets the true value") {
  RealPoly p = from_longs({1, -3, 0, 2});
  Interval x(Rational(1, 3), Rational(1, 2));
  Interval y = interval_eval(p, x);
  for (Rational q : {Rational(1, 3), Rational(2, 5), Rational(1, 2)}) {
    Rational v = p.eval(q);
    REQUIRE(y.lo <= v);
    REQUIRE(v <= y.hi);
  }
}
