#include <catch2/catch_amalgamated.hpp>

#include "qalg/cyclotomic.hpp"
#include "qalg/finite_field.hpp"
#include "qalg/rational.hpp"
#include "qalg/rational_function.hpp"
#include "test_helpers.hpp"

using namespace qalg;
using qalg::testing::Rng;

namespace {

template <class K, class Gen>
void check_field_axioms(Gen next, int trials) {
  for (int t = 0; t < trials; ++t) {
    K a = next(), b = next(), c = next();
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) REQUIRE(a.inverse() * a == a.one());
  }
}

}  // namespace

TEST_CASE("rational canonical form") {
  REQUIRE(Rational(2, 4) == Rational(1, 2));
  REQUIRE(Rational(2, 4).num() == 1);
  REQUIRE(Rational(2, 4).den() == 2);
  REQUIRE(Rational(-3, -6) == Rational(1, 2));
  REQUIRE(Rational(3, -6).den() == 2);
  REQUIRE(Rational(3, -6).num() == -1);
  REQUIRE(Rational::parse("2/4") == Rational(1, 2));
  REQUIRE(Rational::parse("-1.25") == Rational(-5, 4));
  REQUIRE(Rational(1, 2).str() == "1/2");
  REQUIRE(Rational(7).str() == "7");
  REQUIRE_THROWS_AS(Rational(1, 2) / Rational(0), error);
  REQUIRE(Rational(9, 4).sqrt_exact().value() == Rational(3, 2));
  REQUIRE(!Rational(2).sqrt_exact().has_value());
  REQUIRE(!Rational(-4).sqrt_exact().has_value());
}

TEST_CASE("rational field axioms") {
  Rng rng(1);
  check_field_axioms<Rational>([&] { return rng.rational(20, 7); }, 1000);
}

TEST_CASE("cyclotomic polynomial relation in Q(rho_3)") {
  Cyclotomic rho = primitive_root_of_unity(3);
  REQUIRE((rho * rho + rho + rho.one()).is_zero());
  REQUIRE(rho.pow(3).is_one());
}

TEST_CASE("primitive roots of unity") {
  REQUIRE(primitive_root_of_unity(1).is_one());
  Cyclotomic m1 = primitive_root_of_unity(2);
  REQUIRE((m1 + m1.one()).is_zero());
  Cyclotomic i4 = primitive_root_of_unity(4);
  REQUIRE((i4 * i4 + i4.one()).is_zero());  // rho^2 = -1
  REQUIRE(i4.pow(4).is_one());
  REQUIRE(!i4.pow(2).is_one());
  // order exactly d for d in 1..12, by exhaustive powering
  for (int d = 1; d <= 12; ++d) {
    Cyclotomic r = primitive_root_of_unity(d);
    Cyclotomic p = r;
    for (int k = 1; k < d; ++k) {
      REQUIRE(!(p.is_one() && k < d));
      p = p * r;
    }
    REQUIRE(p.is_one());
  }
}

TEST_CASE("cyclotomic field axioms") {
  for (int d : {3, 4, 5, 12}) {
    Rng rng(100 + d);
    check_field_axioms<Cyclotomic>([&] { return rng.cyclotomic(d); }, 250);
  }
}

TEST_CASE("cyclotomic mixed-order operands rejected") {
  REQUIRE_THROWS_AS(primitive_root_of_unity(3) + primitive_root_of_unity(4), error);
}

TEST_CASE("F4 multiplication follows the 4-element table") {
  // F_4 = F_2[w]/(w^2+w+1): enumerate the table and check w*w = w+1.
  FFElem w = FFElem::generator(2, 2);
  FFElem w2 = w * w;
  REQUIRE(w2 == w + w.one());
  // the defining relation itself
  REQUIRE((w * w + w + w.one()).is_zero());
  // every nonzero element has order dividing 3 and the table is a group
  std::vector<FFElem> elems{w.zero(), w.one(), w, w + w.one()};
  for (const auto& a : elems) {
    if (a.is_zero()) continue;
    REQUIRE(a.pow(3).is_one());
    int hits = 0;
    for (const auto& b : elems)
      for (const auto& c : elems)
        if (a * b == c && !b.is_zero()) ++hits;
    REQUIRE(hits == 3);  // multiplication by a permutes the nonzero elements
  }
}

TEST_CASE("finite field axioms and Frobenius fixed points") {
  for (auto [p, k] : std::vector<std::pair<long, int>>{{2, 1}, {2, 4}, {3, 2}, {5, 1}, {7, 2}}) {
    Rng rng(200 + p * 10 + k);
    check_field_axioms<FFElem>([&] { return rng.ff(p, k); }, 300);
    // x^{p^k} = x for every element sampled
    long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    for (int t = 0; t < 20; ++t) {
      FFElem a = rng.ff(p, k);
      REQUIRE(a.pow(q) == a);
    }
  }
}

TEST_CASE("rational function field over F2 and over Q") {
  FFElem c2(2, 1, 1);
  auto t = RatFunc<FFElem>::variable(c2);
  REQUIRE((t / t).is_one());
  REQUIRE((t * t.inverse()).is_one());
  // lowest terms: (t^2+t)/(t) = t+1
  RatFunc<FFElem> f(Poly<FFElem>{std::vector<FFElem>{c2.zero(), c2, c2}},
                    Poly<FFElem>{std::vector<FFElem>{c2.zero(), c2}});
  REQUIRE(f == t + t.one());

  Rng rng(7);
  check_field_axioms<RatFunc<FFElem>>([&] { return rng.ratfunc(c2, 2); }, 120);
  check_field_axioms<RatFunc<Rational>>([&] { return rng.ratfunc(Rational(1), 2); }, 80);

  // a nested tower F_2(t)(u) behaves as a field as well
  auto u = RatFunc<RatFunc<FFElem>>::variable(t.one());
  REQUIRE((u * u.inverse()).is_one());
  check_field_axioms<RatFunc<RatFunc<FFElem>>>([&] { return rng.ratfunc(t.one(), 1); }, 25);
}

TEST_CASE("polynomial division, gcd, squarefree over Q") {
  using P = Poly<Rational>;
  P f{std::vector<Rational>{Rational(-2), Rational(5), Rational(-4), Rational(1)}};
  // f = (x-1)^2 (x-2) = x^3 - 4x^2 + 5x - 2
  P x_minus_1{std::vector<Rational>{Rational(-1), Rational(1)}};
  P x_minus_2{std::vector<Rational>{Rational(-2), Rational(1)}};
  REQUIRE(f == x_minus_1 * x_minus_1 * x_minus_2);
  auto [q, r] = divmod(f, x_minus_1);
  REQUIRE(r.is_zero());
  REQUIRE(q == x_minus_1 * x_minus_2);
  REQUIRE(gcd(f, f.derivative()) == x_minus_1);
  auto sq = squarefree_decomposition(f);
  REQUIRE(sq.size() == 2);
  REQUIRE(sq[0] == x_minus_2);   // multiplicity 1
  REQUIRE(sq[1] == x_minus_1);   // multiplicity 2
  REQUIRE(squarefree_part(f) == x_minus_1 * x_minus_2);
}
