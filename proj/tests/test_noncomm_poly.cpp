#include <catch2/catch_amalgamated.hpp>

#include "qalg/noncomm_poly.hpp"
#include "qalg/quaternion.hpp"
#include "test_helpers.hpp"

using namespace qalg;
using qalg::testing::Rng;

namespace {

Quaternion rand_quat(Rng& rng, long bound = 4) {
  return Quaternion(rng.rational(bound, 2), rng.rational(bound, 2), rng.rational(bound, 2),
                    rng.rational(bound, 2));
}

GeneralPoly rand_general(Rng& rng, int max_deg = 3, int max_terms = 3) {
  GeneralPoly p;
  int nterms = static_cast<int>(rng.integer(1, max_terms));
  for (int t = 0; t < nterms; ++t) {
    int deg = static_cast<int>(rng.integer(0, max_deg));
    GeneralPoly::Word w;
    for (int s = 0; s < deg; ++s) w.push_back(static_cast<uint8_t>(rng.integer(0, 3)));
    p.add_term(w, rand_quat(rng, 3));
  }
  return p;
}

const Quaternion I = quat(0, 1, 0, 0);
const Quaternion J = quat(0, 0, 1, 0);
const Quaternion K = quat(0, 0, 0, 1);
const Quaternion ONE = quat(1, 0, 0, 0);

// the worked cubic: z^3 + (2+ij) z + (i-j)
StandardPoly worked_cubic() {
  return StandardPoly{std::vector<Quaternion>{I - J, quat(2, 0, 0, 1), quat(0, 0, 0, 0), ONE}};
}

}  // namespace

TEST_CASE("quaternion defining relations") {
  REQUIRE(I * J == K);
  REQUIRE(J * I == -K);
  REQUIRE(I * I == -ONE);
  REQUIRE(J * J == -ONE);
  REQUIRE(quat(1, 1, 1, 1).norm() == Rational(4));
  REQUIRE((I - J) * (I + J) == K.mul_int(2));
}

TEST_CASE("quaternion norm multiplicativity and inverses") {
  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    Quaternion a = rand_quat(rng), b = rand_quat(rng);
    REQUIRE((a * b).norm() == a.norm() * b.norm());
    REQUIRE((a * b).conj() == b.conj() * a.conj());
    if (!a.is_zero()) REQUIRE(a * a.inverse() == ONE);
    REQUIRE(a.real_part() + a.im() == a);
    // square of the imaginary part is a nonpositive scalar
    Quaternion sq = a.im() * a.im();
    REQUIRE(sq.is_scalar());
    REQUIRE(sq.re().sign() <= 0);
  }
}

TEST_CASE("standard substitution on the worked examples") {
  StandardPoly zsq1{std::vector<Quaternion>{ONE, quat(0, 0, 0, 0), ONE}};  // z^2 + 1
  REQUIRE(substitute_standard(zsq1, I).is_zero());
  StandardPoly f = worked_cubic();
  REQUIRE(substitute_standard(f, J).is_zero());
  REQUIRE(substitute_standard(f, I + J).is_zero());
  REQUIRE(!substitute_standard(f, I).is_zero());
  // -i-j is not a root (left-coefficient substitution)
  REQUIRE(!substitute_standard(f, -(I + J)).is_zero());
}

TEST_CASE("general product of (z-j)(z+j) and the non-homomorphism witness") {
  GeneralPoly zmj = GeneralPoly::variable() - GeneralPoly::constant(J);
  GeneralPoly zpj = GeneralPoly::variable() + GeneralPoly::constant(J);
  GeneralPoly prod = zmj * zpj;
  // kept unexpanded, substitution is multiplicative: g(i) h(i) = 2ij
  REQUIRE(substitute_general(prod, I) == K.mul_int(2));
  REQUIRE(substitute_general(zmj, I) * substitute_general(zpj, I) == K.mul_int(2));
  // its standard image is z^2 + 1, which kills i
  StandardPoly std_img = to_standard(prod);
  REQUIRE(std_img == StandardPoly{std::vector<Quaternion>{ONE, quat(0, 0, 0, 0), ONE}});
  REQUIRE(substitute_standard(std_img, I).is_zero());
  // the witness inequality: standard substitution is not multiplicative
  Quaternion left = substitute_standard(to_standard(zmj), I) * substitute_standard(to_standard(zpj), I);
  REQUIRE(left != substitute_standard(std_img, I));
}

TEST_CASE("general substitution examples") {
  // z i z at j -> j i j = i
  GeneralPoly ziz;
  ziz.add_term(GeneralPoly::Word{1, 0}, ONE);
  REQUIRE(substitute_general(ziz, J) == I);
  // central substitution agrees with the standard image
  Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    GeneralPoly f = rand_general(rng);
    Rational r = rng.rational(3, 2);
    Quaternion z0(r, Rational(0), Rational(0), Rational(0));
    REQUIRE(substitute_general(f, z0) == substitute_standard(to_standard(f), z0));
  }
}

TEST_CASE("to_standard moves coefficients left") {
  // z i z + j z i -> i z^2 - ij z
  GeneralPoly f;
  f.add_term(GeneralPoly::Word{1, 0}, ONE);
  f.add_term(GeneralPoly::Word{1}, J);
  StandardPoly s = to_standard(f);
  REQUIRE(s == StandardPoly{std::vector<Quaternion>{quat(0, 0, 0, 0), -K, I}});
  // already-standard input passes through unchanged
  StandardPoly g{std::vector<Quaternion>{I, J, K}};
  REQUIRE(to_standard(GeneralPoly::from_standard(g)) == g);
  // z j - j z is in the kernel
  GeneralPoly comm;
  comm.add_term(GeneralPoly::Word{2}, ONE);
  comm.add_term(GeneralPoly::Word{0}, -J);
  REQUIRE(to_standard(comm).is_zero());
  REQUIRE(!comm.is_zero());
}

TEST_CASE("h maps z to x1 + i x2 + j x3 + ij x4") {
  FreeMonoidPoly img = h_iso(GeneralPoly::variable());
  FreeMonoidPoly expect = FreeMonoidPoly::variable(1) +
                          FreeMonoidPoly::constant(I) * FreeMonoidPoly::variable(2) +
                          FreeMonoidPoly::constant(J) * FreeMonoidPoly::variable(3) +
                          FreeMonoidPoly::constant(K) * FreeMonoidPoly::variable(4);
  REQUIRE(img == expect);
}

TEST_CASE("co-image closed forms invert h on the generators") {
  for (int k = 1; k <= 4; ++k) {
    GeneralPoly co = h_inv(FreeMonoidPoly::variable(k));
    REQUIRE(h_iso(co) == FreeMonoidPoly::variable(k));
  }
  // the explicit formula for x2: -(1/4)(i z + ij z j - j z ij + z i)
  GeneralPoly x2 = h_inv(FreeMonoidPoly::variable(2));
  GeneralPoly expect;
  expect.add_term(GeneralPoly::Word{0}, I.scaled(Rational(-1, 4)));
  expect.add_term(GeneralPoly::Word{2}, K.scaled(Rational(-1, 4)));
  expect.add_term(GeneralPoly::Word{3}, J.scaled(Rational(1, 4)));
  expect.add_term(GeneralPoly::Word{1}, ONE.scaled(Rational(-1, 4)));
  REQUIRE(x2 == expect);
  // x1: (1/4)(z - i z i - j z j - ij z ij)
  GeneralPoly x1 = h_inv(FreeMonoidPoly::variable(1));
  GeneralPoly e1;
  e1.add_term(GeneralPoly::Word{0}, ONE.scaled(Rational(1, 4)));
  e1.add_term(GeneralPoly::Word{1}, I.scaled(Rational(-1, 4)));
  e1.add_term(GeneralPoly::Word{2}, J.scaled(Rational(-1, 4)));
  e1.add_term(GeneralPoly::Word{3}, K.scaled(Rational(-1, 4)));
  REQUIRE(x1 == e1);
}

TEST_CASE("co-image algorithm reproduces the closed forms") {
  for (int k = 1; k <= 4; ++k) {
    REQUIRE(coimage_algorithm(k) == h_inv(FreeMonoidPoly::variable(k)));
    REQUIRE(h_iso(coimage_algorithm(k)) == FreeMonoidPoly::variable(k));
  }
}

TEST_CASE("h is a ring isomorphism on random inputs") {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    GeneralPoly f = rand_general(rng, 2, 2), g = rand_general(rng, 2, 2);
    REQUIRE(h_iso(f * g) == h_iso(f) * h_iso(g));
    REQUIRE(h_iso(f + g) == h_iso(f) + h_iso(g));
  }
  for (int t = 0; t < 100; ++t) {
    GeneralPoly f = rand_general(rng);
    REQUIRE(h_inv(h_iso(f)) == f);
  }
  for (int t = 0; t < 50; ++t) {
    // h_iso . h_inv = id on the free-monoid side
    FreeMonoidPoly g;
    int nterms = static_cast<int>(rng.integer(1, 3));
    for (int i = 0; i < nterms; ++i) {
      FreeMonoidPoly::Word w;
      int deg = static_cast<int>(rng.integer(0, 2));
      for (int s = 0; s < deg; ++s) w.push_back(static_cast<uint8_t>(rng.integer(1, 4)));
      g.add_term(w, rand_quat(rng, 3));
    }
    REQUIRE(h_iso(h_inv(g)) == g);
  }
}

TEST_CASE("substitution is multiplicative on the general ring") {
  Rng rng(19);
  for (int t = 0; t < 50; ++t) {
    GeneralPoly f = rand_general(rng, 2, 2), g = rand_general(rng, 2, 2);
    Quaternion z0 = rand_quat(rng, 3);
    REQUIRE(substitute_general(f * g, z0) ==
            substitute_general(f, z0) * substitute_general(g, z0));
  }
}

TEST_CASE("conjugate polynomial") {
  // conj(z) = -(1/2)(z + i z i + j z j + ij z ij)
  GeneralPoly zbar = conjugate_poly(GeneralPoly::variable());
  GeneralPoly expect;
  expect.add_term(GeneralPoly::Word{0}, ONE.scaled(Rational(-1, 2)));
  expect.add_term(GeneralPoly::Word{1}, I.scaled(Rational(-1, 2)));
  expect.add_term(GeneralPoly::Word{2}, J.scaled(Rational(-1, 2)));
  expect.add_term(GeneralPoly::Word{3}, K.scaled(Rational(-1, 2)));
  REQUIRE(zbar == expect);
  // constants conjugate
  Quaternion q = quat(1, 2, 3, 4);
  REQUIRE(conjugate_poly(GeneralPoly::constant(q)) == GeneralPoly::constant(q.conj()));
  // involution
  REQUIRE(conjugate_poly(zbar) == GeneralPoly::variable());
  // pointwise equality with quaternion conjugation at random samples
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    GeneralPoly f = rand_general(rng);
    Quaternion z0 = rand_quat(rng, 3);
    REQUIRE(substitute_general(conjugate_poly(f), z0) == substitute_general(f, z0).conj());
  }
}

TEST_CASE("wedderburn factorization of the worked cubic") {
  StandardPoly f = worked_cubic();
  StandardPoly p = wedderburn_factor(f, J);
  // p = z^2 + j z + 1 + ij
  REQUIRE(p == StandardPoly{std::vector<Quaternion>{quat(1, 0, 0, 1), J, ONE}});
  StandardPoly zmj{std::vector<Quaternion>{-J, ONE}};
  REQUIRE(p * zmj == f);
}

TEST_CASE("wedderburn factor edge cases and round trips") {
  Quaternion a = quat(1, 2, 0, -1);
  StandardPoly zma{std::vector<Quaternion>{-a, ONE}};
  REQUIRE(wedderburn_factor(zma, a) == StandardPoly::constant(ONE));
  REQUIRE_THROWS_AS(wedderburn_factor(zma, a + ONE), error);
  Rng rng(29);
  for (int t = 0; t < 60; ++t) {
    Quaternion c = rand_quat(rng, 3), root = rand_quat(rng, 3);
    StandardPoly f = StandardPoly{std::vector<Quaternion>{c, ONE}} *
                     StandardPoly{std::vector<Quaternion>{-root, ONE}};
    StandardPoly p = wedderburn_factor(f, root);
    REQUIRE(p == StandardPoly{std::vector<Quaternion>{c, ONE}});
    REQUIRE(p * StandardPoly{std::vector<Quaternion>{-root, ONE}} == f);
  }
  // reexpansion up to degree 6
  for (int t = 0; t < 30; ++t) {
    StandardPoly f{std::vector<Quaternion>{ONE}};
    std::vector<Quaternion> roots;
    for (int d = 0; d < 6; ++d) roots.push_back(rand_quat(rng, 2));
    for (auto& r : roots) f = f * StandardPoly{std::vector<Quaternion>{-r, ONE}};
    // rightmost factor root is a root of f
    StandardPoly p = wedderburn_factor(f, roots.back());
    REQUIRE(p * StandardPoly{std::vector<Quaternion>{-roots.back(), ONE}} == f);
  }
}

TEST_CASE("wedderburn transport") {
  // worked example: the second root of f is i+j, h(z) = z - j, h(i+j) = i,
  // and the transported root i (i+j) i^{-1} = i - j satisfies p.
  StandardPoly f = worked_cubic();
  StandardPoly p = wedderburn_factor(f, J);
  StandardPoly zmj{std::vector<Quaternion>{-J, ONE}};
  Quaternion b = wedderburn_transport(p, zmj, I + J);
  REQUIRE(b == I - J);
  REQUIRE(substitute_standard(p, b).is_zero());
  // central roots transport to themselves
  StandardPoly g{std::vector<Quaternion>{-ONE, ONE}};
  StandardPoly h{std::vector<Quaternion>{-ONE.mul_int(2), ONE}};
  REQUIRE(wedderburn_transport(g, h, ONE) == ONE);
  // root of the right factor is rejected
  REQUIRE_THROWS_AS(wedderburn_transport(p, zmj, J), error);
  // constructed f = g*h with a planted root z0 of the product:
  // b := (z0-a) z0 (z0-a)^{-1} makes z0 a root of (z-b)(z-a)
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    Quaternion z0 = rand_quat(rng, 3), a = rand_quat(rng, 3);
    if ((z0 - a).is_zero()) continue;
    Quaternion bb = (z0 - a) * z0 * (z0 - a).inverse();
    StandardPoly gg{std::vector<Quaternion>{-bb, ONE}};
    StandardPoly hh{std::vector<Quaternion>{-a, ONE}};
    REQUIRE(substitute_standard(gg * hh, z0).is_zero());
    Quaternion tb = wedderburn_transport(gg, hh, z0);
    REQUIRE(tb == bb);
    REQUIRE(substitute_standard(gg, tb).is_zero());
  }
}

TEST_CASE("degree cap is enforced") {
  GeneralPoly z = GeneralPoly::variable();
  GeneralPoly p = z;
  for (int d = 1; d < 16; ++d) p = p * z;  // degree 16: allowed
  REQUIRE(p.degree() == 16);
  REQUIRE_THROWS_AS(p * z, error);
}
