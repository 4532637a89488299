#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qalg/complexq.hpp"
#include "qalg/linalg.hpp"
#include "qalg/mpoly.hpp"
#include "qalg/noncomm_poly.hpp"
#include "qalg/quat_solver.hpp"

namespace qalg {

using QuatMatrix = Mat<Quaternion>;
using CRat = Complex<Rational>;
using CMat = Mat<CRat>;

inline QuatMatrix quat_identity(int n) {
  return QuatMatrix::identity(n, quat(1, 0, 0, 0), quat(0, 0, 0, 0));
}

// ---------------------------------------------------------------------------
// Complex embedding A = B + C j and the Study / Dieudonne determinants.
// ---------------------------------------------------------------------------

struct ComplexEmbedding {
  CMat B, C;
};

inline ComplexEmbedding complex_embedding(const QuatMatrix& A) {
  CMat B(A.rows(), A.cols(), CRat(Rational(0)));
  CMat C(A.rows(), A.cols(), CRat(Rational(0)));
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c) {
      const Quaternion& q = A.at(r, c);
      B.at(r, c) = CRat(q.c1, q.ci);
      C.at(r, c) = CRat(q.cj, q.ck);
    }
  return {B, C};
}

inline QuatMatrix from_embedding(const ComplexEmbedding& e) {
  QuatMatrix A(e.B.rows(), e.B.cols(), quat(0, 0, 0, 0));
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c)
      A.at(r, c) = Quaternion(e.B.at(r, c).re, e.B.at(r, c).im, e.C.at(r, c).re, e.C.at(r, c).im);
  return A;
}

// Doubled complex matrix of A = B + Cj.  The arrangement
// [ B  -C ; conj(C)  conj(B) ] is the one that is a ring homomorphism
// (and hence has a multiplicative determinant); it is conjugate to the
// other common block layouts.
inline CMat study_matrix(const QuatMatrix& A) {
  require(A.is_square(), errc::non_square, "Study matrix needs a square input");
  auto [B, C] = complex_embedding(A);
  int n = A.rows();
  CMat D(2 * n, 2 * n, CRat(Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      D.at(r, c) = B.at(r, c);
      D.at(r, n + c) = -C.at(r, c);
      D.at(n + r, c) = C.at(r, c).conj();
      D.at(n + r, n + c) = B.at(r, c).conj();
    }
  return D;
}

// Always real (and nonnegative); computed exactly over the Gaussian rationals.
inline Rational study_determinant(const QuatMatrix& A) {
  CRat d = det_field(study_matrix(A));
  require(d.im.is_zero(), errc::internal, "Study determinant came out non-real");
  require(d.re.sign() >= 0, errc::internal, "Study determinant came out negative");
  return d.re;
}

// Square root of the Study determinant: exact when rational, a positive
// bracket of x^2 - s otherwise.
struct SqrtValue {
  std::optional<Rational> exact;
  std::optional<IsolatedRoot> bracket;

  bool is_zero() const { return exact && exact->is_zero(); }
};

inline SqrtValue dieudonne_determinant(const QuatMatrix& A) {
  Rational s = study_determinant(A);
  SqrtValue out;
  if (auto r = s.sqrt_exact()) {
    out.exact = *r;
    return out;
  }
  RealPoly def{std::vector<Rational>{-s, Rational(0), Rational(1)}};
  for (auto& root : isolate_real_roots(def))
    if (detail::root_is_positive(root)) {
      out.bracket = root;
      return out;
    }
  fail(errc::internal, "positive square root not found");
}

// ---------------------------------------------------------------------------
// Elimination oracle over the quaternions.
// ---------------------------------------------------------------------------

inline bool is_left_eigenvalue(const QuatMatrix& M, const Quaternion& lambda) {
  require(M.is_square(), errc::non_square, "eigenvalue test needs a square matrix");
  QuatMatrix shifted = M - quat_identity(M.rows()).scaled_left(lambda);
  return rank_left(shifted) < M.rows();
}

inline std::optional<std::vector<Quaternion>> left_eigenvector(const QuatMatrix& M,
                                                               const Quaternion& lambda) {
  QuatMatrix shifted = M - quat_identity(M.rows()).scaled_left(lambda);
  return kernel_vector(shifted);
}

// ---------------------------------------------------------------------------
// 2x2 left eigenvalues via the standard quadratic reduction.
// ---------------------------------------------------------------------------

struct Eigenpair {
  Quaternion lambda;
  std::array<Quaternion, 2> v;  // exact eigenvector, A v = lambda v
};

// lambda-values on a sphere: lambda = d - c mu with mu ranging over a sphere
struct LambdaFamily {
  Quaternion d, c;
  Sphere mu;
};

struct EigenReport2 {
  std::vector<Eigenpair> exact;
  std::vector<AlgebraicQuat> algebraic;  // certified lambda coordinates
  std::vector<LambdaFamily> families;
};

inline EigenReport2 left_eigenvalues_2x2(const QuatMatrix& A) {
  require(A.rows() == 2 && A.cols() == 2, errc::non_conformant, "expected a 2x2 matrix");
  const Quaternion a = A.at(0, 0), b = A.at(0, 1), c = A.at(1, 0), d = A.at(1, 1);
  const Quaternion ONE = quat(1, 0, 0, 0), ZERO = quat(0, 0, 0, 0);
  EigenReport2 out;
  auto attach = [&](const Quaternion& lambda) {
    auto v = left_eigenvector(A, lambda);
    require(v.has_value(), errc::internal, "claimed eigenvalue has trivial kernel");
    // verify exactly
    auto img = A.apply(*v);
    require(img[0] == lambda * (*v)[0] && img[1] == lambda * (*v)[1], errc::internal,
            "eigenvector residual nonzero");
    out.exact.push_back(Eigenpair{lambda, {(*v)[0], (*v)[1]}});
  };
  if (c.is_zero()) {
    attach(a);
    if (d != a) attach(d);
    return out;
  }
  // mu^2 + c^{-1}(a-d) mu - c^{-1} b = 0, lambda = d - c mu
  Quaternion ci = c.inverse();
  RootReport rq = solve_quadratic(ci * (a - d), -(ci * b));
  for (const auto& mu : rq.exact) attach(d - c * mu);
  for (const auto& mu : rq.algebraic) {
    // lambda(t) = d - c mu(t)
    QuatF df(QF(d.c1), QF(d.ci), QF(d.cj), QF(d.ck));
    QuatF cf(QF(c.c1), QF(c.ci), QF(c.cj), QF(c.ck));
    AlgebraicQuat lam{df - cf * mu.coords, mu.where};
    // certify the eigenvalue equation via the reduction polynomial:
    // (a - lambda) c^{-1} (d - lambda) - b = 0
    QuatF af(QF(a.c1), QF(a.ci), QF(a.cj), QF(a.ck));
    QuatF bf(QF(b.c1), QF(b.ci), QF(b.cj), QF(b.ck));
    QuatF cif(QF(ci.c1), QF(ci.ci), QF(ci.cj), QF(ci.ck));
    QuatF res = (af - lam.coords) * cif * (df - lam.coords) - bf;
    bool ok = true;
    for (const QF* cc : {&res.c1, &res.ci, &res.cj, &res.ck})
      if (!AlgebraicQuat::vanishes_at(*cc, mu.where)) ok = false;
    if (ok) out.algebraic.push_back(std::move(lam));
  }
  for (const auto& sp : rq.spheres) out.families.push_back(LambdaFamily{d, c, sp});
  (void)ZERO;
  (void)ONE;
  return out;
}

// ---------------------------------------------------------------------------
// 4x4 block characterization: with M = [A B; C D], C invertible, and
// C(A - tI)C^{-1}(D - tI) - CB = [e f; g h] as polynomials in a central t,
// lambda is a left eigenvalue iff e(l) = 0 and f(l) g(l) = 0, or e(l) != 0
// and e(l) conj(e(l)) h(l) - g(l) conj(e(l)) f(l) = 0.
// ---------------------------------------------------------------------------

struct BlockPolys {
  GeneralPoly e, f, g, h;  // entries of C(A-zI)C^{-1}(D-zI) - CB in H_G[z]
};

namespace detail {

inline std::array<QuatMatrix, 4> split_blocks_4x4(const QuatMatrix& M) {
  require(M.rows() == 4 && M.cols() == 4, errc::non_conformant, "expected a 4x4 matrix");
  const Quaternion ZERO = quat(0, 0, 0, 0);
  std::array<QuatMatrix, 4> out{QuatMatrix(2, 2, ZERO), QuatMatrix(2, 2, ZERO),
                                QuatMatrix(2, 2, ZERO), QuatMatrix(2, 2, ZERO)};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      out[0].at(r, c) = M.at(r, c);
      out[1].at(r, c) = M.at(r, c + 2);
      out[2].at(r, c) = M.at(r + 2, c);
      out[3].at(r, c) = M.at(r + 2, c + 2);
    }
  return out;
}

}  // namespace detail

// The entries are general polynomials: the variable does not commute with the
// quaternion coefficients, so substitution is the honest matrix computation.
inline BlockPolys eigen_block_polys_4x4(const QuatMatrix& M) {
  auto [A, B, C, D] = detail::split_blocks_4x4(M);
  if (rank_left(C) < 2) fail(errc::c_not_invertible, "lower-left block is not invertible");
  QuatMatrix Cinv = inverse_matrix(C, quat(1, 0, 0, 0));

  auto lift = [&](const QuatMatrix& X) {
    Mat<GeneralPoly> out(2, 2, GeneralPoly());
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) out.at(r, c) = GeneralPoly::constant(X.at(r, c));
    return out;
  };
  Mat<GeneralPoly> zI(2, 2, GeneralPoly());
  zI.at(0, 0) = GeneralPoly::variable();
  zI.at(1, 1) = GeneralPoly::variable();
  Mat<GeneralPoly> P =
      lift(C) * (lift(A) - zI) * lift(Cinv) * (lift(D) - zI) - lift(C) * lift(B);
  return BlockPolys{P.at(0, 0), P.at(0, 1), P.at(1, 0), P.at(1, 1)};
}

// Verdict of the degree-6 block condition at a concrete lambda.  Equivalent
// to singularity of the 2x2 matrix W = C(A-lI)C^{-1}(D-lI) - CB over H.
inline bool eigen_condition_4x4(const QuatMatrix& M, const Quaternion& lambda) {
  auto [A, B, C, D] = detail::split_blocks_4x4(M);
  if (rank_left(C) < 2) fail(errc::c_not_invertible, "lower-left block is not invertible");
  QuatMatrix Cinv = inverse_matrix(C, quat(1, 0, 0, 0));
  QuatMatrix lI = quat_identity(2).scaled_left(lambda);
  QuatMatrix W = C * (A - lI) * Cinv * (D - lI) - C * B;
  const Quaternion e = W.at(0, 0), f = W.at(0, 1), g = W.at(1, 0), h = W.at(1, 1);
  if (e.is_zero()) return (f * g).is_zero();
  return (e * e.conj() * h - g * e.conj() * f).is_zero();
}

// ---------------------------------------------------------------------------
// Characteristic general polynomial p_A = h^{-1}(det(embedding of A - tI)),
// degree 2k for a k x k matrix (k <= 3).
// ---------------------------------------------------------------------------

using MPC = MPoly<CRat, 4>;

namespace detail {

inline MPC mpc_conj(const MPC& p) {
  MPC r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.conj());
  return r;
}

}  // namespace detail

inline GeneralPoly characteristic_general_poly(const QuatMatrix& A) {
  require(A.is_square(), errc::non_square, "characteristic polynomial needs a square matrix");
  const int k = A.rows();
  require(k >= 1 && k <= 3, errc::size_cap, "characteristic polynomial capped at 3x3");
  const CRat czero(Rational(0)), cone(Rational(1));
  const MPC x1 = MPC::variable(0, cone), x2 = MPC::variable(1, cone);
  const MPC x3 = MPC::variable(2, cone), x4 = MPC::variable(3, cone);
  const MPC iu = MPC::constant(CRat::unit_i(Rational(0)));
  // embed A - lambda I with lambda = x1 + i x2 + j x3 + ij x4:
  // B-part entries  B_A - (x1 + i x2) delta,  C-part  C_A - (x3 + i x4) delta
  auto [BA, CA] = complex_embedding(A);
  Mat<MPC> D(2 * k, 2 * k, MPC());
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      MPC b = MPC::constant(BA.at(r, c));
      MPC cc = MPC::constant(CA.at(r, c));
      if (r == c) {
        b = b - x1 - iu * x2;
        cc = cc - x3 - iu * x4;
      }
      D.at(r, c) = b;
      D.at(r, k + c) = -cc;
      D.at(k + r, c) = detail::mpc_conj(cc);
      D.at(k + r, k + c) = detail::mpc_conj(b);
    }
  MPC det = det_ring(D, MPC::constant(cone));
  // the reduced norm is a real polynomial in x1..x4
  FreeMonoidPoly lifted;
  for (const auto& [e, c] : det.terms()) {
    require(c.im.is_zero(), errc::internal, "reduced norm came out non-real");
    FreeMonoidPoly::Word w;
    for (int var = 0; var < 4; ++var)
      for (int rep = 0; rep < e[static_cast<size_t>(var)]; ++rep)
        w.push_back(static_cast<uint8_t>(var + 1));
    lifted.add_term(w, Quaternion(c.re, Rational(0), Rational(0), Rational(0)));
  }
  return h_inv(lifted);
}

}  // namespace qalg
