#include <doctest.h>

#include <cmath>
#include <complex>

#include "quatgeo/qmatrix.hpp"
#include "quatgeo/spectra.hpp"
#include "test_helpers.hpp"

using namespace quatgeo;
using namespace quatgeo::testing;

namespace {

using QR = Quat<Rat>;
using QD = Quat<double>;

QMatrix<Rat> mat2(QR a, QR b, QR c, QR d) {
  QMatrix<Rat> m(2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

QMatrix<double> mat2d(QD a, QD b, QD c, QD d) {
  QMatrix<double> m(2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

}  // namespace

TEST_CASE("psi of scalars: 1 and j") {
  QMatrix<Rat> one(1);
  one.at(0, 0) = QR(Rat(1));
  CHECK(psi_embed(one) == CMat<Rat>::identity(2));

  QMatrix<Rat> j(1);
  j.at(0, 0) = QR::unit_j();
  CMat<Rat> pj = psi_embed(j);
  CHECK(pj.at(0, 0).is_zero());
  CHECK(pj.at(0, 1) == Cplx<Rat>(Rat(-1)));
  CHECK(pj.at(1, 0) == Cplx<Rat>(Rat(1)));
  CHECK(pj.at(1, 1).is_zero());
}

TEST_CASE("psi is an algebra homomorphism (exact, 200 random 2x2 pairs)") {
  CHECK(psi_embed(QMatrix<Rat>::identity(2)) == CMat<Rat>::identity(4));
  for (int i = 0; i < 200; ++i) {
    QMatrix<Rat> m = rand_qmatrix_rat(2), n = rand_qmatrix_rat(2);
    CHECK(psi_embed(m * n) == psi_embed(m) * psi_embed(n));
  }
}

TEST_CASE("Dieudonne determinant basics") {
  CHECK(dieudonne_det(QMatrix<Rat>::identity(3)) == doctest::Approx(1.0));

  for (int i = 0; i < 50; ++i) {
    QMatrix<Rat> m(1);
    m.at(0, 0) = rand_quat_rat();
    // 1x1 oracle: det psi = |q|^2, so det_H = |q|.
    double expected = std::sqrt(m.at(0, 0).norm_sq().to_double());
    CHECK(dieudonne_det(m) == doctest::Approx(expected).epsilon(1e-12));
  }

  // Second row is a left multiple of the first: singular, exactly.
  QMatrix<Rat> sing =
      mat2(QR(Rat(1)), QR::unit_j(), QR::unit_j(), -QR(Rat(1)));
  CHECK(det_psi(sing).is_zero());
  CHECK(dieudonne_det(sing) == 0.0);
}

TEST_CASE("determinant is multiplicative (300 random float pairs)") {
  for (int i = 0; i < 300; ++i) {
    QMatrix<double> m = rand_qmatrix_double(2), n = rand_qmatrix_double(2);
    double lhs = dieudonne_det(m * n);
    double rhs = dieudonne_det(m) * dieudonne_det(n);
    CHECK(std::abs(lhs - rhs) <= 1e-6 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("right eigenvalues of simple matrices") {
  Spectrum s = right_eigenvalues(mat2d(QD(2.0), QD(), QD(), QD(3.0)));
  REQUIRE(s.representatives.size() == 2);
  CHECK(std::abs(s.representatives[0] - std::complex<double>(2, 0)) < 1e-9);
  CHECK(std::abs(s.representatives[1] - std::complex<double>(3, 0)) < 1e-9);

  // [[0, 1], [-1, 0]] has the sphere of i twice.
  Spectrum rot = right_eigenvalues(mat2d(QD(), QD(1.0), QD(-1.0), QD()));
  REQUIRE(rot.representatives.size() == 2);
  for (const auto& rep : rot.representatives)
    CHECK(std::abs(rep - std::complex<double>(0, 1)) < 1e-9);
}

TEST_CASE("every representative annihilates the shifted embedding det") {
  for (int i = 0; i < 100; ++i) {
    QMatrix<double> m = rand_qmatrix_double(2);
    Spectrum s = right_eigenvalues(m);
    REQUIRE(s.representatives.size() == 2);
    for (const auto& rep : s.representatives)
      CHECK(shifted_embedding_det(m, rep) <= 1e-6);
  }
}

TEST_CASE("the quaternionic shift det_H(M - rep I) is the wrong certificate") {
  // For real representatives both certificates vanish ...
  QMatrix<double> diag = mat2d(QD(2.0), QD(), QD(), QD(3.0));
  QMatrix<double> shifted = diag;
  shifted.at(0, 0) -= QD(2.0);
  shifted.at(1, 1) -= QD(2.0);
  CHECK(dieudonne_det(shifted) <= 1e-12);
  CHECK(shifted_embedding_det(diag, {2.0, 0.0}) <= 1e-12);

  // ... but for the 1x1 matrix [j], whose right eigensphere is the unit
  // imaginary sphere with representative i, the quaternionic shift j - i
  // is invertible (|j - i| = sqrt 2) while the embedding certificate
  // vanishes. The right-shift operator is not quaternion-linear, which is
  // why the certificate must live on the embedding.
  QMatrix<double> j(1);
  j.at(0, 0) = QD::unit_j();
  Spectrum s = right_eigenvalues(j);
  REQUIRE(s.representatives.size() == 1);
  CHECK(std::abs(s.representatives[0] - std::complex<double>(0, 1)) < 1e-12);
  CHECK(shifted_embedding_det(j, s.representatives[0]) <= 1e-12);
  QMatrix<double> jshift(1);
  jshift.at(0, 0) = QD::unit_j() - QD::unit_i();
  CHECK(dieudonne_det(jshift) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("spectrum is invariant under similarity") {
  for (int i = 0; i < 30; ++i) {
    QMatrix<double> m = rand_qmatrix_double(2);
    QMatrix<Rat> p;
    do {
      p = rand_invertible_rat(2);
    } while (dieudonne_det(p) < 0.5);  // keep the conjugation well conditioned
    QMatrix<double> pd = to_double(p);
    QMatrix<double> sim = inverse(pd) * m * pd;
    Spectrum a = right_eigenvalues(m), b = right_eigenvalues(sim);
    REQUIRE(a.representatives.size() == b.representatives.size());
    for (std::size_t k = 0; k < a.representatives.size(); ++k)
      CHECK(std::abs(a.representatives[k] - b.representatives[k]) <= kEpsRec);
  }
}

TEST_CASE("right eigenvectors: residual and the eigen-sphere closure") {
  QMatrix<double> diag = mat2d(QD(2.0), QD(), QD(), QD(3.0));
  QVec<double> v = right_eigenvector(diag, {2.0, 0.0});
  CHECK(quat_norm(v[1]) <= 1e-9 * vec_norm(v));
  CHECK(quat_norm(v[0]) > 0.1);

  CHECK_THROWS_AS(right_eigenvector(diag, {7.0, 0.0}), NotAnEigenvalue);

  for (int i = 0; i < 100; ++i) {
    QMatrix<double> m = rand_qmatrix_double(2);
    Spectrum s = right_eigenvalues(m);
    std::complex<double> lambda = s.representatives[i % 2];
    QVec<double> w = right_eigenvector(m, lambda);
    double n = vec_norm(w);
    REQUIRE(n > 0);
    QVec<double> resid =
        vec_sub(m.apply(w), vec_scale_right(w, quat_from_complex(lambda)));
    CHECK(vec_norm(resid) <= 1e-6 * n);

    // If M v = v lambda then M (v u) = (v u) (u^-1 lambda u).
    for (int k = 0; k < 10; ++k) {
      QD u = rand_unit_quat();
      QVec<double> vu = vec_scale_right(w, u);
      QD conj_lambda = u.inverse() * quat_from_complex(lambda) * u;
      QVec<double> resid2 =
          vec_sub(m.apply(vu), vec_scale_right(vu, conj_lambda));
      CHECK(vec_norm(resid2) <= 1e-6 * n);
    }
  }
}

TEST_CASE("2x2 diagonalization") {
  // Already diagonal: the columns stay the standard basis up to phase.
  Diagonalization d = diagonalize_2x2(mat2d(QD(2.0), QD(), QD(), QD(3.0)));
  CHECK(quat_norm(d.p.at(1, 0)) <= 1e-9);
  CHECK(quat_norm(d.p.at(0, 1)) <= 1e-9);
  CHECK(quat_close(d.d.at(0, 0), QD(2.0), 1e-9));
  CHECK(quat_close(d.d.at(1, 1), QD(3.0), 1e-9));

  // Construct-then-recover: conjugate diag(lambda, 1) by a random P0.
  for (int i = 0; i < 25; ++i) {
    QD lambda;
    do {
      lambda = rand_quat_double();
    } while (quat_dist(conjugate_sphere_representative(lambda), QD(1.0)) < 0.3);
    QMatrix<Rat> p0r;
    do {
      p0r = rand_invertible_rat(2);
    } while (dieudonne_det(p0r) < 0.5);
    QMatrix<double> p0 = to_double(p0r);
    QMatrix<double> m0(2);
    m0.at(0, 0) = lambda;
    m0.at(1, 1) = QD(1.0);
    QMatrix<double> m = p0 * m0 * inverse(p0);
    Diagonalization dd = diagonalize_2x2(m);
    QD rep = conjugate_sphere_representative(lambda);
    std::vector<QD> got = {dd.d.at(0, 0), dd.d.at(1, 1)};
    bool match = (quat_close(got[0], rep, 1e-5) && quat_close(got[1], QD(1.0), 1e-5)) ||
                 (quat_close(got[1], rep, 1e-5) && quat_close(got[0], QD(1.0), 1e-5));
    CHECK(match);
    // Reconstruction
    QMatrix<double> recon = dd.p * dd.d * inverse(dd.p);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        CHECK(quat_close(recon.at(r, c), m.at(r, c), 1e-5));
  }

  // A repeated eigensphere with a full eigenspace: j I_2 has the sphere of
  // i twice, and every nonzero vector is an eigenvector.
  QMatrix<double> jj(2);
  jj.at(0, 0) = QD::unit_j();
  jj.at(1, 1) = QD::unit_j();
  Diagonalization dj = diagonalize_2x2(jj);
  CHECK(quat_close(dj.d.at(0, 0), QD::unit_i(), 1e-9));
  CHECK(quat_close(dj.d.at(1, 1), QD::unit_i(), 1e-9));
  QMatrix<double> recon_j = dj.p * dj.d * inverse(dj.p);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(quat_close(recon_j.at(r, c), jj.at(r, c), 1e-6));

  QMatrix<double> defective = mat2d(QD(1.0), QD(1.0), QD(), QD(1.0));
  CHECK_THROWS_AS(diagonalize_2x2(defective), NotDiagonalizable);
}

TEST_CASE("left linear solve over the division ring") {
  // Identity: unique solution b.
  QVec<Rat> b = rand_qvec_rat(2);
  LinearSolution<Rat> sol = solve_left_linear(QMatrix<Rat>::identity(2), b);
  REQUIRE(sol.kind == LinearSolution<Rat>::Kind::Unique);
  CHECK(sol.particular[0] == b[0]);
  CHECK(sol.particular[1] == b[1]);

  // Zero matrix, zero rhs: all of H^2.
  LinearSolution<Rat> all =
      solve_left_linear(QMatrix<Rat>(2), QVec<Rat>(2));
  CHECK(all.kind == LinearSolution<Rat>::Kind::Affine);
  CHECK(all.dim() == 2);

  // Zero matrix, nonzero rhs: inconsistent.
  QVec<Rat> rhs(2);
  rhs[0] = QR(Rat(1));
  CHECK(solve_left_linear(QMatrix<Rat>(2), rhs).kind ==
        LinearSolution<Rat>::Kind::Inconsistent);

  // Construct-then-solve on random invertible exact systems.
  for (int i = 0; i < 100; ++i) {
    QMatrix<Rat> m = rand_invertible_rat(2);
    QVec<Rat> x0 = rand_qvec_rat(2);
    LinearSolution<Rat> s = solve_left_linear(m, m.apply(x0));
    REQUIRE(s.kind == LinearSolution<Rat>::Kind::Unique);
    CHECK(s.particular[0] == x0[0]);
    CHECK(s.particular[1] == x0[1]);
  }
}

TEST_CASE("homogeneous solutions form a right module and detect singularity") {
  for (int i = 0; i < 100; ++i) {
    // Build a singular matrix: second row is a left multiple of the first.
    QR a = rand_quat_rat(), b = rand_quat_rat(), q = rand_nonzero_quat_rat();
    QMatrix<Rat> m = mat2(a, b, q * a, q * b);
    bool singular_det = det_psi(m).is_zero();
    LinearSolution<Rat> hom = solve_left_linear(m, QVec<Rat>(2));
    bool nontrivial = hom.kind == LinearSolution<Rat>::Kind::Affine;
    CHECK(singular_det == nontrivial);
    for (const auto& v : hom.basis) {
      QVec<Rat> img = m.apply(v);
      CHECK(img[0].is_zero());
      CHECK(img[1].is_zero());
      // Right scaling stays in the solution set.
      QVec<Rat> scaled = vec_scale_right(v, rand_quat_rat());
      QVec<Rat> img2 = m.apply(scaled);
      CHECK(img2[0].is_zero());
      CHECK(img2[1].is_zero());
    }
  }
}

TEST_CASE("psi commutes with inversion") {
  for (int i = 0; i < 50; ++i) {
    QMatrix<Rat> m = rand_invertible_rat(2);
    QMatrix<Rat> mi = inverse(m);
    CHECK(m * mi == QMatrix<Rat>::identity(2));
    CHECK(mi * m == QMatrix<Rat>::identity(2));
    CHECK(psi_embed(m) * psi_embed(mi) == CMat<Rat>::identity(4));
  }
  CHECK_THROWS_AS(inverse(QMatrix<Rat>(2)), NotInvertible);
}
