#include "quatgeo/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "quatgeo/errors.hpp"
#include "quatgeo/tolerances.hpp"

namespace quatgeo {

namespace {

Eigen::MatrixXcd to_eigen(const CMat<double>& m) {
  Eigen::MatrixXcd r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = to_std(m.at(i, j));
  return r;
}

// Map a complex eigenvector of psi(M) back to H^n. With the block convention
// used by psi_embed, the column (a; conj b) represents a + b j, so the lower
// half comes back conjugated.
QVec<double> quat_vector_from_psi(const Eigen::VectorXcd& u) {
  int n = static_cast<int>(u.size()) / 2;
  QVec<double> v(n);
  for (int i = 0; i < n; ++i) {
    std::complex<double> a = u(i);
    std::complex<double> b = std::conj(u(i + n));
    v[i] = Quat<double>{a.real(), a.imag(), b.real(), b.imag()};
  }
  return v;
}

double residual(const QMatrix<double>& m, const QVec<double>& v,
                std::complex<double> lambda) {
  QVec<double> lhs = m.apply(v);
  QVec<double> rhs = vec_scale_right(v, quat_from_complex(lambda));
  return vec_norm(vec_sub(lhs, rhs));
}

}  // namespace

Spectrum right_eigenvalues(const QMatrix<double>& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(psi_embed(m)),
                                                     /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw InternalInconsistency("eigenvalue iteration failed");

  std::vector<std::complex<double>> ev(solver.eigenvalues().data(),
                                       solver.eigenvalues().data() +
                                           solver.eigenvalues().size());
  // Sort by (re, |im|) and greedily match conjugate pairs.
  std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return std::abs(a.imag()) < std::abs(b.imag());
  });
  std::vector<bool> used(ev.size(), false);
  Spectrum spec;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::size_t mate = ev.size();
    double best = kEpsRec;
    for (std::size_t j = i + 1; j < ev.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(ev[j] - std::conj(ev[i]));
      if (d <= best) {
        best = d;
        mate = j;
      }
    }
    if (mate == ev.size())
      throw InternalInconsistency("eigenvalue of psi(M) without conjugate mate");
    used[mate] = true;
    spec.representatives.emplace_back(ev[i].real(), std::abs(ev[i].imag()));
  }
  std::sort(spec.representatives.begin(), spec.representatives.end(),
            [](const auto& a, const auto& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
  return spec;
}

double shifted_embedding_det(const QMatrix<double>& m,
                             std::complex<double> lambda) {
  CMat<double> shifted = psi_embed(m);
  for (int i = 0; i < shifted.rows(); ++i)
    shifted.at(i, i) -= Cplx<double>{lambda.real(), lambda.imag()};
  Cplx<double> d = shifted.det();
  return std::sqrt(d.norm_sq());
}

QVec<double> right_eigenvector(const QMatrix<double>& m,
                               std::complex<double> lambda) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(psi_embed(m)));
  if (solver.info() != Eigen::Success)
    throw InternalInconsistency("eigenvalue iteration failed");

  // Candidate columns whose eigenvalue matches the requested representative.
  std::vector<int> candidates;
  for (int i = 0; i < solver.eigenvalues().size(); ++i)
    if (std::abs(solver.eigenvalues()(i) - lambda) <= kEpsRec)
      candidates.push_back(i);
  if (candidates.empty())
    throw NotAnEigenvalue("no eigenvalue of psi(M) matches the representative");

  for (int idx : candidates) {
    QVec<double> v = quat_vector_from_psi(solver.eigenvectors().col(idx));
    double n = vec_norm(v);
    if (n <= kEps) continue;
    if (residual(m, v, lambda) <= 1e-6 * n) return v;
  }
  throw InternalInconsistency(
      "psi eigenvector did not reconstruct a quaternionic eigenvector");
}

Diagonalization diagonalize_2x2(const QMatrix<double>& m) {
  if (m.size() != 2)
    throw InvalidArgument("diagonalization is provided for 2 x 2 matrices only");

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(psi_embed(m)));
  if (solver.info() != Eigen::Success)
    throw InternalInconsistency("eigenvalue iteration failed");

  Spectrum spec = right_eigenvalues(m);
  const auto& reps = spec.representatives;

  double scale = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) scale = std::max(scale, quat_norm(m.at(i, j)));
  scale = std::max(scale, 1.0);

  // Columns of psi(M)'s eigenvector matrix that match each representative.
  // For a repeated sphere the candidates may be quaternionically dependent,
  // so every pair is tried until one yields an invertible P.
  auto columns_for = [&](std::complex<double> rep) {
    std::vector<QVec<double>> out;
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
      if (std::abs(solver.eigenvalues()(i) - rep) > kEpsRec) continue;
      QVec<double> v = quat_vector_from_psi(solver.eigenvectors().col(i));
      double n = vec_norm(v);
      if (n <= kEps) continue;
      if (residual(m, v, rep) > 1e-6 * n) continue;
      out.push_back(vec_scale_right(v, Quat<double>(1.0 / n)));
    }
    return out;
  };

  std::vector<QVec<double>> c0 = columns_for(reps[0]);
  std::vector<QVec<double>> c1 = columns_for(reps[1]);

  for (const auto& v0 : c0) {
    for (const auto& v1 : c1) {
      QMatrix<double> p(2);
      p.at(0, 0) = v0[0];
      p.at(1, 0) = v0[1];
      p.at(0, 1) = v1[0];
      p.at(1, 1) = v1[1];
      if (dieudonne_det(p) <= 1e-6) continue;

      QMatrix<double> d(2);
      d.at(0, 0) = quat_from_complex(reps[0]);
      d.at(1, 1) = quat_from_complex(reps[1]);

      // Verify M P = P D before trusting the pair of columns.
      QMatrix<double> err = m * p - p * d;
      double worst = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          worst = std::max(worst, quat_norm(err.at(i, j)));
      if (worst <= 1e-6 * scale) return {p, d};
    }
  }
  throw NotDiagonalizable("no independent pair of eigenvectors found");
}

}  // namespace quatgeo
