#pragma once

#include <complex>
#include <vector>

#include "quatgeo/qmatrix.hpp"

namespace quatgeo {

// Right-eigenvalue spectrum: one complex sphere representative (nonnegative
// imaginary part) per eigenvalue sphere, with multiplicity, sorted by
// (re, im). Total count equals the matrix dimension.
struct Spectrum {
  std::vector<std::complex<double>> representatives;
};

// Eigenvalues of psi(M) come in conjugate pairs; they are paired up and each
// pair contributes one representative. Unpairable leftovers throw
// InternalInconsistency.
Spectrum right_eigenvalues(const QMatrix<double>& m);

// |det(psi(M) - lambda I_2n)|: vanishes exactly when the sphere of lambda
// consists of right eigenvalues of M. This is the determinant of the
// right-shift operator v -> M v - v lambda, which is complex-linear but not
// quaternion-linear; the quaternionic det_H(M - lambda I) stays positive at
// genuine right eigenvalues whenever M has non-complex entries, so it cannot
// serve as the vanishing certificate (see the spectrum tests).
double shifted_embedding_det(const QMatrix<double>& m,
                             std::complex<double> lambda);

// Nonzero v with M v = v lambda for a complex sphere representative lambda.
// The result is reconstructed from a complex eigenvector of psi(M) and only
// returned after the residual check |Mv - v lambda| <= 1e-6 |v| passes.
QVec<double> right_eigenvector(const QMatrix<double>& m,
                               std::complex<double> lambda);

struct Diagonalization {
  QMatrix<double> p;  // invertible, columns are eigenvectors
  QMatrix<double> d;  // diagonal of sphere representatives
};

// M = P D P^-1 for 2 x 2 matrices with independent eigenvectors; defective
// input throws NotDiagonalizable. Reconstruction is verified to 1e-6 in max
// entry norm before returning.
Diagonalization diagonalize_2x2(const QMatrix<double>& m);

inline Quat<double> quat_from_complex(std::complex<double> c) {
  return {c.real(), c.imag(), 0.0, 0.0};
}

}  // namespace quatgeo
