#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "quatgeo/cplx.hpp"
#include "quatgeo/quat.hpp"

namespace quatgeo {

template <class S>
using QVec = std::vector<Quat<S>>;

// Square quaternionic matrix acting on column vectors from the left.
template <class S>
class QMatrix {
 public:
  explicit QMatrix(int n = 0) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

  static QMatrix identity(int n) {
    QMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Quat<S>(S(1));
    return m;
  }

  int size() const { return n_; }
  Quat<S>& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const Quat<S>& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }

  QMatrix operator-() const {
    QMatrix r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
  }
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    a.check_same(b);
    QMatrix r(a.n_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    a.check_same(b);
    QMatrix r(a.n_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    a.check_same(b);
    QMatrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const Quat<S>& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (!(a.e_[i] == b.e_[i])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& q : e_)
      if (!q.is_zero()) return false;
    return true;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_);
    for (const auto& q : e_) h = hash_combine(h, q.hash());
    return h;
  }

  QVec<S> apply(const QVec<S>& v) const {
    if (static_cast<int>(v.size()) != n_)
      throw InvalidArgument("matrix/vector size mismatch");
    QVec<S> r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

 private:
  void check_same(const QMatrix& o) const {
    if (n_ != o.n_) throw InvalidArgument("quaternionic matrix size mismatch");
  }
  int n_;
  std::vector<Quat<S>> e_;
};

// Embedding into 2n x 2n complex matrices. An entry q = a + b j maps to the
// block [[a, -b], [conj b, conj a]]; this is the multiplicative convention
// (psi(MN) = psi(M) psi(N), psi(I_n) = I_2n).
template <class S>
CMat<S> psi_embed(const QMatrix<S>& m) {
  int n = m.size();
  CMat<S> r(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cplx<S> a = m.at(i, j).complex_a();
      Cplx<S> b = m.at(i, j).complex_b();
      r.at(i, j) = a;
      r.at(i, j + n) = -b;
      r.at(i + n, j) = b.conj();
      r.at(i + n, j + n) = a.conj();
    }
  return r;
}

// det(psi(M)) is real and nonnegative for every quaternionic M; anything
// else signals a bug in the embedding.
template <class S>
S det_psi(const QMatrix<S>& m) {
  Cplx<S> d = psi_embed(m).det();
  if constexpr (ScalarTraits<S>::exact) {
    if (!d.im.is_zero())
      throw InternalInconsistency("det psi(M) has nonzero imaginary part");
    if (d.re.sign() < 0)
      throw InternalInconsistency("det psi(M) negative: " + d.re.str());
  } else {
    double scale = std::abs(d.re) + std::abs(d.im) + 1.0;
    if (std::abs(d.im) > kEps * scale)
      throw InternalInconsistency("det psi(M) has nonzero imaginary part");
    if (d.re < -kEps * scale)
      throw InternalInconsistency("det psi(M) negative");
  }
  return d.re;
}

// Dieudonne determinant: sqrt(det psi(M)), a nonnegative real. Zero exactly
// when M is not invertible.
template <class S>
double dieudonne_det(const QMatrix<S>& m) {
  double d = ScalarTraits<S>::to_double(det_psi(m));
  return std::sqrt(d < 0 ? 0.0 : d);
}

// Solution set of M x = b over the division ring: either a particular
// solution plus a basis of the homogeneous solutions (a right module),
// or inconsistency. Inconsistency is a value here, not an error.
template <class S>
struct LinearSolution {
  enum class Kind { Unique, Affine, Inconsistent } kind;
  QVec<S> particular;            // valid unless Inconsistent
  std::vector<QVec<S>> basis;    // right-span of the homogeneous part
  int dim() const { return static_cast<int>(basis.size()); }
};

namespace detail {

// Pivot choice: first nonzero entry for the exact backend (determinism),
// largest norm for floats (stability).
template <class S>
int pick_pivot(const std::vector<QVec<S>>& rows, int col, int from) {
  int n = static_cast<int>(rows.size());
  if constexpr (ScalarTraits<S>::exact) {
    for (int r = from; r < n; ++r)
      if (!rows[r][col].is_zero()) return r;
    return -1;
  } else {
    int best = -1;
    double mag = 0;
    for (int r = from; r < n; ++r) {
      double m = ScalarTraits<S>::to_double(rows[r][col].norm_sq());
      if (m > mag) {
        mag = m;
        best = r;
      }
    }
    if (best >= 0 && mag <= kEps * kEps) return -1;
    return best;
  }
}

}  // namespace detail

template <class S>
LinearSolution<S> solve_left_linear(const QMatrix<S>& m, const QVec<S>& b) {
  int n = m.size();
  if (static_cast<int>(b.size()) != n)
    throw InvalidArgument("right-hand side size mismatch");

  // Augmented rows [M | b]; row operations multiply from the left.
  std::vector<QVec<S>> rows(n, QVec<S>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
    rows[i][n] = b[i];
  }

  std::vector<int> pivot_col(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pr = detail::pick_pivot(rows, col, rank);
    if (pr < 0) continue;
    std::swap(rows[rank], rows[pr]);
    Quat<S> inv = rows[rank][col].inverse();
    for (int j = col; j <= n; ++j) rows[rank][j] = inv * rows[rank][j];
    for (int r = 0; r < n; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Quat<S> f = rows[r][col];
      for (int j = col; j <= n; ++j) rows[r][j] -= f * rows[rank][j];
    }
    pivot_col[rank] = col;
    ++rank;
  }

  for (int r = rank; r < n; ++r)
    if (!rows[r][n].is_zero())
      return {LinearSolution<S>::Kind::Inconsistent, {}, {}};

  LinearSolution<S> sol;
  sol.particular.assign(n, Quat<S>());
  for (int r = 0; r < rank; ++r) sol.particular[pivot_col[r]] = rows[r][n];

  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    QVec<S> v(n);
    v[j] = Quat<S>(S(1));
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][j];
    sol.basis.push_back(std::move(v));
  }
  sol.kind = sol.basis.empty() ? LinearSolution<S>::Kind::Unique
                               : LinearSolution<S>::Kind::Affine;
  return sol;
}

template <class S>
QMatrix<S> inverse(const QMatrix<S>& m) {
  int n = m.size();
  QMatrix<S> r(n);
  for (int c = 0; c < n; ++c) {
    QVec<S> e(n);
    e[c] = Quat<S>(S(1));
    LinearSolution<S> sol = solve_left_linear(m, e);
    if (sol.kind != LinearSolution<S>::Kind::Unique)
      throw NotInvertible("matrix is singular");
    for (int i = 0; i < n; ++i) r.at(i, c) = sol.particular[i];
  }
  return r;
}

template <class S>
QVec<S> vec_sub(const QVec<S>& a, const QVec<S>& b) {
  QVec<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class S>
QVec<S> vec_add(const QVec<S>& a, const QVec<S>& b) {
  QVec<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Right scaling v * mu; h(v mu) = (h v) mu, so these span right submodules.
template <class S>
QVec<S> vec_scale_right(const QVec<S>& v, const Quat<S>& mu) {
  QVec<S> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * mu;
  return r;
}

template <class S>
S vec_norm_sq(const QVec<S>& v) {
  S n{};
  for (const auto& q : v) n += q.norm_sq();
  return n;
}

inline double vec_norm(const QVec<double>& v) {
  return std::sqrt(vec_norm_sq(v));
}

inline QVec<double> to_double(const QVec<Rat>& v) {
  QVec<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_double(v[i]);
  return r;
}

inline QMatrix<double> to_double(const QMatrix<Rat>& m) {
  QMatrix<double> r(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r.at(i, j) = to_double(m.at(i, j));
  return r;
}

}  // namespace quatgeo
