#pragma once

#include <complex>
#include <vector>

#include "quatgeo/errors.hpp"
#include "quatgeo/scalar.hpp"

namespace quatgeo {

// Complex number over either scalar backend, identified with span{1, I}.
// std::complex makes no guarantees for non-floating scalars, so we carry
// our own.
template <class S>
struct Cplx {
  S re{};
  S im{};

  Cplx() = default;
  Cplx(S r) : re(std::move(r)) {}  // NOLINT: implicit from scalar wanted
  Cplx(S r, S i) : re(std::move(r)), im(std::move(i)) {}

  Cplx conj() const { return {re, -im}; }
  S norm_sq() const { return re * re + im * im; }
  bool is_zero() const {
    return ScalarTraits<S>::is_zero(re) && ScalarTraits<S>::is_zero(im);
  }

  Cplx operator-() const { return {-re, -im}; }
  Cplx& operator+=(const Cplx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cplx& operator-=(const Cplx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Cplx& operator*=(const Cplx& o) {
    S r = re * o.re - im * o.im;
    S i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Cplx& operator/=(const Cplx& o) {
    S n = o.norm_sq();
    if (ScalarTraits<S>::is_zero(n)) throw DivisionByZero("complex division by zero");
    Cplx num = *this * o.conj();
    re = num.re / n;
    im = num.im / n;
    return *this;
  }

  friend Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
  friend Cplx operator-(Cplx a, const Cplx& b) { return a -= b; }
  friend Cplx operator*(Cplx a, const Cplx& b) { return a *= b; }
  friend Cplx operator/(Cplx a, const Cplx& b) { return a /= b; }
  friend bool operator==(const Cplx& a, const Cplx& b) {
    return ScalarTraits<S>::eq(a.re, b.re) && ScalarTraits<S>::eq(a.im, b.im);
  }
};

inline std::complex<double> to_std(const Cplx<double>& c) { return {c.re, c.im}; }
inline std::complex<double> to_std(const Cplx<Rat>& c) {
  return {c.re.to_double(), c.im.to_double()};
}

// Dense complex matrix, only as large as the psi images need (2n x 2n).
template <class S>
class CMat {
 public:
  CMat(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static CMat identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cplx<S>(S(1));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cplx<S>& at(int i, int j) { return e_[i * cols_ + j]; }
  const Cplx<S>& at(int i, int j) const { return e_[i * cols_ + j]; }

  friend CMat operator*(const CMat& a, const CMat& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("complex matrix size mismatch");
    CMat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Cplx<S>& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  friend bool operator==(const CMat& a, const CMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (!(a.e_[i] == b.e_[i])) return false;
    return true;
  }

  // Determinant by Gaussian elimination. Exact backend pivots on the first
  // nonzero entry, float backend on the largest squared modulus.
  Cplx<S> det() const {
    if (rows_ != cols_) throw InvalidArgument("determinant of non-square matrix");
    CMat m = *this;
    int n = rows_;
    Cplx<S> d(S(1));
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      if constexpr (ScalarTraits<S>::exact) {
        for (int r = col; r < n; ++r)
          if (!m.at(r, col).is_zero()) {
            pivot = r;
            break;
          }
      } else {
        S best{};
        for (int r = col; r < n; ++r) {
          S mag = m.at(r, col).norm_sq();
          if (pivot < 0 || best < mag) {
            pivot = r;
            best = mag;
          }
        }
        if (pivot >= 0 && ScalarTraits<S>::is_zero(m.at(pivot, col).norm_sq()))
          pivot = -1;
      }
      if (pivot < 0) return Cplx<S>();
      if (pivot != col) {
        for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
        d = -d;
      }
      d *= m.at(col, col);
      Cplx<S> inv = Cplx<S>(S(1)) / m.at(col, col);
      for (int r = col + 1; r < n; ++r) {
        if (m.at(r, col).is_zero()) continue;
        Cplx<S> f = m.at(r, col) * inv;
        for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
      }
    }
    return d;
  }

 private:
  int rows_, cols_;
  std::vector<Cplx<S>> e_;
};

}  // namespace quatgeo
