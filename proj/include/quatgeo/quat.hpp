#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "quatgeo/cplx.hpp"
#include "quatgeo/errors.hpp"
#include "quatgeo/scalar.hpp"

namespace quatgeo {

// Quaternion over a scalar backend, basis {1, I, J, K} with IJ = K.
template <class S>
struct Quat {
  S w{}, x{}, y{}, z{};

  Quat() = default;
  Quat(S w_) : w(std::move(w_)) {}  // NOLINT: implicit from scalar wanted
  Quat(S w_, S x_, S y_, S z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Quat unit_i() { return {S(0), S(1), S(0), S(0)}; }
  static Quat unit_j() { return {S(0), S(0), S(1), S(0)}; }
  static Quat unit_k() { return {S(0), S(0), S(0), S(1)}; }

  Quat conj() const { return {w, -x, -y, -z}; }
  S norm_sq() const { return w * w + x * x + y * y + z * z; }
  S imag_norm_sq() const { return x * x + y * y + z * z; }

  bool is_zero() const {
    using T = ScalarTraits<S>;
    return T::is_zero(w) && T::is_zero(x) && T::is_zero(y) && T::is_zero(z);
  }
  bool is_real() const {
    using T = ScalarTraits<S>;
    return T::is_zero(x) && T::is_zero(y) && T::is_zero(z);
  }
  // Lies in the complex plane span{1, I}.
  bool is_complex() const {
    using T = ScalarTraits<S>;
    return T::is_zero(y) && T::is_zero(z);
  }
  bool is_imaginary() const { return ScalarTraits<S>::is_zero(w); }

  Quat inverse() const {
    S n = norm_sq();
    if (ScalarTraits<S>::is_zero(n)) throw DivisionByZero("quaternion inverse of zero");
    return {w / n, -x / n, -y / n, -z / n};
  }

  // q = a + b j with a = w + x i, b = y + z i.
  Cplx<S> complex_a() const { return {w, x}; }
  Cplx<S> complex_b() const { return {y, z}; }
  static Quat from_complex_pair(const Cplx<S>& a, const Cplx<S>& b) {
    return {a.re, a.im, b.re, b.im};
  }

  Quat operator-() const { return {-w, -x, -y, -z}; }
  Quat& operator+=(const Quat& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Quat& operator-=(const Quat& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  // Hamilton product; non-commutative.
  friend Quat operator*(const Quat& p, const Quat& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
  }
  Quat& operator*=(const Quat& o) { return *this = *this * o; }
  friend Quat operator+(Quat a, const Quat& b) { return a += b; }
  friend Quat operator-(Quat a, const Quat& b) { return a -= b; }
  friend Quat operator/(const Quat& a, const Quat& b) { return a * b.inverse(); }

  friend bool operator==(const Quat& a, const Quat& b) {
    using T = ScalarTraits<S>;
    return T::eq(a.w, b.w) && T::eq(a.x, b.x) && T::eq(a.y, b.y) && T::eq(a.z, b.z);
  }

  std::size_t hash() const {
    using T = ScalarTraits<S>;
    std::size_t h = T::hash(w);
    h = hash_combine(h, T::hash(x));
    h = hash_combine(h, T::hash(y));
    return hash_combine(h, T::hash(z));
  }
};

template <class S>
Quat<S> quat_pow(Quat<S> q, long n) {
  if (n < 0) return quat_pow(q.inverse(), -n);
  Quat<S> r(S(1));
  while (n > 0) {
    if (n & 1) r *= q;
    q *= q;
    n >>= 1;
  }
  return r;
}

inline double quat_norm(const Quat<double>& q) { return std::sqrt(q.norm_sq()); }

inline double quat_dist(const Quat<double>& a, const Quat<double>& b) {
  return quat_norm(a - b);
}

// The unique element of the conjugation sphere { u^-1 q u } of the form
// w + x I with x >= 0: real part kept, imaginary part replaced by its norm.
inline Quat<double> conjugate_sphere_representative(const Quat<double>& q) {
  return {q.w, std::sqrt(q.imag_norm_sq()), 0.0, 0.0};
}

inline Quat<double> to_double(const Quat<Rat>& q) {
  return {q.w.to_double(), q.x.to_double(), q.y.to_double(), q.z.to_double()};
}

}  // namespace quatgeo
