#pragma once

#include <vector>

#include "quatgeo/qmatrix.hpp"

namespace quatgeo {

// Element of Aff(n,H), stored as holonomy block plus translation column.
// Equivalent to the (n+1) x (n+1) matrix with last row (0,...,0,1); the
// convention is left action on column vectors, so (A*B) means "apply B,
// then A".
template <class S>
struct AffineMap {
  QMatrix<S> h;  // holonomy, invertible
  QVec<S> t;     // translation

  AffineMap() : h(0) {}
  AffineMap(QMatrix<S> hol, QVec<S> tr) : h(std::move(hol)), t(std::move(tr)) {
    if (static_cast<int>(t.size()) != h.size())
      throw InvalidArgument("holonomy/translation size mismatch");
  }

  int dim() const { return h.size(); }

  static AffineMap identity(int n) {
    return {QMatrix<S>::identity(n), QVec<S>(n)};
  }

  static AffineMap translation(QVec<S> tr) {
    int n = static_cast<int>(tr.size());
    return {QMatrix<S>::identity(n), std::move(tr)};
  }

  // The (n+1) x (n+1) picture all row formulas are written against.
  QMatrix<S> as_matrix() const {
    int n = dim();
    QMatrix<S> m(n + 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m.at(i, j) = h.at(i, j);
      m.at(i, n) = t[i];
    }
    m.at(n, n) = Quat<S>(S(1));
    return m;
  }

  static AffineMap from_matrix(const QMatrix<S>& m) {
    int n = m.size() - 1;
    if (n < 1) throw ShapeError("affine matrix must be at least 2 x 2");
    for (int j = 0; j < n; ++j)
      if (!m.at(n, j).is_zero())
        throw ShapeError("affine matrix must have last row (0,...,0,1)");
    if (!(m.at(n, n) == Quat<S>(S(1))))
      throw ShapeError("affine matrix must have last row (0,...,0,1)");
    AffineMap a;
    a.h = QMatrix<S>(n);
    a.t.assign(n, Quat<S>());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a.h.at(i, j) = m.at(i, j);
      a.t[i] = m.at(i, n);
    }
    return a;
  }

  QVec<S> act(const QVec<S>& p) const { return vec_add(h.apply(p), t); }

  AffineMap inverse() const {
    QMatrix<S> hi = quatgeo::inverse(h);  // NotInvertible on singular holonomy
    QVec<S> ti = hi.apply(t);
    for (auto& q : ti) q = -q;
    return {std::move(hi), std::move(ti)};
  }

  friend AffineMap operator*(const AffineMap& a, const AffineMap& b) {
    return {a.h * b.h, vec_add(a.h.apply(b.t), a.t)};
  }
  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    if (a.dim() != b.dim() || !(a.h == b.h)) return false;
    for (int i = 0; i < a.dim(); ++i)
      if (!(a.t[i] == b.t[i])) return false;
    return true;
  }

  bool is_identity() const { return *this == identity(dim()); }

  std::size_t hash() const {
    std::size_t s = h.hash();
    for (const auto& q : t) s = hash_combine(s, q.hash());
    return s;
  }
};

template <class S>
AffineMap<S> pow_iterated(const AffineMap<S>& a, long n) {
  if (n < 0) return pow_iterated(a.inverse(), -n);
  AffineMap<S> r = AffineMap<S>::identity(a.dim());
  for (long i = 0; i < n; ++i) r = r * a;
  return r;
}

// [A, B] = A B A^-1 B^-1. With the Aff(2,H) fixture generators A, B this
// evaluates to the pure translation C by (1, 0).
template <class S>
AffineMap<S> commutator(const AffineMap<S>& a, const AffineMap<S>& b) {
  return a * b * a.inverse() * b.inverse();
}

// Fixed points of an affine map: solutions of (h - I) p = -t.
template <class S>
struct FixedPointSet {
  enum class Kind { Empty, Point, AffineSubspace } kind;
  QVec<S> point;                 // a fixed point when nonempty
  std::vector<QVec<S>> basis;    // right-basis of the direction space
  bool empty() const { return kind == Kind::Empty; }
  int dimension() const { return static_cast<int>(basis.size()); }
};

template <class S>
FixedPointSet<S> fixed_points(const AffineMap<S>& a) {
  int n = a.dim();
  QVec<S> rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = -a.t[i];
  LinearSolution<S> sol =
      solve_left_linear(a.h - QMatrix<S>::identity(n), rhs);
  switch (sol.kind) {
    case LinearSolution<S>::Kind::Inconsistent:
      return {FixedPointSet<S>::Kind::Empty, {}, {}};
    case LinearSolution<S>::Kind::Unique:
      return {FixedPointSet<S>::Kind::Point, std::move(sol.particular), {}};
    default:
      return {FixedPointSet<S>::Kind::AffineSubspace, std::move(sol.particular),
              std::move(sol.basis)};
  }
}

// Shape predicates on the 3 x 3 form. G1: middle row (0, 1, s).
// G2: top-left entry 1 and vanishing (2,1) entry.
template <class S>
bool in_G1(const AffineMap<S>& a) {
  if (a.dim() != 2) return false;
  return a.h.at(1, 0).is_zero() && a.h.at(1, 1) == Quat<S>(S(1)) &&
         !a.h.at(0, 0).is_zero();
}

template <class S>
bool in_G2(const AffineMap<S>& a) {
  if (a.dim() != 2) return false;
  return a.h.at(0, 0) == Quat<S>(S(1)) && a.h.at(1, 0).is_zero() &&
         !a.h.at(1, 1).is_zero();
}

// Entries of a G2-shaped element [[1, b, r], [0, d, s], [0, 0, 1]].
template <class S>
struct G2Parts {
  Quat<S> b, r, d, s;
};

template <class S>
G2Parts<S> g2_parts(const AffineMap<S>& a) {
  if (!in_G2(a)) throw ShapeError("element is not G2-shaped");
  return {a.h.at(0, 1), a.t[0], a.h.at(1, 1), a.t[1]};
}

namespace detail {

template <class S>
bool d_degenerate(const Quat<S>& d) {
  Quat<S> dm1 = d - Quat<S>(S(1));
  if constexpr (ScalarTraits<S>::exact) return dm1.is_zero();
  return ScalarTraits<S>::to_double(dm1.norm_sq()) <= kEps * kEps;
}

}  // namespace detail

// Closed form for A^n when A = [[1, b, r], [0, d, s], [0, 0, 1]] and d - 1
// is invertible:
//   (1,2) entry  b (d-1)^-1 (d^n - 1)
//   (1,3) entry  b (d-1)^-2 (d^n - 1) s + n r - b n (d-1)^-1 s
//   (2,3) entry  (d-1)^-1 (d^n - 1) s
// Factor order matters; (d-1)^-1 and (d^n - 1) commute, b and s do not.
template <class S>
AffineMap<S> power_closed_form(const AffineMap<S>& a, long n) {
  G2Parts<S> g = g2_parts(a);
  if (detail::d_degenerate(g.d))
    throw DegenerateD("closed form requires d != 1; use repeated multiplication");
  if (n < 0) throw InvalidArgument("closed-form power needs n >= 0");

  Quat<S> one{S(1)};
  Quat<S> dm1_inv = (g.d - one).inverse();
  Quat<S> dn = quat_pow(g.d, n);
  Quat<S> dn1 = dn - one;
  Quat<S> nq{S(static_cast<long>(n))};

  AffineMap<S> r = AffineMap<S>::identity(2);
  r.h.at(0, 1) = g.b * dm1_inv * dn1;
  r.h.at(1, 1) = dn;
  r.t[0] = g.b * dm1_inv * dm1_inv * dn1 * g.s + nq * g.r - g.b * nq * dm1_inv * g.s;
  r.t[1] = dm1_inv * dn1 * g.s;
  return r;
}

// Closed form for C_n = A^-n B A^n B^-1 with A, B both G2-shaped and
// A's d != 1:
//   h_n = d^-n h d^n h^-1
//   f_n = f (d^n - 1) h^-1 + b (d-1)^-1 (d^n - 1)(1 - d^-n h d^n) h^-1
//   u_n = f h^-1 v - f d^n h^-1 v - b (d-1)^-1 (d^n-1) h^-1 v
//         + b (d-1)^-1 (d^n-1) d^-n h d^n h^-1 v + f (d-1)^-1 (d^n-1) s
//         - b (d-1)^-1 (d^n-1) d^-n h (d-1)^-1 (d^n-1) s
//         - b (d-1)^-1 (d^n-1) d^-n v + b (d-1)^-2 (d^n-1)^2 d^-n s
//   v_n = -d^-n h d^n h^-1 v + d^-n h (d-1)^-1 (d^n-1) s + d^-n v
//         - d^-n (d-1)^-1 (d^n-1) s
template <class S>
AffineMap<S> commutator_sequence(const AffineMap<S>& a, const AffineMap<S>& bm,
                                 long n) {
  G2Parts<S> A = g2_parts(a);
  G2Parts<S> B = g2_parts(bm);
  if (detail::d_degenerate(A.d))
    throw DegenerateD("closed form requires d != 1; use direct products");
  if (n < 0) throw InvalidArgument("commutator sequence needs n >= 0");

  const Quat<S> one{S(1)};
  const Quat<S>& b = A.b;
  const Quat<S>& s = A.s;
  const Quat<S>& f = B.b;
  const Quat<S>& u = B.r;
  const Quat<S>& h = B.d;
  const Quat<S>& v = B.s;
  (void)u;  // the translation entry of B cancels in C_n

  Quat<S> dm1_inv = (A.d - one).inverse();
  Quat<S> dn = quat_pow(A.d, n);
  Quat<S> dmn = quat_pow(A.d, -n);
  Quat<S> dn1 = dn - one;
  Quat<S> hinv = h.inverse();
  Quat<S> conj_h = dmn * h * dn;  // d^-n h d^n

  Quat<S> hn = conj_h * hinv;
  Quat<S> fn = f * dn1 * hinv + b * dm1_inv * dn1 * (one - conj_h) * hinv;
  Quat<S> un = f * hinv * v - f * dn * hinv * v - b * dm1_inv * dn1 * hinv * v +
               b * dm1_inv * dn1 * conj_h * hinv * v + f * dm1_inv * dn1 * s -
               b * dm1_inv * dn1 * dmn * h * dm1_inv * dn1 * s -
               b * dm1_inv * dn1 * dmn * v +
               b * dm1_inv * dm1_inv * dn1 * dn1 * dmn * s;
  Quat<S> vn = -conj_h * hinv * v + dmn * h * dm1_inv * dn1 * s + dmn * v -
               dmn * dm1_inv * dn1 * s;

  AffineMap<S> r = AffineMap<S>::identity(2);
  r.h.at(0, 1) = fn;
  r.h.at(1, 1) = hn;
  r.t[0] = un;
  r.t[1] = vn;
  return r;
}

inline AffineMap<double> to_double(const AffineMap<Rat>& a) {
  return {to_double(a.h), to_double(a.t)};
}

}  // namespace quatgeo
