#include "quatgeo/heisenberg.hpp"

#include <algorithm>

#include "quatgeo/errors.hpp"

namespace quatgeo {

namespace {

Rat half() { return Rat(1, 2); }

bool coupled(HFamily f) { return f == HFamily::H1 || f == HFamily::H3; }

QVec<Rat> derived_right(const QVec<Rat>& top) {
  QVec<Rat> r(top.size());
  for (std::size_t i = 0; i < top.size(); ++i) r[i] = -top[i].conj();
  return r;
}

Rat top_norm_sq(const QVec<Rat>& top) {
  Rat s;
  for (const auto& q : top) s += q.norm_sq();
  return s;
}

}  // namespace

const char* family_name(HFamily f) {
  switch (f) {
    case HFamily::Real: return "real";
    case HFamily::H1: return "h1";
    case HFamily::H2: return "h2";
    case HFamily::H3: return "h3";
  }
  return "?";
}

void HeisenbergElement::validate() const {
  if (n_ < 1) throw InvalidArgument("Heisenberg family needs n >= 1");
  if (static_cast<int>(top_.size()) != n_ ||
      static_cast<int>(right_.size()) != n_)
    throw InvalidArgument("parameter block size mismatch");
  auto complex_ok = [](const QVec<Rat>& v) {
    for (const auto& q : v)
      if (!q.is_complex()) return false;
    return true;
  };
  switch (family_) {
    case HFamily::Real:
      for (const auto& q : top_)
        if (!q.is_real()) throw InvalidArgument("Real family needs real entries");
      for (const auto& q : right_)
        if (!q.is_real()) throw InvalidArgument("Real family needs real entries");
      if (!center_.is_real())
        throw InvalidArgument("Real family needs a real center");
      break;
    case HFamily::H1:
      if (!complex_ok(top_)) throw InvalidArgument("H1 needs complex entries");
      if (!ScalarTraits<Rat>::is_zero(center_.w) || !center_.is_complex())
        throw InvalidArgument("H1 center is the coefficient of I only");
      break;
    case HFamily::H2:
      if (!complex_ok(top_) || !complex_ok(right_) || !center_.is_complex())
        throw InvalidArgument("H2 needs complex entries");
      break;
    case HFamily::H3:
      if (!center_.is_imaginary())
        throw InvalidArgument("H3 center must be purely imaginary");
      break;
  }
  if (coupled(family_)) {
    QVec<Rat> expect = derived_right(top_);
    for (int i = 0; i < n_; ++i)
      if (!(right_[i] == expect[i]))
        throw InvalidArgument("coupled family has right column -conj(top)^T");
  }
}

HeisenbergElement HeisenbergElement::identity(HFamily f, int n) {
  HeisenbergElement e;
  e.family_ = f;
  e.n_ = n;
  e.top_.assign(n, Quat<Rat>());
  e.right_.assign(n, Quat<Rat>());
  e.validate();
  return e;
}

HeisenbergElement HeisenbergElement::real_element(std::vector<Rat> a,
                                                  std::vector<Rat> b, Rat t) {
  HeisenbergElement e;
  e.family_ = HFamily::Real;
  e.n_ = static_cast<int>(a.size());
  if (b.size() != a.size()) throw InvalidArgument("a and b need equal length");
  for (auto& v : a) e.top_.emplace_back(std::move(v));
  for (auto& v : b) e.right_.emplace_back(std::move(v));
  e.center_ = Quat<Rat>(std::move(t));
  e.validate();
  return e;
}

HeisenbergElement HeisenbergElement::h1_element(std::vector<Cplx<Rat>> z,
                                                Rat t) {
  HeisenbergElement e;
  e.family_ = HFamily::H1;
  e.n_ = static_cast<int>(z.size());
  for (auto& v : z) e.top_.push_back(Quat<Rat>(v.re, v.im, Rat(0), Rat(0)));
  e.right_ = derived_right(e.top_);
  e.center_ = Quat<Rat>(Rat(0), std::move(t), Rat(0), Rat(0));
  e.validate();
  return e;
}

HeisenbergElement HeisenbergElement::h2_element(std::vector<Cplx<Rat>> xi,
                                                std::vector<Cplx<Rat>> om,
                                                Cplx<Rat> z) {
  HeisenbergElement e;
  e.family_ = HFamily::H2;
  e.n_ = static_cast<int>(xi.size());
  if (om.size() != xi.size()) throw InvalidArgument("xi and omega need equal length");
  for (auto& v : xi) e.top_.push_back(Quat<Rat>(v.re, v.im, Rat(0), Rat(0)));
  for (auto& v : om) e.right_.push_back(Quat<Rat>(v.re, v.im, Rat(0), Rat(0)));
  e.center_ = Quat<Rat>(z.re, z.im, Rat(0), Rat(0));
  e.validate();
  return e;
}

HeisenbergElement HeisenbergElement::h3_element(std::vector<Quat<Rat>> q,
                                                Quat<Rat> im_h) {
  HeisenbergElement e;
  e.family_ = HFamily::H3;
  e.n_ = static_cast<int>(q.size());
  e.top_ = std::move(q);
  e.right_ = derived_right(e.top_);
  e.center_ = std::move(im_h);
  e.validate();
  return e;
}

QMatrix<Rat> HeisenbergElement::matrix() const {
  int size = n_ + 2;
  QMatrix<Rat> m = QMatrix<Rat>::identity(size);
  for (int i = 0; i < n_; ++i) {
    m.at(0, i + 1) = top_[i];
    m.at(i + 1, n_ + 1) = right_[i];
  }
  Quat<Rat> corner = center_;
  if (coupled(family_)) corner.w = corner.w - half() * top_norm_sq(top_);
  m.at(0, n_ + 1) = corner;
  return m;
}

HeisenbergElement HeisenbergElement::from_matrix(HFamily f, int n,
                                                 const QMatrix<Rat>& m) {
  int size = n + 2;
  if (m.size() != size) throw ShapeError("matrix size does not match family");
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      bool structural = (i == 0 && j >= 1) || (j == n + 1 && i <= n);
      if (structural) continue;
      Quat<Rat> expect = (i == j) ? Quat<Rat>(Rat(1)) : Quat<Rat>();
      if (!(m.at(i, j) == expect))
        throw InternalInconsistency("product left the family shape");
    }

  HeisenbergElement e;
  e.family_ = f;
  e.n_ = n;
  for (int i = 0; i < n; ++i) {
    e.top_.push_back(m.at(0, i + 1));
    e.right_.push_back(m.at(i + 1, n + 1));
  }
  Quat<Rat> corner = m.at(0, n + 1);
  if (coupled(f)) {
    Rat expect_re = Rat(0) - half() * top_norm_sq(e.top_);
    if (!(corner.w == expect_re))
      throw InternalInconsistency(
          "corner real part disagrees with -|top|^2/2");
    corner.w = Rat(0);
  }
  e.center_ = corner;
  e.validate();  // InvalidArgument here means the family was not preserved
  return e;
}

HeisenbergElement HeisenbergElement::inverse() const {
  QMatrix<Rat> m = matrix();
  int size = n_ + 2;
  QMatrix<Rat> nil = m - QMatrix<Rat>::identity(size);
  // Unitriangular with two off-diagonal blocks: nil^3 = 0.
  QMatrix<Rat> inv = QMatrix<Rat>::identity(size) - nil + nil * nil;
  return from_matrix(family_, n_, inv);
}

bool operator==(const HeisenbergElement& a, const HeisenbergElement& b) {
  if (a.family_ != b.family_ || a.n_ != b.n_) return false;
  for (int i = 0; i < a.n_; ++i)
    if (!(a.top_[i] == b.top_[i]) || !(a.right_[i] == b.right_[i]))
      return false;
  return a.center_ == b.center_;
}

HeisenbergElement h_mul(const HeisenbergElement& g, const HeisenbergElement& h) {
  if (g.family() != h.family() || g.n() != h.n())
    throw InvalidArgument("Heisenberg product needs matching family and n");
  return HeisenbergElement::from_matrix(g.family(), g.n(),
                                        g.matrix() * h.matrix());
}

HeisenbergElement h_commutator(const HeisenbergElement& g,
                               const HeisenbergElement& h) {
  return h_mul(h_mul(g, h), h_mul(g.inverse(), h.inverse()));
}

LatticeSpec LatticeSpec::lambda_r(std::vector<long> r) {
  if (r.empty()) throw InvalidArgument("lambda_r needs a nonempty r");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] <= 0) throw InvalidArgument("lambda_r needs positive r entries");
    if (i + 1 < r.size() && r[i + 1] % r[i] != 0)
      throw InvalidArgument("lambda_r needs r_j | r_{j+1}");
  }
  return {Kind::LambdaR, std::move(r), 0};
}

LatticeSpec LatticeSpec::lambda13() { return {Kind::Lambda13, {}, 0}; }

LatticeSpec LatticeSpec::delta13(long m) {
  if (m < 2) throw InvalidArgument("delta13 needs m >= 2");
  return {Kind::Delta13, {}, m};
}

namespace {

bool all_integer(const Quat<Rat>& q) {
  return q.w.is_integer() && q.x.is_integer() && q.y.is_integer() &&
         q.z.is_integer();
}

}  // namespace

bool lattice_contains(const LatticeSpec& spec, const HeisenbergElement& g) {
  switch (spec.kind) {
    case LatticeSpec::Kind::LambdaR: {
      if (g.family() != HFamily::Real ||
          g.n() != static_cast<int>(spec.r.size()))
        throw InvalidArgument("lambda_r lives in Real(" +
                              std::to_string(spec.r.size()) + ")");
      for (int i = 0; i < g.n(); ++i)
        if (!g.top()[i].w.integer_multiple_of(spec.r[i])) return false;
      for (int i = 0; i < g.n(); ++i)
        if (!g.right()[i].w.is_integer()) return false;
      return g.center().w.is_integer();
    }
    case LatticeSpec::Kind::Lambda13:
    case LatticeSpec::Kind::Delta13: {
      if (g.family() != HFamily::H3 || g.n() != 1)
        throw InvalidArgument(
            "lambda13 / delta13 live in H3(1); the coordinate identification "
            "is fixed there only");
      if (!all_integer(g.top()[0]) || !all_integer(g.center())) return false;
      if (spec.kind == LatticeSpec::Kind::Delta13)
        return g.top()[0].w.integer_multiple_of(spec.m);
      return true;
    }
  }
  return false;
}

std::vector<HeisenbergElement> standard_generators(HFamily f, int n) {
  std::vector<HeisenbergElement> gens;
  auto zero_rat = [&] { return std::vector<Rat>(n, Rat(0)); };
  auto zero_cplx = [&] { return std::vector<Cplx<Rat>>(n, Cplx<Rat>()); };
  switch (f) {
    case HFamily::Real: {
      for (int i = 0; i < n; ++i) {
        auto a = zero_rat();
        a[i] = Rat(1);
        gens.push_back(HeisenbergElement::real_element(a, zero_rat(), Rat(0)));
      }
      for (int i = 0; i < n; ++i) {
        auto b = zero_rat();
        b[i] = Rat(1);
        gens.push_back(HeisenbergElement::real_element(zero_rat(), b, Rat(0)));
      }
      gens.push_back(
          HeisenbergElement::real_element(zero_rat(), zero_rat(), Rat(1)));
      break;
    }
    case HFamily::H1: {
      for (int i = 0; i < n; ++i)
        for (const Cplx<Rat>& unit :
             {Cplx<Rat>(Rat(1)), Cplx<Rat>(Rat(0), Rat(1))}) {
          auto z = zero_cplx();
          z[i] = unit;
          gens.push_back(HeisenbergElement::h1_element(z, Rat(0)));
        }
      gens.push_back(HeisenbergElement::h1_element(zero_cplx(), Rat(1)));
      break;
    }
    case HFamily::H2: {
      for (int i = 0; i < n; ++i)
        for (const Cplx<Rat>& unit :
             {Cplx<Rat>(Rat(1)), Cplx<Rat>(Rat(0), Rat(1))}) {
          auto xi = zero_cplx();
          xi[i] = unit;
          gens.push_back(
              HeisenbergElement::h2_element(xi, zero_cplx(), Cplx<Rat>()));
          auto om = zero_cplx();
          om[i] = unit;
          gens.push_back(
              HeisenbergElement::h2_element(zero_cplx(), om, Cplx<Rat>()));
        }
      gens.push_back(HeisenbergElement::h2_element(zero_cplx(), zero_cplx(),
                                                   Cplx<Rat>(Rat(1))));
      gens.push_back(HeisenbergElement::h2_element(
          zero_cplx(), zero_cplx(), Cplx<Rat>(Rat(0), Rat(1))));
      break;
    }
    case HFamily::H3: {
      for (int i = 0; i < n; ++i)
        for (const Quat<Rat>& unit :
             {Quat<Rat>(Rat(1)), Quat<Rat>::unit_i(), Quat<Rat>::unit_j(),
              Quat<Rat>::unit_k()}) {
          QVec<Rat> q(n);
          q[i] = unit;
          gens.push_back(HeisenbergElement::h3_element(q, Quat<Rat>()));
        }
      for (const Quat<Rat>& unit : {Quat<Rat>::unit_i(), Quat<Rat>::unit_j(),
                                    Quat<Rat>::unit_k()})
        gens.push_back(HeisenbergElement::h3_element(QVec<Rat>(n), unit));
      break;
    }
  }
  return gens;
}

int nilpotency_step(const std::vector<HeisenbergElement>& gens, int cap) {
  if (gens.empty()) return 1;
  HeisenbergElement id =
      HeisenbergElement::identity(gens[0].family(), gens[0].n());

  std::vector<HeisenbergElement> layer = gens;
  for (int k = 1; k <= cap; ++k) {
    std::vector<HeisenbergElement> next;
    for (const auto& x : layer)
      for (const auto& g : gens) {
        HeisenbergElement c = h_commutator(x, g);
        if (c == id) continue;
        if (std::find(next.begin(), next.end(), c) == next.end())
          next.push_back(c);
      }
    if (next.empty()) return k;
    layer = std::move(next);
  }
  throw StepCapExceeded("nilpotency not confirmed within depth cap " +
                        std::to_string(cap));
}

int center_dimension_probe(HFamily f, int n) {
  std::vector<HeisenbergElement> gens = standard_generators(f, n);
  HeisenbergElement id = HeisenbergElement::identity(f, n);

  std::vector<std::vector<Rat>> reduced;
  std::vector<int> pivots;
  int rank = 0;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      HeisenbergElement c = h_commutator(gens[i], gens[j]);
      if (c == id) continue;
      // Commutators must be central: they commute with every generator.
      for (const auto& g : gens)
        if (!(h_commutator(c, g) == id))
          throw InternalInconsistency("commutator is not central");
      std::vector<Rat> v = {c.center().w, c.center().x, c.center().y,
                            c.center().z};
      for (std::size_t r = 0; r < reduced.size(); ++r) {
        if (v[pivots[r]].is_zero()) continue;
        Rat fct = v[pivots[r]] / reduced[r][pivots[r]];
        for (int col = 0; col < 4; ++col) v[col] -= fct * reduced[r][col];
      }
      int pivot = -1;
      for (int col = 0; col < 4; ++col)
        if (!v[col].is_zero()) {
          pivot = col;
          break;
        }
      if (pivot < 0) continue;
      reduced.push_back(std::move(v));
      pivots.push_back(pivot);
      ++rank;
    }
  return rank;
}

std::vector<HeisenbergElement> lambda13_coset_representatives(int m) {
  LatticeSpec delta = LatticeSpec::delta13(m);
  std::vector<HeisenbergElement> gens = standard_generators(HFamily::H3, 1);
  std::vector<HeisenbergElement> reps = {
      HeisenbergElement::identity(HFamily::H3, 1)};

  auto same_coset = [&](const HeisenbergElement& a, const HeisenbergElement& b) {
    return lattice_contains(delta, h_mul(b.inverse(), a));
  };

  const std::size_t cap = 16 * static_cast<std::size_t>(m) + 64;
  for (std::size_t at = 0; at < reps.size(); ++at) {
    HeisenbergElement base = reps[at];
    for (const auto& g : gens)
      for (const HeisenbergElement& step : {g, g.inverse()}) {
        HeisenbergElement cand = h_mul(base, step);
        bool known = false;
        for (const auto& r : reps)
          if (same_coset(cand, r)) {
            known = true;
            break;
          }
        if (!known) {
          if (reps.size() >= cap)
            throw InternalInconsistency("coset enumeration failed to close");
          reps.push_back(cand);
        }
      }
  }
  return reps;
}

int covering_degree(int n, int m) {
  if (n != 1)
    throw InvalidArgument(
        "covering degrees are computed for H3(1) only; the lattice "
        "coordinates are not fixed for larger n");
  if (m < 2) throw InvalidArgument("covering degree needs m >= 2");
  return static_cast<int>(lambda13_coset_representatives(m).size());
}

namespace {

ExactAffine affine_from_heis(const HeisenbergElement& e) {
  return ExactAffine::from_matrix(e.matrix());
}

// (tau, b, t) -> [[1, b, tau + t + b K conj(b)/4], [0, 1, K conj(b)/2]]:
// an injective homomorphism from R^3 x H1(2) into Aff(2,H). The cocycle
// identity reduces to b K conj(b') / 2 = Re(b K conj(b'))/2 + coboundary.
ExactAffine phi_n1(const Quat<Rat>& tau, const Quat<Rat>& b, const Rat& t) {
  Quat<Rat> k = Quat<Rat>::unit_k();
  Quat<Rat> quarter{Rat(1, 4)};
  Quat<Rat> r = tau + Quat<Rat>(t) + quarter * b * k * b.conj();
  Quat<Rat> s = Quat<Rat>(Rat(1, 2)) * k * b.conj();
  QMatrix<Rat> h = QMatrix<Rat>::identity(2);
  h.at(0, 1) = b;
  return {h, {r, s}};
}

}  // namespace

GeneratedGroup gamma0_n1() {
  GeneratedGroup g;
  Quat<Rat> zero;
  Rat z0(0);
  // Symplectic pairs (1, K) and (2I, -J): commutators land on the pure
  // translation C = (1, 0) with weights 1 and 2, matching r = (1, 2).
  g.generators = {
      phi_n1(zero, Quat<Rat>(Rat(1)), z0),
      phi_n1(zero, Quat<Rat>::unit_k(), z0),
      phi_n1(zero, Quat<Rat>(Rat(0), Rat(2), Rat(0), Rat(0)), z0),
      phi_n1(zero, -Quat<Rat>::unit_j(), z0),
      phi_n1(zero, zero, Rat(1)),
      phi_n1(Quat<Rat>::unit_i(), zero, z0),
      phi_n1(Quat<Rat>::unit_j(), zero, z0),
      phi_n1(Quat<Rat>::unit_k(), zero, z0),
  };
  g.labels = {"A1", "B1", "A2", "B2", "C", "T1", "T2", "T3"};
  return g;
}

GeneratedGroup gamma0_n3() {
  GeneratedGroup g;
  g.generators.push_back(
      ExactAffine::translation({Quat<Rat>(Rat(1)), Quat<Rat>()}));
  g.labels = {"T"};
  const char* names[] = {"Q1", "QI", "QJ", "QK", "ZI", "ZJ", "ZK"};
  auto gens = standard_generators(HFamily::H3, 1);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    g.generators.push_back(affine_from_heis(gens[i]));
    g.labels.push_back(names[i]);
  }
  return g;
}

}  // namespace quatgeo
