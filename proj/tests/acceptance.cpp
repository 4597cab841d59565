// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Tolerances are fixed here, not configurable.
//
//   ./quatgeo_acceptance            (QUATGEO_SEED overrides the RNG seed)

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "quatgeo/fixtures.hpp"
#include "quatgeo/group_engine.hpp"
#include "quatgeo/heisenberg.hpp"
#include "quatgeo/s3_finite.hpp"
#include "quatgeo/spectra.hpp"
#include "test_helpers.hpp"

using namespace quatgeo;
using namespace quatgeo::testing;

namespace {

int failures = 0;
std::vector<std::string> current_errors;

void expect(bool ok, const std::string& what) {
  if (!ok && current_errors.size() < 5) current_errors.push_back(what);
  if (!ok && current_errors.size() == 5)
    current_errors.push_back("(further failures suppressed)");
}

void criterion(int number, const std::string& label,
               const std::function<void()>& body) {
  current_errors.clear();
  try {
    body();
  } catch (const std::exception& e) {
    current_errors.push_back(std::string("exception: ") + e.what());
  }
  if (current_errors.empty()) {
    std::printf("[PASS] criterion %2d: %s\n", number, label.c_str());
  } else {
    ++failures;
    std::printf("[FAIL] criterion %2d: %s\n", number, label.c_str());
    for (const auto& e : current_errors)
      std::printf("         %s\n", e.c_str());
  }
}

using QR = Quat<Rat>;
using QD = Quat<double>;
using A2R = AffineMap<Rat>;

A2R g2_of(QR b, QR r, QR d, QR s) {
  QMatrix<Rat> h = QMatrix<Rat>::identity(2);
  h.at(0, 1) = b;
  h.at(1, 1) = d;
  return {h, {r, s}};
}

AffineMap<double> g2_of_d(QD b, QD r, QD d, QD s) {
  QMatrix<double> h = QMatrix<double>::identity(2);
  h.at(0, 1) = b;
  h.at(1, 1) = d;
  return {h, {r, s}};
}

void criterion1() {
  QMatrix<Rat> j(1);
  j.at(0, 0) = QR::unit_j();
  CMat<Rat> pj = psi_embed(j);
  expect(pj.at(0, 0).is_zero() && pj.at(1, 1).is_zero() &&
             pj.at(0, 1) == Cplx<Rat>(Rat(-1)) &&
             pj.at(1, 0) == Cplx<Rat>(Rat(1)),
         "psi(j) != [[0,-1],[1,0]]");
  for (int i = 0; i < 300; ++i) {
    QMatrix<Rat> m = rand_qmatrix_rat(2), n = rand_qmatrix_rat(2);
    expect(psi_embed(m * n) == psi_embed(m) * psi_embed(n),
           "psi(MN) != psi(M) psi(N) at trial " + std::to_string(i));
  }
}

void criterion2() {
  for (int i = 0; i < 300; ++i) {
    QMatrix<double> m = rand_qmatrix_double(2);
    // Route 1: det_H via LU of the embedding. Route 2: det psi as the
    // product of |representative|^2 over the eigenvalue pairs.
    double dh = dieudonne_det(m);
    double prod = 1;
    for (const auto& rep : right_eigenvalues(m).representatives)
      prod *= std::norm(rep);
    double rel = std::abs(dh * dh - prod) / std::max(prod, 1e-12);
    expect(rel <= 1e-9,
           "det_H^2 vs det psi relative error " + std::to_string(rel));

    QMatrix<double> n = rand_qmatrix_double(2);
    double lhs = dieudonne_det(m * n);
    double rhs = dieudonne_det(m) * dieudonne_det(n);
    expect(std::abs(lhs - rhs) <= 1e-6 * std::max(std::abs(rhs), 1.0),
           "det_H not multiplicative at trial " + std::to_string(i));
  }
}

void criterion3() {
  for (int i = 0; i < 100; ++i) {
    QMatrix<double> m = rand_qmatrix_double(2);
    Spectrum s = right_eigenvalues(m);
    expect(s.representatives.size() == 2, "spectrum size != 2");
    for (const auto& rep : s.representatives) {
      double cert = shifted_embedding_det(m, rep);
      expect(cert <= 1e-6,
             "vanishing certificate " + std::to_string(cert) + " > 1e-6");
      expect(rep.imag() >= 0, "representative below the real axis");
    }

    QMatrix<Rat> p;
    do {
      p = rand_invertible_rat(2);
    } while (dieudonne_det(p) < 0.5);
    QMatrix<double> pd = to_double(p);
    Spectrum sim = right_eigenvalues(inverse(pd) * m * pd);
    for (std::size_t k = 0; k < 2; ++k)
      expect(std::abs(s.representatives[k] - sim.representatives[k]) <= kEpsRec,
             "similarity moved a representative at trial " + std::to_string(i));
  }
}

void criterion4() {
  for (int i = 0; i < 100; ++i) {
    QMatrix<double> m = rand_qmatrix_double(2);
    Spectrum s = right_eigenvalues(m);
    for (const auto& lambda : s.representatives) {
      QVec<double> v = right_eigenvector(m, lambda);
      double n = vec_norm(v);
      for (int k = 0; k < 10; ++k) {
        QD u = rand_unit_quat();
        QVec<double> vu = vec_scale_right(v, u);
        QD moved = u.inverse() * quat_from_complex(lambda) * u;
        double resid = vec_norm(vec_sub(m.apply(vu), vec_scale_right(vu, moved)));
        expect(resid <= 1e-6 * n,
               "eigen-sphere residual " + std::to_string(resid));
      }
    }
  }
}

void criterion5() {
  // Powers, n <= 20, exact.
  for (int i = 0; i < 50; ++i) {
    bool commuting_batch = i < 20;
    A2R a = rand_g2_rat(commuting_batch);
    A2R acc = A2R::identity(2);
    for (long n = 0; n <= 20; ++n) {
      expect(power_closed_form(a, n) == acc,
             "closed-form power mismatch at n = " + std::to_string(n));
      acc = acc * a;
    }
  }
  // Commutator sequences, n <= 10, exact; the first 20 draws keep (d, h)
  // inside one complex plane so they commute.
  for (int i = 0; i < 50; ++i) {
    bool commuting_batch = i < 20;
    A2R a = rand_g2_rat(commuting_batch);
    A2R b = rand_g2_rat(commuting_batch);
    for (long n = 0; n <= 10; ++n) {
      A2R direct =
          pow_iterated(a, -n) * b * pow_iterated(a, n) * b.inverse();
      expect(commutator_sequence(a, b, n) == direct,
             "commutator sequence mismatch at n = " + std::to_string(n));
    }
  }
}

void criterion6() {
  for (int i = 0; i < 100; ++i) {
    QR a = rand_quat_rat(), b = rand_nonzero_quat_rat(), r = rand_quat_rat();
    if (a.is_zero()) a = QR(Rat(1, 2));  // keep the holonomy invertible
    QMatrix<Rat> h = QMatrix<Rat>::identity(2);
    h.at(0, 0) = a;
    h.at(0, 1) = b;
    A2R m{h, {r, QR()}};
    FixedPointSet<Rat> fps = fixed_points(m);
    expect(!fps.empty(), "b != 0 branch: no fixed points reported");
    QVec<Rat> claimed = {QR(), -(b.inverse() * r)};
    QVec<Rat> moved = m.act(claimed);
    expect(moved[0] == claimed[0] && moved[1] == claimed[1],
           "(0, -b^-1 r) is not fixed at trial " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    QR a;
    do {
      a = rand_nonzero_quat_rat();
    } while (a == QR(Rat(1)));
    QR r = rand_quat_rat();
    QMatrix<Rat> h = QMatrix<Rat>::identity(2);
    h.at(0, 0) = a;
    A2R m{h, {r, QR()}};
    FixedPointSet<Rat> fps = fixed_points(m);
    expect(fps.kind == FixedPointSet<Rat>::Kind::AffineSubspace &&
               fps.dimension() >= 1,
           "b = 0 branch: expected a positive-dimensional fixed set");
    QVec<Rat> claimed = {-((a - QR(Rat(1))).inverse() * r), QR()};
    QVec<Rat> moved = m.act(claimed);
    expect(moved[0] == claimed[0] && moved[1] == claimed[1],
           "(-(a-1)^-1 r, 0) is not fixed at trial " + std::to_string(i));
  }
}

void criterion7() {
  GeneratedGroup ex = fixture_example();
  const A2R &a = ex.generators[0], &b = ex.generators[1],
            &c = ex.generators[2], &d = ex.generators[3],
            &s = ex.generators[4];

  expect(s * s == d, "S^2 != D");
  expect(commutator(a, b) == c, "[A, B] != C");
  for (int i = 0; i < 4; ++i)
    expect(unipotency_check(ex.generators[i]).has_value(),
           "generator " + ex.labels[i] + " not unipotent");
  expect(!unipotency_check(s).has_value(), "S reported unipotent");

  KernelResult kr = kernel_subgroup(ex);
  expect(kr.image.size() == 2 && kr.image[0] == QR(Rat(1)) &&
             kr.image[1] == -QR(Rat(1)),
         "phi image != {1, -1}");
  std::vector<QD> img;
  for (const auto& q : kr.image) img.push_back(to_double(q));
  auto cls = s3_recognize(img);
  expect(cls.has_value() && cls->name() == "2C1",
         "phi image not recognized as 2C1");
  for (int i = 0; i < 4; ++i) {
    bool found = false;
    for (const auto& k : kr.kernel_generators)
      if (k == ex.generators[i]) found = true;
    expect(found, "kernel generators miss " + ex.labels[i]);
  }

  EnumerateOptions opts;
  opts.max_word_length = 4;
  FreenessVerdict verdict = freeness_probe(enumerate_group(ex, opts));
  expect(verdict.free_up_to_length, "freeness probe failed at L = 4");
}

void criterion8() {
  using Tag = FiniteS3Class::Tag;
  std::vector<std::pair<FiniteS3Class, std::size_t>> expected = {
      {{Tag::TwoT}, 24}, {{Tag::TwoO}, 48}, {{Tag::TwoI}, 120}};
  for (int n = 1; n <= 8; ++n) {
    expected.push_back({{Tag::TwoD, n}, static_cast<std::size_t>(4 * n)});
    expected.push_back({{Tag::TwoC, n}, static_cast<std::size_t>(2 * n)});
  }
  for (int n = 1; n <= 9; n += 2)
    expected.push_back({{Tag::OneC, n}, static_cast<std::size_t>(n)});

  for (const auto& [cls, order] : expected) {
    auto built = s3_build(cls);
    expect(built.size() == order,
           cls.name() + " order " + std::to_string(built.size()) + " != " +
               std::to_string(order));
    auto rec = s3_recognize(built);
    // 2D_2 and 2C_2 are the same subgroup up to conjugation; recognition
    // canonicalizes that single coincidence to 2C_2.
    FiniteS3Class want = cls;
    if (cls.tag == Tag::TwoD && cls.n == 1) want = {Tag::TwoC, 2};
    expect(rec.has_value() && *rec == want,
           cls.name() + " did not recognize back");
  }

  // Conjugation invariance, 20 random unit conjugators per class.
  for (const auto& [cls, order] : expected) {
    auto built = s3_build(cls);
    FiniteS3Class want = cls;
    if (cls.tag == Tag::TwoD && cls.n == 1) want = {Tag::TwoC, 2};
    for (int trial = 0; trial < 20; ++trial) {
      QD u = rand_unit_quat();
      QD ui = u.inverse();
      std::vector<QD> conj;
      for (const auto& q : built) conj.push_back(ui * q * u);
      auto rec = s3_recognize(conj);
      if (!(rec.has_value() && *rec == want)) {
        expect(false, cls.name() + " recognition broke under conjugation");
        break;
      }
    }
  }
}

void criterion9() {
  // Families closed under 500 random products each.
  auto rand_cplx = [] { return Cplx<Rat>{rand_rat(), rand_rat()}; };
  for (int i = 0; i < 500; ++i) {
    int n = 1 + (i % 2);
    std::vector<Rat> ra, rb;
    std::vector<Cplx<Rat>> z1, z2, xi, om;
    QVec<Rat> q(n);
    for (int k = 0; k < n; ++k) {
      ra.push_back(rand_rat());
      rb.push_back(rand_rat());
      z1.push_back(rand_cplx());
      z2.push_back(rand_cplx());
      xi.push_back(rand_cplx());
      om.push_back(rand_cplx());
      q[k] = rand_quat_rat();
    }
    try {
      h_mul(HeisenbergElement::real_element(ra, rb, rand_rat()),
            HeisenbergElement::real_element(rb, ra, rand_rat()));
      h_mul(HeisenbergElement::h1_element(z1, rand_rat()),
            HeisenbergElement::h1_element(z2, rand_rat()));
      h_mul(HeisenbergElement::h2_element(xi, om, rand_cplx()),
            HeisenbergElement::h2_element(om, xi, rand_cplx()));
      h_mul(HeisenbergElement::h3_element(
                q, QR{Rat(0), rand_rat(), rand_rat(), rand_rat()}),
            HeisenbergElement::h3_element(
                q, QR{Rat(0), rand_rat(), rand_rat(), rand_rat()}));
    } catch (const std::exception& e) {
      expect(false, std::string("family closure broke: ") + e.what());
      break;
    }
  }

  expect(nilpotency_step(standard_generators(HFamily::H1, 2)) == 2,
         "H1(2) nilpotency step != 2");
  expect(nilpotency_step(standard_generators(HFamily::H2, 1)) == 2,
         "H2(1) nilpotency step != 2");
  expect(nilpotency_step(standard_generators(HFamily::H3, 1)) == 2,
         "H3(1) nilpotency step != 2");
  expect(center_dimension_probe(HFamily::H1, 2) == 1, "H1 center dim != 1");
  expect(center_dimension_probe(HFamily::H2, 1) == 2, "H2 center dim != 2");
  expect(center_dimension_probe(HFamily::H3, 1) == 3, "H3 center dim != 3");

  // Lattice closure: lambda_r under products/inverses, delta13 likewise.
  LatticeSpec l12 = LatticeSpec::lambda_r({1, 2});
  std::uniform_int_distribution<long> di(-3, 3);
  auto ri = [&] { return di(rng()); };
  for (int i = 0; i < 200; ++i) {
    HeisenbergElement g = HeisenbergElement::real_element(
        {Rat(ri()), Rat(2 * ri())}, {Rat(ri()), Rat(ri())}, Rat(ri()));
    HeisenbergElement h = HeisenbergElement::real_element(
        {Rat(ri()), Rat(2 * ri())}, {Rat(ri()), Rat(ri())}, Rat(ri()));
    expect(lattice_contains(l12, h_mul(g, h)) &&
               lattice_contains(l12, g.inverse()),
           "lambda_r not closed");
  }
  LatticeSpec d3 = LatticeSpec::delta13(3);
  for (int i = 0; i < 200; ++i) {
    HeisenbergElement g = HeisenbergElement::h3_element(
        {QR{Rat(3 * ri()), Rat(ri()), Rat(ri()), Rat(ri())}},
        QR{Rat(0), Rat(ri()), Rat(ri()), Rat(ri())});
    HeisenbergElement h = HeisenbergElement::h3_element(
        {QR{Rat(3 * ri()), Rat(ri()), Rat(ri()), Rat(ri())}},
        QR{Rat(0), Rat(ri()), Rat(ri()), Rat(ri())});
    expect(lattice_contains(d3, h_mul(g, h)) &&
               lattice_contains(d3, g.inverse()),
           "delta13 not closed");
  }

  for (int m : {2, 3, 5, 7})
    expect(covering_degree(1, m) == m,
           "covering degree for m = " + std::to_string(m));
}

void criterion10() {
  // |d| = 1, d not a root of unity: the orbit of (0,1) under C_n comes back
  // near the start.
  AffineMap<double> a = g2_of_d(QD(1.0), QD(0.0),
                                QD{std::cos(1.0), std::sin(1.0), 0, 0},
                                QD(1.0));
  AffineMap<double> b = g2_of_d(QD(0.0), QD(0.0), QD::unit_j(), QD(1.0));
  QVec<double> base = {QD(0.0), QD(1.0)};
  OrbitProbe probe = orbit_accumulation_probe(a, b, base, 200);
  double first = probe.dist_to_base.front();
  double best = probe.min_record.back().second;
  expect(best < 0.1 * first,
         "orbit did not accumulate: best " + std::to_string(best) +
             " vs first " + std::to_string(first));

  // d = i, a fourth root of unity: at most 4 distinct commutator maps.
  AffineMap<double> a4 =
      g2_of_d(QD(1.0), QD(0.0), QD::unit_i(), QD(1.0));
  OrbitProbe finite = orbit_accumulation_probe(a4, b, base, 200);
  expect(finite.distinct_maps <= 4,
         "expected <= 4 distinct maps, got " +
             std::to_string(finite.distinct_maps));
}

}  // namespace

int main() {
  criterion(1, "psi homomorphism (exact, 300 pairs; psi(j) block form)",
            criterion1);
  criterion(2, "Dieudonne determinant: square law and multiplicativity",
            criterion2);
  criterion(3, "spectra: vanishing certificate and similarity invariance",
            criterion3);
  criterion(4, "eigen-sphere closure under right scaling", criterion4);
  criterion(5, "closed-form powers and commutator sequences (exact)",
            criterion5);
  criterion(6, "fixed points of [[a,b,r],[0,1,0],[0,0,1]]", criterion6);
  criterion(7, "example pipeline: S^2 = D, [A,B] = C, phi image 2C1, free at L=4",
            criterion7);
  criterion(8, "finite subgroup orders, recognition round-trip, conjugation",
            criterion8);
  criterion(9, "Heisenberg closure, steps, center dims, lattices, coverings",
            criterion9);
  criterion(10, "orbit accumulation and root-of-unity finiteness", criterion10);

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
