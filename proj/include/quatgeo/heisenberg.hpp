#pragma once

#include <vector>

#include "quatgeo/group_engine.hpp"
#include "quatgeo/qmatrix.hpp"

namespace quatgeo {

// Heisenberg families as upper-triangular matrix groups with identity
// diagonal blocks:
//   Real(n)  [[1, a, t],   [0, I, b^T],      [0, 0, 1]]   a, b real rows
//   H1(n)    [[1, z, *],   [0, I, -conj z^T],[0, 0, 1]]   z complex
//   H2(n)    [[1, xi, z],  [0, I, om^T],     [0, 0, 1]]   all complex
//   H3(n)    [[1, q, *],   [0, I, -conj q^T],[0, 0, 1]]   q quaternionic
// For the coupled families H1/H3 the free central parameter is purely
// imaginary (t I, resp. Im h); the rendered corner carries the determined
// real part -|top|^2/2, which is what makes the matrix set literally closed
// under multiplication.
enum class HFamily { Real, H1, H2, H3 };

const char* family_name(HFamily f);

class HeisenbergElement {
 public:
  static HeisenbergElement identity(HFamily f, int n);
  static HeisenbergElement real_element(std::vector<Rat> a, std::vector<Rat> b,
                                        Rat t);
  static HeisenbergElement h1_element(std::vector<Cplx<Rat>> z, Rat t);
  static HeisenbergElement h2_element(std::vector<Cplx<Rat>> xi,
                                      std::vector<Cplx<Rat>> om, Cplx<Rat> z);
  // The central parameter must be purely imaginary.
  static HeisenbergElement h3_element(std::vector<Quat<Rat>> q, Quat<Rat> im_h);

  HFamily family() const { return family_; }
  int n() const { return n_; }
  const QVec<Rat>& top() const { return top_; }
  const QVec<Rat>& right() const { return right_; }
  // Free central parameter: w slot for Real, x slot (coefficient of I) for
  // H1, w+x slots for H2, x/y/z slots for H3.
  const Quat<Rat>& center() const { return center_; }

  QMatrix<Rat> matrix() const;
  static HeisenbergElement from_matrix(HFamily f, int n, const QMatrix<Rat>& m);

  HeisenbergElement inverse() const;

  friend bool operator==(const HeisenbergElement& a, const HeisenbergElement& b);

 private:
  HeisenbergElement() = default;
  void validate() const;

  HFamily family_ = HFamily::Real;
  int n_ = 0;
  QVec<Rat> top_;
  QVec<Rat> right_;
  Quat<Rat> center_;
};

// Product within a family; parameters are extracted back from the matrix
// product, so every multiplication re-verifies shape closure.
HeisenbergElement h_mul(const HeisenbergElement& g, const HeisenbergElement& h);

HeisenbergElement h_commutator(const HeisenbergElement& g,
                               const HeisenbergElement& h);

// Lattices:
//   lambda_r  {lambda(x, y, t): x in r Z^n, y in Z^n, t in Z} in Real(n),
//             r a positive integer vector with r_j | r_{j+1}
//   lambda13  integer-parameter elements of H3(1)
//   delta13   sublattice of lambda13 with a_1 (the real part of q) in m Z
struct LatticeSpec {
  enum class Kind { LambdaR, Lambda13, Delta13 } kind;
  std::vector<long> r;
  long m = 0;

  static LatticeSpec lambda_r(std::vector<long> r);
  static LatticeSpec lambda13();
  static LatticeSpec delta13(long m);
};

bool lattice_contains(const LatticeSpec& spec, const HeisenbergElement& g);

// Integer-parameter basis elements. Real: 2n+1, H1: 2n+1, H2: 4n+2,
// H3: 4n+3 generators.
std::vector<HeisenbergElement> standard_generators(HFamily f, int n);

// Smallest k such that all (k+1)-fold iterated commutators of the
// generators vanish; 1 for an abelian set, 2 for the standard generator
// sets of all four families.
int nilpotency_step(const std::vector<HeisenbergElement>& gens, int cap = 6);

// Real dimension of the span of the commutators' central parameters, after
// checking those commutators are genuinely central against every generator.
int center_dimension_probe(HFamily f, int n);

// Coset representatives of delta13(m) in lambda13, found by explicit coset
// enumeration. Their count is the covering degree m.
std::vector<HeisenbergElement> lambda13_coset_representatives(int m);
int covering_degree(int n, int m);  // n must be 1

// Generator sets in explicit affine form, consumable by the group engine:
// Z^3 x (Lambda_r in H1(2)) with r = (1,2), and Z x Lambda(1,3).
GeneratedGroup gamma0_n1();
GeneratedGroup gamma0_n3();

}  // namespace quatgeo
