#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatgeo/quat.hpp"

namespace quatgeo {

// The finite subgroups of unit quaternions, up to conjugation: the binary
// icosahedral / octahedral / tetrahedral groups and the dihedral / cyclic
// families. Tag subscripts follow the usual naming: 2D_{2n} has order 4n,
// 2C_n order 2n, 1C_n (n odd) order n.
struct FiniteS3Class {
  enum class Tag { TwoI, TwoO, TwoT, TwoD, TwoC, OneC } tag;
  int n = 0;  // parameter for TwoD / TwoC / OneC

  std::string name() const;
  std::size_t expected_order() const;

  friend bool operator==(const FiniteS3Class& a, const FiniteS3Class& b) {
    bool param = a.tag == Tag::TwoD || a.tag == Tag::TwoC || a.tag == Tag::OneC;
    return a.tag == b.tag && (!param || a.n == b.n);
  }
};

// Parses "2I", "2O", "2T", "2D<2n>", "2C<n>", "1C<n>".
std::optional<FiniteS3Class> parse_s3_class(const std::string& text);

// Generators: sigma = (sqrt5 - 1)/2, tau = (sqrt5 + 1)/2.
Quat<double> s3_i_icosahedral();  // (I + sigma J + tau K) / 2
Quat<double> s3_i_octahedral();   // (J + K) / sqrt2
Quat<double> s3_i_tetrahedral();  // I
Quat<double> s3_omega();          // (-1 + I + J + K) / 2
Quat<double> s3_e(double n);      // exp(pi I / n)
Quat<double> s3_j();

// Closure of the class generators under multiplication. Throws ClosureError
// if the closure fails to stabilize within 10^4 elements (a tolerance bug),
// InvalidArgument for OneC with even n.
std::vector<Quat<double>> s3_build(const FiniteS3Class& cls);

// Conjugation-invariant signature used for recognition.
struct S3Signature {
  std::size_t order = 0;
  bool abelian = true;
  std::vector<int> element_orders;  // sorted multiset

  friend bool operator==(const S3Signature&, const S3Signature&) = default;
};

// Requires S to be a group of unit quaternions (verified; NotAGroup
// otherwise).
S3Signature s3_signature(const std::vector<Quat<double>>& s);

// Classification by signature, precomputed from built instances. Returns
// nullopt only if nothing matches, which the classification theorem rules
// out for genuine groups. The order-4 coincidence 2D_2 = 2C_2 (conjugate
// subgroups) is canonicalized to 2C_2.
std::optional<FiniteS3Class> s3_recognize(const std::vector<Quat<double>>& s);

// Membership with the recognition tolerance.
bool s3_contains(const std::vector<Quat<double>>& s, const Quat<double>& q);

}  // namespace quatgeo
