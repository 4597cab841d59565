#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>

#include "quatgeo/rational.hpp"
#include "quatgeo/tolerances.hpp"

namespace quatgeo {

// The two scalar backends: Rat (exact, decidable equality, used wherever
// group elements must be hashed) and double (spectra, irrational unit
// quaternions, orbit probes). Backend mixing is a compile-time error.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rat> {
  static constexpr bool exact = true;
  static bool eq(const Rat& a, const Rat& b) { return a == b; }
  static bool is_zero(const Rat& a) { return a.is_zero(); }
  static double to_double(const Rat& a) { return a.to_double(); }
  static std::size_t hash(const Rat& a) { return a.hash(); }
  static std::string str(const Rat& a) { return a.str(); }
  static const char* name() { return "exact"; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static bool eq(double a, double b) { return std::abs(a - b) <= kEps; }
  static bool is_zero(double a) { return std::abs(a) <= kEps; }
  static double to_double(double a) { return a; }
  static std::size_t hash(double a) { return std::hash<double>{}(a); }
  static std::string str(double a) {
    std::ostringstream os;
    os << a;
    return os.str();
  }
  static const char* name() { return "float"; }
};

}  // namespace quatgeo
