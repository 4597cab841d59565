#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "quatgeo/errors.hpp"

namespace quatgeo {

inline std::size_t hash_combine(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

// Exact rational scalar. Invariant: lowest terms, positive denominator
// (GMP canonical form, maintained by every operation here).
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit wanted
  Rat(int n) : v_(n) {}                             // NOLINT
  Rat(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p", "p/q" and plain decimals like "-1.25".
  static std::optional<Rat> parse(std::string_view s);

  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // Only valid for integers that fit a signed long.
  long to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
      throw InvalidArgument("rational does not fit a machine integer: " + str());
    return v_.get_num().get_si();
  }

  bool integer_multiple_of(long m) const {
    if (!is_integer()) return false;
    if (m == 0) return is_zero();
    return mpz_divisible_ui_p(v_.get_num().get_mpz_t(),
                              static_cast<unsigned long>(m < 0 ? -m : m)) != 0;
  }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  double to_double() const { return v_.get_d(); }

  std::string str() const {
    std::string s = v_.get_num().get_str();
    if (!is_integer()) s += "/" + v_.get_den().get_str();
    return s;
  }

  std::size_t hash() const {
    constexpr unsigned long kMod = 0x1fffffffffffffffUL;  // 2^61 - 1
    std::size_t h = mpz_fdiv_ui(v_.get_num().get_mpz_t(), kMod);
    return hash_combine(h, mpz_fdiv_ui(v_.get_den().get_mpz_t(), kMod));
  }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline std::optional<Rat> Rat::parse(std::string_view s) {
  // Trim surrounding whitespace.
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;

  std::string text(s);
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    if (text.find('/') != std::string::npos) return std::nullopt;
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty()) return std::nullopt;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      char c = digits[i];
      if (!(std::isdigit(static_cast<unsigned char>(c)) ||
            (i == 0 && (c == '+' || c == '-'))))
        return std::nullopt;
    }
    mpz_class num, den = 1;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0) return std::nullopt;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rat r;
    r.v_ = mpq_class(num, den);
    r.v_.canonicalize();
    return r;
  }

  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return Rat(std::move(q));
}

}  // namespace quatgeo
