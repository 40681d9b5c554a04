#pragma once

#include <cstdint>
#include <string>

#include "tempop/bignat.hpp"

namespace tempop {

// Exact signed rational on BigNat. Always stored normalized: gcd(num, den)
// = 1, den >= 1, and sign 0 iff num = 0. Probabilities in the spin module
// are compared with these, never with floating point.
class Rational {
 public:
  Rational() : sign_(0), num_(0), den_(1) {}
  Rational(long long numerator, long long denominator);
  Rational(int sign, BigNat numerator, BigNat denominator);

  static Rational from_counts(std::uint64_t numerator, std::uint64_t denominator);

  int sign() const { return sign_; }
  const BigNat& numerator() const { return num_; }
  const BigNat& denominator() const { return den_; }
  bool is_zero() const { return sign_ == 0; }

  static Rational add(const Rational& a, const Rational& b);
  static Rational sub(const Rational& a, const Rational& b);
  static Rational mul(const Rational& a, const Rational& b);
  static Rational div(const Rational& a, const Rational& b);

  Rational abs() const;

  // three-way compare: -1, 0, +1
  static int compare(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return compare(a, b) < 0;
  }

  double to_double() const;
  std::string to_string() const;  // "num/den", e.g. "-3/4"; zero is "0/1"

 private:
  void normalize();
  int sign_;
  BigNat num_;
  BigNat den_;
};

}  // namespace tempop
