#include "tempop/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace tempop {

Rational::Rational(long long numerator, long long denominator)
    : sign_(0), num_(0), den_(1) {
  if (denominator == 0)
    throw std::invalid_argument("Rational: zero denominator");
  int s = 1;
  if (numerator < 0) {
    s = -s;
    numerator = -numerator;
  }
  if (denominator < 0) {
    s = -s;
    denominator = -denominator;
  }
  sign_ = numerator == 0 ? 0 : s;
  num_ = BigNat(static_cast<std::uint64_t>(numerator));
  den_ = BigNat(static_cast<std::uint64_t>(denominator));
  normalize();
}

Rational::Rational(int sign, BigNat numerator, BigNat denominator)
    : sign_(sign), num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  if (num_.is_zero()) sign_ = 0;
  if (!num_.is_zero() && sign_ != 1 && sign_ != -1)
    throw std::invalid_argument("Rational: sign must be -1 or +1 for nonzero value");
  normalize();
}

Rational Rational::from_counts(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0)
    throw std::invalid_argument("Rational::from_counts: zero denominator");
  return Rational(numerator == 0 ? 0 : 1, BigNat(numerator), BigNat(denominator));
}

void Rational::normalize() {
  if (num_.is_zero()) {
    sign_ = 0;
    den_ = BigNat(1);
    return;
  }
  BigNat g = BigNat::gcd(num_, den_);
  if (!(g == BigNat(1))) {
    if (g.fits_u64() && g.to_u64() <= 0xffffffffull) {
      std::uint32_t rem = 0;
      num_ = num_.div_small(static_cast<std::uint32_t>(g.to_u64()), rem);
      den_ = den_.div_small(static_cast<std::uint32_t>(g.to_u64()), rem);
    } else {
      BigNat rem;
      num_ = BigNat::divmod(num_, g, rem);
      den_ = BigNat::divmod(den_, g, rem);
    }
  }
}

double Rational::to_double() const {
  if (sign_ == 0) return 0.0;
  double n = num_.to_double();
  double d = den_.to_double();
  double v = n / d;
  if (std::isfinite(v) && v != 0.0) return sign_ * v;
  throw std::overflow_error("Rational::to_double: magnitude outside double range");
}

std::string Rational::to_string() const {
  std::string out;
  if (sign_ < 0) out += "-";
  out += num_.to_string();
  out += "/";
  out += den_.to_string();
  return out;
}

Rational Rational::mul(const Rational& a, const Rational& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return Rational{};
  return Rational(a.sign_ * b.sign_, BigNat::mul(a.num_, b.num_),
                  BigNat::mul(a.den_, b.den_));
}

Rational Rational::div(const Rational& a, const Rational& b) {
  if (b.sign_ == 0) throw std::invalid_argument("Rational::div: divide by zero");
  if (a.sign_ == 0) return Rational{};
  return Rational(a.sign_ * b.sign_, BigNat::mul(a.num_, b.den_),
                  BigNat::mul(a.den_, b.num_));
}

Rational Rational::add(const Rational& a, const Rational& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigNat left = BigNat::mul(a.num_, b.den_);
  BigNat right = BigNat::mul(b.num_, a.den_);
  BigNat den = BigNat::mul(a.den_, b.den_);
  if (a.sign_ == b.sign_) return Rational(a.sign_, BigNat::add(left, right), den);
  int cmp = BigNat::compare(left, right);
  if (cmp == 0) return Rational{};
  if (cmp > 0) return Rational(a.sign_, BigNat::sub(left, right), den);
  return Rational(b.sign_, BigNat::sub(right, left), den);
}

Rational Rational::sub(const Rational& a, const Rational& b) {
  Rational negated(-b.sign_, b.num_, b.den_);
  if (b.sign_ == 0) negated = Rational{};
  return add(a, negated);
}

Rational Rational::abs() const {
  if (sign_ == 0) return Rational{};
  return Rational(1, num_, den_);
}

int Rational::compare(const Rational& a, const Rational& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  if (a.sign_ == 0) return 0;
  int cmp = BigNat::compare(BigNat::mul(a.num_, b.den_), BigNat::mul(b.num_, a.den_));
  return a.sign_ > 0 ? cmp : -cmp;
}

}  // namespace tempop
