#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tempop {

// Arbitrary-precision unsigned integer, little-endian base-2^32 limbs.
// Covers exactly the operations the exact-probability layer needs:
// add/sub/mul, small divisor division (for binomials and decimal printing),
// binary gcd, comparison, and conversion to double/decimal string.
class BigNat {
 public:
  BigNat() = default;
  explicit BigNat(std::uint64_t value);

  static BigNat binomial(unsigned n, long long k);  // 0 when k < 0 or k > n

  bool is_zero() const { return limbs_.empty(); }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

  // three-way compare: -1, 0, +1
  static int compare(const BigNat& a, const BigNat& b);

  friend bool operator==(const BigNat& a, const BigNat& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const BigNat& a, const BigNat& b) {
    return compare(a, b) < 0;
  }

  static BigNat add(const BigNat& a, const BigNat& b);
  static BigNat sub(const BigNat& a, const BigNat& b);  // requires a >= b
  static BigNat mul(const BigNat& a, const BigNat& b);

  BigNat mul_small(std::uint32_t factor) const;
  // divides in place semantics: returns quotient, sets remainder
  BigNat div_small(std::uint32_t divisor, std::uint32_t& remainder) const;

  BigNat shifted_right() const;  // floor(x / 2)

  // schoolbook binary long division; exact enough for gcd reduction
  static BigNat divmod(const BigNat& a, const BigNat& b, BigNat& remainder);

  static BigNat gcd(BigNat a, BigNat b);

  double to_double() const;
  std::string to_string() const;  // decimal

  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t to_u64() const;  // requires fits_u64()

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

}  // namespace tempop
