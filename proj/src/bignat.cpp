#include "tempop/bignat.hpp"

#include <cmath>
#include <stdexcept>

namespace tempop {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigNat::BigNat(std::uint64_t value) {
  while (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffull));
    value >>= 32;
  }
}

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int BigNat::compare(const BigNat& a, const BigNat& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigNat BigNat::add(const BigNat& a, const BigNat& b) {
  BigNat out;
  const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
  out.limbs_.reserve(n + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = carry;
    if (i < a.limbs_.size()) s += a.limbs_[i];
    if (i < b.limbs_.size()) s += b.limbs_[i];
    out.limbs_.push_back(static_cast<std::uint32_t>(s & 0xffffffffull));
    carry = s >> 32;
  }
  if (carry != 0) out.limbs_.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

BigNat BigNat::sub(const BigNat& a, const BigNat& b) {
  if (compare(a, b) < 0)
    throw std::invalid_argument("BigNat::sub: minuend smaller than subtrahend");
  BigNat out;
  out.limbs_.reserve(a.limbs_.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow;
    if (i < b.limbs_.size()) d -= b.limbs_[i];
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.limbs_.push_back(static_cast<std::uint32_t>(d));
  }
  out.trim();
  return out;
}

BigNat BigNat::mul(const BigNat& a, const BigNat& b) {
  if (a.is_zero() || b.is_zero()) return BigNat{};
  BigNat out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] +
                          static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                          carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
    }
    std::size_t k = i + b.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
      ++k;
    }
  }
  out.trim();
  return out;
}

BigNat BigNat::mul_small(std::uint32_t factor) const {
  if (factor == 0 || is_zero()) return BigNat{};
  BigNat out;
  out.limbs_.reserve(limbs_.size() + 1);
  std::uint64_t carry = 0;
  for (std::uint32_t limb : limbs_) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
    out.limbs_.push_back(static_cast<std::uint32_t>(cur & 0xffffffffull));
    carry = cur >> 32;
  }
  if (carry != 0) out.limbs_.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

BigNat BigNat::div_small(std::uint32_t divisor, std::uint32_t& remainder) const {
  if (divisor == 0) throw std::invalid_argument("BigNat::div_small: divide by zero");
  BigNat out;
  out.limbs_.assign(limbs_.size(), 0);
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    out.limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  out.trim();
  remainder = static_cast<std::uint32_t>(rem);
  return out;
}

BigNat BigNat::shifted_right() const {
  BigNat out;
  out.limbs_.assign(limbs_.size(), 0);
  std::uint32_t carry = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    out.limbs_[i] = (limbs_[i] >> 1) | (carry << 31);
    carry = limbs_[i] & 1u;
  }
  out.trim();
  return out;
}

BigNat BigNat::divmod(const BigNat& a, const BigNat& b, BigNat& remainder) {
  if (b.is_zero()) throw std::invalid_argument("BigNat::divmod: divide by zero");
  if (compare(a, b) < 0) {
    remainder = a;
    return BigNat{};
  }
  const std::size_t total_bits = a.limbs_.size() * 32;
  BigNat quotient;
  quotient.limbs_.assign(a.limbs_.size(), 0);
  BigNat rem;
  for (std::size_t bit = total_bits; bit-- > 0;) {
    // rem = rem * 2 + bit(a, bit)
    std::uint64_t carry = (a.limbs_[bit / 32] >> (bit % 32)) & 1u;
    for (std::size_t i = 0; i < rem.limbs_.size(); ++i) {
      std::uint64_t cur = (static_cast<std::uint64_t>(rem.limbs_[i]) << 1) | carry;
      rem.limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
    }
    if (carry != 0) rem.limbs_.push_back(static_cast<std::uint32_t>(carry));
    if (compare(rem, b) >= 0) {
      rem = sub(rem, b);
      quotient.limbs_[bit / 32] |= (1u << (bit % 32));
    }
  }
  quotient.trim();
  rem.trim();
  remainder = rem;
  return quotient;
}

BigNat BigNat::gcd(BigNat a, BigNat b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  unsigned shift = 0;
  while (a.is_even() && b.is_even()) {
    a = a.shifted_right();
    b = b.shifted_right();
    ++shift;
  }
  while (a.is_even()) a = a.shifted_right();
  while (!b.is_zero()) {
    while (b.is_even()) b = b.shifted_right();
    if (compare(a, b) > 0) std::swap(a, b);
    b = sub(b, a);
  }
  for (unsigned i = 0; i < shift; ++i) a = a.mul_small(2);
  return a;
}

BigNat BigNat::binomial(unsigned n, long long k) {
  if (k < 0 || k > static_cast<long long>(n)) return BigNat{};
  unsigned kk = static_cast<unsigned>(k);
  if (kk > n - kk) kk = n - kk;
  BigNat result(1);
  for (unsigned i = 1; i <= kk; ++i) {
    result = result.mul_small(n - kk + i);
    std::uint32_t rem = 0;
    result = result.div_small(i, rem);
    // the running product C(n-kk+i, i) is integral, so division is exact
    if (rem != 0) throw std::logic_error("BigNat::binomial: inexact division");
  }
  return result;
}

double BigNat::to_double() const {
  double value = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    value = value * 4294967296.0 + static_cast<double>(limbs_[i]);
    if (std::isinf(value)) return value;
  }
  return value;
}

std::string BigNat::to_string() const {
  if (is_zero()) return "0";
  BigNat work = *this;
  std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
  while (!work.is_zero()) {
    std::uint32_t rem = 0;
    work = work.div_small(1000000000u, rem);
    chunks.push_back(rem);
  }
  std::string out = std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

std::uint64_t BigNat::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigNat::to_u64: value too large");
  std::uint64_t v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
  return v;
}

}  // namespace tempop
