#pragma once

#include <charconv>
#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace tempop {

// Microcanonical spin temperature with first-class markers. A balanced
// population (M = N) sits at the +infinity marker; the empty and fully
// excited configurations have no defined temperature at all. Markers are
// ordered around the finite values (-inf < finite < +inf) and are never
// silently narrowed to a float.
class ExtendedTemperature {
 public:
  enum class Kind { MinusInfinity, Finite, PlusInfinity, Undefined };

  static ExtendedTemperature finite(double value) {
    if (!std::isfinite(value))
      throw std::invalid_argument("ExtendedTemperature: value must be finite");
    return ExtendedTemperature(Kind::Finite, value);
  }
  static ExtendedTemperature plus_infinity() {
    return ExtendedTemperature(Kind::PlusInfinity, 0.0);
  }
  static ExtendedTemperature minus_infinity() {
    return ExtendedTemperature(Kind::MinusInfinity, 0.0);
  }
  static ExtendedTemperature undefined() {
    return ExtendedTemperature(Kind::Undefined, 0.0);
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }

  double value() const {
    if (kind_ != Kind::Finite)
      throw std::logic_error("ExtendedTemperature: no finite value to read");
    return value_;
  }

  // NaN for undefined, +/-HUGE for the infinities; lossy by construction
  double to_double_lossy() const {
    switch (kind_) {
      case Kind::Finite: return value_;
      case Kind::PlusInfinity: return std::numeric_limits<double>::infinity();
      case Kind::MinusInfinity: return -std::numeric_limits<double>::infinity();
      default: return std::numeric_limits<double>::quiet_NaN();
    }
  }

  // "inf", "-inf", "undef", or the shortest round-trip decimal
  std::string to_string() const {
    switch (kind_) {
      case Kind::PlusInfinity: return "inf";
      case Kind::MinusInfinity: return "-inf";
      case Kind::Undefined: return "undef";
      default: break;
    }
    char buffer[32];
    auto result = std::to_chars(buffer, buffer + sizeof buffer, value_);
    return std::string(buffer, result.ptr);
  }

  friend bool operator==(const ExtendedTemperature& a, const ExtendedTemperature& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.value_ == b.value_;
  }

  friend std::partial_ordering operator<=>(const ExtendedTemperature& a,
                                           const ExtendedTemperature& b) {
    if (a.kind_ == Kind::Undefined || b.kind_ == Kind::Undefined)
      return std::partial_ordering::unordered;
    const auto rank = [](Kind k) {
      return k == Kind::MinusInfinity ? -1 : (k == Kind::PlusInfinity ? 1 : 0);
    };
    if (rank(a.kind_) != rank(b.kind_))
      return rank(a.kind_) < rank(b.kind_) ? std::partial_ordering::less
                                           : std::partial_ordering::greater;
    if (a.kind_ != Kind::Finite) return std::partial_ordering::equivalent;
    return a.value_ <=> b.value_;
  }

 private:
  ExtendedTemperature(Kind kind, double value) : kind_(kind), value_(value) {}
  Kind kind_;
  double value_;
};

}  // namespace tempop
