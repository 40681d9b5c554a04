#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tempop {

// Reproducible Gaussian stream: mt19937_64 (fully specified by the standard,
// so the bit stream is identical across platforms) feeding a Box-Muller
// transform written out explicitly. Results are deterministic for a given
// seed up to the floating-point conformance of exp/log/cos/sin.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

  // uniform on (0, 1], 53-bit resolution
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double standard_normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace tempop
