#pragma once

namespace tempop {

// Every quantity in the library is expressed either in dimensionless natural
// units (hbar = k_B = m = 1) or in SI (joule, kelvin, kilogram, rad/s).
enum class UnitSystem { Dimensionless, Si };

// CODATA 2018 values. hbar and k_B are exact under the 2019 SI redefinition.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;              // J s
inline constexpr double boltzmann = 1.380649e-23;            // J / K
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
}  // namespace constants

inline constexpr double hbar_for(UnitSystem units) {
  return units == UnitSystem::Si ? constants::hbar : 1.0;
}

inline constexpr double boltzmann_for(UnitSystem units) {
  return units == UnitSystem::Si ? constants::boltzmann : 1.0;
}

}  // namespace tempop
