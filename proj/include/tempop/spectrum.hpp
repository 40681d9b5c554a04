#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tempop/constants.hpp"

namespace tempop {

struct EnergyLevel {
  double energy;             // chosen energy unit (J in SI mode)
  std::uint64_t degeneracy;  // >= 1
};

// Raised for malformed or invalid spectrum documents; the message carries a
// byte offset (syntax) or a levels[i] path (semantics).
class SpectrumFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite discrete Hamiltonian spectrum: strictly increasing energies with
// explicit integer degeneracies. Degeneracies are kept explicit because the
// composite spin spectra carry binomial multiplicities far beyond what a
// repeated-level list could hold.
class EnergySpectrum {
 public:
  EnergySpectrum(std::vector<EnergyLevel> levels, UnitSystem units);

  const std::vector<EnergyLevel>& levels() const { return levels_; }
  UnitSystem unit_system() const { return units_; }
  double boltzmann() const { return boltzmann_for(units_); }

  std::size_t level_count() const { return levels_.size(); }
  double total_state_count() const;  // sum of degeneracies

  double ground_energy() const { return levels_.front().energy; }
  double top_energy() const { return levels_.back().energy; }

  // degeneracy-weighted mean of all levels: the tau -> infinity limit of the
  // canonical mean energy, and the open upper edge of the positive-branch map
  double infinite_temperature_mean() const;

  // document format: {"unit_system": "dimensionless"|"si",
  //                   "levels": [{"energy": E, "degeneracy": g}, ...]}
  static EnergySpectrum parse_json(std::string_view text);
  static EnergySpectrum load_file(const std::string& path);

 private:
  std::vector<EnergyLevel> levels_;
  UnitSystem units_;
};

}  // namespace tempop
