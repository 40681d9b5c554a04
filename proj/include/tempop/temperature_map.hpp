#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "tempop/spectrum.hpp"

namespace tempop {

// Formal tau < 0 branch for population-inverted bounded spectra. Off unless
// requested explicitly.
enum class NegativeTemperature { Forbid, Allow };

// Canonical partition function Z(tau) = sum_n g_n exp(-E_n / k_B tau),
// evaluated with the reference energy (ground state for tau > 0, top level
// for tau < 0) factored out of the sum. Throws std::overflow_error when the
// factored-out prefactor exponent leaves the representable range.
double partition_function(const EnergySpectrum& spectrum, double tau,
                          NegativeTemperature branch = NegativeTemperature::Forbid);

// Boltzmann-weighted mean energy at temperature tau. Shift-invariant ratio
// form, finite for any finite nonzero tau and energy spans up to ~1e4/tau
// decades; lies strictly inside (E_ground, mean_infinity) on the positive
// branch.
double mean_energy(const EnergySpectrum& spectrum, double tau,
                   NegativeTemperature branch = NegativeTemperature::Forbid);

struct TemperatureEigenpair {
  enum class Status { Ok, AtOrBelowGround, AtOrAboveInfiniteMean, AtOrAboveTop };
  double energy;
  std::uint64_t degeneracy;
  Status status;
  double temperature;  // NaN unless status == Ok
};

// The energy <-> temperature bijection for a discrete spectrum: tau |->
// mean_energy(tau) is strictly increasing (derivative proportional to the
// energy variance), so the inverse is recovered by bracketed bisection.
class TemperatureMap {
 public:
  struct Options {
    double relative_tolerance = 1e-12;
    int max_iterations = 200;
    NegativeTemperature branch = NegativeTemperature::Forbid;
  };

  explicit TemperatureMap(EnergySpectrum spectrum)
      : TemperatureMap(std::move(spectrum), Options{}) {}
  TemperatureMap(EnergySpectrum spectrum, Options options);

  const EnergySpectrum& spectrum() const { return spectrum_; }
  const Options& options() const { return options_; }

  // open interval of invertible energies on the positive branch
  double domain_lower() const { return spectrum_.ground_energy(); }
  double domain_upper() const { return spectrum_.infinite_temperature_mean(); }

  // unique tau with mean_energy(tau) = energy. Domain errors:
  //  energy <= E_ground            -> "below ground state"
  //  energy >= mean (branch off)   -> "above infinite-temperature mean"
  //  energy >= E_top (branch on)   -> "at or above top level"
  double invert(double energy) const;

  // (E_n, f(E_n)) for every level; out-of-domain levels carry a marker
  std::vector<TemperatureEigenpair> eigensystem() const;

 private:
  EnergySpectrum spectrum_;
  Options options_;
};

}  // namespace tempop
