#include <doctest.h>

#include <cmath>
#include <random>

#include "tempop/spectrum.hpp"
#include "tempop/temperature_map.hpp"

using tempop::EnergyLevel;
using tempop::EnergySpectrum;
using tempop::NegativeTemperature;
using tempop::TemperatureEigenpair;
using tempop::TemperatureMap;
using tempop::UnitSystem;

namespace {

EnergySpectrum spin_half() {
  return EnergySpectrum({{-1.0, 1}, {1.0, 1}}, UnitSystem::Dimensionless);
}

}  // namespace

TEST_CASE("map construction requires an invertible spectrum") {
  CHECK_THROWS_AS(
      TemperatureMap(EnergySpectrum({{0.0, 5}}, UnitSystem::Dimensionless)),
      std::invalid_argument);
  const TemperatureMap map(spin_half());
  CHECK(map.domain_lower() == -1.0);
  CHECK(map.domain_upper() == 0.0);
}

TEST_CASE("inversion reproduces the analytic two-level temperature") {
  const TemperatureMap map(spin_half());
  // <E> = -tanh(1/tau); the analytic inverse of -1/2 is 2/atanh(1/2) = 2/ln 3
  CHECK(map.invert(-0.5) == doctest::Approx(1.8204784532536746).epsilon(1e-12));
  // generic energies against the atanh oracle
  for (double energy : {-0.9, -0.7, -0.3, -0.05, -1e-4}) {
    const double expected = 1.0 / std::atanh(-energy);
    CHECK(map.invert(energy) == doctest::Approx(expected).epsilon(1e-11));
  }
}

TEST_CASE("inversion refuses energies it cannot certify at double precision") {
  // -1e-308 is inside the open domain (-1, 0) but the tau that produces it
  // (~1e308) is beyond what the quantized double-precision mean can express,
  // so this must surface as a numerical failure, not as a silent wrong value
  const TemperatureMap map(spin_half());
  CHECK_THROWS_AS(map.invert(-1e-308), std::runtime_error);
  CHECK_THROWS_AS(map.invert(-1e-20), std::runtime_error);
  // resolvable energies near the zero boundary still invert, with accuracy
  // limited by the cancellation floor of the weighted sum (~1e-16 absolute)
  CHECK(map.invert(-1e-10) == doctest::Approx(1e10).epsilon(1e-5));
  CHECK(map.invert(-1e-6) == doctest::Approx(1e6).epsilon(1e-9));
}

TEST_CASE("inversion rejects energies outside the open domain") {
  const TemperatureMap map(spin_half());
  CHECK_THROWS_WITH_AS(map.invert(-1.0), doctest::Contains("below ground"),
                       std::domain_error);
  CHECK_THROWS_WITH_AS(map.invert(-1.5), doctest::Contains("below ground"),
                       std::domain_error);
  CHECK_THROWS_WITH_AS(map.invert(0.0),
                       doctest::Contains("above infinite-temperature mean"),
                       std::domain_error);
  CHECK_THROWS_WITH_AS(map.invert(0.5),
                       doctest::Contains("above infinite-temperature mean"),
                       std::domain_error);
}

TEST_CASE("negative-temperature branch inverts population-inverted energies") {
  TemperatureMap::Options options;
  options.branch = NegativeTemperature::Allow;
  const TemperatureMap map(spin_half(), options);
  // <E> = +1/2 sits on the tau < 0 branch, mirror of the positive solution
  const double tau = map.invert(0.5);
  CHECK(tau == doctest::Approx(-1.8204784532536746).epsilon(1e-12));
  CHECK(tempop::mean_energy(spin_half(), tau, NegativeTemperature::Allow) ==
        doctest::Approx(0.5).epsilon(1e-12));
  // boundaries stay excluded
  CHECK_THROWS_AS(map.invert(0.0), std::domain_error);
  CHECK_THROWS_WITH_AS(map.invert(1.0), doctest::Contains("top level"),
                       std::domain_error);
}

TEST_CASE("round trip invert(mean_energy(tau)) over a log grid") {
  const EnergySpectrum spectrum(
      {{0.0, 1}, {0.5, 2}, {1.7, 1}, {4.0, 5}}, UnitSystem::Dimensionless);
  const TemperatureMap map(spectrum);
  const double tolerance = map.options().relative_tolerance;
  for (int i = 0; i <= 120; ++i) {
    const double tau = std::pow(10.0, -3.0 + 6.0 * i / 120.0);
    const double energy = tempop::mean_energy(spectrum, tau);
    if (!(energy > map.domain_lower() && energy < map.domain_upper()))
      continue;  // tau so extreme the mean has saturated in double precision
    const double roundtrip = map.invert(energy);
    CHECK(std::abs(roundtrip - tau) / tau <= 10.0 * tolerance);
  }
}

TEST_CASE("mean energy is strictly increasing in tau (random spectra)") {
  std::mt19937_64 gen(123);
  std::uniform_real_distribution<double> energy_gap(0.05, 3.0);
  std::uniform_int_distribution<int> level_count(2, 8);
  std::uniform_int_distribution<std::uint64_t> degeneracy(1, 9);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<EnergyLevel> levels;
    double energy = -2.0;
    const int n = level_count(gen);
    for (int i = 0; i < n; ++i) {
      energy += energy_gap(gen);
      levels.push_back({energy, degeneracy(gen)});
    }
    const EnergySpectrum spectrum(levels, UnitSystem::Dimensionless);
    // strict increase where double precision can resolve the Boltzmann
    // weights (gaps <= 3, so exp(-gap/tau) > 1e-9 across this range)
    double previous = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 40; ++i) {
      const double tau = std::pow(10.0, std::log10(0.15) + (2.0 - std::log10(0.15)) * i / 40.0);
      const double current = tempop::mean_energy(spectrum, tau);
      CHECK(current > previous);
      previous = current;
    }
    // never decreasing even out where the weights saturate
    previous = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 60; ++i) {
      const double tau = std::pow(10.0, -3.0 + 6.0 * i / 60.0);
      const double current = tempop::mean_energy(spectrum, tau);
      CHECK(current >= previous);
      previous = current;
    }
  }
}

TEST_CASE("eigensystem marks boundary levels instead of inventing numbers") {
  // two levels: the ground level is the domain's lower boundary
  const TemperatureMap two(spin_half());
  const auto two_pairs = two.eigensystem();
  REQUIRE(two_pairs.size() == 2);
  CHECK(two_pairs[0].status == TemperatureEigenpair::Status::AtOrBelowGround);
  CHECK(two_pairs[1].status == TemperatureEigenpair::Status::AtOrAboveInfiniteMean);

  // three levels {0,1,2}: the middle level equals the infinite-temperature
  // mean, so it is a boundary too
  const EnergySpectrum three({{0.0, 1}, {1.0, 1}, {2.0, 1}},
                             UnitSystem::Dimensionless);
  const TemperatureMap map(three);
  CHECK(map.domain_upper() == 1.0);
  const auto pairs = map.eigensystem();
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].status == TemperatureEigenpair::Status::AtOrBelowGround);
  CHECK(pairs[1].status == TemperatureEigenpair::Status::AtOrAboveInfiniteMean);
  CHECK(pairs[2].status == TemperatureEigenpair::Status::AtOrAboveInfiniteMean);
  CHECK(std::isnan(pairs[1].temperature));

  // any strictly interior energy still inverts fine
  CHECK(map.invert(0.5) > 0.0);
}

TEST_CASE("eigensystem temperatures are nondecreasing inside the domain") {
  const EnergySpectrum spectrum(
      {{0.0, 2}, {0.3, 1}, {0.9, 4}, {1.4, 1}, {2.0, 1}, {7.0, 1}},
      UnitSystem::Dimensionless);
  const TemperatureMap map(spectrum);
  double previous = 0.0;
  for (const auto& pair : map.eigensystem()) {
    if (pair.status != TemperatureEigenpair::Status::Ok) continue;
    CHECK(pair.temperature > previous);
    previous = pair.temperature;
  }
}

TEST_CASE("eigensystem with the negative branch covers inverted levels") {
  TemperatureMap::Options options;
  options.branch = NegativeTemperature::Allow;
  const EnergySpectrum spectrum({{-1.0, 1}, {0.0, 2}, {1.0, 1}},
                                UnitSystem::Dimensionless);
  const TemperatureMap map(spectrum, options);
  const auto pairs = map.eigensystem();
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].status == TemperatureEigenpair::Status::AtOrBelowGround);
  // the middle level sits above the mean (-1+0+0+1)/4 = 0? No: mean = 0, and
  // E = 0 equals it exactly, so it is the infinite-temperature boundary
  CHECK(pairs[1].status == TemperatureEigenpair::Status::AtOrAboveInfiniteMean);
  CHECK(pairs[2].status == TemperatureEigenpair::Status::AtOrAboveTop);
}

TEST_CASE("SI spectra invert in kelvin") {
  // two levels split by 1e-21 J; at tau = 50 K the occupation follows k_B
  const EnergySpectrum spectrum({{0.0, 1}, {1e-21, 1}}, UnitSystem::Si);
  const TemperatureMap map(spectrum);
  const double tau = 50.0;
  const double energy = tempop::mean_energy(spectrum, tau);
  CHECK(map.invert(energy) == doctest::Approx(tau).epsilon(1e-10));
}
