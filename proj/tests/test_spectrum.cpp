#include <doctest.h>

#include <cmath>

#include "tempop/spectrum.hpp"
#include "tempop/temperature_map.hpp"

using tempop::EnergyLevel;
using tempop::EnergySpectrum;
using tempop::SpectrumFormatError;
using tempop::UnitSystem;

namespace {

EnergySpectrum two_level(double e0, double e1) {
  return EnergySpectrum({{e0, 1}, {e1, 1}}, UnitSystem::Dimensionless);
}

}  // namespace

TEST_CASE("spectrum construction enforces the level invariants") {
  CHECK_THROWS_AS(EnergySpectrum({}, UnitSystem::Dimensionless),
                  std::invalid_argument);
  CHECK_THROWS_AS(EnergySpectrum({{0.0, 0}}, UnitSystem::Dimensionless),
                  std::invalid_argument);
  CHECK_THROWS_AS(EnergySpectrum({{0.0, 1}, {0.0, 1}}, UnitSystem::Dimensionless),
                  std::invalid_argument);
  CHECK_THROWS_AS(EnergySpectrum({{1.0, 1}, {0.5, 1}}, UnitSystem::Dimensionless),
                  std::invalid_argument);
  const auto spectrum = two_level(0.0, 2.0);
  CHECK(spectrum.ground_energy() == 0.0);
  CHECK(spectrum.top_energy() == 2.0);
  CHECK(spectrum.total_state_count() == 2.0);
  CHECK(spectrum.infinite_temperature_mean() == 1.0);
}

TEST_CASE("spectrum JSON parsing accepts the documented format") {
  const auto spectrum = EnergySpectrum::parse_json(R"({
    "unit_system": "dimensionless",
    "levels": [
      {"energy": -1.0, "degeneracy": 1},
      {"energy": 1.0, "degeneracy": 3}
    ]
  })");
  CHECK(spectrum.unit_system() == UnitSystem::Dimensionless);
  CHECK(spectrum.level_count() == 2);
  CHECK(spectrum.levels()[1].degeneracy == 3);
  CHECK(spectrum.boltzmann() == 1.0);

  const auto si = EnergySpectrum::parse_json(
      R"({"unit_system": "si", "levels": [{"energy": 0.0, "degeneracy": 2}]})");
  CHECK(si.boltzmann() == tempop::constants::boltzmann);
}

TEST_CASE("spectrum JSON parsing rejects violations with a positioned message") {
  // syntax error: nlohmann reports the byte offset
  CHECK_THROWS_WITH_AS(EnergySpectrum::parse_json("{\"unit_system\":"),
                       doctest::Contains("parse error"), SpectrumFormatError);
  CHECK_THROWS_WITH_AS(
      EnergySpectrum::parse_json(R"({"unit_system": "furlongs", "levels": []})"),
      doctest::Contains("unit_system"), SpectrumFormatError);
  CHECK_THROWS_WITH_AS(
      EnergySpectrum::parse_json(R"({"unit_system": "si", "levels": []})"),
      doctest::Contains("levels"), SpectrumFormatError);
  // non-increasing energies are reported with the offending index
  CHECK_THROWS_WITH_AS(
      EnergySpectrum::parse_json(R"({"unit_system": "si", "levels": [
        {"energy": 1.0, "degeneracy": 1}, {"energy": 1.0, "degeneracy": 1}]})"),
      doctest::Contains("levels[1]"), SpectrumFormatError);
  CHECK_THROWS_WITH_AS(
      EnergySpectrum::parse_json(R"({"unit_system": "si", "levels": [
        {"energy": 1.0, "degeneracy": 0}]})"),
      doctest::Contains("levels[0].degeneracy"), SpectrumFormatError);
  CHECK_THROWS_WITH_AS(
      EnergySpectrum::parse_json(R"({"unit_system": "si", "levels": [
        {"energy": "oops", "degeneracy": 1}]})"),
      doctest::Contains("levels[0].energy"), SpectrumFormatError);
  CHECK_THROWS_AS(EnergySpectrum::load_file("/nonexistent/spectrum.json"),
                  SpectrumFormatError);
}

TEST_CASE("partition function matches the direct sums") {
  using tempop::partition_function;
  const auto spectrum = two_level(0.0, 2.0);

  // tau -> infinity: every state weighs 1
  CHECK(partition_function(spectrum, 1e12) == doctest::Approx(2.0).epsilon(1e-10));
  // direct evaluation at tau = 1
  CHECK(partition_function(spectrum, 1.0) ==
        doctest::Approx(1.1353352832366127).epsilon(1e-15));
  // degeneracy factor on a single level
  const EnergySpectrum single({{0.5, 7}}, UnitSystem::Dimensionless);
  CHECK(partition_function(single, 2.0) ==
        doctest::Approx(7.0 * std::exp(-0.25)).epsilon(1e-15));

  CHECK_THROWS_AS(partition_function(spectrum, 0.0), std::domain_error);
  CHECK_THROWS_AS(partition_function(spectrum, -1.0), std::domain_error);
  // negative branch only on request
  CHECK(partition_function(spectrum, -1.0, tempop::NegativeTemperature::Allow) >
        0.0);
}

TEST_CASE("partition function guards the factored-out exponent") {
  // ground state at -1: the true Z ~ exp(+1/tau) overflows for tiny tau
  const auto spectrum = two_level(-1.0, 1.0);
  CHECK_THROWS_AS(tempop::partition_function(spectrum, 1e-12),
                  std::overflow_error);
}

TEST_CASE("mean energy hits both temperature limits") {
  using tempop::mean_energy;
  const auto spectrum = two_level(0.0, 2.0);
  CHECK(mean_energy(spectrum, 1e-9) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mean_energy(spectrum, 1e12) == doctest::Approx(1.0).epsilon(1e-9));

  // mu B = 1 spin: <E> = -tanh(1/tau) at tau = 2/ln 3 gives -1/2 exactly
  const auto spin = two_level(-1.0, 1.0);
  CHECK(mean_energy(spin, 1.8204784532536748) ==
        doctest::Approx(-0.5).epsilon(1e-14));

  // weighted limit with degeneracies
  const EnergySpectrum weighted({{0.0, 1}, {3.0, 3}}, UnitSystem::Dimensionless);
  CHECK(mean_energy(weighted, 1e12) == doctest::Approx(2.25).epsilon(1e-9));
}

TEST_CASE("mean energy stays finite for harsh spans and temperatures") {
  const auto wide = EnergySpectrum(
      {{0.0, 1}, {1.0, 1}, {5000.0, 2}, {10000.0, 1}}, UnitSystem::Dimensionless);
  for (double tau : {1e-12, 1e-6, 1.0, 1e6, 1e12}) {
    const double value = tempop::mean_energy(wide, tau);
    CHECK(std::isfinite(value));
    CHECK(value >= wide.ground_energy());
    CHECK(value <= wide.top_energy());
  }
  CHECK(tempop::mean_energy(wide, 1e-12) == doctest::Approx(0.0));
  CHECK(std::isfinite(tempop::partition_function(wide, 1e-12)));
}
