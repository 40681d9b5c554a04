#include "tempop/temperature_map.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tempop {

namespace {

// largest x with exp(x) finite in IEEE double
constexpr double kMaxExpArgument = 709.0;

void check_tau(double tau, NegativeTemperature branch) {
  if (!std::isfinite(tau) || tau == 0.0)
    throw std::domain_error("temperature must be finite and nonzero");
  if (tau < 0.0 && branch == NegativeTemperature::Forbid)
    throw std::domain_error(
        "negative temperature branch is disabled; enable it explicitly");
}

double reference_energy(const EnergySpectrum& spectrum, double tau) {
  // factoring out the dominant level keeps every summed exponent <= 0
  return tau > 0.0 ? spectrum.ground_energy() : spectrum.top_energy();
}

}  // namespace

double partition_function(const EnergySpectrum& spectrum, double tau,
                          NegativeTemperature branch) {
  check_tau(tau, branch);
  const double kb = spectrum.boltzmann();
  const double e_ref = reference_energy(spectrum, tau);
  double sum = 0.0;
  for (const auto& level : spectrum.levels()) {
    sum += static_cast<double>(level.degeneracy) *
           std::exp(-(level.energy - e_ref) / (kb * tau));
  }
  const double prefactor_exponent = -e_ref / (kb * tau);
  if (prefactor_exponent > kMaxExpArgument)
    throw std::overflow_error(
        "partition function: shifted exponent " + std::to_string(prefactor_exponent) +
        " exceeds the safe range");
  return std::exp(prefactor_exponent) * sum;
}

double mean_energy(const EnergySpectrum& spectrum, double tau,
                   NegativeTemperature branch) {
  check_tau(tau, branch);
  const double kb = spectrum.boltzmann();
  const double e_ref = reference_energy(spectrum, tau);
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& level : spectrum.levels()) {
    const double weight = static_cast<double>(level.degeneracy) *
                          std::exp(-(level.energy - e_ref) / (kb * tau));
    weighted += level.energy * weight;
    total += weight;
  }
  // the reference level carries weight g_ref >= 1, so total never vanishes
  return weighted / total;
}

TemperatureMap::TemperatureMap(EnergySpectrum spectrum, Options options)
    : spectrum_(std::move(spectrum)), options_(options) {
  if (spectrum_.level_count() < 2)
    throw std::invalid_argument(
        "TemperatureMap: at least two distinct levels are required");
  if (!(options_.relative_tolerance > 0.0))
    throw std::invalid_argument("TemperatureMap: tolerance must be positive");
  if (options_.max_iterations < 1)
    throw std::invalid_argument("TemperatureMap: max_iterations must be >= 1");
}

double TemperatureMap::invert(double energy) const {
  if (!std::isfinite(energy))
    throw std::domain_error("invert: energy must be finite");
  if (energy <= domain_lower())
    throw std::domain_error("invert: energy below ground state");
  const bool negative_branch = energy >= domain_upper();
  if (negative_branch) {
    if (options_.branch == NegativeTemperature::Forbid)
      throw std::domain_error("invert: energy above infinite-temperature mean");
    if (energy == domain_upper())
      throw std::domain_error("invert: energy above infinite-temperature mean");
    if (energy >= spectrum_.top_energy())
      throw std::domain_error("invert: energy at or above top level");
  }

  const auto branch = options_.branch;
  const auto value_at = [&](double tau) { return mean_energy(spectrum_, tau, branch); };

  // geometric bracket expansion from |tau| = 1; mean_energy is increasing in
  // tau on either branch, so a sign on one side pins the bracket
  // mean_energy is increasing in tau in plain numeric order on both branches,
  // so [lo, hi] with lo < hi brackets the root throughout
  double lo = negative_branch ? -1.0 : 1.0;
  double hi = lo;
  constexpr int kMaxExpansions = 1100;  // 2^1100 covers the double range
  if (value_at(lo) < energy) {
    // need larger tau: toward +infinity (positive) or 0^- (negative branch)
    for (int i = 0;; ++i) {
      hi = negative_branch ? hi / 2.0 : hi * 2.0;
      if (i >= kMaxExpansions || hi == 0.0 || !std::isfinite(hi))
        throw std::runtime_error("invert: bracket expansion failed");
      if (value_at(hi) >= energy) break;
      lo = hi;
    }
  } else {
    // need smaller tau: toward 0^+ (positive) or -infinity (negative branch)
    for (int i = 0;; ++i) {
      lo = negative_branch ? lo * 2.0 : lo / 2.0;
      if (i >= kMaxExpansions || lo == 0.0 || !std::isfinite(lo))
        throw std::runtime_error("invert: bracket expansion failed");
      if (value_at(lo) <= energy) break;
      hi = lo;
    }
  }

  double mid = 0.5 * (lo + hi);
  bool converged = false;
  for (int i = 0; i < options_.max_iterations; ++i) {
    mid = 0.5 * (lo + hi);
    if (hi - lo <= options_.relative_tolerance * std::abs(mid)) {
      converged = true;
      break;
    }
    if (value_at(mid) < energy) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (!converged && hi - lo > 10.0 * options_.relative_tolerance * std::abs(mid))
    throw std::runtime_error("invert: bisection did not converge");
  // Near a domain boundary the computed mean quantizes (Boltzmann weights
  // saturate, cancellation noise floors out), and the bisection can lock onto
  // a step edge arbitrarily far from the mathematical root. Certify the root
  // by its energy residual, measured against the energy's own distance to the
  // boundaries: for every certifiable root that ratio is ~tolerance, while in
  // a saturated zone it is order one or worse.
  const double mean_at_root = value_at(mid);
  const double boundary_distance =
      negative_branch
          ? std::min(energy - domain_upper(), spectrum_.top_energy() - energy)
          : std::min(energy - domain_lower(), domain_upper() - energy);
  if (!(std::abs(mean_at_root - energy) <= 1e-6 * boundary_distance))
    throw std::runtime_error(
        "invert: energy is within double rounding of a domain boundary; the "
        "inverse temperature cannot be certified to the requested tolerance");
  return mid;
}

std::vector<TemperatureEigenpair> TemperatureMap::eigensystem() const {
  std::vector<TemperatureEigenpair> pairs;
  pairs.reserve(spectrum_.level_count());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& level : spectrum_.levels()) {
    TemperatureEigenpair pair{level.energy, level.degeneracy,
                              TemperatureEigenpair::Status::Ok, nan};
    if (level.energy <= domain_lower()) {
      pair.status = TemperatureEigenpair::Status::AtOrBelowGround;
    } else if (level.energy >= domain_upper()) {
      if (options_.branch == NegativeTemperature::Forbid ||
          level.energy == domain_upper()) {
        pair.status = TemperatureEigenpair::Status::AtOrAboveInfiniteMean;
      } else if (level.energy >= spectrum_.top_energy()) {
        pair.status = TemperatureEigenpair::Status::AtOrAboveTop;
      } else {
        pair.temperature = invert(level.energy);
      }
    } else {
      pair.temperature = invert(level.energy);
    }
    pairs.push_back(pair);
  }
  return pairs;
}

}  // namespace tempop
