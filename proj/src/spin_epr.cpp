#include "tempop/spin_epr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tempop {

SpinEnsemble::SpinEnsemble(int two_n_, int excited_, double alpha_)
    : two_n(two_n_), excited(excited_), alpha(alpha_) {
  if (two_n < 2 || two_n % 2 != 0)
    throw std::invalid_argument("SpinEnsemble: total spin count must be positive and even");
  if (excited < 0 || excited > two_n)
    throw std::invalid_argument("SpinEnsemble: excitations must satisfy 0 <= M <= 2N");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("SpinEnsemble: alpha must be positive and finite");
}

ExtendedTemperature microcanonical_temperature(int total_spins, int excited,
                                               double alpha) {
  if (total_spins < 1)
    throw std::invalid_argument("microcanonical_temperature: empty spin block");
  if (excited < 0 || excited > total_spins)
    throw std::invalid_argument("microcanonical_temperature: excitations out of range");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("microcanonical_temperature: alpha must be positive");
  if (excited == 0 || excited == total_spins)
    throw std::domain_error(
        "microcanonical temperature undefined for M = 0 and M = 2N");
  if (2 * excited == total_spins) return ExtendedTemperature::plus_infinity();
  // alpha / log(2N/M - 1), with the argument formed exactly as a ratio of ints
  const double log_arg = static_cast<double>(total_spins - excited) /
                         static_cast<double>(excited);
  return ExtendedTemperature::finite(alpha / std::log(log_arg));
}

ExtendedTemperature microcanonical_temperature_or_marker(int total_spins,
                                                         int excited,
                                                         double alpha) {
  if (excited == 0 || excited == total_spins)
    return ExtendedTemperature::undefined();
  return microcanonical_temperature(total_spins, excited, alpha);
}

TemperatureShifts temperature_shifts(int two_n, int excited, double alpha) {
  if (two_n < 2 || two_n % 2 != 0)
    throw std::invalid_argument("temperature_shifts: total spin count must be even");
  const int n = two_n / 2;
  if (!(excited > 1 && excited < n))
    throw std::domain_error("temperature_shifts: requires 1 < M < N");
  const double t_base = microcanonical_temperature(two_n, excited, alpha).value();
  const double t_ground = microcanonical_temperature(two_n - 1, excited, alpha).value();
  const double t_excited =
      microcanonical_temperature(two_n - 1, excited - 1, alpha).value();
  const double log_ratio = std::log(static_cast<double>(two_n) / excited);
  return TemperatureShifts{
      t_ground - t_base,
      t_excited - t_base,
      alpha / (n * log_ratio * log_ratio),
      -alpha / (excited * log_ratio * log_ratio),
  };
}

Rational SubsystemOutcomeDistribution::total_probability() const {
  Rational total;
  for (const auto& entry : entries) total = Rational::add(total, entry.probability);
  return total;
}

const Rational& SubsystemOutcomeDistribution::probability_of(int m) const {
  for (const auto& entry : entries)
    if (entry.m == m) return entry.probability;
  throw std::out_of_range("SubsystemOutcomeDistribution: no entry for m = " +
                          std::to_string(m));
}

namespace {

int lowest_m(const SpinEnsemble& s) { return std::max(0, s.excited - s.half()); }
int highest_m(const SpinEnsemble& s) { return std::min(s.excited, s.half()); }

std::vector<OutcomeEntry> entry_skeleton(const SpinEnsemble& s) {
  std::vector<OutcomeEntry> entries;
  for (int m = lowest_m(s); m <= highest_m(s); ++m) {
    entries.push_back({m, microcanonical_temperature_or_marker(s.half(), m, s.alpha),
                       Rational{}});
  }
  return entries;
}

}  // namespace

BranchWeights branch_weights(const SpinEnsemble& system) {
  return branch_weights(system, WeightConvention::Counting);
}

BranchWeights branch_weights(const SpinEnsemble& system, WeightConvention convention) {
  const long long m = system.excited;
  const long long total = system.two_n;
  Rational excited_fraction(m, total);          // M / 2N
  Rational ground_fraction(total - m, total);   // (2N - M) / 2N
  if (convention == WeightConvention::Counting)
    return BranchWeights{ground_fraction, excited_fraction};
  if (m == 0 || m == total)
    throw std::domain_error(
        "paper-literal weights are undefined for M = 0 and M = 2N");
  return BranchWeights{excited_fraction, ground_fraction};
}

SubsystemOutcomeDistribution pre_measurement_distribution(const SpinEnsemble& system,
                                                          int n_sub) {
  if (n_sub != system.half())
    throw std::invalid_argument(
        "pre_measurement_distribution: the split must be N|N");
  const unsigned n = static_cast<unsigned>(system.half());
  const int m_total = system.excited;
  const BigNat microstates = BigNat::binomial(static_cast<unsigned>(system.two_n), m_total);

  SubsystemOutcomeDistribution dist{DistributionLabel::PreMeasurement,
                                    entry_skeleton(system)};
  for (auto& entry : dist.entries) {
    BigNat ways = BigNat::mul(BigNat::binomial(n, entry.m),
                              BigNat::binomial(n, m_total - entry.m));
    const int sign = ways.is_zero() ? 0 : 1;
    entry.probability = Rational(sign, std::move(ways), microstates);
  }
  return dist;
}

SubsystemOutcomeDistribution post_measurement_distribution(
    const SpinEnsemble& system, WeightConvention convention) {
  const unsigned n = static_cast<unsigned>(system.half());
  const unsigned rest = static_cast<unsigned>(system.two_n - 1);
  const int m_total = system.excited;
  const BranchWeights weights = branch_weights(system, convention);
  const BigNat r_ground = BigNat::binomial(rest, m_total);
  const BigNat r_excited = BigNat::binomial(rest, m_total - 1);

  SubsystemOutcomeDistribution dist{DistributionLabel::PostMeasurement,
                                    entry_skeleton(system)};
  for (auto& entry : dist.entries) {
    Rational prob;
    if (!weights.p_ground.is_zero() && !r_ground.is_zero()) {
      BigNat ways = BigNat::mul(BigNat::binomial(n, entry.m),
                                BigNat::binomial(n - 1, m_total - entry.m));
      const int sign = ways.is_zero() ? 0 : 1;
      prob = Rational::add(
          prob,
          Rational::mul(weights.p_ground, Rational(sign, std::move(ways), r_ground)));
    }
    if (!weights.p_excited.is_zero() && !r_excited.is_zero()) {
      BigNat ways = BigNat::mul(BigNat::binomial(n, entry.m),
                                BigNat::binomial(n - 1, m_total - entry.m - 1));
      const int sign = ways.is_zero() ? 0 : 1;
      prob = Rational::add(
          prob,
          Rational::mul(weights.p_excited, Rational(sign, std::move(ways), r_excited)));
    }
    entry.probability = prob;
  }
  return dist;
}

std::pair<SubsystemOutcomeDistribution, SubsystemOutcomeDistribution>
brute_force_distributions(const SpinEnsemble& system) {
  const BigNat microstates =
      BigNat::binomial(static_cast<unsigned>(system.two_n), system.excited);
  if (BigNat(10000000ull) < microstates)
    throw std::length_error(
        "brute_force_distributions: C(2N, M) exceeds the 1e7 enumeration guard");

  const int total = system.two_n;
  const int m_total = system.excited;
  const int n = system.half();
  const int m_lo = lowest_m(system);
  const int m_hi = highest_m(system);
  const int spread = m_hi - m_lo + 1;

  std::vector<std::uint64_t> count(spread, 0);         // all microstates
  std::vector<std::uint64_t> count_ground(spread, 0);  // spin 1 unexcited
  std::vector<std::uint64_t> count_excited(spread, 0);

  // iterate index combinations of size M out of [0, 2N)
  std::vector<int> position(m_total);
  std::iota(position.begin(), position.end(), 0);
  std::uint64_t visited = 0;
  while (true) {
    int in_second_box = 0;
    bool first_spin_excited = false;
    for (int p : position) {
      if (p >= n) ++in_second_box;
      if (p == 0) first_spin_excited = true;
    }
    ++visited;
    const int slot = in_second_box - m_lo;
    ++count[slot];
    if (first_spin_excited) {
      ++count_excited[slot];
    } else {
      ++count_ground[slot];
    }
    // next combination in lexicographic order
    int i = m_total - 1;
    while (i >= 0 && position[i] == total - m_total + i) --i;
    if (i < 0) break;
    ++position[i];
    for (int j = i + 1; j < m_total; ++j) position[j] = position[j - 1] + 1;
  }

  const std::uint64_t r = visited;
  const std::uint64_t r_ground =
      std::accumulate(count_ground.begin(), count_ground.end(), std::uint64_t{0});
  const std::uint64_t r_excited =
      std::accumulate(count_excited.begin(), count_excited.end(), std::uint64_t{0});

  SubsystemOutcomeDistribution pre{DistributionLabel::PreMeasurement,
                                   entry_skeleton(system)};
  SubsystemOutcomeDistribution post{DistributionLabel::PostMeasurement,
                                    entry_skeleton(system)};
  for (int slot = 0; slot < spread; ++slot) {
    pre.entries[slot].probability = Rational::from_counts(count[slot], r);
    // P^F = (R0/R)(count0/R0) + (R1/R)(count1/R1), exactly as re-counted
    Rational after;
    if (r_ground > 0) {
      after = Rational::add(
          after, Rational::mul(Rational::from_counts(r_ground, r),
                               Rational::from_counts(count_ground[slot], r_ground)));
    }
    if (r_excited > 0) {
      after = Rational::add(
          after, Rational::mul(Rational::from_counts(r_excited, r),
                               Rational::from_counts(count_excited[slot], r_excited)));
    }
    post.entries[slot].probability = after;
  }
  return {std::move(pre), std::move(post)};
}

NoSignalingReport no_signaling_report(const SpinEnsemble& system,
                                      WeightConvention convention) {
  const auto pre = pre_measurement_distribution(system, system.half());
  const auto post = post_measurement_distribution(system, convention);
  NoSignalingReport report{true, Rational{}};
  for (std::size_t i = 0; i < pre.entries.size(); ++i) {
    Rational deviation =
        Rational::sub(post.entries[i].probability, pre.entries[i].probability).abs();
    if (!deviation.is_zero()) {
      report.equal = false;
      if (Rational::compare(report.max_deviation, deviation) < 0)
        report.max_deviation = deviation;
    }
  }
  return report;
}

EnergySpectrum composite_spin_spectrum(int two_n, double alpha) {
  if (two_n < 2 || two_n % 2 != 0)
    throw std::invalid_argument("composite_spin_spectrum: total spin count must be even");
  if (two_n > 64)
    throw std::invalid_argument(
        "composite_spin_spectrum: degeneracy exceeds 64-bit range beyond 2N = 64");
  const double mu_b = alpha / 2.0;  // k_B = 1 in dimensionless units
  std::vector<EnergyLevel> levels;
  levels.reserve(two_n + 1);
  for (int k = 0; k <= two_n; ++k) {
    levels.push_back({(2.0 * k - two_n) * mu_b,
                      BigNat::binomial(static_cast<unsigned>(two_n), k).to_u64()});
  }
  return EnergySpectrum(std::move(levels), UnitSystem::Dimensionless);
}

}  // namespace tempop
