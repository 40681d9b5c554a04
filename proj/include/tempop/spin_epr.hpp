#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tempop/extended_temperature.hpp"
#include "tempop/rational.hpp"
#include "tempop/spectrum.hpp"

namespace tempop {

// 2N two-level spins with magnetic splitting 2*mu*B, prepared microcanonically
// with M excitations, viewed as two boxes of N spins each.
struct SpinEnsemble {
  SpinEnsemble(int two_n, int excited, double alpha);

  int two_n;     // total spin count, positive and even
  int excited;   // M, 0 <= M <= 2N
  double alpha;  // 2 mu B / k_B, the temperature unit

  int half() const { return two_n / 2; }
};

// Microcanonical temperature alpha / log(total/excited - 1) of an isolated
// block of `total_spins` spins with `excited` excitations. The balanced
// population maps to the +infinity marker; M = 0 and M = total have no
// defined temperature and throw.
ExtendedTemperature microcanonical_temperature(int total_spins, int excited,
                                               double alpha);

// Marker-returning variant used to label outcome distributions, where the
// boundary populations are legitimate entries rather than errors.
ExtendedTemperature microcanonical_temperature_or_marker(int total_spins,
                                                         int excited,
                                                         double alpha);

// Exact and asymptotic single-measurement temperature shifts of the remaining
// 2N-1 spins after the measured spin is seen in the ground (index 0) or the
// excited (index 1) state. Valid for 1 < M < N so all four values are finite.
struct TemperatureShifts {
  double exact_ground;        // T_{M,2N-1} - T_{M,2N}, always > 0
  double exact_excited;       // T_{M-1,2N-1} - T_{M,2N}, always < 0
  double asymptotic_ground;   //  alpha / (N log^2(2N/M))
  double asymptotic_excited;  // -alpha / (M log^2(2N/M))
};
TemperatureShifts temperature_shifts(int two_n, int excited, double alpha);

enum class DistributionLabel { PreMeasurement, PostMeasurement };

struct OutcomeEntry {
  int m;  // excitations in the second box
  ExtendedTemperature temperature;
  Rational probability;
};

// Distribution of the second box's temperature outcome over
// m in [max(0, M-N), min(M, N)], probabilities exact and summing to 1.
struct SubsystemOutcomeDistribution {
  DistributionLabel label;
  std::vector<OutcomeEntry> entries;

  Rational total_probability() const;
  const Rational& probability_of(int m) const;  // throws if m not present
};

// Collapse weights for the measured spin. Microstate counting gives
// p_ground = R0/R = (2N-M)/2N and p_excited = R1/R = M/2N.
struct BranchWeights {
  Rational p_ground;
  Rational p_excited;
};
BranchWeights branch_weights(const SpinEnsemble& system);

// The published form assigns the Boltzmann factors to the opposite branches
// (p_ground = M/2N). Kept available behind this switch as a diagnostic; with
// these weights the pre/post identity demonstrably fails.
enum class WeightConvention { Counting, PaperLiteral };
BranchWeights branch_weights(const SpinEnsemble& system, WeightConvention convention);

// P^I_{m,N} = C(N,m) C(N,M-m) / C(2N,M). `n_sub` must equal N: the counting
// behind the closed form assumes the equal split.
SubsystemOutcomeDistribution pre_measurement_distribution(const SpinEnsemble& system,
                                                          int n_sub);

// P^F_{m,N} = p_g C(N,m) C(N-1,M-m) / C(2N-1,M)
//           + p_e C(N,m) C(N-1,M-m-1) / C(2N-1,M-1),
// with out-of-range binomials zero and zero-count branches skipped.
SubsystemOutcomeDistribution post_measurement_distribution(
    const SpinEnsemble& system,
    WeightConvention convention = WeightConvention::Counting);

// Independent oracle: enumerate all C(2N,M) microstates, Born-count the
// second box occupation, then condition on the first spin and re-count.
// No binomial identities anywhere on this path. Guarded at C(2N,M) <= 1e7.
std::pair<SubsystemOutcomeDistribution, SubsystemOutcomeDistribution>
brute_force_distributions(const SpinEnsemble& system);

struct NoSignalingReport {
  bool equal;              // closed-form P^F == P^I entry by entry
  Rational max_deviation;  // largest |P^F - P^I|, exactly 0 when equal
};
NoSignalingReport no_signaling_report(
    const SpinEnsemble& system,
    WeightConvention convention = WeightConvention::Counting);

// Composite spectrum of 2N independent spins: total energy (2k-2N) mu B with
// degeneracy C(2N,k), in dimensionless units with mu B = alpha/2. Links the
// microcanonical formula to the canonical inversion of the temperature map.
EnergySpectrum composite_spin_spectrum(int two_n, double alpha);

}  // namespace tempop
