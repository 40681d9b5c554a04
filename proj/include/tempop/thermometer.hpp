#pragma once

#include <cstdint>
#include <vector>

#include "tempop/constants.hpp"

namespace tempop {

// temperature of the measured system; strictly positive and finite
struct SystemTemperature {
  explicit SystemTemperature(double value);
  double value;
};

// The indicator: N identical one-dimensional oscillators whose mean squared
// position Y = (1/N) sum x_i^2 is read out and mapped back to a temperature.
// The ground-state variance hbar/(2 m omega) is the calibration threshold:
// readings at or below it correspond to no positive temperature.
class OscillatorThermometer {
 public:
  OscillatorThermometer(double omega, double mass, int count, UnitSystem units);

  double omega() const { return omega_; }
  double mass() const { return mass_; }
  int count() const { return count_; }
  UnitSystem unit_system() const { return units_; }

  double hbar() const { return hbar_for(units_); }
  double boltzmann() const { return boltzmann_for(units_); }

  double ground_state_variance() const;               // hbar / (2 m omega)
  double theta(SystemTemperature t) const;             // hbar omega / (2 k_B T)
  double lambda(SystemTemperature t) const;            // hbar omega / (k_B T)

 private:
  double omega_;
  double mass_;
  int count_;
  UnitSystem units_;
};

// <x^2> = (hbar / 2 m omega) coth(hbar omega / 2 k_B T_S), via the stable
// coth form; reduces to the ground-state width as T_S -> 0 and to the
// classical equipartition k_B T_S / (m omega^2) for small theta.
double position_variance(const OscillatorThermometer& thermometer,
                         SystemTemperature t_s);

// Inverse of position_variance: T = (hbar omega / 2 k_B) / arcoth(y / y_0).
// Throws std::domain_error for readings y <= y_0 (outside the calibration
// domain).
double calibrate_temperature(const OscillatorThermometer& thermometer, double y);

// distribution of y = x^2 for a single thermalized oscillator:
// P(y) = exp(-y / 2 sigma^2) / (sigma sqrt(2 pi y)), <y> = sigma^2,
// Var(y) = 2 sigma^4
struct SingleShotYDensity {
  double sigma_sq;
  double operator()(double y) const;
  double cdf(double y) const;
  double mean() const { return sigma_sq; }
  double variance() const { return 2.0 * sigma_sq * sigma_sq; }
};
SingleShotYDensity single_y_density(const OscillatorThermometer& thermometer,
                                    SystemTemperature t_s);

// central-limit Gaussian for the mean of N squared positions: mean sigma^2,
// variance 2 sigma^4 / N. Number of oscillators below which the Gaussian
// form is dubious; callers may surface `below_clt_count` as a warning.
struct MeanSquareYDensity {
  static constexpr int kCltCountWarning = 30;
  double mean;
  double variance;
  bool below_clt_count;
  double operator()(double y) const;
  double cdf(double y) const;
};
MeanSquareYDensity many_body_y_density(const OscillatorThermometer& thermometer,
                                       SystemTemperature t_s);

// exact law of the same mean: Gamma(shape N/2, scale 2 sigma^2 / N), the
// distribution of a scaled chi-square with N degrees of freedom. Correct
// support y > 0, unlike the Gaussian.
struct ExactMeanSquareYDensity {
  double shape;
  double scale;
  double operator()(double y) const;
  double cdf(double y) const;
  double mean() const { return shape * scale; }
  double variance() const { return shape * scale * scale; }
};
ExactMeanSquareYDensity exact_y_density(const OscillatorThermometer& thermometer,
                                        SystemTemperature t_s);

enum class YModel { CltGaussian, ExactGamma };

// Readout law over temperature: P(T) = (dY/dT) P_Y(Y(T)) with
// dY/dT = (k_B / m omega^2) theta^2 csch^2(theta). The Y-model mass at
// Y <= threshold has no temperature image; it is reported as
// normalization_deficit and the moments are conditioned on the valid domain.
class ReadoutDistribution {
 public:
  double density(double t) const;           // unconditioned, 0 for t <= 0
  double conditioned_cdf(double t) const;   // given Y > threshold
  double normalization_deficit() const { return deficit_; }
  double expectation() const { return expectation_; }
  double uncertainty() const { return uncertainty_; }
  // integral of the unconditioned density over (0, upper_truncation]
  double normalization_integral() const { return integral_; }
  double upper_truncation() const { return t_upper_; }
  YModel model() const { return model_; }

 private:
  friend ReadoutDistribution temperature_density(const OscillatorThermometer&,
                                                 SystemTemperature, YModel);
  ReadoutDistribution() = default;

  YModel model_ = YModel::CltGaussian;
  double hbar_omega_over_2kb_ = 0.0;  // theta(T) = this / T
  double dy_dt_scale_ = 0.0;          // k_B / (m omega^2)
  double threshold_ = 0.0;
  double gauss_mean_ = 0.0;
  double gauss_sd_ = 0.0;
  double gamma_shape_ = 0.0;
  double gamma_scale_ = 0.0;
  double deficit_ = 0.0;
  double integral_ = 0.0;
  double expectation_ = 0.0;
  double uncertainty_ = 0.0;
  double t_upper_ = 0.0;

  double y_of(double t) const;
  double y_density(double y) const;
  double y_cdf(double y) const;
};

ReadoutDistribution temperature_density(const OscillatorThermometer& thermometer,
                                        SystemTemperature t_s,
                                        YModel model = YModel::CltGaussian);

// One simulated measurement per shot: N positions drawn from the thermal
// position distribution, averaged as Y, then calibrated. Shots landing at or
// below the threshold are counted, never folded into the moments.
struct ShotRecord {
  double mean_square;   // the Y value
  double temperature;   // NaN when !valid
  bool valid;
};
struct SampleReadouts {
  std::vector<ShotRecord> shots;
  std::size_t sub_threshold_count = 0;
  double mean = 0.0;    // over valid shots
  double stddev = 0.0;  // sample standard deviation over valid shots
  std::size_t valid_count() const { return shots.size() - sub_threshold_count; }
};
SampleReadouts sample_readouts(const OscillatorThermometer& thermometer,
                               SystemTemperature t_s, std::size_t shots,
                               std::uint64_t seed);

// thermal position density rho(x) = exp(-x^2/xi^2) / (xi sqrt(pi)),
// xi^2 = (hbar / m omega) coth(lambda / 2); variance xi^2 / 2 equals the
// position variance above
struct PositionDensity {
  double xi_sq;
  double operator()(double x) const;
  double variance() const { return 0.5 * xi_sq; }
};
PositionDensity thermal_position_density(const OscillatorThermometer& thermometer,
                                         SystemTemperature t_s);

// Independent route to rho(x): Boltzmann-weighted sum of oscillator
// eigenfunction densities (1 - e^-lambda) sum_n e^{-lambda n} |phi_n(x)|^2,
// with phi_n evaluated by the normalized Hermite recurrence. Requires
// exp(-lambda * truncation) < 1e-14 so the dropped tail is negligible.
double eigenfunction_sum_oracle(const OscillatorThermometer& thermometer,
                                SystemTemperature t_s, double x, int truncation);

}  // namespace tempop
