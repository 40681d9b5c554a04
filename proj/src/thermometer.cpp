#include "tempop/thermometer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tempop/hermite.hpp"
#include "tempop/quadrature.hpp"
#include "tempop/rng.hpp"
#include "tempop/special_functions.hpp"
#include "tempop/stable_math.hpp"

namespace tempop {

namespace {

// theta^2 csch^2(theta): the dimensionless part of dY/dT. Bounded by 1,
// monotone decreasing, and explicitly zeroed in the far tail where the
// naive product would round through inf * 0.
double theta_sq_csch_sq(double theta) {
  if (theta > 400.0) return 0.0;
  return theta * theta * csch_squared(theta);
}

constexpr double kQuadratureAbsTol = 1e-10;

}  // namespace

SystemTemperature::SystemTemperature(double v) : value(v) {
  if (!std::isfinite(v) || !(v > 0.0))
    throw std::domain_error("SystemTemperature: must be positive and finite");
}

OscillatorThermometer::OscillatorThermometer(double omega, double mass, int count,
                                             UnitSystem units)
    : omega_(omega), mass_(mass), count_(count), units_(units) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("OscillatorThermometer: omega must be positive");
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw std::invalid_argument("OscillatorThermometer: mass must be positive");
  if (count < 1)
    throw std::invalid_argument("OscillatorThermometer: count must be >= 1");
}

double OscillatorThermometer::ground_state_variance() const {
  return hbar() / (2.0 * mass_ * omega_);
}

double OscillatorThermometer::theta(SystemTemperature t) const {
  return hbar() * omega_ / (2.0 * boltzmann() * t.value);
}

double OscillatorThermometer::lambda(SystemTemperature t) const {
  return 2.0 * theta(t);
}

double position_variance(const OscillatorThermometer& thermometer,
                         SystemTemperature t_s) {
  return thermometer.ground_state_variance() * coth_positive(thermometer.theta(t_s));
}

double calibrate_temperature(const OscillatorThermometer& thermometer, double y) {
  if (!std::isfinite(y))
    throw std::domain_error("calibrate_temperature: reading must be finite");
  const double threshold = thermometer.ground_state_variance();
  const double excess = (y - threshold) / threshold;
  if (!(excess > 0.0))
    throw std::domain_error(
        "calibrate_temperature: reading at or below the ground-state variance "
        "has no temperature image");
  return thermometer.hbar() * thermometer.omega() /
         (2.0 * thermometer.boltzmann() * arcoth_excess(excess));
}

SingleShotYDensity single_y_density(const OscillatorThermometer& thermometer,
                                    SystemTemperature t_s) {
  return SingleShotYDensity{position_variance(thermometer, t_s)};
}

double SingleShotYDensity::operator()(double y) const {
  if (!(y > 0.0)) return 0.0;
  return std::exp(-y / (2.0 * sigma_sq)) /
         std::sqrt(2.0 * M_PI * y * sigma_sq);
}

double SingleShotYDensity::cdf(double y) const {
  if (!(y > 0.0)) return 0.0;
  return std::erf(std::sqrt(y / (2.0 * sigma_sq)));
}

MeanSquareYDensity many_body_y_density(const OscillatorThermometer& thermometer,
                                       SystemTemperature t_s) {
  const double sigma_sq = position_variance(thermometer, t_s);
  return MeanSquareYDensity{
      sigma_sq, 2.0 * sigma_sq * sigma_sq / thermometer.count(),
      thermometer.count() < MeanSquareYDensity::kCltCountWarning};
}

double MeanSquareYDensity::operator()(double y) const {
  const double z = (y - mean) / std::sqrt(variance);
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI * variance);
}

double MeanSquareYDensity::cdf(double y) const {
  return normal_cdf((y - mean) / std::sqrt(variance));
}

ExactMeanSquareYDensity exact_y_density(const OscillatorThermometer& thermometer,
                                        SystemTemperature t_s) {
  const double sigma_sq = position_variance(thermometer, t_s);
  const double n = thermometer.count();
  return ExactMeanSquareYDensity{0.5 * n, 2.0 * sigma_sq / n};
}

double ExactMeanSquareYDensity::operator()(double y) const {
  if (!(y > 0.0)) return 0.0;
  const double t = y / scale;
  return std::exp((shape - 1.0) * std::log(t) - t - std::lgamma(shape)) / scale;
}

double ExactMeanSquareYDensity::cdf(double y) const {
  if (!(y > 0.0)) return 0.0;
  return regularized_gamma_p(shape, y / scale);
}

double ReadoutDistribution::y_of(double t) const {
  return threshold_ * coth_positive(hbar_omega_over_2kb_ / t);
}

double ReadoutDistribution::y_density(double y) const {
  if (model_ == YModel::CltGaussian) {
    const double z = (y - gauss_mean_) / gauss_sd_;
    return std::exp(-0.5 * z * z) / (gauss_sd_ * std::sqrt(2.0 * M_PI));
  }
  if (!(y > 0.0)) return 0.0;
  const double t = y / gamma_scale_;
  return std::exp((gamma_shape_ - 1.0) * std::log(t) - t - std::lgamma(gamma_shape_)) /
         gamma_scale_;
}

double ReadoutDistribution::y_cdf(double y) const {
  if (model_ == YModel::CltGaussian)
    return normal_cdf((y - gauss_mean_) / gauss_sd_);
  if (!(y > 0.0)) return 0.0;
  return regularized_gamma_p(gamma_shape_, y / gamma_scale_);
}

double ReadoutDistribution::density(double t) const {
  if (!(t > 0.0)) return 0.0;
  const double theta = hbar_omega_over_2kb_ / t;
  const double jacobian = dy_dt_scale_ * theta_sq_csch_sq(theta);
  if (jacobian == 0.0) return 0.0;
  return jacobian * y_density(y_of(t));
}

double ReadoutDistribution::conditioned_cdf(double t) const {
  if (!(t > 0.0)) return 0.0;
  const double raw = (y_cdf(y_of(t)) - deficit_) / (1.0 - deficit_);
  return std::min(1.0, std::max(0.0, raw));
}

ReadoutDistribution temperature_density(const OscillatorThermometer& thermometer,
                                        SystemTemperature t_s, YModel model) {
  ReadoutDistribution dist;
  dist.model_ = model;
  dist.hbar_omega_over_2kb_ =
      thermometer.hbar() * thermometer.omega() / (2.0 * thermometer.boltzmann());
  dist.dy_dt_scale_ = thermometer.boltzmann() /
                      (thermometer.mass() * thermometer.omega() * thermometer.omega());
  dist.threshold_ = thermometer.ground_state_variance();

  const double sigma_sq = position_variance(thermometer, t_s);
  const double n = thermometer.count();
  dist.gauss_mean_ = sigma_sq;
  dist.gauss_sd_ = sigma_sq * std::sqrt(2.0 / n);
  dist.gamma_shape_ = 0.5 * n;
  dist.gamma_scale_ = 2.0 * sigma_sq / n;

  double y_upper;
  double y_sd;
  if (model == YModel::CltGaussian) {
    dist.deficit_ = normal_cdf((dist.threshold_ - dist.gauss_mean_) / dist.gauss_sd_);
    y_sd = dist.gauss_sd_;
    y_upper = dist.gauss_mean_ + 9.0 * dist.gauss_sd_;  // tail mass ~1e-19
  } else {
    dist.deficit_ = regularized_gamma_p(dist.gamma_shape_,
                                        dist.threshold_ / dist.gamma_scale_);
    y_sd = std::sqrt(dist.gamma_shape_) * dist.gamma_scale_;
    y_upper = dist.gamma_scale_ *
              gamma_upper_tail_abscissa(dist.gamma_shape_, 1e-14);
  }
  dist.t_upper_ = calibrate_temperature(thermometer, y_upper);

  // Piecewise integration anchored on the bulk of the Y distribution, so a
  // peak that is narrow relative to (0, t_upper] cannot slip between the
  // nodes of the first Kronrod pass.
  std::vector<double> cuts{0.0};
  const double y_lower = sigma_sq - 12.0 * y_sd;  // below: mass < ~1e-14
  if (y_lower > dist.threshold_)
    cuts.push_back(calibrate_temperature(thermometer, y_lower));
  if (sigma_sq > dist.threshold_ * (1.0 + 1e-9))
    cuts.push_back(calibrate_temperature(thermometer, sigma_sq));
  cuts.push_back(dist.t_upper_);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return b <= a * (1.0 + 1e-12); }),
             cuts.end());

  const auto piecewise = [&cuts](const std::function<double(double)>& f,
                                 double abs_tol) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      total += integrate(f, cuts[i], cuts[i + 1], abs_tol).value;
    return total;
  };
  const double t_hi = dist.t_upper_;
  dist.integral_ =
      piecewise([&](double t) { return dist.density(t); }, kQuadratureAbsTol);
  const double first = piecewise([&](double t) { return t * dist.density(t); },
                                 kQuadratureAbsTol * std::max(1.0, t_hi));
  const double second =
      piecewise([&](double t) { return t * t * dist.density(t); },
                kQuadratureAbsTol * std::max(1.0, t_hi * t_hi));

  const double valid_mass = 1.0 - dist.deficit_;
  if (!(valid_mass > 0.0))
    throw std::runtime_error(
        "temperature_density: no probability mass above the calibration threshold");
  dist.expectation_ = first / valid_mass;
  const double raw_variance = second / valid_mass - dist.expectation_ * dist.expectation_;
  dist.uncertainty_ = std::sqrt(std::max(0.0, raw_variance));
  return dist;
}

SampleReadouts sample_readouts(const OscillatorThermometer& thermometer,
                               SystemTemperature t_s, std::size_t shots,
                               std::uint64_t seed) {
  if (shots < 1)
    throw std::invalid_argument("sample_readouts: at least one shot is required");
  const double sigma = std::sqrt(position_variance(thermometer, t_s));
  const double threshold = thermometer.ground_state_variance();
  const int n = thermometer.count();

  SampleReadouts result;
  result.shots.reserve(shots);
  NormalSampler sampler(seed);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t shot = 0; shot < shots; ++shot) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = sigma * sampler.standard_normal();
      acc += x * x;
    }
    const double y = acc / n;
    if (y > threshold) {
      result.shots.push_back({y, calibrate_temperature(thermometer, y), true});
    } else {
      result.shots.push_back({y, nan, false});
      ++result.sub_threshold_count;
    }
  }

  const std::size_t valid = result.valid_count();
  if (valid > 0) {
    double sum = 0.0;
    for (const auto& s : result.shots)
      if (s.valid) sum += s.temperature;
    result.mean = sum / valid;
    if (valid > 1) {
      double ss = 0.0;
      for (const auto& s : result.shots)
        if (s.valid) ss += (s.temperature - result.mean) * (s.temperature - result.mean);
      result.stddev = std::sqrt(ss / (valid - 1));
    }
  } else {
    result.mean = std::numeric_limits<double>::quiet_NaN();
    result.stddev = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

PositionDensity thermal_position_density(const OscillatorThermometer& thermometer,
                                         SystemTemperature t_s) {
  // xi^2 = (hbar / m omega) coth(lambda/2) = 2 <x^2>
  return PositionDensity{2.0 * position_variance(thermometer, t_s)};
}

double PositionDensity::operator()(double x) const {
  return std::exp(-x * x / xi_sq) / std::sqrt(M_PI * xi_sq);
}

double eigenfunction_sum_oracle(const OscillatorThermometer& thermometer,
                                SystemTemperature t_s, double x, int truncation) {
  if (truncation < 0)
    throw std::invalid_argument("eigenfunction_sum_oracle: negative truncation");
  const double lambda = thermometer.lambda(t_s);
  if (!(std::exp(-lambda * truncation) < 1e-14))
    throw std::invalid_argument(
        "eigenfunction_sum_oracle: truncation too small for the exp(-lambda n) "
        "tail bound");
  const double scale =
      std::sqrt(thermometer.mass() * thermometer.omega() / thermometer.hbar());
  const double u = scale * x;

  const double boltzmann_step = std::exp(-lambda);
  double weight = 1.0;
  double h_prev = hermite_function(0, u);
  double sum = weight * h_prev * h_prev;
  if (truncation >= 1) {
    double h_curr = std::sqrt(2.0) * u * h_prev;
    weight *= boltzmann_step;
    sum += weight * h_curr * h_curr;
    for (int k = 2; k <= truncation; ++k) {
      const double h_next =
          u * std::sqrt(2.0 / k) * h_curr - std::sqrt((k - 1.0) / k) * h_prev;
      h_prev = h_curr;
      h_curr = h_next;
      weight *= boltzmann_step;
      sum += weight * h_curr * h_curr;
    }
  }
  return scale * (-std::expm1(-lambda)) * sum;
}

}  // namespace tempop
