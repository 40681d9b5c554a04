#include <doctest.h>

#include <cmath>

#include "tempop/spin_epr.hpp"
#include "tempop/temperature_map.hpp"

using tempop::ExtendedTemperature;
using tempop::Rational;
using tempop::SpinEnsemble;
using tempop::WeightConvention;

TEST_CASE("microcanonical temperature: values, markers and errors") {
  using tempop::microcanonical_temperature;
  const auto warm = microcanonical_temperature(4, 1, 1.0);
  CHECK(warm.value() == doctest::Approx(0.9102392266268374).epsilon(1e-15));

  CHECK(microcanonical_temperature(4, 2, 1.0) ==
        ExtendedTemperature::plus_infinity());

  const auto inverted = microcanonical_temperature(4, 3, 1.0);
  CHECK(inverted.value() == doctest::Approx(-0.9102392266268374).epsilon(1e-15));

  CHECK_THROWS_AS(microcanonical_temperature(4, 0, 1.0), std::domain_error);
  CHECK_THROWS_AS(microcanonical_temperature(4, 4, 1.0), std::domain_error);
  CHECK_THROWS_AS(microcanonical_temperature(4, -1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(microcanonical_temperature(4, 1, 0.0), std::invalid_argument);

  // the alpha scale is linear
  CHECK(microcanonical_temperature(4, 1, 2.5).value() ==
        doctest::Approx(2.5 * 0.9102392266268374));

  // marker variant turns the undefined boundaries into markers
  CHECK(tempop::microcanonical_temperature_or_marker(4, 0, 1.0) ==
        ExtendedTemperature::undefined());
  CHECK(tempop::microcanonical_temperature_or_marker(4, 4, 1.0) ==
        ExtendedTemperature::undefined());
}

TEST_CASE("extended temperatures order around the markers") {
  const auto finite = ExtendedTemperature::finite(1.0);
  CHECK(ExtendedTemperature::minus_infinity() < finite);
  CHECK(finite < ExtendedTemperature::plus_infinity());
  CHECK(ExtendedTemperature::finite(-2.0) < finite);
  CHECK((ExtendedTemperature::undefined() <=> finite) ==
        std::partial_ordering::unordered);
  CHECK(ExtendedTemperature::plus_infinity().to_string() == "inf");
  CHECK(ExtendedTemperature::undefined().to_string() == "undef");
}

TEST_CASE("temperature shifts: direct values, signs and asymptotics") {
  const auto shifts = tempop::temperature_shifts(100, 10, 1.0);
  CHECK(shifts.exact_ground ==
        doctest::Approx(0.002326198063954466).epsilon(1e-12));
  CHECK(shifts.asymptotic_ground ==
        doctest::Approx(0.003772233940232279).epsilon(1e-12));
  CHECK(shifts.exact_ground > 0.0);
  CHECK(shifts.exact_excited < 0.0);
  CHECK(shifts.asymptotic_excited < 0.0);

  // removing a ground-state spin heats the rest; removing an excited one cools
  for (int two_n : {12, 40, 200}) {
    for (int m = 2; m < two_n / 2; m += 3) {
      const auto s = tempop::temperature_shifts(two_n, m, 1.0);
      CHECK(s.exact_ground > 0.0);
      CHECK(s.exact_excited < 0.0);
    }
  }

  CHECK_THROWS_AS(tempop::temperature_shifts(100, 1, 1.0), std::domain_error);
  CHECK_THROWS_AS(tempop::temperature_shifts(100, 50, 1.0), std::domain_error);
}

TEST_CASE("asymptotic shift quality along the 2N/M = 10 sequence") {
  // At fixed ratio r = 2N/M the exact shifts converge to
  //   dT0 -> alpha / (M (r-1) ln^2(r-1)),  dT1 -> -alpha / (M ln^2(r-1)),
  // so the excited-branch approximation error shrinks toward the small
  // ln^2(r-1)/ln^2(r) mismatch while the ground-branch error settles at the
  // constant 2(r-1) ln^2(r-1) / (r ln^2 r) - 1 (~0.639 at r = 10): that
  // formula has an extra factor ~2 relative to the exact derivative.
  const double r = 10.0;
  const double log_r = std::log(r);
  const double log_rm1 = std::log(r - 1.0);
  const double ground_error_limit =
      2.0 * (r - 1.0) * log_rm1 * log_rm1 / (r * log_r * log_r) - 1.0;
  CHECK(ground_error_limit == doctest::Approx(0.639).epsilon(0.001));

  double previous_excited = std::numeric_limits<double>::infinity();
  double previous_ground_gap = std::numeric_limits<double>::infinity();
  for (int scale : {100, 1000, 10000}) {
    const auto s = tempop::temperature_shifts(scale, scale / 10, 1.0);
    const double ground_error =
        std::abs(s.asymptotic_ground - s.exact_ground) / s.exact_ground;
    const double excited_error =
        std::abs(s.asymptotic_excited - s.exact_excited) / -s.exact_excited;
    // excited branch: error decreases monotonically toward its limit
    CHECK(excited_error < previous_excited);
    previous_excited = excited_error;
    // ground branch: converges to the constant offset, not to zero
    const double gap = std::abs(ground_error - ground_error_limit);
    CHECK(gap < previous_ground_gap);
    previous_ground_gap = gap;
  }
  CHECK(previous_excited < 0.11);
}

TEST_CASE("pre-measurement distribution: hand-enumerated cases") {
  const SpinEnsemble four_one(4, 1, 1.0);
  const auto dist = tempop::pre_measurement_distribution(four_one, 2);
  REQUIRE(dist.entries.size() == 2);
  CHECK(dist.entries[0].m == 0);
  CHECK(dist.entries[0].probability == Rational(1, 2));
  CHECK(dist.entries[1].probability == Rational(1, 2));
  // m = 1 in a 2-spin box is the balanced population
  CHECK(dist.entries[1].temperature == ExtendedTemperature::plus_infinity());
  CHECK(dist.entries[0].temperature == ExtendedTemperature::undefined());

  const SpinEnsemble four_two(4, 2, 1.0);
  const auto dist2 = tempop::pre_measurement_distribution(four_two, 2);
  REQUIRE(dist2.entries.size() == 3);
  CHECK(dist2.entries[0].probability == Rational(1, 6));
  CHECK(dist2.entries[1].probability == Rational(4, 6));
  CHECK(dist2.entries[2].probability == Rational(1, 6));

  const SpinEnsemble empty(6, 0, 1.0);
  const auto dist3 = tempop::pre_measurement_distribution(empty, 3);
  REQUIRE(dist3.entries.size() == 1);
  CHECK(dist3.entries[0].m == 0);
  CHECK(dist3.entries[0].probability == Rational(1, 1));

  CHECK_THROWS_AS(tempop::pre_measurement_distribution(four_one, 1),
                  std::invalid_argument);
}

TEST_CASE("branch weights come from microstate counting") {
  const SpinEnsemble four_one(4, 1, 1.0);
  const auto weights = tempop::branch_weights(four_one);
  CHECK(weights.p_ground == Rational(3, 4));
  CHECK(weights.p_excited == Rational(1, 4));

  CHECK(tempop::branch_weights(SpinEnsemble(6, 0, 1.0)).p_ground == Rational(1, 1));
  CHECK(tempop::branch_weights(SpinEnsemble(6, 6, 1.0)).p_excited == Rational(1, 1));

  // the literal labels are swapped relative to the counting ones
  const auto literal =
      tempop::branch_weights(four_one, WeightConvention::PaperLiteral);
  CHECK(literal.p_ground == Rational(1, 4));
  CHECK(literal.p_excited == Rational(3, 4));
  CHECK_THROWS_AS(
      tempop::branch_weights(SpinEnsemble(6, 0, 1.0), WeightConvention::PaperLiteral),
      std::domain_error);
}

TEST_CASE("post-measurement distribution equals the pre-measurement one") {
  const SpinEnsemble four_one(4, 1, 1.0);
  const auto post = tempop::post_measurement_distribution(four_one);
  REQUIRE(post.entries.size() == 2);
  CHECK(post.entries[0].probability == Rational(1, 2));
  CHECK(post.entries[1].probability == Rational(1, 2));

  const SpinEnsemble four_two(4, 2, 1.0);
  const auto pre = tempop::pre_measurement_distribution(four_two, 2);
  const auto post2 = tempop::post_measurement_distribution(four_two);
  for (std::size_t i = 0; i < pre.entries.size(); ++i)
    CHECK(pre.entries[i].probability == post2.entries[i].probability);

  const auto empty = tempop::post_measurement_distribution(SpinEnsemble(6, 0, 1.0));
  REQUIRE(empty.entries.size() == 1);
  CHECK(empty.entries[0].probability == Rational(1, 1));

  const auto full = tempop::post_measurement_distribution(SpinEnsemble(6, 6, 1.0));
  REQUIRE(full.entries.size() == 1);
  CHECK(full.entries[0].m == 3);
  CHECK(full.entries[0].probability == Rational(1, 1));
}

TEST_CASE("literal weights break the identity exactly as computed by hand") {
  const SpinEnsemble four_one(4, 1, 1.0);
  const auto literal_post = tempop::post_measurement_distribution(
      four_one, WeightConvention::PaperLiteral);
  CHECK(literal_post.probability_of(0) == Rational(5, 6));
  CHECK(literal_post.probability_of(1) == Rational(1, 6));

  const auto report =
      tempop::no_signaling_report(four_one, WeightConvention::PaperLiteral);
  CHECK_FALSE(report.equal);
  CHECK(report.max_deviation == Rational(1, 3));  // |5/6 - 1/2|
}

TEST_CASE("every distribution sums to exactly one") {
  for (int two_n = 2; two_n <= 16; two_n += 2) {
    for (int m = 0; m <= two_n; ++m) {
      const SpinEnsemble system(two_n, m, 1.0);
      CHECK(tempop::pre_measurement_distribution(system, system.half())
                .total_probability() == Rational(1, 1));
      CHECK(tempop::post_measurement_distribution(system).total_probability() ==
            Rational(1, 1));
    }
  }
}

TEST_CASE("brute-force enumeration reproduces the closed forms exactly") {
  for (int two_n = 2; two_n <= 12; two_n += 2) {
    for (int m = 0; m <= two_n; ++m) {
      const SpinEnsemble system(two_n, m, 1.0);
      const auto [pre_brute, post_brute] = tempop::brute_force_distributions(system);
      const auto pre = tempop::pre_measurement_distribution(system, system.half());
      const auto post = tempop::post_measurement_distribution(system);
      REQUIRE(pre_brute.entries.size() == pre.entries.size());
      for (std::size_t i = 0; i < pre.entries.size(); ++i) {
        CHECK(pre_brute.entries[i].probability == pre.entries[i].probability);
        CHECK(post_brute.entries[i].probability == post.entries[i].probability);
      }
    }
  }
}

TEST_CASE("brute force: single-microstate edge and the enumeration guard") {
  const auto [pre, post] =
      tempop::brute_force_distributions(SpinEnsemble(12, 12, 1.0));
  REQUIRE(pre.entries.size() == 1);
  CHECK(pre.entries[0].m == 6);
  CHECK(pre.entries[0].probability == Rational(1, 1));
  CHECK(post.entries[0].probability == Rational(1, 1));

  // C(60, 30) ~ 1.18e17 blows the 1e7 guard
  CHECK_THROWS_AS(tempop::brute_force_distributions(SpinEnsemble(60, 30, 1.0)),
                  std::length_error);
}

TEST_CASE("no-signaling holds exactly for all 2N <= 20") {
  for (int two_n = 2; two_n <= 20; two_n += 2) {
    for (int m = 0; m <= two_n; ++m) {
      const auto report = tempop::no_signaling_report(SpinEnsemble(two_n, m, 1.0));
      CHECK(report.equal);
      CHECK(report.max_deviation.is_zero());
    }
  }
}

TEST_CASE("microcanonical and canonical temperatures agree on the composite "
          "spectrum") {
  // the 2N-spin spectrum has mean energy (2M-2N) mu B at the microcanonical
  // temperature of Eq-style counting; inverting the canonical map must land
  // on the same value
  const double alpha = 1.0;
  for (int two_n : {4, 10, 16}) {
    const auto spectrum = tempop::composite_spin_spectrum(two_n, alpha);
    const tempop::TemperatureMap map(spectrum);
    for (int m = 1; m < two_n / 2; ++m) {
      const double energy = (2.0 * m - two_n) * (alpha / 2.0);
      const double canonical = map.invert(energy);
      const double microcanonical =
          tempop::microcanonical_temperature(two_n, m, alpha).value();
      CHECK(std::abs(canonical - microcanonical) / microcanonical < 1e-10);
    }
  }
}

TEST_CASE("eigensystem of the composite spin spectrum tags the spin blocks") {
  const auto spectrum = tempop::composite_spin_spectrum(8, 1.0);
  const tempop::TemperatureMap map(spectrum);
  CHECK(map.domain_upper() == 0.0);  // binomial symmetry buries the mean at 0
  const auto pairs = map.eigensystem();
  REQUIRE(pairs.size() == 9);
  CHECK(pairs[0].status == tempop::TemperatureEigenpair::Status::AtOrBelowGround);
  for (int k = 1; k < 4; ++k) {
    CHECK(pairs[k].status == tempop::TemperatureEigenpair::Status::Ok);
    const double micro = tempop::microcanonical_temperature(8, k, 1.0).value();
    CHECK(pairs[k].temperature == doctest::Approx(micro).epsilon(1e-10));
  }
  // the balanced level sits exactly at the infinite-temperature mean, and
  // every inverted level above it is out of the positive-branch domain
  for (int k = 4; k <= 8; ++k)
    CHECK(pairs[k].status ==
          tempop::TemperatureEigenpair::Status::AtOrAboveInfiniteMean);
}

TEST_CASE("ensemble validation") {
  CHECK_THROWS_AS(SpinEnsemble(3, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SpinEnsemble(0, 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SpinEnsemble(4, 5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SpinEnsemble(4, -1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SpinEnsemble(4, 2, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(tempop::composite_spin_spectrum(66, 1.0), std::invalid_argument);
}
