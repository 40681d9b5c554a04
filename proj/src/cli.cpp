#include "tempop/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tempop/constants.hpp"
#include "tempop/spectrum.hpp"
#include "tempop/spin_epr.hpp"
#include "tempop/temperature_map.hpp"
#include "tempop/thermometer.hpp"
#include "tempop/version.hpp"

namespace tempop::cli {

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
  char buffer[40];
  auto result = std::to_chars(buffer, buffer + sizeof buffer, v);
  return std::string(buffer, result.ptr);
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  row += '\n';
  return row;
}

ordered_json extended_to_json(const ExtendedTemperature& t) {
  using Kind = ExtendedTemperature::Kind;
  ordered_json j;
  switch (t.kind()) {
    case Kind::Finite:
      j["kind"] = "finite";
      j["value"] = t.value();
      break;
    case Kind::PlusInfinity:
      j["kind"] = "+inf";
      j["value"] = nullptr;
      break;
    case Kind::MinusInfinity:
      j["kind"] = "-inf";
      j["value"] = nullptr;
      break;
    case Kind::Undefined:
      j["kind"] = "undefined";
      j["value"] = nullptr;
      break;
  }
  return j;
}

std::string dump_envelope(const ordered_json& echo, const ordered_json& results) {
  ordered_json envelope;
  envelope["tool_version"] = kVersion;
  envelope["config_echo"] = echo;
  envelope["constants"] = {
      {"hbar_joule_second", constants::hbar},
      {"boltzmann_joule_per_kelvin", constants::boltzmann},
      {"atomic_mass_unit_kg", constants::atomic_mass_unit},
  };
  envelope["results"] = results;
  return envelope.dump(2) + "\n";
}

UnitSystem parse_units(const std::string& units) {
  if (units == "si") return UnitSystem::Si;
  if (units == "natural") return UnitSystem::Dimensionless;
  throw std::invalid_argument("units must be 'si' or 'natural'");
}

struct TsRange {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;

  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(steps);
    for (int i = 0; i < steps; ++i) {
      out.push_back(steps == 1
                        ? lo
                        : lo + (hi - lo) * static_cast<double>(i) / (steps - 1));
    }
    return out;
  }
};

TsRange parse_ts_range(const std::string& text) {
  TsRange range;
  std::istringstream in(text);
  char sep1 = 0, sep2 = 0;
  if (!(in >> range.lo >> sep1 >> range.hi >> sep2 >> range.steps) || sep1 != ':' ||
      sep2 != ':' || !in.eof())
    throw std::invalid_argument("--ts-range must look like LO:HI:STEPS");
  if (!(range.lo > 0.0) || !(range.hi >= range.lo))
    throw std::invalid_argument("--ts-range requires 0 < LO <= HI");
  if (range.steps < 1) throw std::invalid_argument("--ts-range requires STEPS >= 1");
  return range;
}

// ---------------------------------------------------------------------------
// subcommand configuration; one struct per subcommand, bound to CLI11 flags

struct EprConfig {
  int two_n = 0;
  int excited = 0;
  double alpha = 1.0;
  bool paper_literal = false;
  bool brute_force = false;
};

struct ShiftsConfig {
  int two_n = 0;
  int excited = 0;
  double alpha = 1.0;
};

struct SpectrumConfig {
  std::string spectrum_path;
  double energy = 0.0;
  double tolerance = 1e-12;
  bool allow_negative = false;
};

struct Fig2Config {
  std::vector<double> omegas;
  std::vector<int> counts;
  std::string ts_range;
  double mass_amu = 6.0;
  std::string units = "si";
  bool ordinary_frequency = false;
  bool exact_gamma = false;
};

struct SampleConfig {
  double omega = 0.0;
  int count = 0;
  double t_s = 0.0;
  long long shots = 0;
  std::uint64_t seed = 0;
  double mass_amu = 6.0;
  std::string units = "si";
  bool ordinary_frequency = false;
};

struct AppendixConfig {
  std::vector<double> lambdas{0.5, 1.0, 4.0};
  int truncation = 0;  // 0 = derive from the tail bound
  int grid_points = 101;
  double span = 5.0;
};

OscillatorThermometer build_thermometer(double omega_input, double mass_amu,
                                        int count, UnitSystem units,
                                        bool ordinary_frequency) {
  const double omega =
      ordinary_frequency ? 2.0 * M_PI * omega_input : omega_input;
  const double mass =
      units == UnitSystem::Si ? mass_amu * constants::atomic_mass_unit : 1.0;
  return OscillatorThermometer(omega, mass, count, units);
}

// ---------------------------------------------------------------------------

std::string run_epr(const EprConfig& c, const std::string& format) {
  if (c.paper_literal && c.brute_force)
    throw std::invalid_argument(
        "--paper-literal-weights applies to the closed forms only; drop "
        "--brute-force");
  SpinEnsemble system(c.two_n, c.excited, c.alpha);
  const auto convention = c.paper_literal ? WeightConvention::PaperLiteral
                                          : WeightConvention::Counting;
  const auto dists =
      c.brute_force
          ? brute_force_distributions(system)
          : std::make_pair(pre_measurement_distribution(system, system.half()),
                           post_measurement_distribution(system, convention));
  const auto& pre = dists.first;
  const auto& post = dists.second;

  bool equal = true;
  Rational max_deviation;
  std::vector<Rational> diffs;
  diffs.reserve(pre.entries.size());
  for (std::size_t i = 0; i < pre.entries.size(); ++i) {
    Rational diff =
        Rational::sub(post.entries[i].probability, pre.entries[i].probability);
    if (!diff.is_zero()) {
      equal = false;
      if (Rational::compare(max_deviation, diff.abs()) < 0)
        max_deviation = diff.abs();
    }
    diffs.push_back(std::move(diff));
  }

  if (format == "csv") {
    std::string doc = csv_row({"m", "temperature", "p_pre", "p_pre_float", "p_post",
                               "p_post_float", "diff", "diff_float"});
    for (std::size_t i = 0; i < pre.entries.size(); ++i) {
      const auto& entry = pre.entries[i];
      doc += csv_row({std::to_string(entry.m), entry.temperature.to_string(),
                      entry.probability.to_string(),
                      fmt(entry.probability.to_double()),
                      post.entries[i].probability.to_string(),
                      fmt(post.entries[i].probability.to_double()),
                      diffs[i].to_string(), fmt(diffs[i].to_double())});
    }
    return doc;
  }

  ordered_json echo{{"subcommand", "epr"},
                    {"two_n", c.two_n},
                    {"excited", c.excited},
                    {"alpha", c.alpha},
                    {"paper_literal_weights", c.paper_literal},
                    {"brute_force", c.brute_force},
                    {"format", format}};
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < pre.entries.size(); ++i) {
    entries.push_back(
        {{"m", pre.entries[i].m},
         {"temperature", extended_to_json(pre.entries[i].temperature)},
         {"p_pre", pre.entries[i].probability.to_string()},
         {"p_pre_float", pre.entries[i].probability.to_double()},
         {"p_post", post.entries[i].probability.to_string()},
         {"p_post_float", post.entries[i].probability.to_double()},
         {"diff", diffs[i].to_string()},
         {"diff_float", diffs[i].to_double()}});
  }
  ordered_json results{{"source", c.brute_force ? "enumeration" : "closed_form"},
                       {"weight_convention",
                        c.paper_literal ? "paper_literal" : "counting"},
                       {"entries", entries},
                       {"no_signaling",
                        {{"equal", equal},
                         {"max_deviation", max_deviation.to_string()},
                         {"max_deviation_float", max_deviation.to_double()}}}};
  return dump_envelope(echo, results);
}

std::string run_shifts(const ShiftsConfig& c, const std::string& format) {
  const TemperatureShifts shifts = temperature_shifts(c.two_n, c.excited, c.alpha);
  const double t_base =
      microcanonical_temperature(c.two_n, c.excited, c.alpha).value();
  if (format == "csv") {
    std::string doc = csv_row({"two_n", "excited", "alpha", "t_base",
                               "delta_t0_exact", "delta_t1_exact",
                               "delta_t0_asymptotic", "delta_t1_asymptotic"});
    doc += csv_row({std::to_string(c.two_n), std::to_string(c.excited),
                    fmt(c.alpha), fmt(t_base), fmt(shifts.exact_ground),
                    fmt(shifts.exact_excited), fmt(shifts.asymptotic_ground),
                    fmt(shifts.asymptotic_excited)});
    return doc;
  }
  ordered_json echo{{"subcommand", "shifts"},
                    {"two_n", c.two_n},
                    {"excited", c.excited},
                    {"alpha", c.alpha},
                    {"format", format}};
  ordered_json results{{"t_base", t_base},
                       {"delta_t0_exact", shifts.exact_ground},
                       {"delta_t1_exact", shifts.exact_excited},
                       {"delta_t0_asymptotic", shifts.asymptotic_ground},
                       {"delta_t1_asymptotic", shifts.asymptotic_excited}};
  return dump_envelope(echo, results);
}

TemperatureMap load_map(const SpectrumConfig& c) {
  EnergySpectrum spectrum = EnergySpectrum::load_file(c.spectrum_path);
  TemperatureMap::Options options;
  options.relative_tolerance = c.tolerance;
  options.branch = c.allow_negative ? NegativeTemperature::Allow
                                    : NegativeTemperature::Forbid;
  return TemperatureMap(std::move(spectrum), options);
}

std::string run_calibrate(const SpectrumConfig& c, const std::string& format) {
  const TemperatureMap map = load_map(c);
  const double temperature = map.invert(c.energy);
  if (format == "csv") {
    std::string doc = csv_row({"energy", "temperature"});
    doc += csv_row({fmt(c.energy), fmt(temperature)});
    return doc;
  }
  ordered_json echo{{"subcommand", "calibrate"},
                    {"spectrum", c.spectrum_path},
                    {"energy", c.energy},
                    {"tolerance", c.tolerance},
                    {"allow_negative_temperature", c.allow_negative},
                    {"format", format}};
  ordered_json results{{"energy", c.energy}, {"temperature", temperature}};
  return dump_envelope(echo, results);
}

const char* status_name(TemperatureEigenpair::Status status) {
  using Status = TemperatureEigenpair::Status;
  switch (status) {
    case Status::Ok: return "ok";
    case Status::AtOrBelowGround: return "at_or_below_ground";
    case Status::AtOrAboveInfiniteMean: return "at_or_above_infinite_mean";
    case Status::AtOrAboveTop: return "at_or_above_top";
  }
  return "unknown";
}

std::string run_eigensystem(const SpectrumConfig& c, const std::string& format) {
  const TemperatureMap map = load_map(c);
  const auto pairs = map.eigensystem();
  if (format == "csv") {
    std::string doc = csv_row({"index", "energy", "degeneracy", "status",
                               "temperature"});
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& pair = pairs[i];
      const bool ok = pair.status == TemperatureEigenpair::Status::Ok;
      doc += csv_row({std::to_string(i), fmt(pair.energy),
                      std::to_string(pair.degeneracy), status_name(pair.status),
                      ok ? fmt(pair.temperature) : ""});
    }
    return doc;
  }
  ordered_json echo{{"subcommand", "eigensystem"},
                    {"spectrum", c.spectrum_path},
                    {"tolerance", c.tolerance},
                    {"allow_negative_temperature", c.allow_negative},
                    {"format", format}};
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& pair = pairs[i];
    const bool ok = pair.status == TemperatureEigenpair::Status::Ok;
    ordered_json entry{{"index", i},
                       {"energy", pair.energy},
                       {"degeneracy", pair.degeneracy},
                       {"status", status_name(pair.status)}};
    if (ok) {
      entry["temperature"] = pair.temperature;
    } else {
      entry["temperature"] = nullptr;
    }
    entries.push_back(std::move(entry));
  }
  ordered_json results{{"entries", entries}};
  return dump_envelope(echo, results);
}

std::string run_fig2(const Fig2Config& c, const std::string& format,
                     std::string& diagnostics) {
  const UnitSystem units = parse_units(c.units);
  const TsRange range = parse_ts_range(c.ts_range);
  if (c.omegas.empty()) throw std::invalid_argument("--omega list is empty");
  if (c.counts.empty()) throw std::invalid_argument("--n list is empty");
  const YModel model = c.exact_gamma ? YModel::ExactGamma : YModel::CltGaussian;

  bool warned_small_n = false;
  std::string csv = csv_row({"t_s", "omega", "n", "expectation", "uncertainty",
                             "normalization_deficit"});
  ordered_json rows = ordered_json::array();
  for (double omega_input : c.omegas) {
    for (int count : c.counts) {
      if (count < MeanSquareYDensity::kCltCountWarning && !c.exact_gamma &&
          !warned_small_n) {
        diagnostics += "warning: N < 30; the central-limit readout density is "
                       "a poor approximation at this size\n";
        warned_small_n = true;
      }
      const OscillatorThermometer thermometer = build_thermometer(
          omega_input, c.mass_amu, count, units, c.ordinary_frequency);
      for (double t_s : range.values()) {
        const ReadoutDistribution dist =
            temperature_density(thermometer, SystemTemperature(t_s), model);
        if (format == "csv") {
          csv += csv_row({fmt(t_s), fmt(omega_input), std::to_string(count),
                          fmt(dist.expectation()), fmt(dist.uncertainty()),
                          fmt(dist.normalization_deficit())});
        } else {
          rows.push_back({{"t_s", t_s},
                          {"omega", omega_input},
                          {"n", count},
                          {"expectation", dist.expectation()},
                          {"uncertainty", dist.uncertainty()},
                          {"normalization_deficit", dist.normalization_deficit()}});
        }
      }
    }
  }
  if (format == "csv") return csv;
  ordered_json echo{{"subcommand", "fig2"},
                    {"omega", c.omegas},
                    {"n", c.counts},
                    {"ts_range", c.ts_range},
                    {"mass_amu", c.mass_amu},
                    {"units", c.units},
                    {"ordinary_frequency", c.ordinary_frequency},
                    {"exact_gamma", c.exact_gamma},
                    {"format", format}};
  ordered_json results{{"rows", rows}};
  return dump_envelope(echo, results);
}

std::string run_sample(const SampleConfig& c, const std::string& format) {
  const UnitSystem units = parse_units(c.units);
  if (c.shots < 1) throw std::invalid_argument("--shots must be >= 1");
  const OscillatorThermometer thermometer = build_thermometer(
      c.omega, c.mass_amu, c.count, units, c.ordinary_frequency);
  const SampleReadouts readouts =
      sample_readouts(thermometer, SystemTemperature(c.t_s),
                      static_cast<std::size_t>(c.shots), c.seed);

  if (format == "csv") {
    std::string doc = csv_row({"shot", "y", "temperature", "status"});
    for (std::size_t i = 0; i < readouts.shots.size(); ++i) {
      const auto& shot = readouts.shots[i];
      doc += csv_row({std::to_string(i), fmt(shot.mean_square),
                      shot.valid ? fmt(shot.temperature) : "",
                      shot.valid ? "ok" : "sub_threshold"});
    }
    return doc;
  }
  ordered_json echo{{"subcommand", "sample"},
                    {"omega", c.omega},
                    {"n", c.count},
                    {"ts", c.t_s},
                    {"shots", c.shots},
                    {"seed", c.seed},
                    {"mass_amu", c.mass_amu},
                    {"units", c.units},
                    {"ordinary_frequency", c.ordinary_frequency},
                    {"format", format}};
  ordered_json shot_rows = ordered_json::array();
  for (std::size_t i = 0; i < readouts.shots.size(); ++i) {
    const auto& shot = readouts.shots[i];
    ordered_json row{{"shot", i},
                     {"y", shot.mean_square},
                     {"status", shot.valid ? "ok" : "sub_threshold"}};
    if (shot.valid) {
      row["temperature"] = shot.temperature;
    } else {
      row["temperature"] = nullptr;
    }
    shot_rows.push_back(std::move(row));
  }
  ordered_json results{{"readouts", shot_rows},
                       {"sub_threshold_count", readouts.sub_threshold_count},
                       {"valid_count", readouts.valid_count()},
                       {"mean", readouts.mean},
                       {"stddev", readouts.stddev}};
  return dump_envelope(echo, results);
}

std::string run_appendix_check(const AppendixConfig& c, const std::string& format) {
  if (c.lambdas.empty()) throw std::invalid_argument("--lambda list is empty");
  if (c.grid_points < 2) throw std::invalid_argument("--grid-points must be >= 2");
  if (!(c.span > 0.0)) throw std::invalid_argument("--span must be positive");

  std::string csv = csv_row({"lambda", "truncation", "x", "closed_form",
                             "eigenfunction_sum", "abs_deviation"});
  ordered_json blocks = ordered_json::array();
  for (double lambda : c.lambdas) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    const OscillatorThermometer thermometer(1.0, 1.0, 1, UnitSystem::Dimensionless);
    const SystemTemperature t_s(1.0 / lambda);
    const int truncation =
        c.truncation > 0 ? c.truncation : static_cast<int>(std::ceil(33.0 / lambda));
    const PositionDensity closed = thermal_position_density(thermometer, t_s);
    const double xi = std::sqrt(closed.xi_sq);
    double max_deviation = 0.0;
    ordered_json grid = ordered_json::array();
    for (int i = 0; i < c.grid_points; ++i) {
      const double x = -c.span * xi + 2.0 * c.span * xi * i / (c.grid_points - 1);
      const double reference = closed(x);
      const double summed =
          eigenfunction_sum_oracle(thermometer, t_s, x, truncation);
      const double deviation = std::abs(summed - reference);
      max_deviation = std::max(max_deviation, deviation);
      if (format == "csv") {
        csv += csv_row({fmt(lambda), std::to_string(truncation), fmt(x),
                        fmt(reference), fmt(summed), fmt(deviation)});
      } else {
        grid.push_back({{"x", x},
                        {"closed_form", reference},
                        {"eigenfunction_sum", summed},
                        {"abs_deviation", deviation}});
      }
    }
    if (format != "csv") {
      blocks.push_back({{"lambda", lambda},
                        {"truncation", truncation},
                        {"max_abs_deviation", max_deviation},
                        {"grid", grid}});
    }
  }
  if (format == "csv") return csv;
  ordered_json echo{{"subcommand", "appendix-check"},
                    {"lambda", c.lambdas},
                    {"truncation", c.truncation},
                    {"grid_points", c.grid_points},
                    {"span", c.span},
                    {"format", format}};
  ordered_json results{{"blocks", blocks}};
  return dump_envelope(echo, results);
}

std::string resolve_out_path(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("TEMPOP_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  std::string full(dir);
  if (full.back() != '/') full += '/';
  return full + path;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult result;

  CLI::App app{"tempop: exact statistics for operator-valued temperature "
               "(spin ensembles, discrete-spectrum temperature maps, and the "
               "oscillator position thermometer)"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  const auto add_io = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", out_path,
                    "output file; relative paths honor TEMPOP_OUT_DIR; "
                    "default is standard output");
  };

  EprConfig epr;
  CLI::App* epr_cmd = app.add_subcommand(
      "epr", "pre/post-measurement temperature distributions of the second "
             "box of a 2N-spin ensemble (exact rationals)");
  epr_cmd->add_option("--two-n", epr.two_n, "total spin count 2N (positive, even)")
      ->required();
  epr_cmd->add_option("--excited", epr.excited, "excitations M, 0 <= M <= 2N")
      ->required();
  epr_cmd->add_option("--alpha", epr.alpha,
                      "temperature unit alpha = 2 mu B / k_B (> 0)")
      ->capture_default_str();
  epr_cmd->add_flag("--paper-literal-weights", epr.paper_literal,
                    "use the published branch-weight labels (breaks the "
                    "pre = post identity; diagnostic mode)");
  epr_cmd->add_flag("--brute-force", epr.brute_force,
                    "compute by exhaustive microstate enumeration instead of "
                    "the closed forms (C(2N,M) <= 1e7)");
  add_io(epr_cmd);

  ShiftsConfig shifts;
  CLI::App* shifts_cmd = app.add_subcommand(
      "shifts", "exact and asymptotic post-measurement temperature shifts "
                "(valid for 1 < M < N)");
  shifts_cmd->add_option("--two-n", shifts.two_n, "total spin count 2N")->required();
  shifts_cmd->add_option("--excited", shifts.excited, "excitations M")->required();
  shifts_cmd->add_option("--alpha", shifts.alpha, "temperature unit (> 0)")
      ->capture_default_str();
  add_io(shifts_cmd);

  SpectrumConfig calibrate;
  CLI::App* calibrate_cmd = app.add_subcommand(
      "calibrate", "map a mean energy to the unique matching temperature for "
                   "a discrete spectrum");
  calibrate_cmd
      ->add_option("--spectrum", calibrate.spectrum_path,
                   "spectrum JSON file (energies in the file's unit system)")
      ->required();
  calibrate_cmd
      ->add_option("--energy", calibrate.energy,
                   "mean energy, strictly between the ground level and the "
                   "infinite-temperature mean")
      ->required();
  calibrate_cmd
      ->add_option("--tolerance", calibrate.tolerance,
                   "relative tolerance of the bisection")
      ->capture_default_str();
  calibrate_cmd->add_flag("--allow-negative-temperature", calibrate.allow_negative,
                          "solve on the tau < 0 branch for energies above the "
                          "infinite-temperature mean");
  add_io(calibrate_cmd);

  SpectrumConfig eigensystem = calibrate;
  CLI::App* eigen_cmd = app.add_subcommand(
      "eigensystem", "temperature eigenvalue f(E_n) for every level of a "
                     "discrete spectrum");
  eigen_cmd
      ->add_option("--spectrum", eigensystem.spectrum_path, "spectrum JSON file")
      ->required();
  eigen_cmd
      ->add_option("--tolerance", eigensystem.tolerance,
                   "relative tolerance of the bisection")
      ->capture_default_str();
  eigen_cmd->add_flag("--allow-negative-temperature", eigensystem.allow_negative,
                      "assign tau < 0 to levels above the infinite-temperature "
                      "mean");
  add_io(eigen_cmd);

  Fig2Config fig2;
  CLI::App* fig2_cmd = app.add_subcommand(
      "fig2", "readout expectation, uncertainty and normalization deficit of "
              "the N-oscillator thermometer over a parameter sweep");
  fig2_cmd
      ->add_option("--omega", fig2.omegas,
                   "angular frequencies, comma separated (rad/s in SI; see "
                   "--ordinary-frequency)")
      ->required()
      ->delimiter(',');
  fig2_cmd->add_option("--n", fig2.counts, "oscillator counts, comma separated")
      ->required()
      ->delimiter(',');
  fig2_cmd
      ->add_option("--ts-range", fig2.ts_range,
                   "system temperatures LO:HI:STEPS (K in SI), endpoints "
                   "included")
      ->required();
  fig2_cmd
      ->add_option("--mass-amu", fig2.mass_amu,
                   "oscillator mass in atomic mass units (SI mode)")
      ->capture_default_str();
  fig2_cmd->add_option("--units", fig2.units, "si or natural (hbar=k_B=m=1)")
      ->check(CLI::IsMember({"si", "natural"}))
      ->capture_default_str();
  fig2_cmd->add_flag("--ordinary-frequency", fig2.ordinary_frequency,
                     "interpret --omega as ordinary frequency (Hz); "
                     "multiplies by 2 pi");
  fig2_cmd->add_flag("--exact-gamma", fig2.exact_gamma,
                     "use the exact gamma law of the mean squared position "
                     "instead of the central-limit Gaussian");
  add_io(fig2_cmd);

  SampleConfig sample;
  CLI::App* sample_cmd = app.add_subcommand(
      "sample", "seeded single-shot temperature readouts of the oscillator "
                "thermometer");
  sample_cmd
      ->add_option("--omega", sample.omega,
                   "angular frequency (rad/s in SI; see --ordinary-frequency)")
      ->required();
  sample_cmd->add_option("--n", sample.count, "oscillator count")->required();
  sample_cmd->add_option("--ts", sample.t_s, "system temperature (K in SI)")
      ->required();
  sample_cmd->add_option("--shots", sample.shots, "number of shots (>= 1)")
      ->required();
  sample_cmd->add_option("--seed", sample.seed, "64-bit RNG seed")
      ->capture_default_str();
  sample_cmd
      ->add_option("--mass-amu", sample.mass_amu,
                   "oscillator mass in atomic mass units (SI mode)")
      ->capture_default_str();
  sample_cmd->add_option("--units", sample.units, "si or natural")
      ->check(CLI::IsMember({"si", "natural"}))
      ->capture_default_str();
  sample_cmd->add_flag("--ordinary-frequency", sample.ordinary_frequency,
                       "interpret --omega as ordinary frequency (Hz)");
  add_io(sample_cmd);

  AppendixConfig appendix;
  CLI::App* appendix_cmd = app.add_subcommand(
      "appendix-check", "closed-form thermal position density against the "
                        "Boltzmann-weighted eigenfunction sum (natural units)");
  appendix_cmd
      ->add_option("--lambda", appendix.lambdas,
                   "values of lambda = hbar omega / k_B T, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  appendix_cmd
      ->add_option("--truncation", appendix.truncation,
                   "eigenfunction cutoff; 0 derives it from the "
                   "exp(-lambda n) < 1e-14 tail bound")
      ->capture_default_str();
  appendix_cmd
      ->add_option("--grid-points", appendix.grid_points, "grid size (>= 2)")
      ->capture_default_str();
  appendix_cmd
      ->add_option("--span", appendix.span, "half-width of the grid in units of xi")
      ->capture_default_str();
  add_io(appendix_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("tempop");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.output = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.output = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.diagnostics = std::string("error: ") + e.what() + "\n";
    return result;
  }

  std::string document;
  try {
    if (app.got_subcommand(epr_cmd)) {
      document = run_epr(epr, format);
    } else if (app.got_subcommand(shifts_cmd)) {
      document = run_shifts(shifts, format);
    } else if (app.got_subcommand(calibrate_cmd)) {
      document = run_calibrate(calibrate, format);
    } else if (app.got_subcommand(eigen_cmd)) {
      document = run_eigensystem(eigensystem, format);
    } else if (app.got_subcommand(fig2_cmd)) {
      document = run_fig2(fig2, format, result.diagnostics);
    } else if (app.got_subcommand(sample_cmd)) {
      document = run_sample(sample, format);
    } else if (app.got_subcommand(appendix_cmd)) {
      document = run_appendix_check(appendix, format);
    }
  } catch (const std::logic_error& e) {
    result.exit_code = 2;
    result.diagnostics += std::string("error: ") + e.what() + "\n";
    return result;
  } catch (const std::runtime_error& e) {
    result.exit_code = 3;
    result.diagnostics += std::string("error: ") + e.what() + "\n";
    return result;
  }

  if (out_path.empty()) {
    result.output = std::move(document);
    return result;
  }
  const std::string resolved = resolve_out_path(out_path);
  std::ofstream out(resolved, std::ios::binary | std::ios::trunc);
  if (!out || !(out << document) || !out.flush()) {
    result.exit_code = 2;
    result.diagnostics += "error: cannot write output file: " + resolved + "\n";
    return result;
  }
  result.diagnostics += "wrote " + resolved + " (" +
                        std::to_string(document.size()) + " bytes)\n";
  return result;
}

}  // namespace tempop::cli
