#include "tempop/spectrum.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tempop {

EnergySpectrum::EnergySpectrum(std::vector<EnergyLevel> levels, UnitSystem units)
    : levels_(std::move(levels)), units_(units) {
  if (levels_.empty())
    throw std::invalid_argument("EnergySpectrum: at least one level is required");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (!std::isfinite(levels_[i].energy))
      throw std::invalid_argument("EnergySpectrum: level energies must be finite");
    if (levels_[i].degeneracy == 0)
      throw std::invalid_argument("EnergySpectrum: degeneracies must be >= 1");
    if (i > 0 && !(levels_[i - 1].energy < levels_[i].energy))
      throw std::invalid_argument("EnergySpectrum: energies must be strictly increasing");
  }
}

double EnergySpectrum::total_state_count() const {
  double total = 0.0;
  for (const auto& level : levels_) total += static_cast<double>(level.degeneracy);
  return total;
}

double EnergySpectrum::infinite_temperature_mean() const {
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& level : levels_) {
    weighted += static_cast<double>(level.degeneracy) * level.energy;
    total += static_cast<double>(level.degeneracy);
  }
  return weighted / total;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SpectrumFormatError("spectrum: " + where + ": " + what);
}

}  // namespace

EnergySpectrum EnergySpectrum::parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.what() carries "... at byte N" so the caller sees the position
    throw SpectrumFormatError(std::string("spectrum: ") + e.what());
  }

  if (!doc.is_object()) fail("document", "top level must be an object");
  if (!doc.contains("unit_system")) fail("unit_system", "missing key");
  if (!doc["unit_system"].is_string())
    fail("unit_system", "must be \"dimensionless\" or \"si\"");
  const std::string units_text = doc["unit_system"].get<std::string>();
  UnitSystem units;
  if (units_text == "dimensionless") {
    units = UnitSystem::Dimensionless;
  } else if (units_text == "si") {
    units = UnitSystem::Si;
  } else {
    fail("unit_system", "unknown value \"" + units_text + "\"");
  }

  if (!doc.contains("levels")) fail("levels", "missing key");
  if (!doc["levels"].is_array() || doc["levels"].empty())
    fail("levels", "must be a non-empty array");

  std::vector<EnergyLevel> levels;
  levels.reserve(doc["levels"].size());
  for (std::size_t i = 0; i < doc["levels"].size(); ++i) {
    const auto& item = doc["levels"][i];
    const std::string where = "levels[" + std::to_string(i) + "]";
    if (!item.is_object()) fail(where, "must be an object");
    if (!item.contains("energy") || !item["energy"].is_number())
      fail(where + ".energy", "missing or non-numeric");
    if (!item.contains("degeneracy") || !item["degeneracy"].is_number_integer())
      fail(where + ".degeneracy", "missing or non-integer");
    const double energy = item["energy"].get<double>();
    const auto degeneracy = item["degeneracy"].get<std::int64_t>();
    if (!std::isfinite(energy)) fail(where + ".energy", "must be finite");
    if (degeneracy < 1) fail(where + ".degeneracy", "must be >= 1");
    if (!levels.empty() && !(levels.back().energy < energy)) {
      std::ostringstream msg;
      msg << "energy " << energy << " does not increase over previous "
          << levels.back().energy;
      fail(where + ".energy", msg.str());
    }
    levels.push_back({energy, static_cast<std::uint64_t>(degeneracy)});
  }
  return EnergySpectrum(std::move(levels), units);
}

EnergySpectrum EnergySpectrum::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpectrumFormatError("spectrum: cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

}  // namespace tempop
