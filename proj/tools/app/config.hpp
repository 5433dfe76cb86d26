#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wgm/modes.hpp"

namespace wgm::app {

enum class Command { Modes, Qext, CouplingSpectrum, CouplingVsDistance, Suppressed, Dynamics };
enum class LengthUnit { Micron, Wavelength };
enum class OutputFormat { Csv, Json };

std::string to_string(Command c);
std::string to_string(LengthUnit u);
std::string to_string(OutputFormat f);

/// One mode request. Exactly one of: l, omega_hint, (omega_lo, omega_hi).
struct ModeSpec {
  Polarization polarization = Polarization::TM;
  int n = 1;
  std::optional<int> l;
  std::optional<double> omega_hint;
  std::optional<double> omega_lo;
  std::optional<double> omega_hi;

  bool operator==(const ModeSpec&) const = default;
};

/// Absolute (omega_lo, omega_hi) or detuning from the reference mode.
struct BandSpec {
  std::optional<double> omega_lo;
  std::optional<double> omega_hi;
  std::optional<double> detuning_lo;
  std::optional<double> detuning_hi;
  int points = 0;

  bool operator==(const BandSpec&) const = default;
};

struct GeometrySpec {
  double d1 = 0.0;
  double d2 = 0.0;
  LengthUnit unit = LengthUnit::Wavelength;
  bool same_side = false;

  bool operator==(const GeometrySpec&) const = default;
};

/// d2 scan for coupling-vs-distance; d1 comes from the geometry.
struct DistanceSpec {
  double d2_lo = 0.0;
  double d2_hi = 0.0;
  int points = 0;
  LengthUnit unit = LengthUnit::Wavelength;

  bool operator==(const DistanceSpec&) const = default;
};

struct DynamicsSpec {
  double t_end = 0.0;  // units of 1/gamma_0
  std::optional<double> dt;
  int sample_every = 1;

  bool operator==(const DynamicsSpec&) const = default;
};

struct RunConfig {
  Command command = Command::Modes;
  SphereSystem sphere;
  std::vector<ModeSpec> modes;    // modes command
  std::optional<ModeSpec> mode;   // reference resonance for the other commands
  std::optional<double> omega0;   // explicit dipole frequency
  std::optional<BandSpec> band;
  std::optional<GeometrySpec> geometry;
  std::optional<DistanceSpec> distance;
  std::optional<DynamicsSpec> dynamics;
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::Csv;
  int threads = 1;

  bool operator==(const RunConfig&) const = default;
};

/// Throws ConfigError for schema problems (unknown keys, wrong types,
/// missing fields) and DomainError for physically invalid values.
RunConfig parse_config(const std::string& text);
std::string serialize_config(const RunConfig& cfg);

}  // namespace wgm::app
