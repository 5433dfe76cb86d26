#include "config.hpp"

#include <cmath>
#include <set>
#include <json.hpp>

#include "wgm/error.hpp"

namespace wgm::app {

using nlohmann::json;

namespace {

// Reads the members of one JSON object and rejects any it did not consume.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_, "expected an object");
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key);
  }

  std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json& at(const std::string& key) {
    if (!has(key)) throw ConfigError(field(key), "missing");
    return j_.at(key);
  }

  double number(const std::string& key) {
    const json& v = at(key);
    if (!v.is_number()) throw ConfigError(field(key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(field(key), "must be finite");
    return d;
  }

  std::optional<double> opt_number(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return number(key);
  }

  int integer(const std::string& key) {
    const json& v = at(key);
    if (!v.is_number_integer()) throw ConfigError(field(key), "expected an integer");
    return v.get<int>();
  }

  std::optional<int> opt_integer(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return integer(key);
  }

  std::string string(const std::string& key) {
    const json& v = at(key);
    if (!v.is_string()) throw ConfigError(field(key), "expected a string");
    return v.get<std::string>();
  }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_boolean()) throw ConfigError(field(key), "expected true or false");
    return v.get<bool>();
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw ConfigError(field(it.key()), "unknown key");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

Command parse_command(const std::string& s) {
  if (s == "modes") return Command::Modes;
  if (s == "qext") return Command::Qext;
  if (s == "coupling-spectrum") return Command::CouplingSpectrum;
  if (s == "coupling-vs-distance") return Command::CouplingVsDistance;
  if (s == "suppressed") return Command::Suppressed;
  if (s == "dynamics") return Command::Dynamics;
  throw ConfigError("command", "unknown command '" + s + "'");
}

LengthUnit parse_unit(const std::string& s, const std::string& field) {
  if (s == "wavelength") return LengthUnit::Wavelength;
  if (s == "um") return LengthUnit::Micron;
  throw ConfigError(field, "expected 'wavelength' or 'um'");
}

OutputFormat parse_format(const std::string& s, const std::string& field) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw ConfigError(field, "expected 'csv' or 'json'");
}

Polarization parse_pol(const std::string& s, const std::string& field) {
  if (s == "TM") return Polarization::TM;
  if (s == "TE") return Polarization::TE;
  throw ConfigError(field, "expected 'TM' or 'TE'");
}

SphereSystem parse_sphere(const json& j) {
  ObjectReader r(j, "sphere");
  SphereSystem s;
  s.radius = r.number("radius");
  const bool has_eps = r.has("eps_sphere");
  const bool has_index = r.has("index");
  if (has_eps == has_index) throw ConfigError("sphere", "give exactly one of eps_sphere, index");
  if (has_eps) {
    s.eps_sphere = r.number("eps_sphere");
  } else {
    const double m = r.number("index");
    if (!(m > 0.0)) throw DomainError("sphere.index: must be positive");
    s.eps_sphere = m * m;
  }
  r.finish();
  if (!(s.radius > 0.0)) throw DomainError("sphere.radius: must be positive");
  if (!(s.eps_sphere >= 1.0)) throw DomainError("sphere.eps_sphere: must be >= 1");
  return s;
}

ModeSpec parse_mode(const json& j, const std::string& path) {
  ObjectReader r(j, path);
  ModeSpec m;
  m.polarization = parse_pol(r.string("polarization"), r.field("polarization"));
  m.n = r.integer("n");
  m.l = r.opt_integer("l");
  m.omega_hint = r.opt_number("omega_hint");
  m.omega_lo = r.opt_number("omega_lo");
  m.omega_hi = r.opt_number("omega_hi");
  r.finish();
  const int kinds = (m.l ? 1 : 0) + (m.omega_hint ? 1 : 0) + ((m.omega_lo || m.omega_hi) ? 1 : 0);
  if (kinds != 1) throw ConfigError(path, "give exactly one of l, omega_hint, omega_lo/omega_hi");
  if (m.omega_lo.has_value() != m.omega_hi.has_value()) throw ConfigError(path, "omega_lo and omega_hi go together");
  if (m.n < 1) throw DomainError(path + ".n: must be >= 1");
  if (m.l && *m.l < 1) throw DomainError(path + ".l: must be >= 1");
  if (m.omega_hint && !(*m.omega_hint > 0.0)) throw DomainError(path + ".omega_hint: must be positive");
  if (m.omega_lo && !(*m.omega_lo > 0.0 && *m.omega_lo < *m.omega_hi)) {
    throw DomainError(path + ".omega_lo: need 0 < omega_lo < omega_hi");
  }
  return m;
}

BandSpec parse_band(const json& j) {
  ObjectReader r(j, "band");
  BandSpec b;
  b.omega_lo = r.opt_number("omega_lo");
  b.omega_hi = r.opt_number("omega_hi");
  b.detuning_lo = r.opt_number("detuning_lo");
  b.detuning_hi = r.opt_number("detuning_hi");
  b.points = r.integer("points");
  r.finish();
  const bool abs_band = b.omega_lo && b.omega_hi;
  const bool rel_band = b.detuning_lo && b.detuning_hi;
  const int given = (b.omega_lo ? 1 : 0) + (b.omega_hi ? 1 : 0) + (b.detuning_lo ? 1 : 0) + (b.detuning_hi ? 1 : 0);
  if (!(given == 2 && (abs_band || rel_band))) {
    throw ConfigError("band", "give omega_lo/omega_hi or detuning_lo/detuning_hi");
  }
  if (b.points < 1) throw ConfigError("band.points", "must be >= 1");
  if (abs_band && !(*b.omega_lo > 0.0 && *b.omega_lo <= *b.omega_hi)) {
    throw DomainError("band.omega_lo: need 0 < omega_lo <= omega_hi");
  }
  if (rel_band && !(*b.detuning_lo <= *b.detuning_hi)) throw DomainError("band.detuning_lo: must be <= detuning_hi");
  if (b.points > 1 && ((abs_band && *b.omega_lo == *b.omega_hi) || (rel_band && *b.detuning_lo == *b.detuning_hi))) {
    throw DomainError("band: empty interval with more than one point");
  }
  return b;
}

GeometrySpec parse_geometry(const json& j) {
  ObjectReader r(j, "geometry");
  GeometrySpec g;
  g.d1 = r.number("d1");
  g.d2 = r.has("d2") ? r.number("d2") : g.d1;
  g.unit = r.has("unit") ? parse_unit(r.string("unit"), "geometry.unit") : LengthUnit::Wavelength;
  g.same_side = r.boolean("same_side", false);
  r.finish();
  if (g.d1 < 0.0) throw DomainError("geometry.d1: must be >= 0");
  if (g.d2 < 0.0) throw DomainError("geometry.d2: must be >= 0");
  return g;
}

DistanceSpec parse_distance(const json& j) {
  ObjectReader r(j, "distance");
  DistanceSpec d;
  d.d2_lo = r.number("d2_lo");
  d.d2_hi = r.number("d2_hi");
  d.points = r.integer("points");
  d.unit = r.has("unit") ? parse_unit(r.string("unit"), "distance.unit") : LengthUnit::Wavelength;
  r.finish();
  if (d.points < 1) throw ConfigError("distance.points", "must be >= 1");
  if (d.d2_lo < 0.0) throw DomainError("distance.d2_lo: must be >= 0");
  if (!(d.d2_hi >= d.d2_lo)) throw DomainError("distance.d2_hi: must be >= d2_lo");
  return d;
}

DynamicsSpec parse_dynamics(const json& j) {
  ObjectReader r(j, "dynamics");
  DynamicsSpec d;
  d.t_end = r.number("t_end");
  d.dt = r.opt_number("dt");
  d.sample_every = r.opt_integer("sample_every").value_or(1);
  r.finish();
  if (!(d.t_end > 0.0)) throw DomainError("dynamics.t_end: must be positive");
  if (d.dt && !(*d.dt > 0.0)) throw DomainError("dynamics.dt: must be positive");
  if (d.sample_every < 1) throw ConfigError("dynamics.sample_every", "must be >= 1");
  return d;
}

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw ConfigError(field, what);
}

json mode_json(const ModeSpec& m) {
  json j{{"polarization", to_string(m.polarization)}, {"n", m.n}};
  if (m.l) j["l"] = *m.l;
  if (m.omega_hint) j["omega_hint"] = *m.omega_hint;
  if (m.omega_lo) j["omega_lo"] = *m.omega_lo;
  if (m.omega_hi) j["omega_hi"] = *m.omega_hi;
  return j;
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::Modes: return "modes";
    case Command::Qext: return "qext";
    case Command::CouplingSpectrum: return "coupling-spectrum";
    case Command::CouplingVsDistance: return "coupling-vs-distance";
    case Command::Suppressed: return "suppressed";
    case Command::Dynamics: return "dynamics";
  }
  return "";
}

std::string to_string(LengthUnit u) { return u == LengthUnit::Wavelength ? "wavelength" : "um"; }
std::string to_string(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
  }
  ObjectReader r(j, "");
  RunConfig c;
  c.command = parse_command(r.string("command"));
  c.sphere = parse_sphere(r.at("sphere"));
  if (r.has("modes")) {
    const json& arr = j.at("modes");
    if (!arr.is_array()) throw ConfigError("modes", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) c.modes.push_back(parse_mode(arr[i], "modes[" + std::to_string(i) + "]"));
  }
  if (r.has("mode")) c.mode = parse_mode(j.at("mode"), "mode");
  c.omega0 = r.opt_number("omega0");
  if (r.has("band")) c.band = parse_band(j.at("band"));
  if (r.has("geometry")) c.geometry = parse_geometry(j.at("geometry"));
  if (r.has("distance")) c.distance = parse_distance(j.at("distance"));
  if (r.has("dynamics")) c.dynamics = parse_dynamics(j.at("dynamics"));
  if (r.has("output")) {
    ObjectReader o(j.at("output"), "output");
    if (o.has("path")) c.output_path = o.string("path");
    if (o.has("format")) c.format = parse_format(o.string("format"), "output.format");
    o.finish();
  }
  c.threads = r.opt_integer("threads").value_or(1);
  r.finish();

  if (c.omega0 && !(*c.omega0 > 0.0)) throw DomainError("omega0: must be positive");
  require(c.threads >= 1, "threads", "must be >= 1");

  // Per-command requirements.
  const bool freq = c.omega0.has_value() || c.mode.has_value();
  switch (c.command) {
    case Command::Modes:
      require(!c.modes.empty(), "modes", "the modes command needs a non-empty modes array");
      break;
    case Command::Qext:
      require(c.band.has_value(), "band", "required");
      break;
    case Command::CouplingSpectrum:
      require(c.band.has_value(), "band", "required");
      require(c.geometry.has_value(), "geometry", "required");
      break;
    case Command::CouplingVsDistance:
      require(c.geometry.has_value(), "geometry", "required");
      require(c.distance.has_value(), "distance", "required");
      require(freq, "omega0", "give omega0 or mode");
      break;
    case Command::Suppressed:
      require(c.geometry.has_value(), "geometry", "required");
      require(c.mode.has_value(), "mode", "required");
      break;
    case Command::Dynamics:
      require(c.geometry.has_value(), "geometry", "required");
      require(c.dynamics.has_value(), "dynamics", "required");
      require(freq, "omega0", "give omega0 or mode");
      break;
  }
  if (c.band && c.band->detuning_lo) require(c.mode.has_value(), "band", "detuning band needs a reference mode");
  return c;
}

std::string serialize_config(const RunConfig& c) {
  json j;
  j["command"] = to_string(c.command);
  j["sphere"] = {{"radius", c.sphere.radius}, {"eps_sphere", c.sphere.eps_sphere}};
  if (!c.modes.empty()) {
    j["modes"] = json::array();
    for (const auto& m : c.modes) j["modes"].push_back(mode_json(m));
  }
  if (c.mode) j["mode"] = mode_json(*c.mode);
  if (c.omega0) j["omega0"] = *c.omega0;
  if (c.band) {
    json b{{"points", c.band->points}};
    if (c.band->omega_lo) b["omega_lo"] = *c.band->omega_lo;
    if (c.band->omega_hi) b["omega_hi"] = *c.band->omega_hi;
    if (c.band->detuning_lo) b["detuning_lo"] = *c.band->detuning_lo;
    if (c.band->detuning_hi) b["detuning_hi"] = *c.band->detuning_hi;
    j["band"] = b;
  }
  if (c.geometry) {
    j["geometry"] = {{"d1", c.geometry->d1},
                     {"d2", c.geometry->d2},
                     {"unit", to_string(c.geometry->unit)},
                     {"same_side", c.geometry->same_side}};
  }
  if (c.distance) {
    j["distance"] = {{"d2_lo", c.distance->d2_lo},
                     {"d2_hi", c.distance->d2_hi},
                     {"points", c.distance->points},
                     {"unit", to_string(c.distance->unit)}};
  }
  if (c.dynamics) {
    json d{{"t_end", c.dynamics->t_end}, {"sample_every", c.dynamics->sample_every}};
    if (c.dynamics->dt) d["dt"] = *c.dynamics->dt;
    j["dynamics"] = d;
  }
  json out{{"format", to_string(c.format)}};
  if (c.output_path) out["path"] = *c.output_path;
  j["output"] = out;
  j["threads"] = c.threads;
  return j.dump(2) + "\n";
}

}  // namespace wgm::app
