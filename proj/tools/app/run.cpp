#include "run.hpp"

#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>
#include <json.hpp>

#include "wgm/coupling.hpp"
#include "wgm/dynamics.hpp"
#include "wgm/error.hpp"

namespace wgm::app {

namespace {

template <class F>
void parallel_for(int count, int threads, F&& fn) {
  const int nt = std::max(1, std::min(threads, count));
  if (nt == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(nt);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < nt; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int i = t; i < count; i += nt) fn(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double grid_value(double lo, double hi, int points, int i) {
  if (points == 1) return 0.5 * (lo + hi);
  return i == points - 1 ? hi : lo + (hi - lo) * i / (points - 1);
}

std::vector<Resonance> resolve(const ModeSpec& m, const SphereSystem& sys) {
  if (m.l) return {find_mode(m.polarization, sys, m.n, *m.l)};
  if (m.omega_hint) return {find_mode_near(m.polarization, sys, m.n, *m.omega_hint)};
  return order_number(m.polarization, sys, m.n, *m.omega_lo, *m.omega_hi);
}

std::optional<Resonance> reference_mode(const RunConfig& c, std::ostream& log) {
  if (!c.mode) return std::nullopt;
  const auto r = resolve(*c.mode, c.sphere);
  if (r.size() != 1) throw ConfigError("mode", "must resolve to exactly one resonance");
  log << "reference mode " << to_string(r[0].id.polarization) << " n=" << r[0].id.n << " l=" << r[0].id.l
      << " omega_c=" << r[0].omega_c << " Q=" << r[0].q_factor << "\n";
  return r[0];
}

std::pair<double, double> band_limits(const BandSpec& b, const std::optional<Resonance>& ref) {
  if (b.omega_lo) return {*b.omega_lo, *b.omega_hi};
  return {ref->omega_c + *b.detuning_lo, ref->omega_c + *b.detuning_hi};
}

double dipole_frequency(const RunConfig& c, const std::optional<Resonance>& ref) {
  return c.omega0 ? *c.omega0 : ref->omega_c;
}

double to_um(double d, LengthUnit u, double omega_center) { return u == LengthUnit::Wavelength ? d / omega_center : d; }

AxialDipolePair make_pair(const RunConfig& c, double omega_center, double omega0) {
  const auto& g = *c.geometry;
  AxialDipolePair p;
  p.sys = c.sphere;
  p.r_a = c.sphere.radius + to_um(g.d1, g.unit, omega_center);
  p.r_b = c.sphere.radius + to_um(g.d2, g.unit, omega_center);
  p.same_side = g.same_side;
  p.omega0 = omega0;
  return p;
}

Table run_modes(const RunConfig& c, std::ostream& log) {
  Table t{{"polarization", "n", "l", "omega_c", "kappa", "q_factor"}, {}};
  for (const auto& m : c.modes) {
    for (const auto& r : resolve(m, c.sphere)) {
      log << "mode " << to_string(r.id.polarization) << " n=" << r.id.n << " l=" << r.id.l << "\n";
      t.rows.push_back({to_string(r.id.polarization), static_cast<long long>(r.id.n), static_cast<long long>(r.id.l),
                        r.omega_c, r.kappa, r.q_factor});
    }
  }
  return t;
}

Table run_qext(const RunConfig& c, std::ostream& log) {
  const auto ref = reference_mode(c, log);
  const auto [lo, hi] = band_limits(*c.band, ref);
  const int points = c.band->points;
  Table t{{"omega", "q_ext"}, std::vector<std::vector<Cell>>(points)};
  parallel_for(points, c.threads, [&](int i) {
    const double w = grid_value(lo, hi, points, i);
    t.rows[i] = {w, q_ext(c.sphere, w)};
  });
  return t;
}

Table run_spectrum(const RunConfig& c, std::ostream& log) {
  const auto ref = reference_mode(c, log);
  const auto [lo, hi] = band_limits(*c.band, ref);
  const double center = 0.5 * (lo + hi);
  const auto pair = make_pair(c, center, center);
  log << "r_a=" << pair.r_a << " r_b=" << pair.r_b << "\n";
  const auto pts = coupling_spectrum(pair, lo, hi, c.band->points, c.threads);
  Table t{{"omega0", "gamma_ratio", "omega_shift", "k_d", "omega_d"}, {}};
  for (const auto& p : pts) t.rows.push_back({p.omega0, p.gamma_ratio, p.omega_shift, p.k_d, p.omega_d});
  return t;
}

Table run_distance(const RunConfig& c, std::ostream& log) {
  const auto ref = reference_mode(c, log);
  const double w0 = dipole_frequency(c, ref);
  const auto& d = *c.distance;
  Table t{{"d2_um", "d2_over_lambda", "k_d", "omega_d"}, std::vector<std::vector<Cell>>(d.points)};
  if (ref) {
    t.columns.push_back("k_d_suppressed");
    t.columns.push_back("omega_d_suppressed");
  }
  parallel_for(d.points, c.threads, [&](int i) {
    auto pair = make_pair(c, w0, w0);
    const double d2 = grid_value(d.d2_lo, d.d2_hi, d.points, i);
    const double d2_um = to_um(d2, d.unit, w0);
    pair.r_b = c.sphere.radius + d2_um;
    const auto z = pair_coupling(pair);
    std::vector<Cell> row{d2_um, d2_um * w0, z.k_d, z.omega_d};
    if (ref) {
      const auto s = suppressed_mode_coupling(pair, *ref);
      row.push_back(s.k_d);
      row.push_back(s.omega_d);
    }
    t.rows[i] = std::move(row);
  });
  return t;
}

Table run_suppressed(const RunConfig& c, std::ostream& log) {
  const auto ref = reference_mode(c, log);
  const double w0 = dipole_frequency(c, ref);
  const auto pair = make_pair(c, w0, w0);
  const auto full = pair_coupling(pair);
  const auto sup = suppressed_mode_coupling(pair, *ref);
  return {{"omega0", "r_a", "r_b", "k_d", "omega_d", "k_d_suppressed", "omega_d_suppressed"},
          {{w0, pair.r_a, pair.r_b, full.k_d, full.omega_d, sup.k_d, sup.omega_d}}};
}

Table run_dynamics(const RunConfig& c, std::ostream& log) {
  const auto ref = reference_mode(c, log);
  const double w0 = dipole_frequency(c, ref);
  const auto pair = make_pair(c, w0, w0);
  const auto sys = build_envelope_system(pair);
  const double dt = c.dynamics->dt.value_or(0.5 * max_stable_step(sys));
  const auto traj = evolve(sys, {0.0, 1.0, 0.0}, c.dynamics->t_end, dt);
  const auto m = transfer_metrics(traj);
  log << "max |p_b|^2=" << m.max_pb2 << " at t=" << m.t_at_max;
  if (m.period) {
    log << " period=" << *m.period << "\n";
  } else {
    log << " (monotone regime, no oscillation)\n";
  }
  Table t{{"t", "re_p_a", "im_p_a", "re_p_b", "im_p_b", "abs2_p_a", "abs2_p_b"}, {}};
  for (std::size_t i = 0; i < traj.size(); i += c.dynamics->sample_every) {
    const auto& s = traj[i];
    t.rows.push_back({s.t, s.p_a.real(), s.p_a.imag(), s.p_b.real(), s.p_b.imag(), std::norm(s.p_a), std::norm(s.p_b)});
  }
  return t;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Table execute(const RunConfig& c, std::ostream& log) {
  switch (c.command) {
    case Command::Modes: return run_modes(c, log);
    case Command::Qext: return run_qext(c, log);
    case Command::CouplingSpectrum: return run_spectrum(c, log);
    case Command::CouplingVsDistance: return run_distance(c, log);
    case Command::Suppressed: return run_suppressed(c, log);
    case Command::Dynamics: return run_dynamics(c, log);
  }
  return {};
}

std::string format_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + csv_field(t.columns[i]);
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) out += fmt_double(v);
            else if constexpr (std::is_same_v<V, long long>) out += std::to_string(v);
            else out += csv_field(v);
          },
          row[i]);
    }
    out += "\n";
  }
  return out;
}

std::string format_json(const Table& t) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
    }
    rows.push_back(obj);
  }
  nlohmann::ordered_json doc{{"columns", t.columns}, {"rows", rows}};
  return doc.dump(1) + "\n";
}

int exit_code_for_current_exception() {
  try {
    throw;
  } catch (const ConfigError&) {
    return kConfigError;
  } catch (const ConvergenceError&) {
    return kNonConvergence;
  } catch (const DomainError&) {
    return kDomainError;
  } catch (const nlohmann::json::exception&) {
    return kConfigError;
  } catch (...) {
    return kFailure;
  }
}

}  // namespace wgm::app
