#include "wgm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <boost/numeric/odeint/stepper/runge_kutta4.hpp>

#include "wgm/error.hpp"

namespace wgm {

namespace {

using State = std::array<cplx, 2>;

}  // namespace

EnvelopeSystem build_envelope_system(const AxialDipolePair& pair) {
  pair.validate();
  if (pair.r_a == pair.sys.radius || pair.r_b == pair.sys.radius) {
    throw DomainError("build_envelope_system: the self shift of a dipole on the surface diverges");
  }
  const auto sa = single_dipole_response(pair.sys, pair.omega0, pair.r_a);
  const auto sb = single_dipole_response(pair.sys, pair.omega0, pair.r_b);
  const auto d = pair_coupling(pair);
  return {-cplx(sa.gamma_ratio, sa.omega_shift), -cplx(sb.gamma_ratio, sb.omega_shift), -d.z()};
}

double max_stable_step(const EnvelopeSystem& sys) {
  const double scale = std::max({std::abs(sys.self_a), std::abs(sys.self_b), std::abs(sys.cross)});
  return scale > 0.0 ? 0.01 / scale : std::numeric_limits<double>::infinity();
}

std::vector<EnvelopeState> evolve(const EnvelopeSystem& sys, const EnvelopeState& initial, double t_end, double dt) {
  if (!(dt > 0.0)) throw DomainError("evolve: dt must be positive");
  if (dt > max_stable_step(sys)) throw StabilityError("evolve: dt exceeds 0.01 / max|coefficient|");
  if (!(t_end >= initial.t)) throw DomainError("evolve: t_end before the initial time");

  auto rhs = [&](const State& p, State& dp, double) {
    dp[0] = sys.self_a * p[0] + sys.cross * p[1];
    dp[1] = sys.cross * p[0] + sys.self_b * p[1];
  };
  boost::numeric::odeint::runge_kutta4<State> stepper;

  const auto steps = static_cast<long>(std::llround((t_end - initial.t) / dt));
  std::vector<EnvelopeState> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  out.push_back(initial);
  State p{initial.p_a, initial.p_b};
  for (long i = 1; i <= steps; ++i) {
    const double t0 = initial.t + static_cast<double>(i - 1) * dt;
    stepper.do_step(rhs, p, t0, dt);
    out.push_back({initial.t + static_cast<double>(i) * dt, p[0], p[1]});
  }
  return out;
}

std::array<cplx, 2> generator_eigenvalues(const EnvelopeSystem& sys) {
  const cplx mean = 0.5 * (sys.self_a + sys.self_b);
  const cplx half_diff = 0.5 * (sys.self_a - sys.self_b);
  const cplx root = std::sqrt(half_diff * half_diff + sys.cross * sys.cross);
  return {mean + root, mean - root};
}

TransferMetrics transfer_metrics(const std::vector<EnvelopeState>& traj) {
  if (traj.empty()) throw DomainError("transfer_metrics: empty trajectory");
  std::vector<double> f(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) f[i] = std::norm(traj[i].p_b);

  TransferMetrics m;
  std::size_t imax = 0;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f[i] > f[imax]) imax = i;
  }
  m.max_pb2 = f[imax];
  m.t_at_max = traj[imax].t;

  // Interior local maxima, refined by a parabola through three samples.
  std::vector<double> peaks;
  std::vector<double> peak_vals;
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    if (f[i] > f[i - 1] && f[i] >= f[i + 1]) {
      const double h = traj[i + 1].t - traj[i].t;
      const double den = f[i - 1] - 2.0 * f[i] + f[i + 1];
      const double off = den != 0.0 ? 0.5 * (f[i - 1] - f[i + 1]) / den : 0.0;
      peaks.push_back(traj[i].t + off * h);
      peak_vals.push_back(f[i] - 0.25 * (f[i - 1] - f[i + 1]) * off);
    }
  }
  if (!peaks.empty()) {
    const auto best = std::max_element(peak_vals.begin(), peak_vals.end()) - peak_vals.begin();
    if (peak_vals[best] >= m.max_pb2) {
      m.max_pb2 = peak_vals[best];
      m.t_at_max = peaks[best];
    }
  }
  if (peaks.size() >= 2) m.period = (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
  return m;
}

}  // namespace wgm
