#include "wgm/coupling.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <thread>
#include <boost/math/tools/minima.hpp>

#include "wgm/error.hpp"
#include "wgm/greens.hpp"

namespace wgm {

namespace {

const cplx kI(0.0, 1.0);

constexpr int kTailAverages = 16;
constexpr int kMaxOrder = 2000000;

// (3/2) sum over n != skip of the order-n scattered terms / (x_a x_b).
//
// Opposite sides: the terms alternate in sign and, for points on the surface,
// grow like n^2 past the mode region, so the plain partial sums do not settle.
// The partial sums S_N .. S_{N+K} are averaged pairwise K times; for a smooth
// alternating tail this gives the Abel limit (the r -> a+ value) and is exact
// to rounding once N is past the mode region.
// Same side: no alternation; n_max must cover the geometric tail.
cplx scattered_sum(const SphereSystem& sys, double omega, double r_a, double r_b, bool same_side, int n_max,
                   int skip = 0) {
  const int n_terms = same_side ? n_max : n_max + kTailAverages;
  const auto terms = gs_scattered_terms(sys, omega, r_a, r_b, same_side, n_terms);
  cplx sum = 0.0;
  for (int n = n_max; n >= 1; --n) {
    if (n != skip) sum += terms[n - 1];
  }
  if (!same_side) {
    std::array<cplx, kTailAverages + 1> s;
    s[0] = sum;
    for (int k = 1; k <= kTailAverages; ++k) s[k] = s[k - 1] + (n_max + k == skip ? 0.0 : terms[n_max + k - 1]);
    for (int level = 0; level < kTailAverages; ++level) {
      for (int i = 0; i < kTailAverages - level; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    }
    sum = s[0];
  }
  const double k0 = k0_of(omega);
  return 1.5 * sum / (k0 * r_a * k0 * r_b);
}

cplx scattered_term(const SphereSystem& sys, double omega, double r_a, double r_b, bool same_side, int n) {
  const auto terms = gs_scattered_terms(sys, omega, r_a, r_b, same_side, n);
  const double k0 = k0_of(omega);
  return 1.5 * terms[n - 1] / (k0 * r_a * k0 * r_b);
}

// Order at which n^2 rho^n, rho = a^2 / (r_a r_b), drops below 1e-17.
int geometric_tail_order(double a, double r_a, double r_b) {
  const double log_rho = std::log(a / r_a) + std::log(a / r_b);
  if (!(log_rho < 0.0)) return kMaxOrder + 1;
  double n = 10.0;
  for (int i = 0; i < 6; ++i) n = (39.2 + 2.0 * std::log(n)) / -log_rho;
  return n > kMaxOrder ? kMaxOrder + 1 : static_cast<int>(std::ceil(n));
}

int same_side_n_max(const SphereSystem& sys, double omega, double r_a, double r_b) {
  const int base = choose_n_max(sys, omega, std::max({r_a, r_b, sys.radius}));
  const int tail = geometric_tail_order(sys.radius, r_a, r_b);
  if (tail > kMaxOrder) {
    throw ConvergenceError("scattered series: points too close to the surface for the same-side sum",
                           cplx(omega, 0.0));
  }
  return std::max(base, tail);
}

int default_n_max(const AxialDipolePair& p) {
  if (p.same_side) return same_side_n_max(p.sys, p.omega0, p.r_a, p.r_b);
  return choose_n_max(p.sys, p.omega0, std::max({p.r_a, p.r_b, p.sys.radius}));
}

}  // namespace

void AxialDipolePair::validate() const {
  sys.validate();
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) throw DomainError("omega0 must be positive");
  if (!(r_a >= sys.radius) || !(r_b >= sys.radius) || !std::isfinite(r_a) || !std::isfinite(r_b)) {
    throw DomainError("dipoles must sit on or outside the sphere");
  }
  if (same_side && r_a == r_b) throw CoincidenceError("dipoles coincide");
}

SingleDipole single_dipole_response(const SphereSystem& sys, double omega0, double r_a, int n_max) {
  sys.validate();
  if (!(r_a >= sys.radius)) throw DomainError("single_dipole_response: dipole inside the sphere");
  const cplx s = scattered_sum(sys, omega0, r_a, r_a, true, n_max);
  return {1.0 + s.real(), s.imag()};
}

SingleDipole single_dipole_response(const SphereSystem& sys, double omega0, double r_a) {
  sys.validate();
  if (!(r_a >= sys.radius)) throw DomainError("single_dipole_response: dipole inside the sphere");
  if (r_a > sys.radius) return single_dipole_response(sys, omega0, r_a, same_side_n_max(sys, omega0, r_a, r_a));
  // On the surface the image shift diverges; the decay part still converges
  // past the mode region.
  const auto s = single_dipole_response(sys, omega0, r_a, choose_n_max(sys, omega0, sys.radius));
  return {s.gamma_ratio, std::numeric_limits<double>::quiet_NaN()};
}

PairCoupling free_pair_coupling(const AxialDipolePair& pair) {
  const double k0 = k0_of(pair.omega0);
  const cplx z = 3.0 * g0_closed_axial(k0, pair.r_a, pair.r_b, pair.same_side) / (2.0 * kI * k0);
  return {z.real(), z.imag()};
}

PairCoupling pair_coupling(const AxialDipolePair& pair, int n_max) {
  pair.validate();
  // The free part uses the closed form: its partial-wave series does not
  // converge for equal radii on opposite sides.
  const cplx z = free_pair_coupling(pair).z() +
                 scattered_sum(pair.sys, pair.omega0, pair.r_a, pair.r_b, pair.same_side, n_max);
  return {z.real(), z.imag()};
}

PairCoupling pair_coupling(const AxialDipolePair& pair) { return pair_coupling(pair, default_n_max(pair)); }

CouplingPoint coupling_point(const AxialDipolePair& pair) {
  pair.validate();
  const auto s = single_dipole_response(pair.sys, pair.omega0, pair.r_a);
  const auto d = pair_coupling(pair);
  return {pair.omega0, s.gamma_ratio, s.omega_shift, d.k_d, d.omega_d};
}

std::vector<CouplingPoint> coupling_spectrum(const AxialDipolePair& pair, double omega_lo, double omega_hi,
                                             int points, int threads) {
  if (points < 1) throw DomainError("coupling_spectrum: need at least one point");
  if (points > 1 && !(omega_lo < omega_hi)) throw DomainError("coupling_spectrum: need omega_lo < omega_hi");
  std::vector<CouplingPoint> out(static_cast<std::size_t>(points));
  const double step = points > 1 ? (omega_hi - omega_lo) / (points - 1) : 0.0;
  auto eval = [&](int i) {
    AxialDipolePair p = pair;
    p.omega0 = (i == points - 1 && points > 1) ? omega_hi : omega_lo + i * step;
    out[i] = coupling_point(p);
  };
  const int nt = std::clamp(threads, 1, points);
  if (nt == 1) {
    for (int i = 0; i < points; ++i) eval(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(nt);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < nt; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int i = t; i < points; i += nt) eval(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

EnhancementResult enhancement_factor(const AxialDipolePair& pair, const Resonance& res, double window_halfwidth) {
  if (!(window_halfwidth >= 3.0 * res.kappa)) throw DomainError("enhancement_factor: window must cover 6 kappa");
  constexpr int grid = 201;
  auto kd = [&](double t) {
    AxialDipolePair p = pair;
    p.omega0 = res.omega_c + t;
    return pair_coupling(p).k_d;
  };
  const double step = 2.0 * window_halfwidth / (grid - 1);
  int best = 0;
  double best_val = -1.0;
  for (int i = 0; i < grid; ++i) {
    const double v = std::abs(kd(-window_halfwidth + i * step));
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  if (best == 0 || best == grid - 1) {
    throw WindowTooSmallError("enhancement_factor: maximum on the window boundary",
                              cplx(res.omega_c - window_halfwidth + best * step, 0.0));
  }
  const double t_lo = -window_halfwidth + (best - 1) * step;
  const double t_hi = -window_halfwidth + (best + 1) * step;
  std::uintmax_t iters = 100;
  const auto r = boost::math::tools::brent_find_minima([&](double t) { return -std::abs(kd(t)); }, t_lo, t_hi,
                                                       30, iters);
  double t_best = r.first;
  double v = -r.second;
  if (v < best_val) {
    t_best = -window_halfwidth + best * step;
    v = best_val;
  }
  const double signed_v = kd(t_best);
  return {v, res.omega_c + t_best, signed_v < 0.0 ? -1 : +1};
}

PairCoupling suppressed_mode_coupling(const AxialDipolePair& pair, const Resonance& res) {
  pair.validate();
  const int n_max = std::max(default_n_max(pair), res.id.n);
  const cplx z = free_pair_coupling(pair).z() +
                 scattered_sum(pair.sys, pair.omega0, pair.r_a, pair.r_b, pair.same_side, n_max, res.id.n);
  return {z.real(), z.imag()};
}

int parity_sign(const AxialDipolePair& pair, int n) { return (pair.same_side || n % 2 == 0) ? +1 : -1; }

ModeStrengths fit_mode_strengths(const AxialDipolePair& pair, const Resonance& res) {
  pair.validate();
  const int n = res.id.n;
  const double w = res.omega_c;
  return {std::abs(scattered_term(pair.sys, w, pair.r_a, pair.r_a, true, n)),
          std::abs(scattered_term(pair.sys, w, pair.r_a, pair.r_b, pair.same_side, n))};
}

CouplingPoint single_mode_approx(const Resonance& res, double strength_s, double strength_d, double omega0,
                                 int parity) {
  if (strength_s < 0.0 || strength_d < 0.0) throw DomainError("single_mode_approx: strengths must be >= 0");
  const double kappa = res.kappa;
  const cplx lorentz = kappa / (kappa - kI * (omega0 - res.omega_c));
  const cplx s = strength_s * lorentz;
  const cplx d = static_cast<double>(parity) * strength_d * lorentz;
  return {omega0, s.real(), s.imag(), d.real(), d.imag()};
}

}  // namespace wgm
