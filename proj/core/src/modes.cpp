#include "wgm/modes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <boost/math/tools/toms748_solve.hpp>

#include "wgm/error.hpp"

namespace wgm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Grid step of the counting scan, in interior size parameter. Roots of a
// fixed order are spaced by at least ~pi in y.
constexpr double kCountStepY = 0.1;

double y_per_omega(const SphereSystem& sys) { return kTwoPi * sys.index() * sys.radius; }

// log2 |D_raw / xi_n(x)| with D_raw = m xi'(x) psi(y) - xi(x) psi'(y) (TM).
// |xi_n(x)| decreases monotonically in x, so for eps = 1 (D_raw = i) this
// has no interior minimum.
double scan_level(Polarization pol, const SphereSystem& sys, int n, double omega) {
  const double m = sys.index();
  const double x = kTwoPi * omega * sys.radius;
  const auto xi = riccati(RiccatiKind::H1, n, x);
  const auto psi = riccati(RiccatiKind::J, n, m * x);
  const ScaledComplex d = pol == Polarization::TM ? xi.psi_prime * psi.psi * cplx(m) - xi.psi * psi.psi_prime
                                                  : xi.psi_prime * psi.psi - xi.psi * psi.psi_prime * cplx(m);
  return d.log2_abs() - xi.psi.log2_abs();
}

// Sign changes of the secular function on a uniform y-grid from lo to hi.
// Returns the brackets in ascending order.
std::vector<Bracket> sign_changes(Polarization pol, const SphereSystem& sys, int n, double lo, double hi,
                                  double step_y) {
  std::vector<Bracket> out;
  if (!(hi > lo)) return out;
  const double d = step_y / y_per_omega(sys);
  const auto steps = static_cast<std::int64_t>(std::ceil((hi - lo) / d));
  double w_prev = lo;
  double g_prev = secular(pol, sys, n, lo);
  for (std::int64_t i = 1; i <= steps; ++i) {
    const double w = (i == steps) ? hi : lo + static_cast<double>(i) * d;
    const double g = secular(pol, sys, n, w);
    if ((g_prev < 0.0) != (g < 0.0)) out.push_back({w_prev, w});
    w_prev = w;
    g_prev = g;
  }
  return out;
}

double real_zero(Polarization pol, const SphereSystem& sys, int n, const Bracket& b) {
  auto f = [&](double w) { return secular(pol, sys, n, w); };
  std::uintmax_t iters = 200;
  auto tol = [](double a, double c) { return std::abs(c - a) <= 1e-15 * std::abs(a); };
  const auto r = boost::math::tools::toms748_solve(f, b.lo, b.hi, tol, iters);
  return 0.5 * (r.first + r.second);
}

Resonance label(Resonance r, int l) {
  r.id.l = l;
  return r;
}

}  // namespace

std::string to_string(Polarization p) { return p == Polarization::TM ? "TM" : "TE"; }

Polarization polarization_from_string(const std::string& s) {
  if (s == "TM" || s == "tm" || s == "a") return Polarization::TM;
  if (s == "TE" || s == "te" || s == "b") return Polarization::TE;
  throw DomainError("unknown polarization '" + s + "'");
}

cplx denominator(Polarization pol, const SphereSystem& sys, int n, cplx omega) {
  if (!(omega.real() > 0.0)) throw DomainError("denominator: Re(omega) must be positive");
  if (n < 1) throw DomainError("denominator: n must be >= 1");
  const double m = sys.index();
  const cplx x = k0_of(omega) * sys.radius;
  const cplx lx = xi_log_derivative(n, x)[n];
  const cplx ly = psi_log_derivative(n, m * x)[n];
  return pol == Polarization::TM ? m * lx - ly : lx - m * ly;
}

double secular(Polarization pol, const SphereSystem& sys, int n, double omega) {
  const double m = sys.index();
  const double x = kTwoPi * omega * sys.radius;
  const double lx = xi_log_derivative(n, x)[n].real();
  const auto psi = riccati(RiccatiKind::J, n, m * x);
  const ScaledComplex& larger = psi.psi.log2_abs() >= psi.psi_prime.log2_abs() ? psi.psi : psi.psi_prime;
  const ScaledComplex big(std::abs(larger.mantissa()), larger.exponent());
  const double p = ratio(psi.psi, big).real();
  const double dp = ratio(psi.psi_prime, big).real();
  return pol == Polarization::TM ? m * lx * p - dp : lx * p - m * dp;
}

double root_floor(const SphereSystem& sys, int n) { return (n + 0.5) / y_per_omega(sys); }

std::vector<Bracket> scan_candidates(Polarization pol, const SphereSystem& sys, int n, double omega_lo,
                                     double omega_hi, int grid_points) {
  if (!(omega_lo < omega_hi)) throw DomainError("scan_candidates: need omega_lo < omega_hi");
  if (grid_points < 3) throw DomainError("scan_candidates: need at least 3 grid points");
  if (!(omega_lo > 0.0)) throw DomainError("scan_candidates: omega_lo must be positive");

  std::vector<double> w(grid_points), f(grid_points);
  const double d = (omega_hi - omega_lo) / (grid_points - 1);
  for (int i = 0; i < grid_points; ++i) {
    w[i] = (i == grid_points - 1) ? omega_hi : omega_lo + i * d;
    f[i] = scan_level(pol, sys, n, w[i]);
  }
  // Strict minima only, by more than rounding.
  constexpr double margin = 1e-9;
  std::vector<Bracket> out;
  for (int i = 1; i + 1 < grid_points; ++i) {
    if (f[i] <= f[i - 1] && f[i] <= f[i + 1] && f[i] < std::max(f[i - 1], f[i + 1]) - margin) {
      out.push_back({w[i - 1], w[i + 1]});
    }
  }
  return out;
}

Resonance refine_resonance(Polarization pol, const SphereSystem& sys, int n, double omega_guess) {
  if (!(omega_guess > 0.0)) throw DomainError("refine_resonance: guess must be positive");
  // Cap on a single Newton step: a quarter of the root spacing.
  const double max_step = 0.75 / y_per_omega(sys);

  cplx w(omega_guess, 0.0);
  double kappa_est = 0.0;
  for (int it = 1; it <= 100; ++it) {
    const double h = std::max(1e-7 * std::abs(w), 0.1 * kappa_est);
    const cplx f = denominator(pol, sys, n, w);
    const cplx df = (denominator(pol, sys, n, w + h) - denominator(pol, sys, n, w - h)) / (2.0 * h);
    cplx dw = f / df;
    if (!std::isfinite(std::abs(dw))) throw ConvergenceError("refine_resonance: non-finite Newton step", w);
    if (std::abs(dw) > max_step) dw *= max_step / std::abs(dw);
    w -= dw;
    kappa_est = std::abs(w.imag());
    if (std::abs(dw) <= 1e-13 * std::abs(w)) {
      if (!(w.imag() < 0.0)) throw SpuriousRootError("refine_resonance: root not in the lower half plane", w);
      Resonance r;
      r.id = {pol, n, 0};
      r.omega_c = w.real();
      r.kappa = -w.imag();
      r.q_factor = r.omega_c / (2.0 * r.kappa);
      r.iterations = it;
      return r;
    }
  }
  throw ConvergenceError("refine_resonance: no convergence in 100 iterations", w);
}

std::vector<Resonance> order_number(Polarization pol, const SphereSystem& sys, int n, double omega_lo,
                                    double omega_hi) {
  sys.validate();
  if (!(omega_lo < omega_hi) || !std::isfinite(omega_hi)) throw DomainError("order_number: invalid band");
  const double floor = root_floor(sys, n);
  std::vector<Resonance> out;
  if (omega_hi <= floor) return out;
  const double lo = std::max(omega_lo, floor);

  const auto below = sign_changes(pol, sys, n, floor, lo, kCountStepY);
  const auto below_fine = sign_changes(pol, sys, n, floor, lo, 0.5 * kCountStepY);
  if (below.size() != below_fine.size()) {
    throw LabelingError("order_number: root count below the band changes under grid refinement");
  }
  const auto inside = sign_changes(pol, sys, n, lo, omega_hi, kCountStepY);
  const auto inside_fine = sign_changes(pol, sys, n, lo, omega_hi, 0.5 * kCountStepY);
  if (inside.size() != inside_fine.size()) {
    throw LabelingError("order_number: root count in the band changes under grid refinement");
  }

  int l = static_cast<int>(below.size());
  for (const auto& b : inside) {
    ++l;
    out.push_back(label(refine_resonance(pol, sys, n, real_zero(pol, sys, n, b)), l));
  }
  return out;
}

Resonance find_mode(Polarization pol, const SphereSystem& sys, int n, int l) {
  sys.validate();
  if (n < 1 || l < 1) throw DomainError("find_mode: need n >= 1 and l >= 1");
  const double floor = root_floor(sys, n);
  // March upward in chunks of ~20 root spacings until the l-th sign change.
  const double chunk = 20.0 * std::numbers::pi / y_per_omega(sys);
  const double limit = floor * 20.0 + 100.0 / y_per_omega(sys);
  double lo = floor;
  int seen = 0;
  while (lo < limit) {
    const double hi = lo + chunk;
    const auto b = sign_changes(pol, sys, n, lo, hi, kCountStepY);
    if (seen + static_cast<int>(b.size()) >= l) {
      const Bracket& target = b[l - seen - 1];
      const auto fine = sign_changes(pol, sys, n, floor, target.hi, 0.5 * kCountStepY);
      if (static_cast<int>(fine.size()) != l) {
        throw LabelingError("find_mode: root count changes under grid refinement");
      }
      return label(refine_resonance(pol, sys, n, real_zero(pol, sys, n, target)), l);
    }
    seen += static_cast<int>(b.size());
    lo = hi;
  }
  throw LabelingError("find_mode: order number not reached below the search limit");
}

Resonance find_mode_near(Polarization pol, const SphereSystem& sys, int n, double omega_hint) {
  double half = std::numbers::pi / y_per_omega(sys);
  for (int attempt = 0; attempt < 6; ++attempt, half *= 2.0) {
    const auto roots = order_number(pol, sys, n, std::max(omega_hint - half, 1e-300), omega_hint + half);
    if (roots.empty()) continue;
    return *std::min_element(roots.begin(), roots.end(), [&](const Resonance& a, const Resonance& b) {
      return std::abs(a.omega_c - omega_hint) < std::abs(b.omega_c - omega_hint);
    });
  }
  throw ConvergenceError("find_mode_near: no resonance near the hint", cplx(omega_hint, 0.0));
}

}  // namespace wgm
