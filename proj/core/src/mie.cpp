#include "wgm/mie.hpp"

#include <cmath>
#include <string>

#include "wgm/error.hpp"

namespace wgm {

double SphereSystem::index() const { return std::sqrt(eps_sphere / eps_host); }

void SphereSystem::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("radius must be positive");
  if (eps_host != 1.0) throw DomainError("eps_host is fixed at 1");
  if (!(eps_sphere >= eps_host) || !std::isfinite(eps_sphere)) throw DomainError("eps_sphere must be >= 1");
}

std::vector<MieTerm> mie_terms(const SphereSystem& sys, cplx omega, int n_max) {
  sys.validate();
  if (n_max < 1) throw DomainError("mie: n_max must be >= 1");
  if (!(omega.real() > 0.0)) throw DomainError("mie: Re(omega) must be positive");

  const double m = sys.index();
  const cplx x = k0_of(omega) * sys.radius;
  const cplx y = m * x;

  const auto psi = riccati_sequence(RiccatiKind::J, n_max, x);
  const auto xi = riccati_sequence(RiccatiKind::H1, n_max, x);
  const auto ly = psi_log_derivative(n_max, y);

  std::vector<MieTerm> out(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) {
    const auto& p = psi[n];
    const auto& h = xi[n];
    // TM carries the index on the exterior derivative.
    out[n].a_num = p.psi_prime * cplx(m) - p.psi * ly[n];
    out[n].a_den = h.psi_prime * cplx(m) - h.psi * ly[n];
    out[n].b_num = p.psi_prime - p.psi * (m * ly[n]);
    out[n].b_den = h.psi_prime - h.psi * (m * ly[n]);
  }
  return out;
}

std::vector<MieRow> mie_coefficients(const SphereSystem& sys, cplx omega, int n_max) {
  const auto t = mie_terms(sys, omega, n_max);
  std::vector<MieRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    rows.push_back({n, -ratio(t[n].a_num, t[n].a_den), -ratio(t[n].b_num, t[n].b_den)});
  }
  return rows;
}

std::vector<MieRow> mie_coefficients(const SphereSystem& sys, double omega, int n_max) {
  return mie_coefficients(sys, cplx(omega, 0.0), n_max);
}

int choose_n_max(const SphereSystem& sys, double omega, double r_far) {
  const double k0 = k0_of(omega);
  const double x_eff = k0 * std::max(sys.index() * sys.radius, r_far);
  return static_cast<int>(std::ceil(x_eff + 4.05 * std::cbrt(x_eff) + 2.0)) + 20;
}

std::vector<double> q_ext_terms(const SphereSystem& sys, double omega, int n_max) {
  const auto rows = mie_coefficients(sys, omega, n_max);
  std::vector<double> t;
  t.reserve(rows.size());
  for (const auto& r : rows) t.push_back(-(2.0 * r.n + 1.0) * (r.a_coeff + r.b_coeff).real());
  return t;
}

double q_ext(const SphereSystem& sys, double omega, int n_max) {
  if (!(omega > 0.0)) throw DomainError("q_ext: omega must be positive");
  const double x = k0_of(omega) * sys.radius;
  double sum = 0.0;
  for (double t : q_ext_terms(sys, omega, n_max)) sum += t;
  return 2.0 / (x * x) * sum;
}

double q_ext(const SphereSystem& sys, double omega) {
  return q_ext(sys, omega, choose_n_max(sys, omega, sys.radius));
}

}  // namespace wgm
