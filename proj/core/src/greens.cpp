#include "wgm/greens.hpp"

#include <cmath>
#include <numbers>

#include "wgm/error.hpp"

namespace wgm {

namespace {

const cplx kI(0.0, 1.0);

std::vector<ScaledComplex> hankel_terms(int n_max, double x) {
  auto j = spherical_j(n_max, x);
  const auto y = spherical_y(n_max, x);
  for (std::size_t n = 0; n < j.size(); ++n) j[n] = j[n] + y[n] * kI;
  return j;
}

double sigma_pow(bool same_side, int n) { return (same_side || n % 2 == 0) ? 1.0 : -1.0; }

void check_radii(double r_a, double r_b) {
  if (!(r_a > 0.0) || !(r_b > 0.0) || !std::isfinite(r_a) || !std::isfinite(r_b)) {
    throw DomainError("radii must be finite and positive");
  }
}

}  // namespace

cplx g0_closed_axial(double k0, double r_a, double r_b, bool same_side) {
  if (!(k0 > 0.0)) throw DomainError("g0_closed_axial: k0 must be positive");
  const double R = same_side ? std::abs(r_a - r_b) : r_a + r_b;
  if (R == 0.0) throw CoincidenceError("g0_closed_axial: coincident points");
  const double kr = k0 * R;
  const cplx gzz = std::exp(kI * kr) / R * (2.0 / (kr * kr) - 2.0 * kI / kr);
  // r-hat is -z-hat on the far side of the origin.
  return same_side ? gzz : -gzz;
}

cplx g0_partialwave_axial(double k0, double r_a, double r_b, bool same_side, int n_max) {
  check_radii(r_a, r_b);
  if (r_a == r_b) {
    throw DomainError(same_side ? "g0_partialwave_axial: coincident points"
                                : "g0_partialwave_axial: series does not converge for r_a == r_b");
  }
  const double r_lt = std::min(r_a, r_b);
  const double r_gt = std::max(r_a, r_b);
  const auto j = spherical_j(n_max, k0 * r_lt);
  const auto h = hankel_terms(n_max, k0 * r_gt);
  cplx sum = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double w = sigma_pow(same_side, n) * n * (n + 1.0) * (2.0 * n + 1.0);
    sum += w * (j[n] * h[n]).value();
  }
  return partial_wave_prefactor(k0) * sum / (k0 * k0 * r_a * r_b);
}

std::vector<cplx> gs_scattered_terms(const SphereSystem& sys, double omega, double r_a, double r_b, bool same_side,
                                     int n_max) {
  check_radii(r_a, r_b);
  if (r_a < sys.radius || r_b < sys.radius) throw DomainError("gs_scattered_axial: point inside the sphere");
  const double k0 = k0_of(omega);
  const auto mt = mie_terms(sys, cplx(omega, 0.0), n_max);
  const auto ha = hankel_terms(n_max, k0 * r_a);
  const auto hb = r_b == r_a ? ha : hankel_terms(n_max, k0 * r_b);
  std::vector<cplx> out(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const double w = sigma_pow(same_side, n) * n * (n + 1.0) * (2.0 * n + 1.0);
    out[n - 1] = -w * (mt[n].a_num * ha[n] * hb[n] / mt[n].a_den).value();
  }
  return out;
}

cplx gs_scattered_axial(const SphereSystem& sys, double omega, double r_a, double r_b, bool same_side, int n_max) {
  const double k0 = k0_of(omega);
  cplx sum = 0.0;
  for (const auto& t : gs_scattered_terms(sys, omega, r_a, r_b, same_side, n_max)) sum += t;
  return partial_wave_prefactor(k0) * sum / (k0 * k0 * r_a * r_b);
}

namespace {

struct Radial {
  cplx z_over_rho;     // z_n(rho) / rho
  cplx deriv_over_rho; // [rho z_n(rho)]' / rho
};

Radial radial_parts(int n, RadialKind kind, cplx rho) {
  const auto rp = riccati(kind == RadialKind::RegularJ ? RiccatiKind::J : RiccatiKind::H1, n, rho);
  // rp.psi = rho z_n
  return {(rp.psi / (rho * rho)).value(), (rp.psi_prime / rho).value()};
}

}  // namespace

VshValue vsh_m(Parity parity, int m, int n, RadialKind kind, cplx k, const FieldPoint& p) {
  const auto ang = angular_functions(n, m, p.theta);
  const auto rp = riccati(kind == RadialKind::RegularJ ? RiccatiKind::J : RiccatiKind::H1, n, k * p.r);
  const cplx z = (rp.psi / (k * p.r)).value();
  const double c = std::cos(m * p.phi);
  const double s = std::sin(m * p.phi);
  VshValue v{parity, m, n, kind, {}};
  if (parity == Parity::Even) {
    v.components = {0.0, -s * ang.pi_fn * z, -c * ang.tau_fn * z};
  } else {
    v.components = {0.0, c * ang.pi_fn * z, -s * ang.tau_fn * z};
  }
  return v;
}

VshValue vsh_n(Parity parity, int m, int n, RadialKind kind, cplx k, const FieldPoint& p) {
  const auto ang = angular_functions(n, m, p.theta);
  const Radial rad = radial_parts(n, kind, k * p.r);
  const double c = std::cos(m * p.phi);
  const double s = std::sin(m * p.phi);
  const double nn = n * (n + 1.0);
  VshValue v{parity, m, n, kind, {}};
  if (parity == Parity::Even) {
    v.components = {c * nn * ang.p * rad.z_over_rho, c * ang.tau_fn * rad.deriv_over_rho,
                    -s * ang.pi_fn * rad.deriv_over_rho};
  } else {
    v.components = {s * nn * ang.p * rad.z_over_rho, s * ang.tau_fn * rad.deriv_over_rho,
                    c * ang.pi_fn * rad.deriv_over_rho};
  }
  return v;
}

std::vector<cplx> vsh_assembled_rr_terms(double k0, const FieldPoint& a, const FieldPoint& b, int n_max) {
  if (a.r == b.r) throw DomainError("vsh_assembled_rr_terms: need distinct radii");
  const bool a_inner = a.r < b.r;
  const FieldPoint& inner = a_inner ? a : b;
  const FieldPoint& outer = a_inner ? b : a;
  const cplx k(k0, 0.0);
  std::vector<cplx> out(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    cplx sum = 0.0;
    for (int m = 0; m <= n; ++m) {
      // (n-m)!/(n+m)!
      const double fr = std::exp(std::lgamma(n - m + 1.0) - std::lgamma(n + m + 1.0));
      const double w = (m == 0 ? 1.0 : 2.0) * fr * (2.0 * n + 1.0) / (n * (n + 1.0));
      for (Parity par : {Parity::Even, Parity::Odd}) {
        const auto ni = vsh_n(par, m, n, RadialKind::RegularJ, k, inner);
        const auto no = vsh_n(par, m, n, RadialKind::OutgoingH, k, outer);
        sum += w * ni.components[0] * no.components[0];
      }
    }
    // N_r carries z_n/(k r) on each side; k^2 r_a r_b is already in there.
    out[n - 1] = partial_wave_prefactor(k0) * sum;
  }
  return out;
}

}  // namespace wgm
