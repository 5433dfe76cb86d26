#include "wgm/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wgm/error.hpp"

namespace wgm {

namespace {

template <class T>
double mag(const T& v) {
  return std::abs(v);
}

template <class T>
void check_argument(const T& z, const char* who) {
  const double a = mag(z);
  if (!std::isfinite(a) || a == 0.0) throw DomainError(std::string(who) + ": argument must be finite and nonzero");
}

template <class T>
T sph_j0(const T& z) {
  if (mag(z) < 1e-4) {
    const T z2 = z * z;
    return T(1.0) - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

template <class T>
T sph_j1(const T& z) {
  if (mag(z) < 0.5) {
    const T z2 = z * z;
    // z/3 - z^3/30 + z^5/840 - z^7/45360 + z^9/3991680
    return z * (1.0 / 3.0 + z2 * (-1.0 / 30.0 + z2 * (1.0 / 840.0 + z2 * (-1.0 / 45360.0 + z2 / 3991680.0))));
  }
  return (std::sin(z) - z * std::cos(z)) / (z * z);
}

// r[n] = j_n / j_{n-1} for n = 1..n_max, by the downward continued-fraction
// recurrence started at miller_start_order.
template <class T>
std::vector<T> j_ratios(int n_max, const T& z) {
  const int start = miller_start_order(n_max, mag(z));
  std::vector<T> r(static_cast<std::size_t>(n_max) + 1, T{});
  T next{};  // r_{n+1}
  for (int n = start; n >= 1; --n) {
    T den = T(2.0 * n + 1.0) - z * next;
    if (mag(den) == 0.0) den = T(1e-300);
    next = z / den;
    if (n <= n_max) r[n] = next;
  }
  return r;
}

template <class T>
std::vector<Scaled<T>> j_terms(int n_max, const T& z) {
  std::vector<Scaled<T>> out(static_cast<std::size_t>(n_max) + 1);
  const T j0 = sph_j0(z);
  if (n_max == 0) {
    out[0] = Scaled<T>(j0);
    return out;
  }
  const auto r = j_ratios(n_max, z);
  const T j1 = sph_j1(z);
  // Anchor on whichever of j0, j1 is larger so a zero of one cannot wipe
  // out the normalization.
  if (mag(j0) >= mag(j1)) {
    out[0] = Scaled<T>(j0);
    out[1] = out[0] * r[1];
  } else {
    out[1] = Scaled<T>(j1);
    out[0] = Scaled<T>(j1 / r[1]);
  }
  for (int n = 2; n <= n_max; ++n) out[n] = out[n - 1] * r[n];
  return out;
}

template <class T>
std::vector<Scaled<T>> y_terms(int n_max, const T& z) {
  std::vector<Scaled<T>> out(static_cast<std::size_t>(n_max) + 1);
  const T c = std::cos(z);
  const T s = std::sin(z);
  out[0] = Scaled<T>(-c / z);
  if (n_max == 0) return out;
  out[1] = Scaled<T>(-c / (z * z) - s / z);
  for (int n = 1; n < n_max; ++n) out[n + 1] = out[n] * (T(2.0 * n + 1.0) / z) - out[n - 1];
  return out;
}

std::vector<ScaledComplex> to_complex_terms(const std::vector<ScaledReal>& v) {
  std::vector<ScaledComplex> out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back(to_complex(t));
  return out;
}

}  // namespace

int miller_start_order(int order_max, double abs_z) {
  const int base = std::max(order_max, static_cast<int>(std::ceil(abs_z + 8.0 * std::cbrt(abs_z))));
  const int margin = std::max(15, static_cast<int>(std::ceil(1.5 * std::sqrt(static_cast<double>(order_max)))));
  return base + margin;
}

std::int64_t BesselSequence::scale_exponent(int n) const {
  const auto& t = terms.at(n);
  if (t.is_zero()) return 0;
  const auto e = t.exponent();
  return (e > -1020 && e < 1024) ? 0 : e;
}

std::vector<double> BesselSequence::values() const {
  std::vector<double> v;
  v.reserve(terms.size());
  for (const auto& t : terms) v.push_back(t.value());
  return v;
}

BesselSequence bessel_j_sequence(int order_max, double x) {
  if (order_max < 0) throw DomainError("bessel_j_sequence: order_max must be >= 0");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_j_sequence: x must be finite and positive");
  return {order_max, x, j_terms(order_max, x)};
}

BesselSequence bessel_y_sequence(int order_max, double x) {
  if (order_max < 0) throw DomainError("bessel_y_sequence: order_max must be >= 0");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_y_sequence: x must be finite and positive");
  return {order_max, x, y_terms(order_max, x)};
}

std::vector<ScaledComplex> spherical_j(int order_max, cplx z) {
  check_argument(z, "spherical_j");
  if (z.imag() == 0.0) return to_complex_terms(j_terms(order_max, z.real()));
  return j_terms(order_max, z);
}

std::vector<ScaledComplex> spherical_y(int order_max, cplx z) {
  check_argument(z, "spherical_y");
  if (z.imag() == 0.0) return to_complex_terms(y_terms(order_max, z.real()));
  return y_terms(order_max, z);
}

std::vector<RiccatiPair> riccati_sequence(RiccatiKind kind, int n_max, cplx z) {
  check_argument(z, "riccati");
  if (n_max < 0) throw DomainError("riccati: order must be >= 0");

  // z f_{-1}(z): cos z for j, sin z for y.
  auto build = [&](const std::vector<ScaledComplex>& f, cplx z_fm1) {
    std::vector<RiccatiPair> out(f.size());
    out[0] = {f[0] * z, ScaledComplex(z_fm1)};
    for (int n = 1; n <= n_max; ++n) out[n] = {f[n] * z, f[n - 1] * z - f[n] * cplx(n)};
    return out;
  };

  switch (kind) {
    case RiccatiKind::J:
      return build(spherical_j(n_max, z), std::cos(z));
    case RiccatiKind::Y:
      return build(spherical_y(n_max, z), std::sin(z));
    case RiccatiKind::H1: {
      auto pj = build(spherical_j(n_max, z), std::cos(z));
      const auto py = build(spherical_y(n_max, z), std::sin(z));
      const cplx i(0.0, 1.0);
      for (std::size_t n = 0; n < pj.size(); ++n) {
        pj[n].psi = pj[n].psi + py[n].psi * i;
        pj[n].psi_prime = pj[n].psi_prime + py[n].psi_prime * i;
      }
      return pj;
    }
  }
  return {};
}

RiccatiPair riccati(RiccatiKind kind, int n, cplx z) { return riccati_sequence(kind, n, z).back(); }

std::vector<cplx> psi_log_derivative(int n_max, cplx z) {
  check_argument(z, "psi_log_derivative");
  std::vector<cplx> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = std::cos(z) / std::sin(z);
  if (n_max == 0) return out;
  const auto r = j_ratios(n_max, z);
  for (int n = 1; n <= n_max; ++n) out[n] = 1.0 / r[n] - double(n) / z;
  return out;
}

std::vector<cplx> xi_log_derivative(int n_max, cplx z) {
  check_argument(z, "xi_log_derivative");
  const cplx i(0.0, 1.0);
  std::vector<cplx> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = i;
  cplx rho = (1.0 - i * z) / z;  // h_1/h_0
  for (int n = 1; n <= n_max; ++n) {
    out[n] = 1.0 / rho - double(n) / z;
    rho = double(2 * n + 1) / z - 1.0 / rho;
  }
  return out;
}

std::vector<AngularFunctions> angular_sequence(int n_max, int m, double theta) {
  if (m < 0 || m > n_max) throw DomainError("angular_functions: need 0 <= m <= n");
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw DomainError("angular_functions: theta outside [0, pi]");

  double s = std::sin(theta);
  double c = std::cos(theta);
  if (theta == 0.0) {
    s = 0.0;
    c = 1.0;
  } else if (theta == std::numbers::pi) {
    s = 0.0;
    c = -1.0;
  }

  // q[k][n - m] = d^{m+k} P_n / dx^{m+k} at x = cos theta, k = 0, 1.
  auto derivs = [&](int order) {
    std::vector<double> q(static_cast<std::size_t>(n_max - m) + 1, 0.0);
    if (order > n_max) return q;
    double qmm = 1.0;
    for (int k = 1; k <= order; ++k) qmm *= (2.0 * k - 1.0);
    double prev = 0.0;
    double cur = qmm;
    for (int n = order; n <= n_max; ++n) {
      if (n > order) {
        const double next = ((2.0 * n - 1.0) * c * cur - (n + order - 1.0) * prev) / (n - order);
        prev = cur;
        cur = next;
      }
      if (n >= m) q[n - m] = cur;
    }
    return q;
  };
  const auto q0 = derivs(m);
  const auto q1 = derivs(m + 1);

  // s^k with 0^0 = 1.
  auto spow = [&](int k) { return k == 0 ? 1.0 : std::pow(s, k); };

  std::vector<AngularFunctions> out;
  out.reserve(q0.size());
  for (int n = m; n <= n_max; ++n) {
    const double qa = q0[n - m];
    const double qb = q1[n - m];
    AngularFunctions a;
    a.n = n;
    a.m = m;
    a.theta = theta;
    a.p = spow(m) * qa;
    a.pi_fn = m == 0 ? 0.0 : m * spow(m - 1) * qa;
    a.tau_fn = (m == 0 ? 0.0 : m * c * spow(m - 1) * qa) - spow(m + 1) * qb;
    if (!std::isfinite(a.p) || !std::isfinite(a.tau_fn)) throw DomainError("angular_functions: overflow at large m");
    out.push_back(a);
  }
  return out;
}

AngularFunctions angular_functions(int n, int m, double theta) {
  if (m < 0 || m > n) throw DomainError("angular_functions: need 0 <= m <= n");
  return angular_sequence(n, m, theta).back();
}

}  // namespace wgm
