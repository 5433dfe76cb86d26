#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "wgm/scaled.hpp"

namespace wgm {

using cplx = std::complex<double>;

/// j_n or y_n for n = 0..order_max at one real argument.
///
/// Each term carries its own binary exponent. A single shared exponent is
/// not enough: at (n, x) = (2312, 360) the sequence spans more than 4000
/// decades.
struct BesselSequence {
  int order_max = 0;
  double argument = 0.0;
  std::vector<ScaledReal> terms;

  /// Plain double value of term n (0 or inf outside the double range).
  double value(int n) const { return terms.at(n).value(); }
  /// Binary exponent of term n; 0 when the value is representable as is.
  std::int64_t scale_exponent(int n) const;
  std::vector<double> values() const;
};

BesselSequence bessel_j_sequence(int order_max, double x);
BesselSequence bessel_y_sequence(int order_max, double x);

// Complex-argument variants used by the resonance search.
std::vector<ScaledComplex> spherical_j(int order_max, cplx z);
std::vector<ScaledComplex> spherical_y(int order_max, cplx z);

/// Miller start order for the downward recurrence of j_n.
int miller_start_order(int order_max, double abs_z);

enum class RiccatiKind { J, Y, H1 };

/// (z * f_n(z), d/dz [z * f_n(z)]) with f = j_n, y_n or h_n^(1).
struct RiccatiPair {
  ScaledComplex psi;
  ScaledComplex psi_prime;

  cplx value() const { return psi.value(); }
  cplx derivative() const { return psi_prime.value(); }
};

RiccatiPair riccati(RiccatiKind kind, int n, cplx z);
std::vector<RiccatiPair> riccati_sequence(RiccatiKind kind, int n_max, cplx z);

/// psi_n'/psi_n for psi_n = z j_n(z), n = 0..n_max. Pole-free ratio
/// recurrence; no scaling needed.
std::vector<cplx> psi_log_derivative(int n_max, cplx z);
/// xi_n'/xi_n for xi_n = z h_n^(1)(z), n = 0..n_max.
std::vector<cplx> xi_log_derivative(int n_max, cplx z);

struct AngularFunctions {
  int n = 0;
  int m = 0;
  double theta = 0.0;
  double p = 0.0;       // P_n^m(cos theta), no Condon-Shortley phase
  double pi_fn = 0.0;   // m P_n^m / sin theta
  double tau_fn = 0.0;  // d P_n^m / d theta
};

AngularFunctions angular_functions(int n, int m, double theta);
/// Rows n = m..n_max (index n - m) at fixed m.
std::vector<AngularFunctions> angular_sequence(int n_max, int m, double theta);

}  // namespace wgm
