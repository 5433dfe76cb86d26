#pragma once

#include <complex>
#include <vector>

#include "wgm/mie.hpp"
#include "wgm/modes.hpp"

namespace wgm {

/// Two radially oriented dipoles on the z-axis, outside the sphere.
struct AxialDipolePair {
  SphereSystem sys;
  double r_a = 0.0;  // a + d1
  double r_b = 0.0;  // a + d2
  bool same_side = false;
  double omega0 = 0.0;

  void validate() const;
};

/// All rates in units of the free-space decay rate gamma_0.
struct CouplingPoint {
  double omega0 = 0.0;
  double gamma_ratio = 0.0;
  double omega_shift = 0.0;
  double k_d = 0.0;
  double omega_d = 0.0;
};

struct SingleDipole {
  double gamma_ratio = 0.0;
  double omega_shift = 0.0;
};

struct PairCoupling {
  double k_d = 0.0;
  double omega_d = 0.0;

  cplx z() const { return {k_d, omega_d}; }
};

struct EnhancementResult {
  double k0d = 0.0;  // max |k_d| over the window
  double omega_at_max = 0.0;
  int sign_at_max = +1;
};

/// Reference enhancement factors are quoted on the bare mode-sum scale,
/// i.e. the gamma_0-normalized sums without their 3/2 prefactor. Multiply a
/// gamma_0-unit value by this to compare with them.
inline constexpr double kModeSumScale = 2.0 / 3.0;

/// On the surface (r_a == radius) the shift diverges and is returned as NaN.
/// Throws ConvergenceError when r_a is so close to the surface that the
/// geometric tail needs more than 2e6 orders.
SingleDipole single_dipole_response(const SphereSystem& sys, double omega0, double r_a);
/// Plain partial sum up to n_max.
SingleDipole single_dipole_response(const SphereSystem& sys, double omega0, double r_a, int n_max);

PairCoupling pair_coupling(const AxialDipolePair& pair);
/// n_max orders; opposite-side pairs also use 16 more for the tail averaging.
PairCoupling pair_coupling(const AxialDipolePair& pair, int n_max);

/// Free-space part alone, 3 g0 / (2 i k0).
PairCoupling free_pair_coupling(const AxialDipolePair& pair);

/// Grid of `points` equally spaced frequencies; `threads` <= 1 runs inline.
/// Results do not depend on the thread count.
std::vector<CouplingPoint> coupling_spectrum(const AxialDipolePair& pair, double omega_lo, double omega_hi,
                                             int points, int threads = 1);

CouplingPoint coupling_point(const AxialDipolePair& pair);

/// Maximum of |k_d| in [omega_c - w, omega_c + w]: 201-point grid, then
/// Brent refinement of the bracketing cell.
EnhancementResult enhancement_factor(const AxialDipolePair& pair, const Resonance& res, double window_halfwidth);

/// pair_coupling with the scattered term of order res.id.n removed.
PairCoupling suppressed_mode_coupling(const AxialDipolePair& pair, const Resonance& res);

/// Lorentzian single-mode forms. strength_s and strength_d are the resonant
/// amplitudes at line center; parity_sign is +1 for an even mode number (or
/// same-side dipoles) and -1 for odd n on opposite sides.
CouplingPoint single_mode_approx(const Resonance& res, double strength_s, double strength_d, double omega0,
                                 int parity_sign);

/// Resonant amplitudes for single_mode_approx: magnitude of the order-n
/// scattered contribution at omega_c, for the self term (at r_a) and the
/// pair term.
struct ModeStrengths {
  double self = 0.0;
  double pair = 0.0;
};
ModeStrengths fit_mode_strengths(const AxialDipolePair& pair, const Resonance& res);

int parity_sign(const AxialDipolePair& pair, int n);

}  // namespace wgm
