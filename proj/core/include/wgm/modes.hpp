#pragma once

#include <complex>
#include <string>
#include <vector>

#include "wgm/mie.hpp"

namespace wgm {

enum class Polarization { TM, TE };

std::string to_string(Polarization p);
Polarization polarization_from_string(const std::string& s);

struct ModeId {
  Polarization polarization = Polarization::TM;
  int n = 1;
  int l = 1;  // 1-based rank among roots of (polarization, n) by frequency
};

struct Resonance {
  ModeId id;
  double omega_c = 0.0;  // Re of the complex root
  double kappa = 0.0;    // -Im of the complex root
  double q_factor = 0.0;
  int iterations = 0;

  cplx root() const { return {omega_c, -kappa}; }
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Mie denominator of A_n (TM) or B_n (TE) divided by xi_n(x) psi_n(y):
///   TM: m xi'/xi(x) - psi'/psi(y),  TE: xi'/xi(x) - m psi'/psi(y).
/// Same zeros as the raw denominator; O(1) magnitude at any order.
cplx denominator(Polarization pol, const SphereSystem& sys, int n, cplx omega);

/// Real, pole-free companion of the denominator on the real axis. Its sign
/// changes mark the real parts of the resonances; used for counting.
double secular(Polarization pol, const SphereSystem& sys, int n, double omega);

/// Frequency below which (pol, n) has no resonance: interior size
/// parameter equal to n + 1/2.
double root_floor(const SphereSystem& sys, int n);

std::vector<Bracket> scan_candidates(Polarization pol, const SphereSystem& sys, int n, double omega_lo,
                                     double omega_hi, int grid_points);

/// Complex Newton on the denominator from a real starting frequency.
/// The returned Resonance has l = 0 (unlabeled).
Resonance refine_resonance(Polarization pol, const SphereSystem& sys, int n, double omega_guess);

/// All roots with real part in [omega_lo, omega_hi], labeled by their rank
/// in the full spectrum of (pol, n).
std::vector<Resonance> order_number(Polarization pol, const SphereSystem& sys, int n, double omega_lo,
                                    double omega_hi);

/// The l-th root of (pol, n).
Resonance find_mode(Polarization pol, const SphereSystem& sys, int n, int l);

/// The root nearest to a frequency hint, labeled.
Resonance find_mode_near(Polarization pol, const SphereSystem& sys, int n, double omega_hint);

}  // namespace wgm
