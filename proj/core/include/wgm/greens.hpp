#pragma once

#include <array>
#include <complex>

#include "wgm/mie.hpp"

namespace wgm {

struct FieldPoint {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

enum class Parity { Even, Odd };
enum class RadialKind { RegularJ, OutgoingH };

struct VshValue {
  Parity parity = Parity::Even;
  int m = 0;
  int n = 1;
  RadialKind radial_kind = RadialKind::RegularJ;
  std::array<cplx, 3> components{};  // (r, theta, phi)
};

/// Prefactor c of the axial partial-wave sums, i * k0. Fixed by matching the
/// series to the closed form (see tests/unit/test_greens.cpp).
inline cplx partial_wave_prefactor(double k0) { return {0.0, k0}; }

/// rr component of (1 + k^-2 grad grad) e^{ikR}/R for two points on the
/// z-axis, R = r_a + r_b (opposite sides) or |r_a - r_b| (same side). Equals
/// the zz component on the same side and its negative on opposite sides.
cplx g0_closed_axial(double k0, double r_a, double r_b, bool same_side);

/// Partial-wave form of g0_closed_axial:
///   c * sum_n sigma^n n(n+1)(2n+1) j_n(k r<) h_n(k r>) / (k^2 r_a r_b).
cplx g0_partialwave_axial(double k0, double r_a, double r_b, bool same_side, int n_max);

/// Sphere-scattered part: j_n(k r<) replaced by A_n h_n(k r<).
cplx gs_scattered_axial(const SphereSystem& sys, double omega, double r_a, double r_b, bool same_side, int n_max);

/// Per-order terms of gs_scattered_axial (index n - 1), without the prefactor
/// or the 1/(k^2 r_a r_b) factor.
std::vector<cplx> gs_scattered_terms(const SphereSystem& sys, double omega, double r_a, double r_b, bool same_side,
                                     int n_max);

VshValue vsh_m(Parity parity, int m, int n, RadialKind kind, cplx k, const FieldPoint& p);
VshValue vsh_n(Parity parity, int m, int n, RadialKind kind, cplx k, const FieldPoint& p);

/// rr component of the free-space partial-wave dyadic assembled from general
/// N functions, sum over m and both parities, for points on the z-axis
/// (theta in {0, pi}). Used to check the axial reduction; returns the
/// per-order terms (index n - 1) including the prefactor and 1/(k^2 r_a r_b)
/// normalization of g0_partialwave_axial.
std::vector<cplx> vsh_assembled_rr_terms(double k0, const FieldPoint& a, const FieldPoint& b, int n_max);

}  // namespace wgm
