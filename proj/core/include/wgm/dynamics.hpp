#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "wgm/coupling.hpp"

namespace wgm {

/// Envelope equations dp/dt = M p, time in units of 1/gamma_0:
///   M = [[self_a, cross], [cross, self_b]].
struct EnvelopeSystem {
  cplx self_a;
  cplx self_b;
  cplx cross;
};

struct EnvelopeState {
  double t = 0.0;
  cplx p_a;
  cplx p_b;
};

/// Diagonal from the single-dipole responses, off-diagonal from the pair
/// coupling: self = -(gamma_ratio + i omega_shift), cross = -(k_d + i omega_d).
/// DomainError for a dipole on the surface.
EnvelopeSystem build_envelope_system(const AxialDipolePair& pair);

/// Largest step allowed by evolve().
double max_stable_step(const EnvelopeSystem& sys);

/// Fixed-step classical RK4 from initial.t to t_end. Returns every state,
/// initial included.
std::vector<EnvelopeState> evolve(const EnvelopeSystem& sys, const EnvelopeState& initial, double t_end, double dt);

/// Eigenvalues of M.
std::array<cplx, 2> generator_eigenvalues(const EnvelopeSystem& sys);

struct TransferMetrics {
  double max_pb2 = 0.0;
  double t_at_max = 0.0;
  std::optional<double> period;  // empty: monotone regime, no oscillation
};

TransferMetrics transfer_metrics(const std::vector<EnvelopeState>& trajectory);

}  // namespace wgm
