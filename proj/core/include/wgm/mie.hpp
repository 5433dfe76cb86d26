#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "wgm/scaled.hpp"
#include "wgm/specfun.hpp"

namespace wgm {

/// Dielectric sphere in vacuum. Frequencies are inverse vacuum wavelengths
/// (omega = 1/lambda in um^-1), so k0 = 2 pi omega.
struct SphereSystem {
  double radius = 1.0;      // um
  double eps_sphere = 1.0;  // relative permittivity; index = sqrt(eps)
  double eps_host = 1.0;

  double index() const;  // sqrt(eps_sphere / eps_host)
  void validate() const;

  bool operator==(const SphereSystem&) const = default;
};

inline double k0_of(double omega) { return 2.0 * std::numbers::pi * omega; }
inline cplx k0_of(cplx omega) { return 2.0 * std::numbers::pi * omega; }

/// Coefficients follow the convention A = -a_BH (Bohren-Huffman a_n), so
/// that |1 + 2A| = 1 for a lossless sphere and Q_ext carries a leading minus.
struct MieRow {
  int n = 0;
  cplx a_coeff;  // TM
  cplx b_coeff;  // TE
};

/// Sign s in the lossless identity |s + 2A_n| = 1.
inline constexpr int kUnitaritySign = +1;

/// A_n = -numerator / denominator, both kept in scaled form so that products
/// with high-order Hankel functions stay representable.
struct MieTerm {
  ScaledComplex a_num, a_den;
  ScaledComplex b_num, b_den;
};

std::vector<MieRow> mie_coefficients(const SphereSystem& sys, cplx omega, int n_max);
std::vector<MieRow> mie_coefficients(const SphereSystem& sys, double omega, int n_max);

/// Index 0 is unused; entries 1..n_max.
std::vector<MieTerm> mie_terms(const SphereSystem& sys, cplx omega, int n_max);

int choose_n_max(const SphereSystem& sys, double omega, double r_far);

double q_ext(const SphereSystem& sys, double omega);
double q_ext(const SphereSystem& sys, double omega, int n_max);

/// Per-order contributions (2n+1) * (-Re(A_n + B_n)), index n - 1.
std::vector<double> q_ext_terms(const SphereSystem& sys, double omega, int n_max);

}  // namespace wgm
