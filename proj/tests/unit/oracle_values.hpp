#pragma once
// Generated by tests/oracle/oracle.py (mpmath, 50 digits). Do not edit.
#include <complex>
namespace oracle {
using cd = std::complex<double>;
inline constexpr double j39_50_313 = -0.01688338496211970211;
inline constexpr double j10_50_313 = -0.018298400293183917693;
inline constexpr double j50_50_313 = 0.020402445101907125491;
inline constexpr double y39_50_313 = -0.01873290162798019009;
inline constexpr long log2_int_j2312_360 = -5213;
inline constexpr double log2_frac_j2312_360 = 0.30568713692331168316;
inline constexpr int sign_j2312_360 = 1;
inline constexpr long log2_int_y2312_360 = 5192;
inline constexpr double log2_frac_y2312_360 = 0.044919237468472836953;
inline constexpr int sign_y2312_360 = -1;
inline constexpr long log2_int_j2500_1 = -27126;
inline constexpr double log2_frac_j2500_1 = 0.66853232099741907784;
inline constexpr int sign_j2500_1 = 1;
inline constexpr long log2_int_j2312_3307_5 = -12;
inline constexpr double log2_frac_j2312_3307_5 = 0.44411847896402453083;
inline constexpr int sign_j2312_3307_5 = 1;
inline constexpr long log2_int_y2312_3307_5 = -13;
inline constexpr double log2_frac_y2312_3307_5 = 0.1173145891879568416;
inline constexpr int sign_y2312_3307_5 = 1;
inline constexpr long log2_int_j100_4000 = -13;
inline constexpr double log2_frac_j100_4000 = 0.88708524103506592196;
inline constexpr int sign_j100_4000 = -1;
inline const cd riccati_j39_complex_psi{-0.84945391058371023803, 0.00059871160238020354704};
inline const cd riccati_j39_complex_dpsi{0.59871167202697067706, 0.00032596917630328639639};
inline const cd riccati_h39_complex_psi{-0.84894098177139441265, -0.94190994884516586552};
inline const cd riccati_h39_complex_dpsi{0.59834999405985413553, -0.51260291644613757898};
inline constexpr double p31_pi_3 = 0.32475952641916449254;
inline const cd mie_a39_a5_w1_05{-2.0859068055121319083e-6, 0.0014442653684503172447};
inline const cd mie_b39_a5_w1_05{-5.061853942289527245e-7, 0.0007114668917140834838};
inline const cd mie_a5_a5_w1_05{-0.48680938568874150703, -0.49982597741022987233};
inline const cd root_tm39_l2_a5{1.0968356217146113318, -0.00044954537201913227683};
inline const cd root_tm39_l1_a5{0.98672999982218759179, -4.1027647770918464578e-6};
inline const cd root_tm2312_a200{1.8027617431758973416, -7.4582417581428074653e-10};
inline const cd pair_small_d01_center{-5.097782107143761053, -0.82247848675788652781};
inline const cd pair_small_d10_center{0.0073844563150629051488, -0.1591071953702093336};
inline const cd pair_small_surface_suppressed{-0.10443818350581321925, -1.3286497681314406358};
inline constexpr double small_omega_g = 1.0968356217146113318;
}  // namespace oracle
