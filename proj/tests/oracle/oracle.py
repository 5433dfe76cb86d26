#!/usr/bin/env python3
"""Independent high-precision reference values for the unit tests.

Uses mpmath's Bessel functions of half-integer order (hypergeometric
series / asymptotics), not the recurrences of the library. Writes
tests/unit/oracle_values.hpp. Rerun only when a
reference case changes.
"""
import pathlib

import mpmath as mp

mp.mp.dps = 50


def sj(n, z):
    return mp.sqrt(mp.pi / (2 * z)) * mp.besselj(n + mp.mpf(1) / 2, z)


def sy(n, z):
    return mp.sqrt(mp.pi / (2 * z)) * mp.bessely(n + mp.mpf(1) / 2, z)


def sh(n, z):
    return sj(n, z) + 1j * sy(n, z)


def riccati(f, n, z):
    return z * f(n, z), z * f(n - 1, z) - n * f(n, z)


def mie_a(n, x, m):
    """A = -a_BH (sign convention of the library), TM."""
    p, dp = riccati(sj, n, x)
    q, dq = riccati(sj, n, m * x)
    h, dh = riccati(sh, n, x)
    return -(m * q * dp - p * dq) / (m * q * dh - h * dq)


def mie_b(n, x, m):
    p, dp = riccati(sj, n, x)
    q, dq = riccati(sj, n, m * x)
    h, dh = riccati(sh, n, x)
    return -(q * dp - m * p * dq) / (q * dh - m * h * dq)


def tm_denominator(n, w, a, m):
    x = 2 * mp.pi * w * a
    q, dq = riccati(sj, n, m * x)
    h, dh = riccati(sh, n, x)
    return m * q * dh - h * dq


def pair_z(w, a, m, ra, rb, opposite, skip=None):
    """gamma_0-normalized coupling: closed-form free part + scattered sum.

    The scattered series is summed by mpmath's nsum (Shanks/Levin
    acceleration). With both points on the surface the opposite-side
    series only converges in the Abel sense; nsum returns that limit.
    """
    k = 2 * mp.pi * w
    x, xa, xb = k * a, k * ra, k * rb

    def term(n):
        n = int(n)
        if n == skip:
            return mp.mpc(0)
        sig = (-1) ** n if opposite else 1
        return sig * n * (n + 1) * (2 * n + 1) * mie_a(n, x, m) * sh(n, xa) * sh(n, xb)

    # Orders below the mode region are oscillatory; sum them directly and
    # accelerate only the smooth tail.
    head = int(mp.ceil(m * x)) + 40
    s = mp.fsum(term(n) for n in range(1, head))
    s += mp.nsum(term, [head, mp.inf])
    s = mp.mpf(3) / 2 * s / (xa * xb)
    R = ra + rb if opposite else abs(ra - rb)
    g = mp.exp(1j * k * R) / R * (2 / (k * R) ** 2 - 2j / (k * R))
    if opposite:
        g = -g
    return s + 3 * g / (2j * k)


def c(v):
    v = mp.mpc(v)
    return "{%s, %s}" % (mp.nstr(v.real, 20), mp.nstr(v.imag, 20))


def r(v):
    return mp.nstr(mp.mpf(v), 20)


def main():
    out = []
    emit = out.append
    emit("#pragma once")
    emit("// Generated by tests/oracle/oracle.py (mpmath, 50 digits). Do not edit.")
    emit("#include <complex>")
    emit("namespace oracle {")
    emit("using cd = std::complex<double>;")

    emit("inline constexpr double j39_50_313 = %s;" % r(sj(39, mp.mpf("50.313"))))
    emit("inline constexpr double j10_50_313 = %s;" % r(sj(10, mp.mpf("50.313"))))
    emit("inline constexpr double j50_50_313 = %s;" % r(sj(50, mp.mpf("50.313"))))
    emit("inline constexpr double y39_50_313 = %s;" % r(sy(39, mp.mpf("50.313"))))
    # High orders: log2 of the magnitude split into integer and fractional
    # parts (the integer part alone exceeds double precision headroom), and
    # the sign.
    for name, f, n, x in [("j2312_360", sj, 2312, 360), ("y2312_360", sy, 2312, 360),
                          ("j2500_1", sj, 2500, 1), ("j2312_3307_5", sj, 2312, mp.mpf("3307.5")),
                          ("y2312_3307_5", sy, 2312, mp.mpf("3307.5")), ("j100_4000", sj, 100, 4000)]:
        v = f(n, mp.mpf(x))
        l2 = mp.log(abs(v), 2)
        emit("inline constexpr long log2_int_%s = %d;" % (name, int(mp.floor(l2))))
        emit("inline constexpr double log2_frac_%s = %s;" % (name, r(l2 - mp.floor(l2))))
        emit("inline constexpr int sign_%s = %d;" % (name, 1 if v > 0 else -1))

    z = mp.mpc("50.313", "0.001")
    p, dp = riccati(sj, 39, z)
    emit("inline const cd riccati_j39_complex_psi%s;" % c(p))
    emit("inline const cd riccati_j39_complex_dpsi%s;" % c(dp))
    h, dh = riccati(sh, 39, z)
    emit("inline const cd riccati_h39_complex_psi%s;" % c(h))
    emit("inline const cd riccati_h39_complex_dpsi%s;" % c(dh))

    # P_3^1(cos t) = (3/2)(5 cos^2 t - 1) sin t, no Condon-Shortley phase.
    t = mp.pi / 3
    emit("inline constexpr double p31_pi_3 = %s;" % r(mp.mpf(3) / 2 * (5 * mp.cos(t) ** 2 - 1) * mp.sin(t)))

    m = mp.mpf("1.46")
    x = 2 * mp.pi * mp.mpf("1.05") * 5
    emit("inline const cd mie_a39_a5_w1_05%s;" % c(mie_a(39, x, m)))
    emit("inline const cd mie_b39_a5_w1_05%s;" % c(mie_b(39, x, m)))
    emit("inline const cd mie_a5_a5_w1_05%s;" % c(mie_a(5, x, m)))

    # Complex roots of the TM denominator, refined from nearby starts.
    small = mp.findroot(lambda w: tm_denominator(39, w, 5, m), mp.mpc("1.0968356", "-0.00045"))
    emit("inline const cd root_tm39_l2_a5%s;" % c(small))
    small1 = mp.findroot(lambda w: tm_denominator(39, w, 5, m), mp.mpc("0.98673", "-4.1e-6"))
    emit("inline const cd root_tm39_l1_a5%s;" % c(small1))

    large = mp.findroot(lambda w: tm_denominator(2312, w, 200, m), mp.mpc("1.8027617431759", "-7.458e-10"))
    emit("inline const cd root_tm2312_a200%s;" % c(large))

    # Coupling on the small sphere, opposite sides.
    wg = small.real
    lam = 1 / wg
    for tag, d in [("d01", mp.mpf("0.1")), ("d10", mp.mpf(1))]:
        zc = pair_z(wg, 5, m, 5 + d * lam, 5 + d * lam, True)
        emit("inline const cd pair_small_%s_center%s;" % (tag, c(zc)))
    zs = pair_z(wg, 5, m, 5, 5, True, skip=39)
    emit("inline const cd pair_small_surface_suppressed%s;" % c(zs))
    emit("inline constexpr double small_omega_g = %s;" % r(wg))
    emit("}  // namespace oracle")

    path = pathlib.Path(__file__).resolve().parent.parent / "unit" / "oracle_values.hpp"
    path.write_text("\n".join(out) + "\n")
    print("\n".join(out))


if __name__ == "__main__":
    main()
