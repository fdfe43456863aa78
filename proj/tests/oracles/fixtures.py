#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
#
# Extended-precision substitution oracle for the frozen test fixtures.
# Evaluates every closed form directly with mpmath (40 digits), without
# touching the C++ implementation. Re-run to regenerate the values pasted
# into tests/*.cpp and tests/data/snr_sweep_5pt.csv.

from mpmath import mp, mpf, pi, sqrt, exp, log10, cos

mp.dps = 40

HBAR = mpf("1.054571817e-34")
EPS0 = mpf("8.8541878128e-12")
Q = mpf("1.602176634e-19")
A0 = mpf("5.29177210903e-11")
KB = mpf("1.380649e-23")
C = mpf(299792458)
Z = mpf(377)

TWO_PI = 2 * pi
MHZ = TWO_PI * mpf(10) ** 6

# Default atomic parameters
gamma2 = mpf("5.2") * MHZ
omega_p = mpf("4.75") * MHZ
omega_c = mpf("1.66") * MHZ
omega_lo = mpf("0.6") * MHZ
dipole_12 = mpf("4.5") * Q * A0
dipole_rf = mpf("551.35") * Q * A0
n0 = mpf("4.89e16")
cell = mpf("0.01")
lam = mpf("852.347e-9")
p_bar = mpf("10e-6")

# Default link / receiver parameters
pt, gt, rcs, ae, as_ = mpf(10), mpf(10), mpf(1), mpf("1e-4"), mpf("1e-4")
f1 = mpf("29.539e9")
apd_m, resp, rl, p0, idark, temp, be = (mpf(50), mpf("0.6"), mpf(1000),
                                        mpf("10e-6"), mpf("1e-9"), mpf(300),
                                        mpf("1e6"))
ts = mpf(1000)
fs, nsamp = mpf(60000), 2048


def show(name, value):
    print(f"{name:34s} {mp.nstr(value, 17)}")


def im_rho21_printed(op, oc, orf, dc, g):
    # Literal printed form with the nested 1/(4 delta_c) term.
    inner = oc ** 4 / (8 * (orf ** 2 / (4 * dc) + dc) ** 2) + 2 * g ** 2
    return -op * g / inner


def chain():
    c0 = -2 * n0 * dipole_12 ** 2 / (EPS0 * HBAR * omega_p)
    abar = gamma2 * omega_p / (gamma2 ** 2 + 2 * omega_p ** 2)
    gam = omega_p * sqrt(2 * (omega_c ** 2 + omega_p ** 2) / (2 * omega_p ** 2 + gamma2 ** 2))
    lam_ratio = gam ** 2 / (omega_lo ** 2 + gam ** 2)
    kp = -2 * omega_lo * gam ** 2 / (omega_lo ** 2 + gam ** 2) ** 2
    alpha = (TWO_PI / lam) * cell * c0 * abar
    kappa = alpha * p_bar * kp
    c_gain = kappa * dipole_rf / HBAR
    return dict(c0=c0, abar=abar, gamma=gam, lambda_ratio=lam_ratio,
                kappa_p=kp, alpha=alpha, kappa=kappa, c=c_gain)


def received_power(r):
    return pt * gt * rcs * ae / ((4 * pi) ** 2 * r ** 4)


def noise():
    i0 = resp * p0
    shot = 2 * Q * (i0 + idark) * apd_m ** mpf("2.3") * be
    thermal = 4 * KB * temp * be / rl
    return shot, thermal


def quantum_snr(r, c_gain):
    shot, thermal = noise()
    return mpf("0.5") * (apd_m * resp * c_gain) ** 2 * (
        2 * Z * pt * gt * rcs / ((4 * pi) ** 2 * r ** 4)) / (shot + thermal)


def classical_snr(r):
    return pt * gt * rcs * as_ / ((4 * pi) ** 2 * r ** 4 * KB * ts * be)


def main():
    show("rabi(551.35 e a0, 1 V/m)", dipole_rf / HBAR)
    ch = chain()
    for k, v in ch.items():
        show(k, v)
    # Gamma with omega_c = 0
    show("gamma(omega_c=0)", omega_p * sqrt(2 * omega_p ** 2 / (2 * omega_p ** 2 + gamma2 ** 2)))
    # C with the printed dipole 2.5 e a0
    show("c(dipole_12 = 2.5 e a0)", ch["c"] * (mpf("2.5") / mpf("4.5")) ** 2)
    show("im_rho21(rf=lo, dc=2pi*1MHz)", im_rho21_printed(omega_p, omega_c, omega_lo, MHZ, gamma2))
    show("probe_tx(20.7uW, chi=1e-5)", mpf("20.7e-6") * exp(-(TWO_PI / lam) * cell * mpf("1e-5")))

    c_gain = -ch["c"]
    pr = received_power(1000)
    show("received_power(1000)", pr)
    show("echo_amplitude(1000)", sqrt(2 * Z * pr / ae))
    shot, thermal = noise()
    show("noise_shot", shot)
    show("noise_thermal", thermal)
    show("noise_variance", shot + thermal)
    for r in (100, 1000, 10000):
        show(f"quantum_snr({r})", quantum_snr(mpf(r), c_gain))
    show("classical_snr(1000)", classical_snr(mpf(1000)))
    show("gap_db", 10 * log10(quantum_snr(mpf(1000), c_gain) / classical_snr(mpf(1000))))
    df = 2 * 100 * f1 / C
    show("doppler_shift(100 m/s)", df)
    show("omega(100 m/s)", TWO_PI * df / fs)
    show("acrb_omega(1, 2048)", mpf(12) / (nsamp * (nsamp ** 2 - 1)))
    show("acrb_velocity(1, 2048)", 3 * fs ** 2 * C ** 2 / (4 * pi ** 2 * (nsamp ** 2 - 1) * nsamp * f1 ** 2))
    show("round_trip_delay(1500)", 2 * mpf(1500) / C)

    # Five-point log-spaced sweep fixture (100 m .. 10 km).
    print("\nrange_m,snr_quantum_db,snr_classical_db,rmse_quantum_mps,rmse_classical_mps,"
          "acrb_rms_quantum_mps,acrb_rms_classical_mps")
    for i in range(5):
        r = mpf(100) * mpf(100) ** (mpf(i) / 4)
        print(f"{mp.nstr(r, 17)},{mp.nstr(10 * log10(quantum_snr(r, c_gain)), 17)},"
              f"{mp.nstr(10 * log10(classical_snr(r)), 17)},,,,")


if __name__ == "__main__":
    main()
