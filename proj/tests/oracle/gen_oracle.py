#!/usr/bin/env python3
"""Golden-value generator for the zeta evaluator and ladder tests.

Implements an independent Euler-Maclaurin evaluation of zeta(1/2+it) in
mpmath arbitrary precision, cross-checks it against mpmath.zeta, and then
freezes reference values (theta, Z, |zeta|^2, zero ordinates, closed-form
integrals, prime counts) into tests/oracle/oracle_data.hpp.

The C++ implementation under test uses the Riemann-Siegel formula; nothing
in this script shares code or method with it.

Run from the repository root:  python3 tests/oracle/gen_oracle.py
"""

import random

import mpmath as mp
from sympy import primepi

mp.mp.dps = 40

OUT = "tests/oracle/oracle_data.hpp"


# ---------------------------------------------------------------------------
# Euler-Maclaurin zeta, written from the summation formula directly.
# zeta(s) = sum_{n<M} n^-s + M^-s/2 + M^(1-s)/(s-1)
#           + sum_{j>=1} B_2j/(2j)! * (s)_{2j-1} * M^(-s-2j+1)
# with (s)_m the rising factorial. M ~ 1.2*t makes the tail terms collapse
# at a rate of about (t/(2*pi*M))^2 per term.
# ---------------------------------------------------------------------------

def zeta_em(s, nterms=24):
    t = abs(mp.im(s))
    M = max(16, int(mp.ceil(mp.mpf("1.2") * t)) + 8)
    total = mp.mpc(0)
    for n in range(1, M):
        total += mp.power(n, -s)
    total += mp.power(M, -s) / 2
    total += mp.power(M, 1 - s) / (s - 1)
    rising = s  # s(s+1)...(s+2j-2), built incrementally
    for j in range(1, nterms + 1):
        coeff = mp.bernoulli(2 * j) / mp.factorial(2 * j)
        total += coeff * rising * mp.power(M, -s - 2 * j + 1)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return total


def theta_exact(t):
    t = mp.mpf(t)
    return mp.im(mp.loggamma(mp.mpf("0.25") + 0.5j * t)) - t * mp.log(mp.pi) / 2


def z_exact(t):
    t = mp.mpf(t)
    val = mp.expjpi(theta_exact(t) / mp.pi) * zeta_em(mp.mpc(0.5, t))
    assert abs(mp.im(val)) < mp.mpf("1e-25"), (t, val)
    return mp.re(val)


def find_zero(a, b):
    fa, fb = z_exact(a), z_exact(b)
    assert fa * fb < 0, (a, b)
    for _ in range(200):
        m = (a + b) / 2
        fm = z_exact(m)
        if fa * fm <= 0:
            b, fb = m, fm
        else:
            a, fa = m, fm
        if b - a < mp.mpf("1e-25"):
            break
    return (a + b) / 2


def zeros_above(t_start, count, step=mp.mpf("0.25")):
    zeros = []
    a = mp.mpf(t_start)
    fa = z_exact(a)
    while len(zeros) < count:
        b = a + step
        fb = z_exact(b)
        if fa * fb < 0:
            zeros.append(find_zero(a, b))
        a, fa = b, fb
    return zeros


def d17(x):
    return mp.nstr(mp.mpf(x), 17, strip_zeros=False)


def main():
    # Oracle self-check: EM route vs mpmath's own zeta.
    for t in ["14.1", "50.123", "100", "333.77", "1234.5", "4999.9"]:
        s = mp.mpc(0.5, mp.mpf(t))
        diff = abs(zeta_em(s) - mp.zeta(s))
        assert diff < mp.mpf("1e-25"), (t, diff)
    print("EM self-check vs mpmath.zeta: ok")

    theta_gram = theta_exact("17.8455995")
    theta_100 = theta_exact(100)
    z_100 = z_exact(100)
    zsq_100 = z_100 ** 2

    print("theta(17.8455995) =", mp.nstr(theta_gram, 8))
    print("theta(100)        =", mp.nstr(theta_100, 12))
    print("Z(100)            =", mp.nstr(z_100, 12))
    print("|zeta(.5+100i)|^2 =", mp.nstr(zsq_100, 12))

    first_two = zeros_above(12, 2)
    above_50 = zeros_above(50, 5)
    above_200 = zeros_above(200, 1)
    print("first two zeros:", [mp.nstr(z, 13) for z in first_two])
    print("first 5 above 50:", [mp.nstr(z, 13) for z in above_50])
    print("first above 200:", mp.nstr(above_200[0], 13))

    # Trig-family means over [100*pi, 100*pi + 0.5], by mpmath quadrature.
    a = 100 * mp.pi
    u = mp.mpf("0.5")
    mean_f1 = mp.quad(lambda x: x * mp.sin(x) ** 2, [a, a + u]) / u
    mean_f2 = mp.quad(lambda x: x * mp.cos(x) ** 2, [a, a + u]) / u
    mean_f3 = mp.quad(lambda x: x * mp.cos(2 * x), [a, a + u]) / u
    print("mean f1 =", mp.nstr(mean_f1, 12))
    print("mean f2 =", mp.nstr(mean_f2, 12))
    print("mean f3 =", mp.nstr(mean_f3, 12))

    # 200 reproducible sample heights in [50, 5000].
    rng = random.Random(20250816)
    sample_t = sorted(mp.mpf(repr(50.0 + 4950.0 * rng.random())) for _ in range(200))
    samples = [(t, z_exact(t)) for t in sample_t]
    print("sampled", len(samples), "heights in [50,5000]")

    # Low-height stress points exercising the Riemann-Siegel fractional part,
    # including p near the removable singularities at 1/4 and 3/4.
    stress = []
    for N in (3, 5):
        for p in ("0.02", "0.24", "0.26", "0.49", "0.51", "0.74", "0.76", "0.97"):
            t = 2 * mp.pi * (N + mp.mpf(p)) ** 2
            stress.append((t, z_exact(t)))
    print("stress points:", len(stress))

    pi_goldens = [(n, int(primepi(n))) for n in
                  (1, 100, 200, 314, 3141, 15708, 31416, 1000000)]
    print("prime pi:", pi_goldens)

    with open(OUT, "w") as f:
        f.write("// Generated by tests/oracle/gen_oracle.py -- do not edit.\n")
        f.write("// Arbitrary-precision Euler-Maclaurin reference values.\n")
        f.write("#pragma once\n\n")
        f.write("namespace oracle {\n\n")
        f.write("struct TZ { double t; double z; };\n\n")
        f.write(f"inline constexpr double kThetaAtGram = {d17(theta_gram)};\n")
        f.write(f"inline constexpr double kTheta100 = {d17(theta_100)};\n")
        f.write(f"inline constexpr double kZ100 = {d17(z_100)};\n")
        f.write(f"inline constexpr double kZetaModSq100 = {d17(zsq_100)};\n\n")
        f.write(f"inline constexpr double kZero1 = {d17(first_two[0])};\n")
        f.write(f"inline constexpr double kZero2 = {d17(first_two[1])};\n")
        f.write("inline constexpr double kZerosAbove50[5] = {\n")
        for z in above_50:
            f.write(f"    {d17(z)},\n")
        f.write("};\n")
        f.write(f"inline constexpr double kFirstZeroAbove200 = {d17(above_200[0])};\n\n")
        f.write(f"inline constexpr double kMeanF1_L100_U05 = {d17(mean_f1)};\n")
        f.write(f"inline constexpr double kMeanF2_L100_U05 = {d17(mean_f2)};\n")
        f.write(f"inline constexpr double kMeanF3_L100_U05 = {d17(mean_f3)};\n\n")
        f.write("inline constexpr TZ kZSamples[200] = {\n")
        for t, z in samples:
            f.write(f"    {{{d17(t)}, {d17(z)}}},\n")
        f.write("};\n\n")
        f.write(f"inline constexpr TZ kZStress[{len(stress)}] = {{\n")
        for t, z in stress:
            f.write(f"    {{{d17(t)}, {d17(z)}}},\n")
        f.write("};\n\n")
        f.write("struct PiX { double x; long long count; };\n")
        f.write(f"inline constexpr PiX kPrimePi[{len(pi_goldens)}] = {{\n")
        for n, c in pi_goldens:
            f.write(f"    {{{n}, {c}}},\n")
        f.write("};\n\n")
        f.write("}  // namespace oracle\n")
    print("wrote", OUT)


if __name__ == "__main__":
    main()
