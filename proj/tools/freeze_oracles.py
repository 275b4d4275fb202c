"""Regenerates tests/oracle_values.hpp from mpmath at 30 significant digits.

Every value here is computed from the defining integrals or special functions,
independently of the C++ library.
"""
import mpmath as mp

mp.mp.dps = 30
SQRT_PI = mp.sqrt(mp.pi)


def dawson(x):
    return SQRT_PI / 2 * mp.exp(-x * x) * mp.erfi(x)


def lambda0_real(mu):
    return 1 - 2 * mu * dawson(mu)


def s(mu):
    return SQRT_PI * mu * mp.exp(-mu * mu)


def faddeeva(z):
    return mp.exp(-z * z) * mp.erfc(-1j * z)


def lambda0_upper(z):
    return 1 + 1j * SQRT_PI * z * faddeeva(z)


def dispersion(z, w):
    z = mp.mpc(z)
    l0 = lambda0_upper(z) if z.imag > 0 else mp.conj(lambda0_upper(mp.conj(z)))
    return -1j * w + l0


MU0 = mp.findroot(lambda0_real, 0.92)


def omega_star():
    g = lambda m: s(m) ** 2 - lambda0_real(m) ** 2
    m = mp.findroot(lambda m: mp.diff(g, m), 0.8)
    return mp.sqrt(g(m)), m


def density(u, w, kappa):
    # ln G with the principal logarithm, then shifted onto the continuous branch.
    l0 = lambda0_real(u)
    g = (l0 + 1j * (s(u) - w)) / (l0 - 1j * (s(u) + w))
    psi = mp.log(g)
    if kappa == 1 and psi.imag >= 0:
        psi -= 2j * mp.pi
    return psi


def cauchy(z, w, kappa):
    f = lambda u: density(u, w, kappa) / (u - z)
    return mp.quad(f, [0, MU0, 1, 3, 7]) / (2j * mp.pi)


def v1(w, kappa):
    return -mp.quad(lambda u: density(u, w, kappa), [0, MU0, 1, 3, 7]) / (2j * mp.pi)


def eta0_family(targets):
    # Continuation in omega1 from the small-frequency asymptote.
    out = {}
    w = mp.mpf("0.01")
    root = (1 + 1j) / (2 * mp.sqrt(w))
    for target in sorted(targets):
        for step in mp.linspace(w, target, 20):
            root = mp.findroot(lambda z: dispersion(z, step), mp.mpc(root))
        w = target
        z0 = 1 - 1j * w
        out[target] = root if (z0 / root).real > 0 else -root
    return out


def c(x):
    return mp.nstr(x, 20, strip_zeros=False)


def cz(z):
    return "{%s, %s}" % (c(mp.re(z)), c(mp.im(z)))


lines = ["#pragma once", "", "// Generated by tools/freeze_oracles.py (mpmath, 30 digits). Do not edit.", "",
         "#include <complex>", "", "namespace oracle {", ""]
lines.append("inline constexpr double kMu0 = %s;" % c(MU0))
lines.append("inline constexpr double kIndexThreshold = %s;" % c(s(MU0)))
ws, wm = omega_star()
lines.append("inline constexpr double kOmegaStar = %s;" % c(ws))
lines.append("inline constexpr double kOmegaStarArgmax = %s;" % c(wm))
lines.append("")
lines.append("struct RealPoint { double x; double value; };")
lines.append("struct ComplexPoint { std::complex<double> z; std::complex<double> value; };")
lines.append("")
lines.append("// lambda0 on the real axis, 1 - 2 mu D(mu) with D Dawson's integral.")
lines.append("inline const RealPoint kLambda0Real[] = {")
for mu in ["0.1", "0.5", "1", "2", "3.5", "6"]:
    lines.append("    {%s, %s}," % (mu, c(lambda0_real(mp.mpf(mu)))))
lines.append("};")
lines.append("")
lines.append("// w(z) = exp(-z^2) erfc(-i z).")
lines.append("inline const ComplexPoint kFaddeeva[] = {")
for z in [mp.mpc(1, 1), mp.mpc(0.5, 0.1), mp.mpc(3, 2), mp.mpc(-2, 0.5), mp.mpc(0.1, 5), mp.mpc(6, 0.01), mp.mpc(9.5, 0.5)]:
    lines.append("    {%s, %s}," % (cz(z), cz(faddeeva(z))))
lines.append("};")
lines.append("")
lines.append("// lambda0 beyond the continued-fraction radius.")
lines.append("inline const ComplexPoint kLambda0Far[] = {")
for z in [mp.mpc(12, 3), mp.mpc(-15, 0.5), mp.mpc(0.5, 11), mp.mpc(30, -4)]:
    l0 = lambda0_upper(z) if z.imag > 0 else mp.conj(lambda0_upper(mp.conj(z)))
    lines.append("    {%s, %s}," % (cz(z), cz(l0)))
lines.append("};")
lines.append("")
lines.append("// V(+-i) at omega1 = 0.3 and V1 at omega1 = 1.0.")
lines.append("inline const std::complex<double> kVPlusI_03 = %s;" % cz(cauchy(1j, mp.mpf("0.3"), 1)))
lines.append("inline const std::complex<double> kVMinusI_03 = %s;" % cz(cauchy(-1j, mp.mpf("0.3"), 1)))
lines.append("inline const std::complex<double> kV1_10 = %s;" % cz(v1(mp.mpf(1), 0)))
lines.append("inline const std::complex<double> kV1_03 = %s;" % cz(v1(mp.mpf("0.3"), 1)))
lines.append("")
lines.append("// Selected zero of lambda, Re((1 - i omega1) / eta0) > 0.")
lines.append("struct Eta0Point { double omega1; std::complex<double> eta0; };")
lines.append("inline const Eta0Point kEta0[] = {")
family = eta0_family([mp.mpf(w) for w in ["0.01", "0.05", "0.1", "0.3", "0.5", "0.69"]])
for w, root in family.items():
    lines.append("    {%s, %s}," % (mp.nstr(w, 3), cz(root)))
lines.append("};")
lines.append("")
lines.append("}  // namespace oracle")
print("\n".join(lines))
