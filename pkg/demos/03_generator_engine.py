"""The convex-generator engine behind every family.

Each type-s family is sum q_i f(p_i/q_i) for one of five generating
functions.  The engine exposes the generator values and their first two
derivatives; convexity of f and f(1) = 0 are what make the family values
nonnegative, and the second derivatives are the raw material for the bound
certificates.
"""

from divbound import GeneratorSpec, convexity_scan, csiszar, gen_eval, validate
from divbound.families import omega_s, phi_s, zeta_s
from divbound.generators import Gen, gen_value

P = validate([0.4, 0.35, 0.25])
Q = validate([0.2, 0.5, 0.3])

print("normalization and curvature at x = 1:")
for gen in Gen:
    gv = gen_eval(GeneratorSpec(gen, 1.5), 1.0)
    print(f"  {gen.value:<12}  f(1) = {gv.value:+.1e}   f'(1) = {gv.d1:+.1e}"
          f"   f''(1) = {gv.d2:.6f}")

print()
print("engine value == family value:")
pairs = [
    (Gen.PHI, lambda s: phi_s(s, P.masses, Q.masses)),
    (Gen.PSI, lambda s: omega_s(s, P.masses, Q.masses)),
    (Gen.UPSILON, lambda s: omega_s(s, P.masses, Q.masses, adjoint=True)),
    (Gen.XI, lambda s: zeta_s(s, P.masses, Q.masses)),
    (Gen.VARSIGMA, lambda s: zeta_s(s, P.masses, Q.masses, adjoint=True)),
]
for gen, family in pairs:
    s = 1.7
    engine = csiszar(GeneratorSpec(gen, s), P, Q)
    print(f"  {gen.value:<12}  engine {engine:.15f}   family {family(s):.15f}")

print()
print("analytic curvature vs central finite differences (spec PHI, s = 3):")
spec = GeneratorSpec(Gen.PHI, 3.0)
for x in (0.2, 1.0, 5.0):
    h = 1e-4 * x
    fd = (gen_value(spec, x + h) - 2 * gen_value(spec, x) + gen_value(spec, x - h)) / h**2
    print(f"  x = {x:>4}: analytic {gen_eval(spec, x).d2:.10f}   difference {fd:.10f}")

print()
print("convexity scans on [0.1, 10]:")
for gen, s in [(Gen.PHI, -2.0), (Gen.PSI, 4.0), (Gen.XI, 0.0), (Gen.XI, 4.0), (Gen.XI, 5.0)]:
    scan = convexity_scan(GeneratorSpec(gen, s), 0.1, 10.0, 1025)
    status = "convex" if scan.convex else f"NON-CONVEX (min f'' = {scan.min_d2:.4f} at x = {scan.argmin_x:.3f})"
    print(f"  {gen.value:<12} s = {s:>4}: {status}")
print("  (the XI generator leaves its convexity range above s = 4)")
