"""Vacuum pressure in a compactified direction: the zero-temperature story.

A free field living in a space where one direction is a circle of
circumference L pushes on the "walls" of that direction.  This script
walks through the closed-form massless limits, shows how a mass
suppresses the force, and recovers the classic parallel-plate results
through the L = 2a mapping.
"""

import math

from casimircavity import (
    CavityConfig,
    FieldKind,
    dirichlet_pressure,
    massless_vacuum_pressure,
    vacuum_pressure,
)

# --- massless fields: the four closed forms ---------------------------------
print("Massless vacuum pressure at D = 4, L = 1 (natural units):")
for field in (FieldKind.SCALAR, FieldKind.FERMION):
    for theta, name in ((0.0, "periodic"), (1.0, "antiperiodic")):
        p = massless_vacuum_pressure(field, CavityConfig(D=4, L=1.0, theta=theta))
        verdict = "attractive" if p < 0 else "repulsive"
        print(f"  {field.value:8s} {name:13s}: {p:+.10f}  ({verdict})")

print()
print("Periodic scalar reference value -pi^2/30 =", -math.pi**2 / 30)

# --- a mass cuts the force off exponentially --------------------------------
print()
print("Massive scalar (D = 4, L = 1, periodic): pressure vs mass")
for m in (0.01, 0.1, 0.5, 1.0, 2.0, 5.0):
    p = vacuum_pressure(FieldKind.SCALAR, CavityConfig(D=4, L=1.0, beta=math.inf, m=m))
    print(f"  m = {m:4.2f}: {p:+.10e}")
print("The m -> 0 values approach the massless constant like (mL)^2;")
print("heavy fields decouple like exp(-mL).")

# --- fermions are a pure multiple of the scalar result ----------------------
print()
cfg = CavityConfig(D=4, L=1.3, beta=math.inf, m=0.7, theta=0.4)
ratio = vacuum_pressure(FieldKind.FERMION, cfg) / vacuum_pressure(FieldKind.SCALAR, cfg)
print(f"Fermion/scalar pressure ratio at a random point: {ratio:.12f}")
print("which is exactly the spinor degeneracy 2^floor(D/2) = 4 at D = 4.")

# --- Dirichlet plates from the periodic circle -------------------------------
print()
print("Parallel plates with vanishing-field (Dirichlet) walls, separation a:")
a = 1.0
p_scalar = dirichlet_pressure(CavityConfig(D=4, L=a))
p_em = dirichlet_pressure(CavityConfig(D=4, L=a), electromagnetic=True)
print(f"  scalar field    : {p_scalar:+.10f}  (= -pi^2/480 = {-math.pi**2/480:+.10f})")
print(f"  electromagnetic : {p_em:+.10f}  (= -pi^2/240, two polarizations)")
print("Both follow from the periodic result evaluated at L = 2a.")
