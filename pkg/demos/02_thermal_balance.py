"""Heating the cavity: vacuum attraction vs thermal repulsion.

With the imaginary-time direction compactified to beta = 1/T, the
pressure splits into three additive pieces: the pure spatial (vacuum)
term, the pure thermal term, and a cross term coupling the two.  This
script shows the three components trading off as temperature rises, and
the two classic limits: the zero-temperature cavity and the boundless
Stefan-Boltzmann gas.
"""

import math

from casimircavity import CavityConfig, FieldKind, thermal_component, thermal_pressure

SCALAR = FieldKind.SCALAR

print("Massive scalar, D = 4, L = 1, m = 1: pressure breakdown vs temperature")
print(f"{'T':>5} {'vacuum':>14} {'thermal':>14} {'cross':>14} {'total':>14}")
for T in (0.1, 0.5, 1.0, 1.5, 2.0):
    b = thermal_pressure(SCALAR, CavityConfig(D=4, L=1.0, beta=1.0 / T, m=1.0))
    print(f"{T:5.2f} {b.vacuum:+14.6e} {b.thermal:+14.6e} {b.cross:+14.6e} {b.total:+14.6e}")

print()
print("At low T the thermal pieces are exponentially frozen out; at high T")
print("the positive thermal term overwhelms the vacuum attraction.")

# --- the cold limit -----------------------------------------------------------
b_cold = thermal_pressure(SCALAR, CavityConfig(D=4, L=1.0, beta=50.0, m=1.0))
print()
print(f"beta = 50: thermal = {b_cold.thermal:.3e}, cross = {b_cold.cross:.3e}")
print("so the total collapses onto the zero-temperature vacuum pressure.")

# --- the hot, nearly massless limit ------------------------------------------
beta = 1.0
sb = math.pi**2 / (90.0 * beta**4)
t_term = thermal_component(SCALAR, CavityConfig(D=4, L=1.0, beta=beta, m=1e-3))
print()
print(f"Thermal-only term at m*beta = 1e-3: {t_term:.10f}")
print(f"Stefan-Boltzmann  pi^2/(90 b^4)   : {sb:.10f}")
print(f"relative deviation: {abs(t_term - sb) / sb:.2e}  (the O((m*beta)^2) correction)")

# --- fermions bring their own statistics --------------------------------------
print()
b_f = thermal_pressure(FieldKind.FERMION, CavityConfig(D=4, L=1.0, beta=1.0, m=1.0))
print("Fermion at T = 1 (antiperiodic imaginary time -> alternating thermal sum):")
print(f"  vacuum {b_f.vacuum:+.6e}, thermal {b_f.thermal:+.6e}, cross {b_f.cross:+.6e}")
print("The alternating signs flip the fermionic thermal term negative,")
print("reinforcing attraction instead of fighting it.")
