"""Where attraction turns into repulsion: the crossover in the (L, T) plane.

In the massless limit the total pressure factorizes as
prefactor * g(L*T) / L^4, so the entire phase structure is carried by
the one-variable profile g.  This script locates its roots, converts
them to laboratory units, and sketches the phase diagram as text.
"""

import numpy as np

from casimircavity import FieldKind, find_crossover, g_function, phase_diagram

SCALAR, FERMION = FieldKind.SCALAR, FieldKind.FERMION

print("The profile g(xi) for the two sign-changing cases (xi = L*T):")
print(f"{'xi':>5} {'scalar periodic':>17} {'fermion antiperiodic':>22}")
for xi in (0.5, 1.0, 1.2, 1.5, 1.6, 2.0):
    gs = g_function(SCALAR, 0, xi)
    gf = g_function(FERMION, 1, xi)
    print(f"{xi:5.2f} {gs:+17.8f} {gf:+22.8f}")

print()
for field, theta, label in (
    (SCALAR, 0, "scalar, periodic"),
    (FERMION, 1, "fermion, antiperiodic"),
    (SCALAR, 1, "scalar, antiperiodic"),
    (FERMION, 0, "fermion, periodic"),
):
    r = find_crossover(field, theta)
    if r is None:
        print(f"{label:24s}: no crossover (the force never changes sign)")
        continue
    kind = "stable" if r.stable else "unstable"
    print(
        f"{label:24s}: xi* = {r.xi_star:.5f}  ->  L*T = {r.si_mev_fm:.4g} MeV.fm"
        f" = {r.si_mm_k:.4g} mm.K   ({kind} equilibrium)"
    )

print()
print("For a 1 fm cavity the scalar crossover sits near 3.5e12 K; for a")
print("1 mm cavity it is a few kelvin - same product L*T, wildly different scales.")

# --- a text phase diagram -----------------------------------------------------
print()
print("Scalar periodic phase diagram ('#' attractive, '.' repulsive):")
L_grid = np.linspace(0.4, 3.0, 27)
T_grid = np.linspace(0.2, 2.8, 27)
diagram = phase_diagram(SCALAR, 0, L_grid, T_grid)
for j in reversed(range(T_grid.size)):
    row = "".join("#" if diagram.attractive[i, j] else "." for i in range(L_grid.size))
    print(f"  T={T_grid[j]:4.2f} {row}")
print("         " + "".join("^" if abs(L - 1.0) < 0.05 else " " for L in L_grid))
print("The attractive region is bounded by the hyperbola T = xi*/L.")
