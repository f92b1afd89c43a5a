#!/usr/bin/env python3
"""From Alexander polynomials to concordance invariants.

L-space knots (torus knots, suitable cables) have staircase complexes that
are read off the alternating Alexander polynomial.  Recipe expressions
combine these atoms with connected sums (+), mirrors (-), and multipliers,
then the standard representative of the product is computed honestly.
"""

from knotcalc import (
    cable_delta,
    eval_recipe,
    lspace_phi,
    phi,
    staircase_params,
    tau_of,
    torus_delta,
    uc_lower,
)

# Torus knot polynomials via the classical quotient formula.
print("torus knot Alexander polynomials:")
for p, q in [(2, 3), (2, 5), (3, 4), (4, 5)]:
    print(f"  T({p},{q}): {torus_delta(p, q)}")

# Staircase extraction: exponent gaps c_i become the U-arrow lengths.
delta = torus_delta(3, 4)
print("\nstaircase of T(3,4):")
print("  delta     =", delta)
print("  params    =", staircase_params(delta))
print("  phi       =", lspace_phi(delta))
print("  tau       =", tau_of(staircase_params(delta)))

# Cables multiply the companion polynomial at t^p by the pattern torus knot.
cab = cable_delta(2, 5, torus_delta(2, 3))
print("\n(2,5)-cable of the trefoil:")
print("  delta  =", cab)
print("  params =", staircase_params(cab))

# The family K_n = Cable(D; n,n+1) - T(n,n+1) is topologically slice, and
# phi_n(K_n) = 1 with phi_j(K_n) = 0 above n: the phi matrix is triangular,
# so the K_n are independent in the concordance group.
print("\ntopologically slice family (rows n = 2..4, phi_j for j = 1..4):")
for n in range(2, 5):
    rep = eval_recipe(f"Cable(D;{n},{n + 1}) - T({n},{n + 1})")
    ph = phi(rep.params)
    row = [ph.get(j, 0) for j in range(1, 5)]
    print(f"  K_{n}: {row}   u_c >= {uc_lower(rep.params)}")

# A combination with vanishing upsilon but nonvanishing phi.
rep = eval_recipe("T(2,5) - T(4,5) + Cable(T(2,3);2,5)")
print("\nT(2,5) - T(4,5) + Cable(T(2,3);2,5):")
print("  rep =", rep.params)
print("  phi =", phi(rep.params))

# Thin knots contribute alternating parameters of length 2|tau|.
print("\nthin knots:")
for t in (-2, 1, 3):
    print(f"  Thin({t}): rep = {eval_recipe(f'Thin({t})').params}")
