#!/usr/bin/env python3
"""The total order on local equivalence classes.

Classes are ordered by existence of local maps, and the order is computed
two ways: lexicographic comparison of standard parameters under the unusual
integer order, and directly by solving for a map over F2.  The greedy
standard_rep algorithm turns any knot-like complex into its canonical
parameters, certified by maps in both directions.
"""

import itertools

from knotcalc import (
    brute_force_local_map,
    build_standard,
    compare,
    dual,
    exists_local_map,
    lex_cmp,
    standard_rep,
    tensor,
    unit_complex,
)

# The unusual order on parameters: -1 <! -2 <! ... <! 0 <! ... <! 2 <! 1.
# Lexicographic comparison with trailing zeros decides the class order.
print("lex order examples:")
for p, q in [((), (1, -1)), ((1, -1), (1, -2)), ((1, -2, 2, -1), (1, -1, 1, -1))]:
    symbol = {-1: "<", 0: "~", 1: ">"}[lex_cmp(p, q)]
    print(f"  {p or '()'} {symbol} {q}")

# The same answers fall out of the F2 solver deciding map existence.
print("\nsolver agrees with the order on a small pool:")
pool = [(), (1, -1), (-1, 1), (2, -2), (1, -2)]
for p, q in itertools.product(pool, pool):
    fwd = exists_local_map(build_standard(p), build_standard(q)) is not None
    assert fwd == (lex_cmp(p, q) != 1), (p, q)
print("  checked", len(pool) ** 2, "ordered pairs: all consistent")

# A witness is a concrete assignment of generators.
w = exists_local_map(unit_complex(), build_standard((1, -1)))
print("\nwitness for R <= C(1,-1):")
for src, terms in w.assignment:
    image = " + ".join(f"{m} {t}" for m, t in terms) or "0"
    print(f"  {src} |-> {image}")

# The exhaustive oracle tries every bit assignment; it is slow but is the
# definition, and the solver must agree with it.
print("\nbrute-force oracle agreement on tiny instances:")
for p, q in [((), (1, -1)), ((1, -1), ()), ((2, -2), (1, -1))]:
    a = exists_local_map(build_standard(p), build_standard(q)) is not None
    b = brute_force_local_map(build_standard(p), build_standard(q)) is not None
    print(f"  {p or '()'} <= {q or '()'}: solver={a} oracle={b}")
    assert a == b

# Products of standard complexes are rarely standard, but every knot-like
# complex is locally equivalent to exactly one standard complex.
product = tensor(build_standard((2, -2)), build_standard((1, -1)))
rep = standard_rep(product)
print("\nstandard representative of C(2,-2) (x) C(1,-1):")
print("  params:", rep.params)
print("  greedy trace, first position:", rep.trace[0])

# Duals invert the group law, so C (x) dual(C) is always trivial.
print("\ninverse law:")
print("  rep(C (x) C^dual) =", standard_rep(tensor(product, dual(product))).params)

print("\ncompare() wraps all of this:")
print("  C(1,-2,2,-1) vs the square of C(1,-1):",
      {-1: "<", 0: "~", 1: ">"}[compare(build_standard((1, -2, 2, -1)),
                                        tensor(build_standard((1, -1)), build_standard((1, -1))))])
