"""Shared builders: box complexes, basis scrambling, direct sums."""

from __future__ import annotations

import random

from knotcalc.algebra import Complex, Monomial, mono_for_grading, mono_mul, validate


def direct_sum(*cs: Complex) -> Complex:
    """Direct sum with generators renamed s{i}.{name}."""
    gens = []
    diff = []
    for i, c in enumerate(cs):
        for g in c.gens:
            gens.append((f"s{i}.{g.name}", tuple(g.grading)))
        for s, row in sorted(c.diff.items()):
            diff.append(
                (f"s{i}.{c.gens[s].name}",
                 [(m, f"s{i}.{c.gens[t].name}") for t, m in sorted(row.items())])
            )
    return validate(gens, diff)


def box(i: int, j: int, base=(0, 0), tag: str = "") -> Complex:
    """A locally trivial square: db = U^i a + V^j c, da = V^j d, dc = U^i d.

    Contributes only torsion to both quotient homologies.
    """
    du, dv = base
    a, b, c, d = (f"{tag}a", f"{tag}b", f"{tag}c", f"{tag}d")
    return validate(
        [
            (a, (du + 1, dv - 2 * j + 1)),
            (b, (du - 2 * i + 2, dv - 2 * j + 2)),
            (c, (du - 2 * i + 1, dv + 1)),
            (d, (du, dv)),
        ],
        [
            (b, [(Monomial("U", i), a), (Monomial("V", j), c)]),
            (a, [(Monomial("V", j), d)]),
            (c, [(Monomial("U", i), d)]),
        ],
    )


def basis_change(c: Complex, p: int, q: int, m: Monomial) -> Complex:
    """Replace generator p by p + m*q (requires gr(m) + gr(q) = gr(p))."""
    diff = {s: dict(row) for s, row in c.diff.items()}

    def xor(i, j, value):
        row = diff.setdefault(i, {})
        if j in row:
            assert row[j] == value
            del row[j]
        else:
            row[j] = value

    for j, e in list(diff.get(q, {}).items()):
        prod = mono_mul(m, e)
        if prod is not None:
            xor(p, j, prod)
    for i in list(diff):
        e = diff.get(i, {}).get(p)
        if e is not None:
            prod = mono_mul(e, m)
            if prod is not None:
                xor(i, q, prod)

    return validate(
        [(g.name, tuple(g.grading)) for g in c.gens],
        [(c.gens[s].name, [(mm, c.gens[t].name) for t, mm in sorted(row.items())])
         for s, row in sorted(diff.items()) if row],
    )


def scramble(c: Complex, rng: random.Random, steps: int = None) -> Complex:
    """Apply random grading-legal basis changes; the homotopy type is kept."""
    n = len(c.gens)
    if steps is None:
        steps = 2 * n
    for _ in range(steps):
        p = rng.randrange(n)
        q = rng.randrange(n)
        if p == q:
            continue
        m = mono_for_grading(c.gens[p].grading - c.gens[q].grading)
        if m is None:
            continue
        c = basis_change(c, p, q, m)
    return c
