"""Linear algebra over GF(2) with bit-packed rows.

Rows are Python integers used as bit masks, so a row operation is a single
XOR regardless of width.  This is all the linear algebra the local-map
solver needs: solve one affine system A x = b and report any solution.
"""

from __future__ import annotations


def solve_affine(rows: list[tuple[int, int]], nvars: int) -> int | None:
    """Solve a linear system over GF(2).

    Args:
        rows: list of (mask, rhs) pairs; bit i of *mask* is the coefficient
            of variable i, *rhs* is 0 or 1.
        nvars: number of variables.

    Returns:
        A solution as a bit mask (free variables set to 0), or None if the
        system is inconsistent.  The solution is deterministic: pivots are
        taken at the lowest set bit of each reduced row.
    """
    pivots: dict[int, tuple[int, int]] = {}  # pivot bit position -> (mask, rhs)
    for mask, rhs in rows:
        for pos, (pmask, prhs) in pivots.items():
            if (mask >> pos) & 1:
                mask ^= pmask
                rhs ^= prhs
        if mask == 0:
            if rhs:
                return None
            continue
        pos = (mask & -mask).bit_length() - 1
        pivots[pos] = (mask, rhs)

    # Back-substitute so every pivot row has a single pivot bit among pivots.
    solution = 0
    for pos in sorted(pivots, reverse=True):
        mask, rhs = pivots[pos]
        acc = rhs
        rest = mask & ~(1 << pos)
        while rest:
            low = rest & -rest
            if solution & low:
                acc ^= 1
            rest ^= low
        if acc:
            solution |= 1 << pos
    return solution


def rank(masks: list[int]) -> int:
    """GF(2) rank of a list of bit-mask rows."""
    pivots: dict[int, int] = {}
    r = 0
    for mask in masks:
        for pos, pmask in pivots.items():
            if (mask >> pos) & 1:
                mask ^= pmask
        if mask:
            pivots[(mask & -mask).bit_length() - 1] = mask
            r += 1
    return r
