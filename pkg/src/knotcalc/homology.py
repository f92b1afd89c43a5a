"""Simplified bases for C/U and C/V, tower extraction, knot-like checks.

Setting U = 0 leaves a complex over the PID F[V] (and symmetrically for
V = 0 over F[U]).  Because everything is homogeneous, every matrix entry of
the quotient differential is a single power of the surviving variable, and
Smith-style reduction can be run with basis changes that only ever add a
monomial multiple of one basis element to another.  The result is a basis
in which the differential is a perfect pairing y_i -> v^{eta_i} z_i plus
isolated elements; each isolated element spans a nontorsion tower of the
homology.  A complex is knot-like when each side has exactly one tower,
sitting in gr_U = 0 (mod U side) and gr_V = 0 (mod V side).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import gf2
from .algebra import Bigrading, Complex, validate
from .errors import MultipleTowersError, NotKnotLikeError, NotReducedError

MOD_U = "mod_u"  # work in C/U with the V-differential
MOD_V = "mod_v"  # work in C/V with the U-differential

# An element of C/U (resp. C/V) is a map {generator index: exponent of the
# surviving variable}; over F2 the coefficients are just these monomials.
Element = dict[int, int]


def _frozen(e: Element) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(e.items()))


def _quotient_grading(c: Complex, side: str, g: int, exp: int) -> Bigrading:
    gr = c.gens[g].grading
    if side == MOD_U:  # coefficient is V^exp
        return Bigrading(gr.gru, gr.grv - 2 * exp)
    return Bigrading(gr.gru - 2 * exp, gr.grv)


def element_grading(c: Complex, side: str, e: Element) -> Bigrading:
    grades = {_quotient_grading(c, side, g, k) for g, k in e.items()}
    if len(grades) != 1:
        raise ValueError(f"inhomogeneous element {e}")
    return grades.pop()


@dataclass(frozen=True)
class TowerReport:
    """Result of simplifying one side of a complex.

    tower_generator and the pair members are elements of the quotient module
    written over the declared generators.  basis_change lists the full final
    basis in order; inverse_change expresses each declared generator over the
    final basis (both with monomial coefficients, stored as (index, exponent)
    pairs).  tower_index locates the tower inside basis_change.
    """

    side: str
    tower_generator: tuple[tuple[int, int], ...]
    tower_top_grading: Bigrading
    torsion_pairs: tuple[tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...], int], ...]
    basis_change: tuple[tuple[tuple[int, int], ...], ...]
    inverse_change: tuple[tuple[tuple[int, int], ...], ...]
    tower_index: int

    @property
    def etas(self) -> tuple[int, ...]:
        return tuple(eta for _, _, eta in self.torsion_pairs)


def _xor_term(d: dict[int, int], key: int, exp: int) -> None:
    if key in d:
        assert d[key] == exp, "grading forces equal exponents on collision"
        del d[key]
    else:
        d[key] = exp


def _side_differential(c: Complex, side: str) -> dict[int, dict[int, int]]:
    kind = "V" if side == MOD_U else "U"
    d: dict[int, dict[int, int]] = {}
    for s, t, m in c.edges():
        if m.kind == "1":
            raise NotReducedError("simplify requires a reduced complex")
        if m.kind == kind:
            d.setdefault(s, {})[t] = m.exponent
    return d


class _Reduction:
    """Mutable state for the Smith-style sweep on one quotient complex."""

    def __init__(self, c: Complex, side: str):
        n = len(c.gens)
        self.c = c
        self.side = side
        self.basis: list[Element] = [{i: 0} for i in range(n)]
        self.inverse: list[Element] = [{i: 0} for i in range(n)]
        self.rows: dict[int, dict[int, int]] = _side_differential(c, side)
        self.cols: dict[int, dict[int, int]] = {}
        for i, row in self.rows.items():
            for j, e in row.items():
                self.cols.setdefault(j, {})[i] = e

    def _set(self, i: int, j: int, exp: Optional[int]) -> None:
        if exp is None:
            self.rows.get(i, {}).pop(j, None)
            self.cols.get(j, {}).pop(i, None)
        else:
            self.rows.setdefault(i, {})[j] = exp
            self.cols.setdefault(j, {})[i] = exp

    def _xor_entry(self, i: int, j: int, exp: int) -> None:
        cur = self.rows.get(i, {}).get(j)
        if cur is not None:
            assert cur == exp, "grading forces equal exponents on collision"
            self._set(i, j, None)
        else:
            self._set(i, j, exp)

    def add_multiple(self, p: int, q: int, delta: int) -> None:
        """Basis change b_p += v^delta * b_q (valid when gradings agree)."""
        assert p != q and delta >= 0
        for g, e in self.basis[q].items():
            _xor_term(self.basis[p], g, e + delta)
        # substitution b_p = b_p' + v^delta b_q in the inverse expressions
        for expr in self.inverse:
            if p in expr:
                _xor_term(expr, q, expr[p] + delta)
        # row_p += v^delta row_q
        for j, e in list(self.rows.get(q, {}).items()):
            self._xor_entry(p, j, e + delta)
        # col_q += v^delta col_p
        for i, e in list(self.cols.get(p, {}).items()):
            self._xor_entry(i, q, e + delta)

    def sweep(self) -> tuple[list[tuple[int, int, int]], list[int]]:
        """Run the reduction; returns (pivot pairs (src, tgt, eta), isolated indices)."""
        active = set(range(len(self.c.gens)))
        pairs: list[tuple[int, int, int]] = []
        while True:
            pivot = None
            for i in sorted(active):
                for j, e in sorted(self.rows.get(i, {}).items()):
                    if j in active and (pivot is None or e < pivot[2] or
                                        (e == pivot[2] and (i, j) < pivot[:2])):
                        pivot = (i, j, e)
            if pivot is None:
                break
            i0, j0, eta = pivot
            for i in sorted(self.cols.get(j0, {})):
                if i != i0:
                    self.add_multiple(i, i0, self.cols[j0][i] - eta)
            for j in sorted(self.rows.get(i0, {})):
                if j != j0:
                    self.add_multiple(j0, j, self.rows[i0][j] - eta)
            assert self.rows.get(i0) == {j0: eta}
            assert self.cols.get(j0) == {i0: eta}
            assert not self.cols.get(i0), "nothing may map to a pair source"
            assert not self.rows.get(j0), "a pair target must be a cycle"
            pairs.append((i0, j0, eta))
            active.discard(i0)
            active.discard(j0)
        isolated = sorted(active)
        return pairs, isolated


def _invertible_mod_variable(basis: list[Element], n: int) -> bool:
    masks = []
    for vec in basis:
        mask = 0
        for g, e in vec.items():
            if e == 0:
                mask |= 1 << g
        masks.append(mask)
    return gf2.rank(masks) == n


def simplify(c: Complex, side: str) -> TowerReport:
    """Simplify C/U (side="mod_u") or C/V (side="mod_v").

    Raises NotReducedError on a non-reduced complex and MultipleTowersError
    when the nontorsion rank differs from one.
    """
    if side not in (MOD_U, MOD_V):
        raise ValueError(f"bad side {side!r}")
    red = _Reduction(c, side)
    pairs, isolated = red.sweep()
    n = len(c.gens)
    assert 2 * len(pairs) + len(isolated) == n
    assert _invertible_mod_variable(red.basis, n), "basis change lost rank"
    if len(isolated) != 1:
        raise MultipleTowersError(len(isolated), side)
    w = isolated[0]
    return TowerReport(
        side=side,
        tower_generator=_frozen(red.basis[w]),
        tower_top_grading=element_grading(c, side, red.basis[w]),
        torsion_pairs=tuple(
            (_frozen(red.basis[y]), _frozen(red.basis[z]), eta) for y, z, eta in pairs
        ),
        basis_change=tuple(_frozen(v) for v in red.basis),
        inverse_change=tuple(_frozen(v) for v in red.inverse),
        tower_index=w,
    )


@dataclass(frozen=True)
class KnotLikeReport:
    is_knot_like: bool
    applied_shift: tuple[int, int]
    reasons: tuple[str, ...]
    mod_u: Optional[TowerReport]
    mod_v: Optional[TowerReport]


def check_knot_like(c: Complex, allow_shift: bool = False) -> KnotLikeReport:
    """Check the single-tower conditions, optionally solving for the global
    grading shift that normalizes both towers.  Violations are reported, not
    raised; only a non-reduced input raises."""
    reports: dict[str, Optional[TowerReport]] = {}
    reasons: list[str] = []
    for side in (MOD_U, MOD_V):
        try:
            reports[side] = simplify(c, side)
        except MultipleTowersError as e:
            reports[side] = None
            reasons.append(f"{side}: nontorsion rank {e.count} != 1")
    mod_u, mod_v = reports[MOD_U], reports[MOD_V]
    shift = (0, 0)
    if mod_u is not None and mod_v is not None:
        sigma_u = -mod_u.tower_top_grading.gru
        sigma_v = -mod_v.tower_top_grading.grv
        if allow_shift:
            shift = (sigma_u, sigma_v)
        else:
            if sigma_u:
                reasons.append(f"mod_u tower sits at gr_U = {-sigma_u}, not 0")
            if sigma_v:
                reasons.append(f"mod_v tower sits at gr_V = {-sigma_v}, not 0")
    return KnotLikeReport(
        is_knot_like=not reasons,
        applied_shift=shift,
        reasons=tuple(reasons),
        mod_u=mod_u,
        mod_v=mod_v,
    )


def apply_shift(c: Complex, shift: tuple[int, int]) -> Complex:
    """Return the complex with every grading moved by the given global shift."""
    su, sv = shift
    if (su, sv) == (0, 0):
        return c
    return validate(
        [(g.name, (g.grading.gru + su, g.grading.grv + sv)) for g in c.gens],
        [(c.gens[s].name, [(m, c.gens[t].name) for t, m in sorted(row.items())])
         for s, row in sorted(c.diff.items())],
    )


def normalize(c: Complex) -> Complex:
    """Shift gradings so both towers sit at grading zero; NotKnotLikeError if
    the complex is not knot-like."""
    report = check_knot_like(c, allow_shift=True)
    if not report.is_knot_like:
        raise NotKnotLikeError(report.reasons)
    return apply_shift(c, report.applied_shift)


def torsion_bounds(c: Complex) -> tuple[int, int]:
    """(M_U, M_V): the largest U-torsion order mod V and V-torsion order mod U.

    These bound the absolute values of the odd and even standard parameters
    respectively.
    """
    mod_v = simplify(c, MOD_V)
    mod_u = simplify(c, MOD_U)
    m_u = max(mod_v.etas, default=0)
    m_v = max(mod_u.etas, default=0)
    return (m_u, m_v)
