"""Existence of local maps and short local maps, decided over F2.

A local map f: S -> C is a grading-compatible R-equivariant chain map that
carries the generator of the nontorsion tower of H(S/U) to a generator of
the tower of H(C/U).  Once both complexes are normalized, the U-grading of
f is preserved on the nose and the V-grading shift is pinned by tower-top
alignment, so a candidate map is a choice of one bit per grading-feasible
(source generator, monomial * target generator) slot.  The chain-map
conditions are linear in those bits and the tower condition contributes a
single affine equation, so existence reduces to one GF(2) linear solve.

Short maps relax the chain condition at the final generator x_n of a
truncated standard complex: only the part of the condition in the direction
of the final arrow type is kept (the V-part when the parameter sequence has
even length, the U-part when odd).

brute_force_local_map enumerates every bit assignment and checks the
definition directly; it is the independent oracle for the solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import gf2
from .algebra import Bigrading, Complex, Monomial, mono_for_grading, mono_mul
from .errors import BudgetExceededError, NotKnotLikeError, NotReducedError
from .homology import (
    MOD_U,
    TowerReport,
    apply_shift,
    check_knot_like,
    element_grading,
)
from .standard import build_standard

Slot = tuple[int, int, Monomial]  # (source index, target index, monomial)


@dataclass(frozen=True)
class LocalMapWitness:
    """A concrete map assignment certifying S <= C.

    assignment maps each source generator name to its image, a sum of
    (monomial, target generator name) terms.  Every term satisfies
    gr(m) + gr(target) = gr(source) + (0, v_shift).
    """

    assignment: tuple[tuple[str, tuple[tuple[Monomial, str], ...]], ...]
    v_shift: int

    def image_of(self, name: str) -> tuple[tuple[Monomial, str], ...]:
        for src, terms in self.assignment:
            if src == name:
                return terms
        return ()


@dataclass(frozen=True)
class _Target:
    """Precomputed data about a normalized knot-like target complex."""

    c: Complex
    report_u: TowerReport
    q: int  # gr_V of the mod-U tower top
    tower_unit: tuple[int, ...]  # per generator: unit coefficient on the tower
    etas_u: tuple[int, ...]  # U-arrow torsion orders (from the mod-V report)
    etas_v: tuple[int, ...]  # V-arrow torsion orders (from the mod-U report)


def prepare_target(c: Complex) -> _Target:
    """Normalize *c* and precompute the tower data used by the solver."""
    if not c.is_reduced:
        raise NotReducedError("local map solving requires reduced complexes")
    report = check_knot_like(c, allow_shift=True)
    if not report.is_knot_like:
        raise NotKnotLikeError(report.reasons)
    cn = apply_shift(c, report.applied_shift)
    mod_u = report.mod_u
    tower_unit = [0] * len(cn.gens)
    for g, expr in enumerate(mod_u.inverse_change):
        for idx, exp in expr:
            if idx == mod_u.tower_index and exp == 0:
                tower_unit[g] = 1
    q = mod_u.tower_top_grading.grv + report.applied_shift[1]
    return _Target(
        c=cn,
        report_u=mod_u,
        q=q,
        tower_unit=tuple(tower_unit),
        etas_u=report.mod_v.etas,
        etas_v=mod_u.etas,
    )


def _slots(dom: Complex, tgt: Complex, v_shift: int) -> list[Slot]:
    by_grading = sorted(
        range(len(tgt.gens)), key=lambda t: (tuple(tgt.gens[t].grading), t)
    )
    out: list[Slot] = []
    for s in range(len(dom.gens)):
        want = dom.gens[s].grading + Bigrading(0, v_shift)
        for t in by_grading:
            m = mono_for_grading(want - tgt.gens[t].grading)
            if m is not None:
                out.append((s, t, m))
    return out


def _solve(
    dom: Complex,
    tgt: _Target,
    dom_tower: dict[int, int],
    relaxed: Optional[tuple[int, str]],
) -> Optional[LocalMapWitness]:
    """Build and solve the linear system for a (short) local map dom -> tgt.

    dom_tower is the mod-U tower element of the domain (generator index ->
    V-exponent).  relaxed, when given, is (generator index, kind): only the
    chain condition in direction *kind* is imposed at that generator.
    """
    q_dom = element_grading(dom, MOD_U, dom_tower).grv
    v_shift = tgt.q - q_dom
    slots = _slots(dom, tgt.c, v_shift)
    by_source: dict[int, list[tuple[int, int, Monomial]]] = {}
    for i, (s, t, m) in enumerate(slots):
        by_source.setdefault(s, []).append((t, i, m))

    rows: dict[tuple[int, int], int] = {}

    def toggle(s: int, u: int, bit: int) -> None:
        key = (s, u)
        rows[key] = rows.get(key, 0) ^ (1 << bit)

    for s in range(len(dom.gens)):
        kind_filter = relaxed[1] if relaxed and relaxed[0] == s else None
        # d f(s): push each slot monomial through the target differential
        for t, bit, m in by_source.get(s, ()):
            for u, d in tgt.c.diff.get(t, {}).items():
                if kind_filter and d.kind != kind_filter:
                    continue
                if mono_mul(m, d) is not None:
                    toggle(s, u, bit)
        # f(d s): push the domain differential through the slots of s'
        for sp, e in dom.diff.get(s, {}).items():
            if kind_filter and e.kind != kind_filter:
                continue
            for t2, bit, m2 in by_source.get(sp, ()):
                if mono_mul(e, m2) is not None:
                    toggle(s, t2, bit)

    system = [(mask, 0) for mask in rows.values()]

    tower_mask = 0
    for g, k in dom_tower.items():
        if k != 0:
            continue
        for t, bit, m in by_source.get(g, ()):
            if tgt.tower_unit[t] and m.kind == "1":
                tower_mask ^= 1 << bit
    system.append((tower_mask, 1))

    solution = gf2.solve_affine(system, len(slots))
    if solution is None:
        return None
    witness = _witness_from_mask(dom, tgt.c, slots, solution, v_shift)
    assert _check_witness(dom, tgt, dom_tower, relaxed, witness), "solver produced a bad witness"
    return witness


def _witness_from_mask(
    dom: Complex, tgt: Complex, slots: list[Slot], mask: int, v_shift: int
) -> LocalMapWitness:
    images: dict[int, list[tuple[Monomial, str]]] = {}
    for i, (s, t, m) in enumerate(slots):
        if (mask >> i) & 1:
            images.setdefault(s, []).append((m, tgt.gens[t].name))
    assignment = tuple(
        (dom.gens[s].name, tuple(images.get(s, ()))) for s in range(len(dom.gens))
    )
    return LocalMapWitness(assignment=assignment, v_shift=v_shift)


# ---------------------------------------------------------------------------
# Definition-level checking (shared by the oracle and witness verification)


def _apply_f(
    f: dict[int, dict[int, Monomial]], elem: dict[int, Monomial]
) -> dict[int, Monomial]:
    out: dict[int, Monomial] = {}
    for s, coeff in elem.items():
        for t, m in f.get(s, {}).items():
            p = mono_mul(coeff, m)
            if p is None:
                continue
            if t in out:
                assert out[t] == p
                del out[t]
            else:
                out[t] = p
    return out


def _apply_diff(
    c: Complex, elem: dict[int, Monomial], kind: Optional[str] = None
) -> dict[int, Monomial]:
    out: dict[int, Monomial] = {}
    for t, coeff in elem.items():
        for u, d in c.diff.get(t, {}).items():
            if kind and d.kind != kind:
                continue
            p = mono_mul(coeff, d)
            if p is None:
                continue
            if u in out:
                assert out[u] == p
                del out[u]
            else:
                out[u] = p
    return out


def _check_witness(
    dom: Complex,
    tgt: _Target,
    dom_tower: dict[int, int],
    relaxed: Optional[tuple[int, str]],
    witness: LocalMapWitness,
) -> bool:
    """Check a candidate map directly against the definition."""
    f: dict[int, dict[int, Monomial]] = {}
    for src_name, terms in witness.assignment:
        s = dom.index(src_name)
        f[s] = {}
        want = dom.gens[s].grading + Bigrading(0, witness.v_shift)
        for m, tgt_name in terms:
            t = tgt.c.index(tgt_name)
            if m.grading() + tgt.c.gens[t].grading != want:
                return False
            f[s][t] = m

    for s in range(len(dom.gens)):
        kind = relaxed[1] if relaxed and relaxed[0] == s else None
        lhs = _apply_diff(tgt.c, f.get(s, {}), kind)
        ds = {
            t: m for t, m in dom.diff.get(s, {}).items() if kind is None or m.kind == kind
        }
        rhs = _apply_f(f, ds)
        if lhs != rhs:
            return False

    # tower condition: the mod-U reduction of f(tower) must have unit
    # coefficient on the tower basis element of the target
    image_mod_u: dict[int, int] = {}
    for g, k in dom_tower.items():
        for t, m in f.get(g, {}).items():
            if m.kind == "U":
                continue
            exp = k + m.exponent if m.kind == "V" else k
            if t in image_mod_u and image_mod_u[t] == exp:
                del image_mod_u[t]
            elif t in image_mod_u:
                return False
            else:
                image_mod_u[t] = exp
    coeff: dict[int, int] = {}
    for t, vexp in image_mod_u.items():
        for idx, e in tgt.report_u.inverse_change[t]:
            if idx == tgt.report_u.tower_index:
                total = vexp + e
                coeff[total] = coeff.get(total, 0) ^ 1
    coeff = {e: v for e, v in coeff.items() if v}
    return coeff == {0: 1}


# ---------------------------------------------------------------------------
# Public interface


def _prepare_source(s: Complex) -> tuple[Complex, dict[int, int]]:
    """Normalize a source complex and locate its mod-U tower element."""
    if not s.is_reduced:
        raise NotReducedError("source complex is not reduced")
    report = check_knot_like(s, allow_shift=True)
    if not report.is_knot_like:
        raise NotKnotLikeError(report.reasons)
    return apply_shift(s, report.applied_shift), dict(report.mod_u.tower_generator)


def exists_local_map(s: Complex, c: Complex) -> Optional[LocalMapWitness]:
    """Witness for S <= C in the local order, or None.

    Both complexes must be reduced and knot-like; gradings are normalized
    internally (the inputs are never modified).
    """
    tgt = prepare_target(c)
    dom, dom_tower = _prepare_source(s)
    return _solve(dom, tgt, dom_tower, relaxed=None)


def exists_short_local_map(params: Sequence[int], c: Complex) -> Optional[LocalMapWitness]:
    """Witness for a short local map C(params) ~> C, or None.

    The domain is the truncated standard complex of the parameters, built
    with its grading anchored at x_0; the chain condition is imposed at
    x_0 .. x_{n-1} and only its V-part (even length) or U-part (odd length)
    at the final generator.  The tower condition is imposed at x_0.
    """
    tgt = prepare_target(c)
    return _short_against(params, tgt)


def _short_against(params: Sequence[int], tgt: _Target) -> Optional[LocalMapWitness]:
    p = tuple(params)
    dom = build_standard(p, v_anchor=0)
    n = len(p)
    relaxed = (n, "V" if n % 2 == 0 else "U")
    return _solve(dom, tgt, {0: 0}, relaxed)


def verify_local_map(s: Complex, c: Complex, witness: LocalMapWitness) -> bool:
    """Re-check a full local-map witness against the definition."""
    tgt = prepare_target(c)
    dom, dom_tower = _prepare_source(s)
    return _check_witness(dom, tgt, dom_tower, None, witness)


def count_unknowns(s: Complex, c: Complex) -> int:
    """Number of free bits the solver would use for exists_local_map(s, c)."""
    tgt = prepare_target(c)
    dom, dom_tower = _prepare_source(s)
    q_dom = element_grading(dom, MOD_U, dom_tower).grv
    return len(_slots(dom, tgt.c, tgt.q - q_dom))


def brute_force_local_map(
    s: Complex, c: Complex, budget: int = 24
) -> Optional[LocalMapWitness]:
    """Exhaustive oracle for exists_local_map.

    Enumerates every assignment of the grading-feasible slots and checks the
    local-map definition directly.  Refuses instances with more unknown bits
    than *budget*.
    """
    tgt = prepare_target(c)
    dom, dom_tower = _prepare_source(s)
    q_dom = element_grading(dom, MOD_U, dom_tower).grv
    v_shift = tgt.q - q_dom
    slots = _slots(dom, tgt.c, v_shift)
    if len(slots) > budget:
        raise BudgetExceededError(len(slots), budget)
    for mask in range(1 << len(slots)):
        witness = _witness_from_mask(dom, tgt.c, slots, mask, v_shift)
        if _check_witness(dom, tgt, dom_tower, None, witness):
            return witness
    return None
