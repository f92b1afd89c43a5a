"""The standard representative of a knot-like complex, and the total order.

Every knot-like complex is locally equivalent to a unique standard complex;
its parameters are extracted greedily.  With a prefix (a_1 .. a_k) fixed,
the next parameter is the largest b in the unusual order for which a short
local map from C(a_1 .. a_k, b) exists.  Candidates are bounded by the
torsion orders of the complex, so each position scans

    b = 1, 2, ..., M, then (at even k) the stop test, then -M, ..., -1,

which is descending in the unusual order.  The stop test asks for a full
local map from C(a_1 .. a_k), which is exactly the condition that the
remaining parameters are all zero; it also absorbs the degenerate case
where every sufficiently negative candidate admits a short map with the
final generator sent to zero.  The computed representative is certified at
the end by local maps in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .algebra import Complex, reduce
from .errors import LengthCapExceededError, VerificationFailedError
from .localmaps import (
    LocalMapWitness,
    _short_against,
    _solve,
    prepare_target,
)
from .standard import EQ, GT, LT, Params, build_standard, lex_cmp


class PositionTrace(NamedTuple):
    position: int
    candidates: tuple[tuple[int, bool], ...]
    accepted: Optional[int]


@dataclass(frozen=True)
class RepResult:
    """Standard representative parameters plus the certifying local maps."""

    params: Params
    witnesses: tuple[LocalMapWitness, LocalMapWitness]
    trace: tuple[PositionTrace, ...]


def _full_map_to(params: Params, tgt) -> Optional[LocalMapWitness]:
    dom = build_standard(params)
    return _solve(dom, tgt, {0: 0}, relaxed=None)


def standard_rep(c: Complex) -> RepResult:
    """Compute the standard complex representative of the local class of *c*.

    The input may be non-reduced or carry unnormalized gradings; it is
    reduced and normalized internally.  Raises NotKnotLikeError when the
    tower conditions fail, and LengthCapExceededError or
    VerificationFailedError only on internal invariant violations.
    """
    c = reduce(c)
    tgt = prepare_target(c)
    m_u = max(tgt.etas_u, default=0)
    m_v = max(tgt.etas_v, default=0)
    cap = 4 * len(c.gens) + 4

    params: list[int] = []
    trace: list[PositionTrace] = []
    while True:
        k = len(params)
        position = k + 1
        bound = m_u if position % 2 == 1 else m_v
        tested: list[tuple[int, bool]] = []
        accepted: Optional[int] = None

        for b in range(1, bound + 1):
            ok = _short_against((*params, b), tgt) is not None
            tested.append((b, ok))
            if ok:
                accepted = b
                break

        stop = False
        if accepted is None and k % 2 == 0:
            ok = _full_map_to(tuple(params), tgt) is not None
            tested.append((0, ok))
            stop = ok

        if accepted is None and not stop:
            for b in range(-bound, 0):
                ok = _short_against((*params, b), tgt) is not None
                tested.append((b, ok))
                if ok:
                    accepted = b
                    break

        trace.append(PositionTrace(position, tuple(tested), accepted))
        if stop:
            break
        if accepted is None:
            # the next parameter must lie in the torsion window (zero was
            # already ruled out at even prefixes by the stop test)
            raise VerificationFailedError(
                f"no candidate accepted at position {position} of {params}"
            )
        params.append(accepted)
        if len(params) > cap:
            raise LengthCapExceededError(
                f"representative exceeded length cap {cap}"
            )

    rep = tuple(params)
    s = build_standard(rep)
    forward = _solve(s, tgt, {0: 0}, relaxed=None)
    backward = _solve(tgt.c, prepare_target(s), dict(tgt.report_u.tower_generator), relaxed=None)
    if forward is None or backward is None:
        raise VerificationFailedError(f"representative {rep} failed certification")
    return RepResult(params=rep, witnesses=(forward, backward), trace=tuple(trace))


def compare(c1: Complex, c2: Complex, cross_check: bool = False) -> int:
    """Total-order comparison of local classes: -1, 0, or 1.

    With cross_check=True the lexicographic answer is confirmed by direct
    two-sided local-map tests between the inputs.
    """
    r1 = standard_rep(c1)
    r2 = standard_rep(c2)
    result = lex_cmp(r1.params, r2.params)
    if cross_check:
        t1 = prepare_target(reduce(c1))
        t2 = prepare_target(reduce(c2))
        fwd = _solve(t1.c, t2, dict(t1.report_u.tower_generator), relaxed=None) is not None
        bwd = _solve(t2.c, t1, dict(t2.report_u.tower_generator), relaxed=None) is not None
        direct = {(True, True): EQ, (True, False): LT, (False, True): GT}.get((fwd, bwd))
        if direct != result:
            raise VerificationFailedError(
                f"lexicographic order {result} disagrees with direct maps {(fwd, bwd)}"
            )
    return result
