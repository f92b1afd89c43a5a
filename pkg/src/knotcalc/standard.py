"""Standard complexes C(a_1, ..., a_n) and their parameter-level invariants.

A standard complex is a chain of generators x_0, ..., x_n in which x_{i-1}
and x_i are joined by a U-arrow for i odd and a V-arrow for i even.  The
arrow length is |a_i| and the sign gives the direction: a_i > 0 points the
arrow from x_i to x_{i-1}, a_i < 0 from x_{i-1} to x_i.  Parameters are
plain tuples of nonzero integers; the empty tuple is the trivial class R.

The integers carry the total order

    -1 <! -2 <! -3 <! ... <! 0 <! ... <! 3 <! 2 <! 1,

equivalently the usual order on the keys 1/a (with 1/0 = 0).  Standard
complexes are ordered lexicographically by this order, padding the shorter
parameter sequence with trailing zeros.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .algebra import Bigrading, Complex, Monomial, validate
from .errors import InconsistentGradingError

Params = tuple[int, ...]

LT, EQ, GT = -1, 0, 1


def check_params(params: Sequence[int], *, even: bool = False) -> Params:
    p = tuple(int(a) for a in params)
    if any(a == 0 for a in p):
        raise ValueError(f"standard parameters must be nonzero, got {p}")
    if even and len(p) % 2:
        raise ValueError(f"closed standard parameters must have even length, got {p}")
    return p


def _step(i: int, b: int) -> Bigrading:
    """Grading difference gr(x_i) - gr(x_{i-1}) forced by parameter b at position i."""
    if i % 2 == 1:  # U-arrow
        return Bigrading(-2 * b + (1 if b > 0 else -1), 1 if b > 0 else -1)
    return Bigrading(1 if b > 0 else -1, -2 * b + (1 if b > 0 else -1))


def build_standard(params: Sequence[int], v_anchor: Optional[int] = None) -> Complex:
    """Build the standard complex of the given parameters.

    With v_anchor=None the parameters must have even length and the complex
    is graded by the two anchors gr_U(x_0) = 0 and gr_V(x_n) = 0.  With
    v_anchor=v the sequence may have any length (a truncated or semistandard
    complex) and is anchored at gr(x_0) = (0, v) instead.
    """
    p = check_params(params, even=v_anchor is None)
    n = len(p)

    rel = [Bigrading(0, 0)]
    for i, b in enumerate(p, start=1):
        rel.append(rel[-1] + _step(i, b))
    v0 = v_anchor if v_anchor is not None else -rel[n].grv
    gradings = [Bigrading(r.gru, r.grv + v0) for r in rel]
    if gradings[0].gru != 0:
        raise InconsistentGradingError(f"gr_U(x_0) = {gradings[0].gru}")

    rows: dict[int, list[tuple[Monomial, str]]] = {}
    for i, b in enumerate(p, start=1):
        kind = "U" if i % 2 == 1 else "V"
        m = Monomial(kind, abs(b))
        if b > 0:
            rows.setdefault(i, []).append((m, f"x{i - 1}"))
        else:
            rows.setdefault(i - 1, []).append((m, f"x{i}"))
    diff = [(f"x{s}", terms) for s, terms in sorted(rows.items())]

    return validate(
        [(f"x{i}", tuple(gradings[i])) for i in range(n + 1)],
        diff,
    )


def bang_key(a: int) -> Fraction:
    return Fraction(1, a) if a else Fraction(0)


def bang_cmp(a: int, b: int) -> int:
    """Compare two integers in the unusual total order (-1 least, 1 greatest)."""
    ka, kb = bang_key(a), bang_key(b)
    return LT if ka < kb else GT if ka > kb else EQ


def lex_cmp(p: Sequence[int], q: Sequence[int]) -> int:
    """Lexicographic comparison of parameter sequences, zero-padded at the end."""
    n = max(len(p), len(q))
    for i in range(n):
        c = bang_cmp(p[i] if i < len(p) else 0, q[i] if i < len(q) else 0)
        if c != EQ:
            return c
    return EQ


def phi(params: Sequence[int]) -> dict[int, int]:
    """Signed counts of U-arrow lengths: phi_j = #{odd i: a_i = j} - #{odd i: a_i = -j}.

    Returns a sparse map with zero values dropped.
    """
    out: dict[int, int] = {}
    for a in params[0::2]:
        j = abs(a)
        out[j] = out.get(j, 0) + (1 if a > 0 else -1)
    return {j: v for j, v in sorted(out.items()) if v}


def P_of(params: Sequence[int]) -> int:
    """The U-grading of a U-tower generator.

    Computed by the closed formula -2 sum j*phi_j + sum sgn(a_i) and checked
    against gr_U(x_n) of the built complex.
    """
    p = check_params(params, even=True)
    value = -2 * sum(j * v for j, v in phi(p).items()) + sum(1 if a > 0 else -1 for a in p)
    built = build_standard(p)
    gr_last = built.gens[len(p)].grading.gru
    assert value == gr_last, f"P formula {value} != gr_U(x_n) {gr_last}"
    return value


def tau_of(params: Sequence[int]) -> int:
    """tau = -P/2.  Equals sum j*phi_j when the parameters are symmetric."""
    return -P_of(params) // 2


def N_of(params: Sequence[int]) -> int:
    """Largest j with phi_j != 0, or 0."""
    ph = phi(params)
    return max(ph) if ph else 0


def gc_lower(params: Sequence[int]) -> Fraction:
    """Lower bound N/2 for the concordance genus."""
    return Fraction(N_of(params), 2)


def uc_lower(params: Sequence[int]) -> int:
    """Lower bound N for the concordance unknotting number."""
    return N_of(params)


def shift(params: Sequence[int], m: int, mode: str = "both") -> Params:
    """Lengthen every arrow of length >= m by one.

    mode selects which positions move: "both", "u" (odd positions only), or
    "v" (even positions only).  The full shift factors as the V-shift after
    the U-shift.
    """
    if m < 1:
        raise ValueError("shift index must be >= 1")
    if mode not in ("both", "u", "v"):
        raise ValueError(f"bad shift mode {mode!r}")
    out = []
    for i, a in enumerate(params, start=1):
        hit = mode == "both" or (mode == "u" and i % 2 == 1) or (mode == "v" and i % 2 == 0)
        if hit and a >= m:
            a += 1
        elif hit and a <= -m:
            a -= 1
        out.append(a)
    return tuple(out)


def is_symmetric(params: Sequence[int]) -> bool:
    """True when a_i = -a_{n+1-i} for all i."""
    n = len(params)
    return all(params[i] == -params[n - 1 - i] for i in range(n))


def negate(params: Sequence[int]) -> Params:
    """Parameters of the dual complex: entrywise negation."""
    return tuple(-a for a in params)


def parse_params(text: str) -> Params:
    """Parse the comma-separated parameter syntax, e.g. "1,-2,2,-1"; "" is ()."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok.strip()) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"bad parameter list {text!r}") from None


def format_params(params: Sequence[int]) -> str:
    return ",".join(str(a) for a in params)
