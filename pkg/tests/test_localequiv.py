import itertools
import random

import pytest

from conftest import box, direct_sum, scramble
from knotcalc.algebra import dual, reduce, tensor, unit_complex
from knotcalc.errors import NotKnotLikeError
from knotcalc.homology import apply_shift
from knotcalc.localequiv import compare, standard_rep
from knotcalc.localmaps import verify_local_map
from knotcalc.standard import EQ, GT, LT, build_standard, lex_cmp, negate, phi, shift
from test_homology import fig2


def test_rep_of_standard_is_itself():
    for p in [(), (1, -1), (-2, 1), (1, -2, 2, -1), (1, -2, -1, 1, 2, -1)]:
        assert standard_rep(build_standard(p)).params == p


def test_rep_product_examples():
    r = standard_rep(tensor(build_standard((2, -2)), build_standard((1, -1))))
    assert r.params == (1, -1, 2, 1, -1, -2, 1, -1)
    r = standard_rep(tensor(build_standard((1, -3, 3, -1)), build_standard((2, -2))))
    assert r.params == (1, -3, 2, -2, 3, -1)


def test_rep_fig2_is_trivial():
    assert standard_rep(fig2()).params == ()


def test_rep_witnesses_verify():
    c = tensor(build_standard((2, -2)), build_standard((1, -1)))
    r = standard_rep(c)
    s = build_standard(r.params)
    fwd, bwd = r.witnesses
    assert verify_local_map(s, reduce(c), fwd)
    assert verify_local_map(reduce(c), s, bwd)


def test_rep_trace_records_candidates():
    r = standard_rep(build_standard((2, -2)))
    first = r.trace[0]
    assert first.position == 1
    assert first.candidates[0] == (1, False)
    assert first.accepted == 2
    last = r.trace[-1]
    assert last.accepted is None  # termination via the stop test


def test_rep_normalizes_input():
    c = apply_shift(build_standard((1, -2, 2, -1)), (4, -2))
    assert standard_rep(c).params == (1, -2, 2, -1)


def test_rep_reduces_input():
    from knotcalc.algebra import Monomial, validate

    c = validate(
        [("a", (0, 0)), ("b", (1, 1)), ("e", (0, 0))],
        [("b", [(Monomial("1", 0), "a")])],
    )
    assert standard_rep(c).params == ()


def test_rep_rejects_non_knot_like():
    with pytest.raises(NotKnotLikeError):
        standard_rep(box(1, 1))


def test_rep_idempotent_at_parameter_level():
    for p in [(1, -1), (2, -1), (1, -2, 2, -1)]:
        c = tensor(build_standard(p), build_standard((1, -1)))
        rep = standard_rep(c).params
        assert standard_rep(build_standard(rep)).params == rep


def test_rep_duality():
    for p in [(1, -1), (1, -2, 2, -1), (2, -1, 1, -2)]:
        c = build_standard(p)
        assert standard_rep(dual(c)).params == negate(p)
    c = tensor(build_standard((2, -2)), build_standard((1, -1)))
    assert standard_rep(dual(c)).params == negate(standard_rep(c).params)


def test_rep_inverse_law():
    for p in [(1, -1), (2, -2), (1, -2, 2, -1)]:
        c = build_standard(p)
        assert standard_rep(tensor(c, dual(c))).params == ()


def test_rep_of_scrambled_sum_recovers_params():
    rng = random.Random(2024)
    for p in [(1, -1), (2, -1, 1, -2), (1, -3, 2, -2, 3, -1)]:
        c = direct_sum(build_standard(p), box(1, 2, tag="k"), box(2, 1, tag="m"))
        c = scramble(c, rng)
        assert standard_rep(c).params == p


def test_phi_homomorphism_sample():
    rng = random.Random(5)
    pool = [(1, -1), (2, -2), (-1, 1), (1, -2), (-2, 2), (2, -1)]
    for _ in range(12):
        a, b = rng.choice(pool), rng.choice(pool)
        r = standard_rep(tensor(build_standard(a), build_standard(b)))
        pa, pb, pr = phi(a), phi(b), phi(r.params)
        for j in set(pa) | set(pb) | set(pr):
            assert pr.get(j, 0) == pa.get(j, 0) + pb.get(j, 0), (a, b)


def test_shift_homomorphism_sample():
    cases = [((1, -1), (1, -1), 1), ((2, -2), (1, -1), 2), ((1, -2), (2, -1), 1)]
    for a, b, m in cases:
        lhs = standard_rep(
            tensor(build_standard(shift(a, m)), build_standard(shift(b, m)))
        ).params
        rhs = shift(standard_rep(tensor(build_standard(a), build_standard(b))).params, m)
        assert lhs == rhs, (a, b, m)


# --- compare -------------------------------------------------------------------


def test_compare_examples():
    assert compare(unit_complex(), build_standard((1, -1))) == LT
    c = build_standard((1, -2, 2, -1))
    assert compare(c, c) == EQ
    square = tensor(build_standard((1, -1)), build_standard((1, -1)))
    assert compare(c, square) == GT


def test_compare_cross_check():
    a = build_standard((1, -2))
    b = tensor(build_standard((1, -1)), build_standard((1, -1)))
    assert compare(a, b, cross_check=True) == lex_cmp((1, -2), (1, -1, 1, -1))


def test_compare_total_on_small_pool():
    pool = [(), (1, -1), (-1, 1), (2, -2)]
    for p, q in itertools.product(pool, pool):
        c = compare(build_standard(p), build_standard(q), cross_check=True)
        assert c == lex_cmp(p, q)
