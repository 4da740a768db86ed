import random

import pytest
from hypothesis import given, settings

from borelkit.errors import DegenerateIdeal
from borelkit.ideal import (
    MonomialIdeal,
    colon_ideal,
    colon_monomial,
    contains,
    deg_of,
    degree_slice,
    equals,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    m_of,
    minimalize,
    prefix_ideal,
    saturate_ideal,
    saturate_monomial,
    truncation,
    unit_ideal,
    zero_ideal,
)
from borelkit.ring import Monomial, RingContext

import oracles
from conftest import ideals


def P(ctx, text):
    return MonomialIdeal.parse(ctx, text)


def test_minimalize(R3):
    R = R3
    assert minimalize(R, [R.parse(s) for s in ("x1^2", "x1^3", "x1*x2")]) == P(R, "ideal(x1^2, x1*x2)")
    assert minimalize(R, [R.one(), R.var(1)]) == unit_ideal(R)
    I = P(R, "ideal(x1*x2, x2*x3, x1*x3)")
    assert len(I.gens) == 3
    assert minimalize(R, []).is_zero


def test_canonical_order(R2):
    I = P(R2, "ideal(x2^3, x1*x2, x1^2)")
    assert str(I) == "ideal(x1^2, x1*x2, x2^3)"


def test_contains(R2):
    I = P(R2, "ideal(x1^2, x1*x2)")
    assert contains(I, R2.parse("x1^2*x2"))
    assert not contains(I, R2.parse("x2^3"))
    assert not any(contains(zero_ideal(R2), u) for u in oracles.monomials_up_to(2, 3))


def test_sum_product_intersection(R2):
    assert ideal_product(P(R2, "ideal(x1)"), P(R2, "ideal(x2)")) == P(R2, "ideal(x1*x2)")
    assert ideal_intersection(P(R2, "ideal(x1^2)"), P(R2, "ideal(x2)")) == P(R2, "ideal(x1^2*x2)")
    assert ideal_product(P(R2, "ideal(x1^2, x1*x2)"), P(R2, "ideal(x1)")) == P(R2, "ideal(x1^3, x1^2*x2)")
    assert ideal_sum(P(R2, "ideal(x1)"), P(R2, "ideal(x1^2, x2)")) == P(R2, "ideal(x1, x2)")


def test_colon_monomial(R2):
    I = P(R2, "ideal(x1^2, x1*x2)")
    assert colon_monomial(I, R2.var(1)) == P(R2, "ideal(x1, x2)")
    assert colon_monomial(I, R2.one()) == I
    assert colon_monomial(P(R2, "ideal(x2^2)"), R2.var(2)) == P(R2, "ideal(x2)")


def test_colon_ideal(R2):
    # (x1*x2):x1 = (x2) and (x1*x2):x2 = (x1); their intersection is (x1*x2)
    got = colon_ideal(P(R2, "ideal(x1*x2)"), P(R2, "ideal(x1, x2)"))
    assert got == P(R2, "ideal(x1*x2)")
    I_gens = [R2.parse("x1*x2")]
    J_gens = [R2.var(1), R2.var(2)]
    for u in oracles.monomials_up_to(2, 3):
        assert contains(got, u) == oracles.in_colon(I_gens, J_gens, u)
    I = P(R2, "ideal(x1^2, x2^3)")
    assert colon_ideal(I, unit_ideal(R2)) == I
    assert colon_ideal(P(R2, "ideal(x1)"), P(R2, "ideal(x2)")) == P(R2, "ideal(x1)")
    with pytest.raises(DegenerateIdeal):
        colon_ideal(I, zero_ideal(R2))


def test_saturate_monomial(R2):
    assert saturate_monomial(P(R2, "ideal(x2^2)"), R2.var(2)) == unit_ideal(R2)
    assert saturate_monomial(P(R2, "ideal(x1^2*x2)"), R2.var(2)) == P(R2, "ideal(x1^2)")
    assert saturate_monomial(P(R2, "ideal(x1)"), R2.var(2)) == P(R2, "ideal(x1)")
    I = P(R2, "ideal(x1^2, x2^3)")
    assert saturate_monomial(I, R2.one()) == I


def test_saturate_ideal(R2):
    m = prefix_ideal(R2, 2)
    assert saturate_ideal(P(R2, "ideal(x2^2)"), m) == P(R2, "ideal(x2^2)")
    got = saturate_ideal(P(R2, "ideal(x1^2, x1*x2)"), m)
    assert got == P(R2, "ideal(x1)")
    assert contains(got, R2.var(1))
    assert saturate_ideal(unit_ideal(R2), m) == unit_ideal(R2)


def test_saturate_needs_more_steps_than_max_exponent(R2):
    # (x1^3, x2^3) : m^k only reaches (1) at k = 5
    I = P(R2, "ideal(x1^3, x2^3)")
    assert saturate_ideal(I, prefix_ideal(R2, 2)) == unit_ideal(R2)


def test_prefix_ideal(R3):
    assert prefix_ideal(R3, 1) == P(R3, "ideal(x1)")
    assert prefix_ideal(R3, 3) == P(R3, "ideal(x1, x2, x3)")
    assert prefix_ideal(R3, 2) == P(R3, "ideal(x1, x2)")
    with pytest.raises(ValueError):
        prefix_ideal(R3, 4)


def test_deg_and_m(R2):
    I = P(R2, "ideal(x1^2, x1*x2)")
    assert (deg_of(I), m_of(I)) == (2, 2)
    assert (deg_of(P(R2, "ideal(x1)")), m_of(P(R2, "ideal(x1)"))) == (1, 1)
    J = P(R2, "ideal(x1^2, x2^3)")
    assert (deg_of(J), m_of(J)) == (3, 2)
    with pytest.raises(DegenerateIdeal):
        deg_of(zero_ideal(R2))


def test_degree_slice(R2):
    assert degree_slice(P(R2, "ideal(x1^2, x1*x2)"), 2) == [R2.parse("x1^2"), R2.parse("x1*x2")]
    assert degree_slice(P(R2, "ideal(x2^2)"), 3) == [R2.parse("x1*x2^2"), R2.parse("x2^3")]
    assert degree_slice(P(R2, "ideal(x1^2, x2^3)"), 1) == []


def test_truncation(R2):
    got = truncation(P(R2, "ideal(x1^2, x2^3)"), 3)
    assert got == P(R2, "ideal(x1^3, x1^2*x2, x2^3)")
    assert truncation(P(R2, "ideal(x1)"), 1) == P(R2, "ideal(x1)")
    I = P(R2, "ideal(x1^2, x1*x2)")
    assert truncation(I, 2) == I
    with pytest.raises(ValueError):
        truncation(P(R2, "ideal(x1^2, x2^3)"), 2)


def test_power(R2):
    I = P(R2, "ideal(x1^2, x1*x2)")
    assert ideal_power(I, 1) == I
    assert ideal_power(prefix_ideal(R2, 2), 2) == P(R2, "ideal(x1^2, x1*x2, x2^2)")
    assert ideal_power(I, 2) == P(R2, "ideal(x1^4, x1^3*x2, x1^2*x2^2)")
    with pytest.raises(ValueError):
        ideal_power(I, 0)


def test_equals(R2):
    I = P(R2, "ideal(x1^2, x1*x2, x2^3)")
    rng = random.Random(4)
    for _ in range(5):
        gens = list(I.gens)
        rng.shuffle(gens)
        assert equals(minimalize(R2, gens), I)
    assert not equals(P(R2, "ideal(x1)"), P(R2, "ideal(x1^2)"))
    assert equals(colon_monomial(I, R2.one()), I)


def test_json_round_trip(R3):
    I = P(R3, "ideal(x1^2, x1*x2, x3^4)")
    data = I.to_json()
    assert data == {"n": 3, "gens": [[2, 0, 0], [1, 1, 0], [0, 0, 4]]}
    assert MonomialIdeal.from_json(data) == I
    assert MonomialIdeal.from_json({"n": 2, "gens": [[1, 0], [3, 0], [0, 2]]}) == P(RingContext(2), "ideal(x1, x2^2)")


def test_text_round_trip(R3):
    I = P(R3, "ideal(x1^3, x1*x2^2, x2*x3)")
    assert P(R3, str(I)) == I
    assert P(R3, "ideal()").is_zero


def _range(I, J):
    return oracles.monomials_up_to(I.ctx.n, max(g.degree for g in I.gens + J.gens) * 2 + 2)


pairs = ideals(n=2).flatmap(lambda I: ideals(n=2).map(lambda J: (I, J))) | \
    ideals(n=3, max_exp=2).flatmap(lambda I: ideals(n=3, max_exp=2).map(lambda J: (I, J)))


@settings(max_examples=60, deadline=None)
@given(pairs)
def test_membership_laws(IJ):
    I, J = IJ
    S, X, C = ideal_sum(I, J), ideal_intersection(I, J), colon_ideal(I, J)
    Pr = ideal_product(I, J)
    for u in _range(I, J):
        a, b = contains(I, u), contains(J, u)
        assert contains(S, u) == (a or b)
        assert contains(X, u) == (a and b)
        assert contains(C, u) == oracles.in_colon(I.gens, J.gens, u)
        assert contains(Pr, u) == oracles.member([oracles.mul(x, y) for x in I.gens for y in J.gens], u)


@settings(max_examples=60, deadline=None)
@given(pairs)
def test_saturation_matches_brute_force(IJ):
    I, J = IJ
    top = max(max(g.exps) for g in I.gens)
    sat = saturate_ideal(I, J)
    assert colon_ideal(sat, J) == sat
    for u in oracles.monomials_up_to(I.ctx.n, max(g.degree for g in I.gens) + 1):
        assert contains(sat, u) == oracles.in_saturation(I.gens, J.gens, u, len(J.gens) * top + 1)


@settings(max_examples=80, deadline=None)
@given(ideals(), ideals(n=2).map(lambda I: I.gens[0]))
def test_saturate_monomial_fixpoint(I, v):
    n = I.ctx.n
    v = Monomial(v.exps + (0,) * (n - 2))
    sat = saturate_monomial(I, v)
    assert colon_monomial(sat, v) == sat
    # iteration count bound: 1 + max exponent of the v-variables across G(I)
    steps, cur = 0, I
    while True:
        nxt = colon_monomial(cur, v)
        if nxt == cur:
            break
        cur, steps = nxt, steps + 1
    top = max((g.exps[i] for g in I.gens for i in range(n) if v.exps[i]), default=0)
    assert steps + 1 <= top + 1


@settings(max_examples=60, deadline=None)
@given(ideals())
def test_truncation_laws(I):
    d = deg_of(I)
    for e in (d, d + 1, d + 2):
        T = truncation(I, e)
        assert all(contains(I, g) for g in T.gens)
        for u in oracles.monomials_up_to(I.ctx.n, e + 2):
            if u.degree >= e and contains(I, u):
                assert contains(T, u)


@given(ideals(max_gens=6))
def test_minimalize_idempotent_and_order_free(I):
    assert minimalize(I.ctx, I.gens) == I
    assert minimalize(I.ctx, reversed(I.gens + I.gens)) == I
    gens = I.gens
    for g in gens:
        assert not any(h != g and all(a <= b for a, b in zip(h.exps, g.exps)) for h in gens)
