import random
from collections import defaultdict

import pytest
from hypothesis import given, settings, strategies as st

from borelkit.betti import (
    BettiTable,
    SimplicialComplex,
    betti_table,
    koszul_complex,
    multigraded_betti,
    reduced_homology_dims,
    regularity_oracle,
)
from borelkit.borel import is_stable
from borelkit.errors import BudgetExceeded, DegenerateIdeal
from borelkit.ideal import MonomialIdeal, deg_of, unit_ideal
from borelkit.linalg import integer_rank
from borelkit.ring import RingContext

import oracles
from conftest import ideals


def P(ctx, text):
    return MonomialIdeal.parse(ctx, text)


def K(n, *faces):
    return SimplicialComplex(n, frozenset(tuple(f) for f in faces))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=6)))
def test_rank_matches_sympy(rows):
    assert integer_rank(rows) == oracles.brute_rank(rows)


def test_rank_edge_cases():
    assert integer_rank([]) == 0
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([[2, 4], [1, 2]]) == 1


def test_koszul_examples(R2):
    I = P(R2, "ideal(x1^2, x1*x2)")
    assert koszul_complex(I, R2.monomial((1, 1))).faces == {()}
    assert koszul_complex(P(R2, "ideal(x1)"), R2.monomial((1, 0))).faces == {()}
    assert koszul_complex(I, R2.monomial((0, 1))).faces == frozenset()
    assert koszul_complex(I, R2.monomial((2, 1))).faces == {(), (0,), (1,)}


def test_complex_closure_enforced():
    with pytest.raises(RuntimeError):
        K(3, (), (0, 1))


def test_reduced_homology():
    assert reduced_homology_dims(K(2, (), (0,), (1,))) == [0, 1]
    hollow = K(3, (), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2))
    assert reduced_homology_dims(hollow) == [0, 0, 1]
    assert reduced_homology_dims(K(2, ())) == [1]
    filled = K(3, (), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2))
    assert reduced_homology_dims(filled) == [0, 0, 0, 0]
    assert reduced_homology_dims(K(2)) == []


def test_betti_examples(R2):
    t = betti_table(P(R2, "ideal(x1^2, x1*x2)"))
    assert t.entries == {(0, 2): 2, (1, 3): 1}
    t = betti_table(P(R2, "ideal(x1^2, x2^3)"))
    assert t.entries == {(0, 2): 1, (0, 3): 1, (1, 5): 1}
    assert betti_table(P(R2, "ideal(x1)")).entries == {(0, 1): 1}
    assert t.characteristic == 0


def test_regularity_oracle_examples(R2):
    assert regularity_oracle(P(R2, "ideal(x1^2, x1*x2)")) == 2
    assert regularity_oracle(P(R2, "ideal(x1^2, x2^3)")) == 4
    assert regularity_oracle(P(R2, "ideal(x1, x2)")) == 1
    assert betti_table(P(R2, "ideal(x1, x2)")).entries == {(0, 1): 2, (1, 2): 1}


def test_koszul_complex_of_maximal_ideal():
    R = RingContext(4)
    I = P(R, "ideal(x1, x2, x3, x4)")
    # the Koszul resolution: beta_{i, i+1} = C(4, i+1)
    assert betti_table(I).entries == {(0, 1): 4, (1, 2): 6, (2, 3): 4, (3, 4): 1}


def test_budget_and_degenerate(R2):
    with pytest.raises(BudgetExceeded):
        betti_table(P(R2, "ideal(x1^20, x2^20)"), budget=100)
    with pytest.raises(DegenerateIdeal):
        betti_table(unit_ideal(R2))


def test_budget_env_override(R2, monkeypatch):
    monkeypatch.setenv("BORELKIT_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        betti_table(P(R2, "ideal(x1^4, x2^4)"))


def test_render_and_json(R2):
    t = betti_table(P(R2, "ideal(x1^2, x2^3)"))
    assert t.to_json() == {"characteristic": 0, "betti": {"0": {"2": 1, "3": 1}, "1": {"5": 1}}}
    lines = t.render().splitlines()
    assert lines[0].split() == ["0", "1"]
    assert lines[1].split() == ["2:", "1", "."]
    assert lines[3].split() == ["4:", ".", "1"]
    assert BettiTable().render() == "(empty)"


@settings(max_examples=80, deadline=None)
@given(ideals(max_gens=5))
def test_generator_counts(I):
    t = betti_table(I)
    counts = defaultdict(int)
    for g in I.gens:
        counts[g.degree] += 1
    assert {j: b for (i, j), b in t.entries.items() if i == 0} == dict(counts)
    assert regularity_oracle(I) >= deg_of(I)


@settings(max_examples=80, deadline=None)
@given(ideals(max_gens=6, max_exp=2))
def test_taylor_euler_characteristic(I):
    mb = multigraded_betti(I)
    alt = defaultdict(int)
    for (i, a), b in mb.items():
        alt[a.exps] += (-1) ** i * b
    L = tuple(max(col) for col in zip(*(g.exps for g in I.gens)))
    for a in oracles.monomials_up_to(I.ctx.n, sum(L)):
        if all(x <= y for x, y in zip(a.exps, L)):
            assert alt[a.exps] == oracles.taylor_euler(I.gens, a)


def test_stable_ideals_have_linear_regularity():
    rng = random.Random(11)
    checked = 0
    while checked < 40:
        n = rng.randint(2, 4)
        I = MonomialIdeal(RingContext(n), tuple(
            oracles.Monomial(tuple(rng.randint(0, 2) for _ in range(n))) for _ in range(rng.randint(1, 4))))
        if I.is_unit or not is_stable(I):
            continue
        assert regularity_oracle(I) == deg_of(I)
        checked += 1
