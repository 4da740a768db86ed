import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from borelkit.ideal import MonomialIdeal  # noqa: E402
from borelkit.ring import Monomial, RingContext  # noqa: E402

ACCEPTANCE_RESULTS = {}


def exps(n, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n)


def monomials(n, max_exp=3):
    return exps(n, max_exp).map(Monomial)


@st.composite
def ideals(draw, n=None, max_gens=4, max_exp=3, nonzero=True, proper=True):
    n = n or draw(st.integers(2, 3))
    gens = draw(st.lists(monomials(n, max_exp), min_size=1 if nonzero else 0, max_size=max_gens))
    if proper:
        gens = [g for g in gens if g.degree > 0] or [Monomial((1,) + (0,) * (n - 1))]
    return MonomialIdeal(RingContext(n), tuple(gens))


@pytest.fixture
def R2():
    return RingContext(2)


@pytest.fixture
def R3():
    return RingContext(3)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")
