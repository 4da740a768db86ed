"""Graded Betti numbers of monomial ideals from upper Koszul simplicial complexes.

beta_{i,a}(I) = dim H~_{i-1}(K^a(I)) where K^a(I) is the complex of squarefree
subsets s of the variables with x^a / x^s in I.  Nothing here uses Borel-type
theory, so it serves as an independent check on the regularity engine.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from operator import mul

from .borel import require_proper
from .errors import BudgetExceeded
from .ideal import MonomialIdeal, contains, lcm_of
from .linalg import integer_rank
from .ring import Monomial, divisors

DEFAULT_BUDGET = 200_000


def default_budget() -> int:
    env = os.environ.get("BORELKIT_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces as sorted tuples of 0-based vertex indices; the empty face is ``()``."""

    n_vertices: int
    faces: frozenset[tuple[int, ...]]

    def __post_init__(self):
        for f in self.faces:
            for k in range(len(f)):
                if f[:k] + f[k + 1:] not in self.faces:
                    raise RuntimeError(f"face {f} is missing its facet {f[:k] + f[k + 1:]}")

    @property
    def dimension(self) -> int:
        """Largest face dimension; -1 for {()}, -2 for the void complex."""
        return max((len(f) - 1 for f in self.faces), default=-2)

    def faces_of_dim(self, d: int) -> list[tuple[int, ...]]:
        return sorted(f for f in self.faces if len(f) == d + 1)


def koszul_complex(I: MonomialIdeal, a: Monomial) -> SimplicialComplex:
    """Upper Koszul complex of I at multidegree a."""
    support = [i for i, e in enumerate(a.exps) if e > 0]
    faces = set()
    for k in range(len(support) + 1):
        for s in combinations(support, k):
            exps = list(a.exps)
            for i in s:
                exps[i] -= 1
            if contains(I, Monomial(tuple(exps))):
                faces.add(s)
    return SimplicialComplex(I.ctx.n, frozenset(faces))


def _boundary(rows: list[tuple[int, ...]], cols: list[tuple[int, ...]]) -> list[list[int]]:
    index = {f: r for r, f in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for c, f in enumerate(cols):
        for k in range(len(f)):
            M[index[f[:k] + f[k + 1:]]][c] = -1 if k % 2 else 1
    return M


def reduced_homology_dims(c: SimplicialComplex) -> list[int]:
    """dim H~_d over Q for d = -1 .. dim(c); empty list for the void complex."""
    top = c.dimension
    if top < -1:
        return []
    by_dim = {d: c.faces_of_dim(d) for d in range(-1, top + 1)}
    # rank[d] = rank of the boundary map C_d -> C_{d-1}
    rank = {-1: 0, top + 1: 0}
    for d in range(0, top + 1):
        rank[d] = integer_rank(_boundary(by_dim[d - 1], by_dim[d])) if by_dim[d] else 0
    return [len(by_dim[d]) - rank[d] - rank[d + 1] for d in range(-1, top + 1)]


@dataclass(frozen=True)
class BettiTable:
    """beta_{i,j}(I) keyed by (homological index i, internal degree j); zeros omitted."""

    entries: dict = field(default_factory=dict)
    characteristic: int = 0

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def regularity(self) -> int:
        return max(j - i for (i, j) in self.entries)

    def to_json(self) -> dict:
        nested = defaultdict(dict)
        for (i, j), b in sorted(self.entries.items()):
            nested[str(i)][str(j)] = b
        return {"characteristic": self.characteristic, "betti": dict(nested)}

    def render(self) -> str:
        """Conventional grid: row r = j - i, column i."""
        if not self.entries:
            return "(empty)"
        cols = range(0, max(i for i, _ in self.entries) + 1)
        rows = range(min(j - i for i, j in self.entries), self.regularity() + 1)
        cells = [[str(self[i, r + i]) if self[i, r + i] else "." for i in cols] for r in rows]
        head = [str(i) for i in cols]
        width = max(len(x) for x in head + [c for row in cells for c in row])
        lines = ["     " + " ".join(h.rjust(width) for h in head)]
        for r, row in zip(rows, cells):
            lines.append(f"{r:>3}: " + " ".join(c.rjust(width) for c in row))
        lines.append("total: " + " ".join(
            str(sum(b for (i, _), b in self.entries.items() if i == col)) for col in cols))
        return "\n".join(lines)


def multigraded_betti(I: MonomialIdeal, budget: int | None = None) -> dict:
    """{(i, a): beta_{i,a}} over all multidegrees a dividing lcm(G(I))."""
    require_proper(I)
    budget = default_budget() if budget is None else budget
    L = lcm_of(I)
    size = reduce(mul, (e + 1 for e in L.exps), 1)
    if size > budget:
        raise BudgetExceeded(f"{size} multidegrees exceed the Betti budget of {budget}")
    out = {}
    for a in divisors(L):
        if not contains(I, a):
            continue
        dims = reduced_homology_dims(koszul_complex(I, a))
        for d, h in enumerate(dims, start=-1):
            if h:
                out[(d + 1, a)] = h
    return out


def betti_table(I: MonomialIdeal, budget: int | None = None) -> BettiTable:
    entries = defaultdict(int)
    for (i, a), b in multigraded_betti(I, budget).items():
        entries[(i, a.degree)] += b
    return BettiTable(dict(sorted(entries.items())))


def regularity_oracle(I: MonomialIdeal, budget: int | None = None) -> int:
    """max{j - i : beta_{i,j}(I) != 0}."""
    return betti_table(I, budget).regularity()
