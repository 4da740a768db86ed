"""Stratified generator structure of Borel-type ideals.

A Borel-type ideal I has minimal generators

    x1^a1, ..., xq^aq,  v_01, ..., v_0r0  (in x1..xq),
    v_ij * x_{q+i}^a_ij  for i = 1..n-q  (v_ij in x1..x_{q+i-1}),

where q is the largest index with a pure power in G(I), and for i >= 2 every
v_ij is divisible by some v_{i-1,k}.  Conversely any generating set of that
shape generates a Borel-type ideal, which is what :func:`random_borel` uses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .borel import require_proper
from .errors import InfeasibleBudget, StructureViolation
from .ideal import MonomialIdeal, random_monomial
from .ring import Monomial, RingContext, max_index, mono_divides


@dataclass(frozen=True)
class BorelStructure:
    q: int
    pure_exponents: tuple[int, ...]
    stratum0: tuple[Monomial, ...]
    # strata[i-1] lists the (v_ij, a_ij) pairs whose generator has m(u) = q + i
    strata: tuple[tuple[tuple[Monomial, int], ...], ...]

    @property
    def counts(self) -> tuple[int, ...]:
        """(r_0, r_1, ..., r_{n-q})."""
        return (len(self.stratum0),) + tuple(len(s) for s in self.strata)

    def generators(self, ctx: RingContext) -> list[Monomial]:
        """Reassembled generating set, in the order the strata list them."""
        gens = [ctx.var(j, a) for j, a in enumerate(self.pure_exponents, start=1)]
        gens.extend(self.stratum0)
        for i, stratum in enumerate(self.strata, start=1):
            gens.extend(v * ctx.var(self.q + i, a) for v, a in stratum)
        return gens

    def assemble(self, ctx: RingContext) -> MonomialIdeal:
        return MonomialIdeal(ctx, tuple(self.generators(ctx)))

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "pure": list(self.pure_exponents),
            "stratum0": [list(v.exps) for v in self.stratum0],
            "strata": [[{"v": list(v.exps), "a": a} for v, a in s] for s in self.strata],
        }

    @classmethod
    def from_json(cls, data: dict) -> BorelStructure:
        return cls(
            q=int(data["q"]),
            pure_exponents=tuple(int(a) for a in data["pure"]),
            stratum0=tuple(Monomial(tuple(v)) for v in data["stratum0"]),
            strata=tuple(
                tuple((Monomial(tuple(p["v"])), int(p["a"])) for p in s) for s in data["strata"]
            ),
        )


def _chain_failures(strata) -> list[tuple[int, Monomial]]:
    bad = []
    for i in range(1, len(strata)):
        below = [v for v, _ in strata[i - 1]]
        for v, _ in strata[i]:
            if not any(mono_divides(w, v) for w in below):
                bad.append((i + 1, v))
    return bad


def decompose_structure(I: MonomialIdeal) -> BorelStructure:
    """Read the stratified structure off G(I).

    Raises StructureViolation when a pure power below q is missing or the
    chain condition fails, i.e. when I is not of Borel type.
    """
    require_proper(I)
    n = I.ctx.n
    pure = {}
    for g in I.gens:
        if g.is_pure_power():
            pure[max_index(g)] = g.degree
    if not pure:
        raise StructureViolation("no pure power in G(I): x1 is not in the radical")
    q = max(pure)
    missing = [j for j in range(1, q + 1) if j not in pure]
    if missing:
        raise StructureViolation(f"G(I) lacks pure powers of x{missing[0]} although q = {q}")

    stratum0 = []
    strata = [[] for _ in range(n - q)]
    for g in I.gens:
        m = max_index(g)
        if m <= q:
            if not g.is_pure_power():
                stratum0.append(g)
            continue
        a = g.nu(m)
        exps = list(g.exps)
        exps[m - 1] = 0
        strata[m - q - 1].append((Monomial(tuple(exps)), a))

    structure = BorelStructure(
        q=q,
        pure_exponents=tuple(pure[j] for j in range(1, q + 1)),
        stratum0=tuple(stratum0),
        strata=tuple(tuple(s) for s in strata),
    )
    bad = _chain_failures(structure.strata)
    if bad:
        i, v = bad[0]
        raise StructureViolation(
            f"chain condition fails: stratum {i} entry {I.ctx.format(v)} has no divisor in stratum {i - 1}"
        )
    return structure


def validate_structure(ctx: RingContext, s: BorelStructure) -> bool:
    """Check the shape that certifies Borel type.

    Pure powers must be present for exactly x1..xq, every stratum entry must
    use only the variables it is allowed, and the chain condition must hold
    from stratum 2 on.  Minimality of the reassembled set is not required.
    """
    n = ctx.n
    if not 1 <= s.q <= n:
        return False
    if len(s.pure_exponents) != s.q or any(a < 1 for a in s.pure_exponents):
        return False
    if len(s.strata) != n - s.q:
        return False
    for v in s.stratum0:
        if len(v) != n or max_index(v) > s.q:
            return False
    for i, stratum in enumerate(s.strata, start=1):
        for v, a in stratum:
            if len(v) != n or a < 1:
                return False
            # v = 1 would be a pure power of x_{q+i}, contradicting the choice of q
            if v.degree == 0 or max_index(v) >= s.q + i:
                return False
    return not _chain_failures(s.strata)


def is_borel_structural(I: MonomialIdeal) -> bool:
    """Decomposition succeeds and the resulting structure validates."""
    try:
        s = decompose_structure(I)
    except StructureViolation:
        return False
    return validate_structure(I.ctx, s)


@dataclass(frozen=True)
class BorelBudget:
    """Parameters for :func:`random_borel`.

    ``stratum_sizes`` is (r_0, r_1, ..., r_{n-q}).  ``max_degree``, when set,
    caps the degree of every drawn generator.
    """

    q: int
    max_exponent: int
    stratum_sizes: tuple[int, ...] = field(default=())
    max_degree: int | None = None

    def sizes_for(self, n: int) -> tuple[int, ...]:
        return tuple(self.stratum_sizes) or (0,) * (n - self.q + 1)


def check_budget(ctx: RingContext, budget: BorelBudget) -> tuple[int, ...]:
    n = ctx.n
    if not 1 <= budget.q <= n:
        raise InfeasibleBudget(f"q = {budget.q} must lie in 1..{n}")
    if budget.max_exponent < 1:
        raise InfeasibleBudget("max_exponent must be at least 1")
    sizes = budget.sizes_for(n)
    if len(sizes) != n - budget.q + 1:
        raise InfeasibleBudget(f"expected {n - budget.q + 1} stratum sizes (r_0..r_{n - budget.q})")
    if any(r < 0 for r in sizes):
        raise InfeasibleBudget("stratum sizes must be nonnegative")
    if budget.q == 1 and sizes[0]:
        raise InfeasibleBudget("stratum 0 needs q >= 2: every monomial in x1 alone is a pure power")
    for i in range(2, len(sizes)):
        if sizes[i] and not sizes[i - 1]:
            raise InfeasibleBudget(f"stratum {i} is nonempty but stratum {i - 1} is empty")
    if budget.max_degree is not None:
        if budget.max_degree < 1:
            raise InfeasibleBudget("max_degree must be at least 1")
        if budget.max_degree < 2 and any(sizes):
            raise InfeasibleBudget("strata need max_degree >= 2")
    return sizes


def random_borel(ctx: RingContext, budget: BorelBudget, seed: int) -> MonomialIdeal:
    """A random Borel-type ideal assembled stratum by stratum; deterministic in ``seed``.

    Exponents of x_j (j <= q) in drawn entries stay below a_j so that entries
    are not swallowed by the pure powers; minimalization can still shrink the
    strata, so ``stratum_sizes`` are upper bounds on the result.
    """
    sizes = check_budget(ctx, budget)
    rng = random.Random(seed)
    n, q, top = ctx.n, budget.q, budget.max_exponent
    cap = budget.max_degree
    pure_top = min(top, cap) if cap is not None else top

    pure = [rng.randint(1, pure_top) for _ in range(q)]
    caps = [a - 1 for a in pure] + [top] * (n - q)
    gens = [ctx.var(j, a) for j, a in enumerate(pure, start=1)]
    for _ in range(sizes[0]):
        u = random_monomial(rng, n, range(1, q + 1), caps, cap)
        if len(u.support()) >= 2:
            gens.append(u)

    prev: list[Monomial] = []
    for i in range(1, n - q + 1):
        current = []
        allowed = range(1, q + i)
        for _ in range(sizes[i]):
            if i == 1:
                v = random_monomial(rng, n, allowed, caps, None if cap is None else cap - 1,
                                    nonconstant=True)
            else:
                base = rng.choice(prev)
                room = None if cap is None else cap - 1 - base.degree
                v = base * random_monomial(rng, n, allowed, caps, room)
            room = None if cap is None else cap - v.degree
            a = rng.randint(1, top if room is None else max(1, min(top, room)))
            current.append(v)
            gens.append(v * ctx.var(q + i, a))
        prev = current
    return MonomialIdeal(ctx, tuple(gens))


def random_budget(ctx: RingContext, rng: random.Random, max_exponent: int = 3,
                  max_degree: int | None = None, max_stratum: int = 2) -> BorelBudget:
    """Draw a feasible budget: random q and stratum sizes respecting the chain rule."""
    q = rng.randint(1, ctx.n)
    sizes = [rng.randint(0, max_stratum) if q >= 2 else 0]
    for i in range(1, ctx.n - q + 1):
        if i >= 2 and sizes[-1] == 0:
            sizes.append(0)
        else:
            sizes.append(rng.randint(0, max_stratum))
    if max_degree is not None and max_degree < 2:
        sizes = [0] * len(sizes)
    return BorelBudget(q, max_exponent, tuple(sizes), max_degree)
