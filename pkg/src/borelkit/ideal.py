"""Monomial ideals stored as their canonical minimal generating antichain."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContextMismatch, DegenerateIdeal, SaturationCapExceeded
from .ring import (
    Monomial,
    RingContext,
    check_context,
    enumerate_monomials,
    max_index,
    mono_divides,
    sort_key,
)


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimal(ctx: RingContext, raw: Iterable[Monomial]) -> tuple[Monomial, ...]:
    monos = sorted(set(raw), key=sort_key)
    check_context(ctx, *monos)
    kept: list[Monomial] = []
    lower: list[tuple] = []  # kept exponents of strictly smaller degree than the current one
    degree = None
    # a proper divisor has strictly smaller degree, so a degree-sorted scan suffices
    for u in monos:
        if u.degree != degree:
            lower = [g.exps for g in kept]
            degree = u.degree
        if not any(_divides(g, u.exps) for g in lower):
            kept.append(u)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal of ``ctx``; ``gens`` is always G(I) in canonical order.

    Any generating set may be passed in; it is minimalized on construction.
    The zero ideal has no generators and the unit ideal is generated by 1.
    """

    ctx: RingContext
    gens: tuple[Monomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", _minimal(self.ctx, self.gens))

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __contains__(self, u: Monomial) -> bool:
        return contains(self, u)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __and__(self, other):
        return ideal_intersection(self, other)

    def __pow__(self, k: int):
        return ideal_power(self, k)

    def __str__(self):
        return "ideal(" + ", ".join(self.ctx.format(g) for g in self.gens) + ")"

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].degree == 0

    def to_json(self) -> dict:
        return {"n": self.ctx.n, "gens": [list(g.exps) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict, ctx: RingContext | None = None) -> MonomialIdeal:
        ctx = ctx or RingContext(int(data["n"]))
        if ctx.n != int(data["n"]):
            raise ContextMismatch("JSON ideal lives in a different ring")
        return cls(ctx, tuple(ctx.monomial(g) for g in data["gens"]))

    @classmethod
    def parse(cls, ctx: RingContext, text: str) -> MonomialIdeal:
        """Read the ``ideal(m1, m2, ...)`` text form."""
        text = text.strip()
        if not (text.startswith("ideal(") and text.endswith(")")):
            raise ValueError(f"not an ideal literal: {text!r}")
        body = text[len("ideal("):-1].strip()
        parts = [p for p in body.split(",")] if body else []
        return cls(ctx, tuple(ctx.parse(p) for p in parts))


def minimalize(ctx: RingContext, raw: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(ctx, tuple(raw))


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ctx.n != J.ctx.n:
        raise ContextMismatch(f"ideals live in rings with {I.ctx.n} and {J.ctx.n} variables")


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    """Monomial membership: some minimal generator divides u."""
    check_context(I.ctx, u)
    e = u.exps
    return any(_divides(g.exps, e) for g in I.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ctx, I.gens + J.gens)


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ctx, tuple(u * v for u in I.gens for v in J.gens))


def ideal_intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(
        I.ctx,
        tuple(Monomial(tuple(map(max, u.exps, v.exps))) for u in I.gens for v in J.gens),
    )


def colon_monomial(I: MonomialIdeal, v: Monomial) -> MonomialIdeal:
    """(I : v), generated by g / gcd(g, v) for g in G(I)."""
    check_context(I.ctx, v)
    return MonomialIdeal(
        I.ctx,
        tuple(Monomial(tuple(max(a - b, 0) for a, b in zip(g.exps, v.exps))) for g in I.gens),
    )


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J) as the intersection of (I : v) over the generators v of J."""
    _same_ring(I, J)
    if J.is_zero:
        raise DegenerateIdeal("colon by the zero ideal is rejected")
    result = None
    for v in J.gens:
        part = colon_monomial(I, v)
        result = part if result is None else ideal_intersection(result, part)
    return result


def _max_exponent(I: MonomialIdeal) -> int:
    return max((max(g.exps) for g in I.gens), default=0)


def saturate_monomial(I: MonomialIdeal, v: Monomial) -> MonomialIdeal:
    """(I : v^inf) by iterating the colon until nothing changes."""
    cap = 1 + _max_exponent(I)
    current = I
    for _ in range(cap + 1):
        nxt = colon_monomial(current, v)
        if nxt == current:
            return current
        current = nxt
    raise SaturationCapExceeded(f"(I : v^inf) did not stabilize within {cap} steps")


def saturate_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J^inf) by iterating colon_ideal to a fixpoint."""
    _same_ring(I, J)
    if J.is_zero:
        raise DegenerateIdeal("saturation by the zero ideal is undefined here")
    # u J^(s(c-1)+1) lies in (v_1^c, ..., v_s^c) once every (I : v_i^c) holds u
    cap = len(J.gens) * _max_exponent(I) + 1
    current = I
    for _ in range(cap + 1):
        nxt = colon_ideal(current, J)
        if nxt == current:
            return current
        current = nxt
    raise SaturationCapExceeded(f"(I : J^inf) did not stabilize within {cap} steps")


def prefix_ideal(ctx: RingContext, j: int) -> MonomialIdeal:
    """The prime (x1, ..., xj)."""
    if not 1 <= j <= ctx.n:
        raise ValueError(f"prefix length {j} outside 1..{ctx.n}")
    return MonomialIdeal(ctx, tuple(ctx.var(i) for i in range(1, j + 1)))


def unit_ideal(ctx: RingContext) -> MonomialIdeal:
    return MonomialIdeal(ctx, (ctx.one(),))


def zero_ideal(ctx: RingContext) -> MonomialIdeal:
    return MonomialIdeal(ctx, ())


def _require_nonzero(I: MonomialIdeal, what: str) -> None:
    if I.is_zero:
        raise DegenerateIdeal(f"{what} is undefined for the zero ideal")


def deg_of(I: MonomialIdeal) -> int:
    """Largest degree of a minimal generator."""
    _require_nonzero(I, "deg(I)")
    return max(g.degree for g in I.gens)


def m_of(I: MonomialIdeal) -> int:
    """Largest variable index occurring in a minimal generator."""
    _require_nonzero(I, "m(I)")
    return max(max_index(g) for g in I.gens)


def degree_slice(I: MonomialIdeal, d: int) -> list[Monomial]:
    """Monomials of I of degree exactly d, canonical order."""
    gens = [g.exps for g in I.gens if sum(g.exps) <= d]
    if not gens:
        return []
    return [u for u in enumerate_monomials(I.ctx, d) if any(_divides(g, u.exps) for g in gens)]


def truncation(I: MonomialIdeal, e: int) -> MonomialIdeal:
    """I_{>=e}; only defined for e >= deg(I), where it is generated by the degree-e slice."""
    d = deg_of(I)
    if e < d:
        raise ValueError(f"truncation degree {e} is below deg(I) = {d}")
    return MonomialIdeal(I.ctx, tuple(degree_slice(I, e)))


def ideal_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("ideal powers need k >= 1")
    result = I
    for _ in range(k - 1):
        result = ideal_product(result, I)
    return result


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return I.ctx.n == J.ctx.n and I.gens == J.gens


def lcm_of(I: MonomialIdeal) -> Monomial:
    """lcm of the minimal generators (the unit monomial for the zero ideal)."""
    exps = [0] * I.ctx.n
    for g in I.gens:
        exps = [max(a, b) for a, b in zip(exps, g.exps)]
    return Monomial(tuple(exps))


def random_monomial(
    rng: random.Random,
    n: int,
    variables: Sequence[int],
    max_exponent: int | Sequence[int],
    max_degree: int | None = None,
    nonconstant: bool = False,
) -> Monomial:
    """Random monomial supported on ``variables`` (1-based) with bounded exponents and degree.

    ``max_exponent`` is either one bound for all variables or a per-variable
    sequence indexed from 0.
    """
    caps = [max_exponent] * n if isinstance(max_exponent, int) else list(max_exponent)
    exps = [0] * n
    for i in variables:
        exps[i - 1] = rng.randint(0, caps[i - 1])
    if max_degree is not None:
        while sum(exps) > max_degree:
            live = [i for i in range(n) if exps[i]]
            exps[rng.choice(live)] -= 1
    if nonconstant and not any(exps) and variables:
        exps[rng.choice(list(variables)) - 1] = 1
    return Monomial(tuple(exps))


def random_ideal(
    ctx: RingContext,
    rng: random.Random,
    max_gens: int = 4,
    max_exponent: int = 3,
    max_degree: int | None = None,
) -> MonomialIdeal:
    """An arbitrary random proper nonzero monomial ideal (not necessarily Borel type)."""
    variables = range(1, ctx.n + 1)
    count = rng.randint(1, max_gens)
    gens = [
        random_monomial(rng, ctx.n, variables, max_exponent, max_degree, nonconstant=True)
        for _ in range(count)
    ]
    return MonomialIdeal(ctx, tuple(gens))
