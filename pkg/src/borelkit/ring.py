"""Ring context and exact monomial arithmetic on exponent vectors."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import ContextMismatch, NotDivisible


@dataclass(frozen=True)
class RingContext:
    """The polynomial ring K[x1, ..., xn] with n >= 2."""

    n: int
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"ring needs at least 2 variables, got {self.n!r}")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(1, self.n + 1)))
        else:
            object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) != self.n:
            raise ValueError("need exactly one name per variable")
        if len(set(self.names)) != self.n:
            raise ValueError("variable names must be pairwise distinct")

    def one(self) -> Monomial:
        return Monomial((0,) * self.n)

    def var(self, i: int, power: int = 1) -> Monomial:
        """The monomial x_i^power, with i counted from 1."""
        if not 1 <= i <= self.n:
            raise IndexError(f"variable index {i} out of range 1..{self.n}")
        exps = [0] * self.n
        exps[i - 1] = power
        return Monomial(tuple(exps))

    def monomial(self, exps: Sequence[int]) -> Monomial:
        u = Monomial(tuple(exps))
        check_context(self, u)
        return u

    def format(self, u: Monomial) -> str:
        """Text form, e.g. ``x1^2*x3``; ``1`` for the unit."""
        check_context(self, u)
        parts = []
        for name, e in zip(self.names, u.exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def parse(self, text: str) -> Monomial:
        """Inverse of :meth:`format`; repeated factors multiply."""
        text = text.strip()
        if text == "1":
            return self.one()
        index = {name: i for i, name in enumerate(self.names)}
        exps = [0] * self.n
        for factor in text.split("*"):
            m = re.fullmatch(r"\s*([A-Za-z][A-Za-z0-9_]*)\s*(?:\^\s*(\d+))?\s*", factor)
            if not m or m.group(1) not in index:
                raise ValueError(f"bad monomial factor {factor.strip()!r}")
            exps[index[m.group(1)]] += int(m.group(2)) if m.group(2) else 1
        return Monomial(tuple(exps))


@dataclass(frozen=True, order=False)
class Monomial:
    """An exponent vector; position i-1 holds the exponent of x_i."""

    exps: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise ValueError(f"negative exponent in {self.exps}")

    def __len__(self):
        return len(self.exps)

    def __getitem__(self, i):
        return self.exps[i]

    def __iter__(self):
        return iter(self.exps)

    def __repr__(self):
        return f"Monomial({self.exps})"

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def nu(self, i: int) -> int:
        """Exponent of x_i (1-based)."""
        return self.exps[i - 1]

    def support(self) -> tuple[int, ...]:
        """1-based indices of the variables dividing this monomial."""
        return tuple(i + 1 for i, e in enumerate(self.exps) if e)

    def is_pure_power(self) -> bool:
        return len(self.support()) == 1

    def __mul__(self, other: Monomial) -> Monomial:
        return mono_mul(self, other)

    def __truediv__(self, other: Monomial) -> Monomial:
        return mono_div(self, other)


def check_context(ctx_or_mono, *monos: Monomial) -> None:
    n = ctx_or_mono.n if isinstance(ctx_or_mono, RingContext) else len(ctx_or_mono)
    for u in monos:
        if len(u) != n:
            raise ContextMismatch(f"monomial {u.exps} does not live in a ring with {n} variables")


def sort_key(u: Monomial):
    """Canonical order: degree ascending, then lexicographically largest first."""
    return (sum(u.exps), tuple(-e for e in u.exps))


def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    check_context(u, v)
    return Monomial(tuple(a + b for a, b in zip(u.exps, v.exps)))


def mono_divides(u: Monomial, v: Monomial) -> bool:
    """True iff u | v."""
    check_context(u, v)
    return all(a <= b for a, b in zip(u.exps, v.exps))


def mono_div(u: Monomial, v: Monomial) -> Monomial:
    """Exact quotient u / v; raises NotDivisible unless v | u."""
    check_context(u, v)
    if not all(b <= a for a, b in zip(u.exps, v.exps)):
        raise NotDivisible(f"{v.exps} does not divide {u.exps}")
    return Monomial(tuple(a - b for a, b in zip(u.exps, v.exps)))


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    check_context(u, v)
    return Monomial(tuple(max(a, b) for a, b in zip(u.exps, v.exps)))


def mono_gcd(u: Monomial, v: Monomial) -> Monomial:
    check_context(u, v)
    return Monomial(tuple(min(a, b) for a, b in zip(u.exps, v.exps)))


def max_index(u: Monomial) -> int:
    """m(u): the largest i with x_i | u, and 0 for the unit monomial."""
    for i in range(len(u.exps), 0, -1):
        if u.exps[i - 1]:
            return i
    return 0


def _compositions(n: int, d: int) -> Iterator[tuple[int, ...]]:
    # stars and bars: choose bar positions among d + n - 1 slots
    for bars in combinations(range(d + n - 1), n - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(d + n - 1 - prev - 1)
        yield tuple(parts)


def enumerate_monomials(ctx: RingContext | int, d: int) -> list[Monomial]:
    """All monomials of degree d, in canonical order."""
    n = ctx.n if isinstance(ctx, RingContext) else ctx
    if d < 0:
        raise ValueError("degree must be nonnegative")
    monos = [Monomial(c) for c in _compositions(n, d)]
    monos.sort(key=sort_key)
    return monos


def divisors(u: Monomial) -> Iterator[Monomial]:
    """Every monomial dividing u (including 1 and u)."""
    def rec(i, prefix):
        if i == len(u.exps):
            yield Monomial(tuple(prefix))
            return
        for e in range(u.exps[i] + 1):
            prefix.append(e)
            yield from rec(i + 1, prefix)
            prefix.pop()

    yield from rec(0, [])
