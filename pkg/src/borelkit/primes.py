"""Associated primes of monomial ideals, computed two independent ways."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from operator import mul

from .borel import require_proper
from .errors import BudgetExceeded
from .ideal import MonomialIdeal, colon_monomial, contains, lcm_of
from .ring import Monomial, divisors

DEFAULT_WITNESS_BUDGET = 200_000


@dataclass(frozen=True)
class AssociatedPrimeSet:
    """Supports of the associated primes of S/I, as sorted 1-based index tuples."""

    primes: frozenset[tuple[int, ...]]

    def sorted(self) -> list[tuple[int, ...]]:
        return sorted(self.primes, key=lambda p: (len(p), p))

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.sorted()]


def _irreducible_components(I: MonomialIdeal) -> set[tuple[int, ...]]:
    """Exponent vectors of the irreducible components of I (pure-power ideals).

    A component (x_i^b_i : b_i > 0) is recorded as the vector b, 0 meaning absent.
    """
    ctx = I.ctx
    out = set()
    stack = [I]
    while stack:
        J = stack.pop()
        mixed = next((g for g in J.gens if len(g.support()) > 1), None)
        if mixed is None:
            exps = [0] * ctx.n
            for g in J.gens:
                i = g.support()[0]
                exps[i - 1] = g.nu(i)
            out.add(tuple(exps))
            continue
        # I + (g) where g = x_i^e * h with gcd(x_i, h) = 1 splits as
        # (I + x_i^e) cap (I + h)
        i = mixed.support()[0]
        e = mixed.nu(i)
        h = list(mixed.exps)
        h[i - 1] = 0
        rest = tuple(x for x in J.gens if x != mixed)
        stack.append(MonomialIdeal(ctx, rest + (ctx.var(i, e),)))
        stack.append(MonomialIdeal(ctx, rest + (Monomial(tuple(h)),)))
    return out


def _component_contains(big: tuple[int, ...], small: tuple[int, ...]) -> bool:
    # ideal(small) is contained in ideal(big) iff every x_i^s_i is divisible by some x_i^b_i
    return all(s == 0 or (b != 0 and b <= s) for b, s in zip(big, small))


def irredundant_components(I: MonomialIdeal) -> list[tuple[int, ...]]:
    comps = _irreducible_components(I)
    keep = [
        c for c in comps
        if not any(d != c and _component_contains(c, d) for d in comps)
    ]
    return sorted(keep)


def associated_primes(I: MonomialIdeal) -> AssociatedPrimeSet:
    """Radicals of the irredundant irreducible components of I."""
    require_proper(I)
    supports = {
        tuple(i + 1 for i, b in enumerate(c) if b) for c in irredundant_components(I)
    }
    return AssociatedPrimeSet(frozenset(supports))


def associated_primes_by_witness(I: MonomialIdeal, budget: int = DEFAULT_WITNESS_BUDGET) -> AssociatedPrimeSet:
    """Collect every prime of the form (I : u) with u dividing lcm(G(I))."""
    require_proper(I)
    L = lcm_of(I)
    size = reduce(mul, (e + 1 for e in L.exps), 1)
    if size > budget:
        raise BudgetExceeded(f"{size} witness candidates exceed the budget of {budget}")
    found = set()
    for u in divisors(L):
        if contains(I, u):
            continue
        P = colon_monomial(I, u)
        if all(g.degree == 1 for g in P.gens):
            found.add(tuple(g.support()[0] for g in reversed(P.gens)))
    return AssociatedPrimeSet(frozenset(tuple(sorted(p)) for p in found))


def check_initial_segment(primes: AssociatedPrimeSet) -> bool:
    """Every prime is (x1, ..., xr) for some r."""
    return all(p == tuple(range(1, len(p) + 1)) for p in primes.primes)
