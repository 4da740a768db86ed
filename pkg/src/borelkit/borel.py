"""Borel-type deciders, the stability test and the regularity search."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateIdeal, NotBorelType
from .ideal import (
    MonomialIdeal,
    _max_exponent,
    contains,
    deg_of,
    degree_slice,
    m_of,
    prefix_ideal,
    saturate_ideal,
    saturate_monomial,
)
from .ring import Monomial, max_index


def require_proper(I: MonomialIdeal) -> None:
    """Reject the zero and unit ideals, which have no meaningful deg(I)."""
    if I.is_zero:
        raise DegenerateIdeal("the zero ideal is not accepted here")
    if I.is_unit:
        raise DegenerateIdeal("the unit ideal is not accepted here")


def _strip_top(u: Monomial) -> tuple[int, Monomial]:
    """(m(u), u / x_{m(u)}^{nu_{m(u)}(u)})."""
    m = max_index(u)
    exps = list(u.exps)
    exps[m - 1] = 0
    return m, Monomial(tuple(exps))


def is_borel_definitional(I: MonomialIdeal) -> bool:
    """(I : x_j^inf) == (I : (x1..xj)^inf) for every j."""
    require_proper(I)
    ctx = I.ctx
    for j in range(1, ctx.n + 1):
        if saturate_monomial(I, ctx.var(j)) != saturate_ideal(I, prefix_ideal(ctx, j)):
            return False
    return True


def is_borel_exchange(I: MonomialIdeal) -> bool:
    """Exchange criterion on the minimal generators.

    For each generator u and each j < m(u) some x_j^t * u / x_{m(u)}^{nu} must lie
    in I; that is decided exactly as membership in (I : x_j^inf).
    """
    require_proper(I)
    sats = {}
    for u in I.gens:
        m, rest = _strip_top(u)
        for j in range(1, m):
            if j not in sats:
                sats[j] = saturate_monomial(I, I.ctx.var(j))
            if not contains(sats[j], rest):
                return False
    return True


def exchange_witnesses(I: MonomialIdeal) -> dict[tuple[Monomial, int], int | None]:
    """Smallest t > 0 with x_j^t * u / x_{m(u)}^{nu} in I, per (generator, j).

    None marks a pair for which no t up to the search cap works, which
    happens exactly when the ideal is not of Borel type.
    """
    require_proper(I)
    cap = _max_exponent(I) * I.ctx.n + deg_of(I)
    out = {}
    for u in I.gens:
        m, rest = _strip_top(u)
        for j in range(1, m):
            found = None
            for t in range(1, cap + 1):
                if contains(I, rest * I.ctx.var(j, t)):
                    found = t
                    break
            out[(u, j)] = found
    return out


def is_stable(I: MonomialIdeal) -> bool:
    """x_j * u / x_{m(u)} in I for every generator u and j < m(u)."""
    if I.is_zero:
        raise DegenerateIdeal("stability is not defined for the zero ideal")
    for u in I.gens:
        m = max_index(u)
        for j in range(1, m):
            exps = list(u.exps)
            exps[m - 1] -= 1
            exps[j - 1] += 1
            if not contains(I, Monomial(tuple(exps))):
                return False
    return True


def truncation_is_stable(I: MonomialIdeal, e: int) -> bool:
    """Same answer as is_stable(truncation(I, e)), without building the truncation.

    For e >= deg(I) a degree-e monomial lies in I_{>=e} iff it lies in I.
    """
    if e < deg_of(I):
        raise ValueError(f"truncation degree {e} is below deg(I)")
    for u in degree_slice(I, e):
        m = max_index(u)
        for j in range(1, m):
            exps = list(u.exps)
            exps[m - 1] -= 1
            exps[j - 1] += 1
            if not contains(I, Monomial(tuple(exps))):
                return False
    return True


def ahmad_anwar_bound(I: MonomialIdeal) -> int:
    """m(I) * (deg(I) - 1) + 1, an upper bound on reg(I) for Borel-type I."""
    return m_of(I) * (deg_of(I) - 1) + 1


@dataclass(frozen=True)
class RegularityCertificate:
    reg: int
    trace: tuple[tuple[int, bool], ...]
    bound_used: int

    def to_json(self) -> dict:
        return {
            "reg": self.reg,
            "bound_used": self.bound_used,
            "trace": [{"e": e, "stable": s} for e, s in self.trace],
        }


def regularity(I: MonomialIdeal) -> RegularityCertificate:
    """Least e >= deg(I) with I_{>=e} stable.

    The search stops at the Ahmad-Anwar bound; failing that far means I is not
    of Borel type, reported as NotBorelType with the full trace attached.
    """
    require_proper(I)
    start = deg_of(I)
    bound = ahmad_anwar_bound(I)
    trace = []
    for e in range(start, bound + 1):
        stable = truncation_is_stable(I, e)
        trace.append((e, stable))
        if stable:
            return RegularityCertificate(e, tuple(trace), bound)
    raise NotBorelType(
        f"no stable truncation in degrees {start}..{bound}; the ideal is not of Borel type",
        trace,
    )


def has_stable_truncation(I: MonomialIdeal) -> bool:
    """Regularity search used as a Borel-type decider."""
    try:
        regularity(I)
    except NotBorelType:
        return False
    return True
