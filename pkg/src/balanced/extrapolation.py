"""
Lines through two balanced measures and the exact interval where they stay balanced.

For ``lam_t = (1 - t) mu + t nu`` with ``spt mu <= spt nu`` and
``M_mu >= M_nu``, balancedness of ``lam_t`` is the conjunction of affine
inequalities in ``t``:

* ``lam_t(v) >= 0`` for ``v`` in ``spt nu`` (support constraints), and
* ``max T_lam - T_lam(w) >= 0`` for ``w`` outside ``M_nu`` (max-set constraints).

Both sides of the interval are exact rational roots of these functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import DegenerateError, HypothesisError, UnboundedError
from .graph import Graph
from .measure import (
    Measure,
    Order,
    SupportMaxPair,
    is_balanced,
    pair_of,
    poset_compare,
    to_fraction,
    transport_cost,
)


class Constraint(NamedTuple):
    kind: str  # "support" or "maxset"
    vertex: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertex": self.vertex}


@dataclass(frozen=True)
class LineFamily:
    graph: Graph
    mu: Measure
    nu: Measure

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(to_fraction(x) for x in self.mu))
        object.__setattr__(self, "nu", tuple(to_fraction(x) for x in self.nu))


@dataclass(frozen=True)
class BalancedInterval:
    L: Fraction
    R: Fraction
    binding_R: tuple[Constraint, ...]
    binding_L: tuple[Constraint, ...]


@dataclass(frozen=True)
class Extrapolation:
    R: Fraction
    lam_R: Measure
    pair_nu: SupportMaxPair
    pair_R: SupportMaxPair
    binding: tuple[Constraint, ...]

    @property
    def relation(self) -> Order:
        """Order of ``pair_R`` against ``pair_nu``; always ``Order.LESS``."""
        return poset_compare(self.pair_R, self.pair_nu)


def line_measure(fam: LineFamily, t) -> tuple[Fraction, ...]:
    """``(1 - t) mu + t nu``; entries may be negative outside the interval."""
    t = to_fraction(t)
    return tuple((1 - t) * a + t * b for a, b in zip(fam.mu, fam.nu))


def _constraints(fam: LineFamily):
    """Yield ``(constraint, value_at_0, slope)`` for every affine constraint."""
    g, mu, nu = fam.graph, fam.mu, fam.nu
    if len(mu) != g.n or len(nu) != g.n:
        raise HypothesisError("measure length does not match graph")
    if mu == nu:
        raise DegenerateError("mu and nu coincide")
    rep_mu, rep_nu = is_balanced(g, mu), is_balanced(g, nu)
    if not rep_mu or not rep_nu:
        raise HypothesisError("both measures must be balanced")
    p_mu, p_nu = pair_of(g, mu), pair_of(g, nu)
    if not (p_mu.support <= p_nu.support and p_mu.max_set >= p_nu.max_set):
        raise HypothesisError("need spt mu <= spt nu and M_mu >= M_nu")

    for v in sorted(p_nu.support):
        yield Constraint("support", v), mu[v], nu[v] - mu[v]
    t_mu, t_nu = transport_cost(g, mu), transport_cost(g, nu)
    top_mu, top_nu = rep_mu.max_cost, rep_nu.max_cost
    for w in range(g.n):
        if w in p_nu.max_set:
            continue
        a = top_mu - t_mu[w]
        b = top_nu - t_nu[w]
        yield Constraint("maxset", w), a, b - a


def balanced_interval(fam: LineFamily) -> BalancedInterval:
    uppers: list[tuple[Fraction, Constraint]] = []
    lowers: list[tuple[Fraction, Constraint]] = []
    for con, a, s in _constraints(fam):
        if s > 0:
            lowers.append((-a / s, con))
        elif s < 0:
            uppers.append((a / -s, con))
    if not uppers or not lowers:
        raise UnboundedError("a side of the balanced interval is unbounded; hypotheses violated")
    R = min(r for r, _ in uppers)
    L = max(r for r, _ in lowers)
    return BalancedInterval(
        L=L,
        R=R,
        binding_R=tuple(c for r, c in uppers if r == R),
        binding_L=tuple(c for r, c in lowers if r == L),
    )


def extrapolate_right(fam: LineFamily) -> Extrapolation:
    """Follow the line from ``mu`` through ``nu`` to its last balanced point.

    ``nu == lam_R / R + (R - 1) / R * mu`` holds exactly, and the pair of
    ``lam_R`` lies strictly below that of ``nu`` (smaller support or larger
    max-set).
    """
    iv = balanced_interval(fam)
    R = iv.R
    lam = line_measure(fam, R)
    back = tuple(x / R + (R - 1) / R * m for x, m in zip(lam, fam.mu))
    assert back == fam.nu, "reconstruction identity failed"
    ext = Extrapolation(
        R=R,
        lam_R=lam,
        pair_nu=pair_of(fam.graph, fam.nu),
        pair_R=pair_of(fam.graph, lam),
        binding=iv.binding_R,
    )
    assert R > 1 and ext.relation is Order.LESS
    return ext
