"""
Decomposing a balanced measure into compatible basic balanced measures.

The procedure has three steps:

1. ``find_kernel_witness``: a non-basic ``rho`` has a nonzero kernel
   direction in its pair system; a small step along it gives ``nu != rho``
   with the same pair.
2. ``climb_to_basic``: extrapolate from that witness through ``rho`` until
   the pair changes; repeat until the measure is basic.  Each step moves the
   pair strictly down in :func:`~balanced.measure.poset_compare`.
3. ``decompose``: with ``mu_j = climb_to_basic(rho_j)`` extrapolate from
   ``mu_j`` through ``rho_j`` to ``rho_{j+1}``, so that
   ``rho_j = rho_{j+1} / R_j + (R_j - 1) / R_j * mu_j``; stop at a basic
   ``rho_k`` and back-substitute.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .enumeration import BasicCatalog, compatibility_graph, is_basic, maximal_cliques, pair_kernel
from .errors import DimensionMismatch
from .extrapolation import LineFamily, extrapolate_right
from .graph import Graph
from .linalg import phase_one, solve
from .measure import (
    Measure,
    is_compatible,
    pair_of,
    require_balanced,
    to_fraction,
    transport_cost,
)


def find_kernel_witness(g: Graph, mu: Sequence) -> Optional[Measure]:
    """A measure ``!= mu`` with the same support and max-set, or None if ``mu`` is basic.

    Uses the first canonical kernel vector ``x`` and steps ``mu + t x`` with
    ``t`` half of the smallest step at which a strict condition would fail.
    """
    mu = tuple(to_fraction(x) for x in mu)
    require_balanced(g, mu)
    basis = pair_kernel(g, mu)
    if not basis:
        return None
    x = basis[0]
    S, M = pair_of(g, mu)
    costs = transport_cost(g, mu)
    D = g.distances
    a = min(M)
    dx = [sum(D[i][j] * x[j] for j in range(g.n)) for i in range(g.n)]
    limits = []
    for v in S:
        if x[v] < 0:
            limits.append(mu[v] / -x[v])
    for k in range(g.n):
        if k in M:
            continue
        gap = costs[a] - costs[k]
        slope = dx[a] - dx[k]
        if slope < 0:
            limits.append(gap / -slope)
    # x sums to zero and is nonzero on S, so some support entry decreases
    t = min(limits) / 2
    nu = tuple(m + t * xi for m, xi in zip(mu, x))
    assert pair_of(g, nu) == (S, M) and nu != mu
    return nu


class ClimbStep(NamedTuple):
    start: Measure
    witness: Measure
    R: Fraction
    end: Measure


def climb_to_basic(g: Graph, rho: Sequence) -> tuple[Measure, list[ClimbStep]]:
    """A basic measure whose pair lies at or below the pair of ``rho``."""
    cur = tuple(to_fraction(x) for x in rho)
    require_balanced(g, cur)
    steps: list[ClimbStep] = []
    while True:
        w = find_kernel_witness(g, cur)
        if w is None:
            return cur, steps
        ext = extrapolate_right(LineFamily(g, w, cur))
        steps.append(ClimbStep(cur, w, ext.R, ext.lam_R))
        cur = ext.lam_R


class ChainLink(NamedTuple):
    rho: Measure
    partner: Measure
    R: Fraction


@dataclass(frozen=True)
class Decomposition:
    target: Measure
    parts: tuple[tuple[Fraction, Measure], ...]
    chain: tuple[ChainLink, ...]

    def reconstruct(self) -> Measure:
        n = len(self.target)
        return tuple(sum((c * mu[i] for c, mu in self.parts), Fraction(0)) for i in range(n))


def decompose(g: Graph, rho: Sequence) -> Decomposition:
    target = tuple(to_fraction(x) for x in rho)
    require_balanced(g, target)
    links: list[ChainLink] = []
    cur = target
    while not is_basic(g, cur):
        partner, _ = climb_to_basic(g, cur)
        ext = extrapolate_right(LineFamily(g, partner, cur))
        links.append(ChainLink(cur, partner, ext.R))
        cur = ext.lam_R

    coeffs: dict[Measure, Fraction] = {}
    weight = Fraction(1)  # coefficient carried by rho_j in the expansion of rho_1
    for link in links:
        coeffs[link.partner] = coeffs.get(link.partner, Fraction(0)) + weight * (link.R - 1) / link.R
        weight /= link.R
    coeffs[cur] = coeffs.get(cur, Fraction(0)) + weight

    dec = Decomposition(target, tuple((c, mu) for mu, c in coeffs.items()), tuple(links))
    assert sum(coeffs.values()) == 1 and all(c > 0 for c in coeffs.values())
    assert dec.reconstruct() == target
    assert is_compatible(list(coeffs), g)
    return dec


@dataclass(frozen=True)
class HullResult:
    """Hull membership verdict.

    ``coefficients`` reproduce the target when ``member`` is set.  Otherwise
    ``separator = (w, beta)`` satisfies ``<w, b> + beta <= 0`` for every
    generator ``b`` and ``<w, mu> + beta > 0``.
    """

    member: bool
    coefficients: Optional[tuple[Fraction, ...]] = None
    separator: Optional[tuple[tuple[Fraction, ...], Fraction]] = None

    def __bool__(self) -> bool:
        return self.member


def hull_membership(g: Graph, mu: Sequence, basics: Sequence[Sequence]) -> HullResult:
    mu = tuple(to_fraction(x) for x in mu)
    if len(mu) != g.n or any(len(b) != g.n for b in basics):
        raise DimensionMismatch("measure length does not match graph")
    if not basics:
        # empty hull: the functional beta = 1 separates
        return HullResult(False, separator=(tuple(Fraction(0) for _ in mu), Fraction(1)))
    k = len(basics)
    A = [[Fraction(b[i]) for b in basics] for i in range(g.n)] + [[Fraction(1)] * k]
    rhs = list(mu) + [Fraction(1)]
    sol = solve(A, rhs)
    if sol is not None and sol.unique and all(c >= 0 for c in sol.particular):
        return HullResult(True, coefficients=sol.particular)
    res = phase_one(A, rhs)
    if res.feasible:
        return HullResult(True, coefficients=res.x)
    y = res.farkas
    return HullResult(False, separator=(tuple(y[: g.n]), y[g.n]))


@dataclass(frozen=True)
class MinimalityReport:
    checked: int
    violations: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_weak_minimality(g: Graph, cat: BasicCatalog) -> MinimalityReport:
    """No basic measure lies in the hull of a compatible set of other basics.

    Checking the maximal cliques (minus the measure itself) covers every
    compatible set, since hulls of subsets are contained in them.
    """
    cg = compatibility_graph(cat)
    cliques = maximal_cliques(cg)
    violations = []
    checked = 0
    for i, entry in enumerate(cat):
        seen = set()
        for clique in cliques:
            others = tuple(j for j in clique if j != i)
            if not others or others in seen:
                continue
            seen.add(others)
            checked += 1
            if hull_membership(g, entry.mu, [cat.entries[j].mu for j in others]):
                violations.append((i, others))
    return MinimalityReport(checked, tuple(violations))
