"""
Exact probability measures on graph vertices and their transport costs.

A measure is a tuple of :class:`fractions.Fraction` summing to exactly one.
The transport cost at ``v`` is ``sum_u d(u, v) * mu(u)``, i.e. ``D @ mu``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import BadCoefficients, BadParameter, DimensionMismatch, NotAMeasure, NotBalancedError, ParseError
from .graph import Graph

Measure = tuple[Fraction, ...]


def to_fraction(value) -> Fraction:
    if isinstance(value, (float, bool)):
        raise ParseError(f"floats and booleans are not accepted, got {value!r}; pass a fraction string")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {value!r}") from None


def make_measure(values: Iterable) -> Measure:
    """Convert to a tuple of Fractions and check nonnegativity and total mass."""
    mu = tuple(to_fraction(v) for v in values)
    if any(x < 0 for x in mu):
        raise NotAMeasure("negative weight")
    if sum(mu) != 1:
        raise NotAMeasure(f"weights sum to {sum(mu)}, not 1")
    return mu


def point_mass(n: int, v: int) -> Measure:
    return tuple(Fraction(int(i == v)) for i in range(n))


def uniform(n: int, vertices: Iterable[int] | None = None) -> Measure:
    vs = set(range(n)) if vertices is None else set(vertices)
    w = Fraction(1, len(vs))
    return tuple(w if i in vs else Fraction(0) for i in range(n))


def format_fraction(x: Fraction) -> str:
    return str(Fraction(x))


def measure_to_json(mu: Sequence) -> list[str]:
    return [format_fraction(x) for x in mu]


def _check_dims(g: Graph, mu: Sequence) -> None:
    if len(mu) != g.n:
        raise DimensionMismatch(f"measure has {len(mu)} entries, graph has {g.n} vertices")


def transport_cost(g: Graph, mu: Sequence) -> tuple[Fraction, ...]:
    _check_dims(g, mu)
    D = g.distances
    nz = [(u, Fraction(w)) for u, w in enumerate(mu) if w]
    return tuple(sum((D[v][u] * w for u, w in nz), Fraction(0)) for v in range(g.n))


def support(mu: Sequence) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(mu) if x > 0)


def max_set(g: Graph, mu: Sequence) -> frozenset[int]:
    costs = transport_cost(g, mu)
    top = max(costs)
    return frozenset(i for i, c in enumerate(costs) if c == top)


class SupportMaxPair(NamedTuple):
    support: frozenset
    max_set: frozenset


def pair_of(g: Graph, mu: Sequence) -> SupportMaxPair:
    return SupportMaxPair(support(mu), max_set(g, mu))


@dataclass(frozen=True)
class BalanceReport:
    """``balanced`` plus the vertices of the support that fall short of the max."""

    balanced: bool
    max_cost: Fraction
    deficits: dict  # vertex -> max_cost - cost, only for violating support vertices

    def __bool__(self) -> bool:
        return self.balanced


def is_balanced(g: Graph, mu: Sequence) -> BalanceReport:
    costs = transport_cost(g, mu)
    top = max(costs)
    deficits = {v: top - costs[v] for v in support(mu) if costs[v] != top}
    return BalanceReport(not deficits, top, deficits)


def require_balanced(g: Graph, mu: Sequence) -> None:
    report = is_balanced(g, mu)
    if not report:
        raise NotBalancedError(f"measure is not balanced; deficits {report.deficits}")


def energy(g: Graph, mu: Sequence) -> Fraction:
    costs = transport_cost(g, mu)
    return sum((Fraction(w) * c for w, c in zip(mu, costs)), Fraction(0))


class Order(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def poset_compare(p: SupportMaxPair, q: SupportMaxPair) -> Order:
    """Compare pairs under ``(S, M) <= (S', M')`` iff ``S <= S'`` and ``M >= M'``.

    Basic measures sit at the minimal elements of this order: no other
    balanced pair has a smaller support together with a larger max-set.
    """
    s, m = frozenset(p[0]), frozenset(p[1])
    s2, m2 = frozenset(q[0]), frozenset(q[1])
    if s == s2 and m == m2:
        return Order.EQUAL
    if s <= s2 and m >= m2:
        return Order.LESS
    if s >= s2 and m <= m2:
        return Order.GREATER
    return Order.INCOMPARABLE


def is_compatible(measures: Sequence[Sequence], g: Graph) -> bool:
    """Union of supports contained in the intersection of max-sets."""
    if not measures:
        return True
    union: set[int] = set()
    inter = set(range(g.n))
    for mu in measures:
        require_balanced(g, mu)
        union |= support(mu)
        inter &= max_set(g, mu)
    return union <= inter


def convex_combination(measures: Sequence[Sequence], coeffs: Sequence) -> Measure:
    if len(measures) != len(coeffs) or not measures:
        raise BadCoefficients("need one coefficient per measure")
    cs = [to_fraction(c) for c in coeffs]
    if any(c < 0 for c in cs) or sum(cs) != 1:
        raise BadCoefficients("coefficients must be nonnegative and sum to 1")
    n = len(measures[0])
    if any(len(mu) != n for mu in measures):
        raise DimensionMismatch("measures of different lengths")
    return tuple(
        sum((c * Fraction(mu[i]) for c, mu in zip(cs, measures)), Fraction(0)) for i in range(n)
    )


def greedy_sequence(g: Graph, seed: Sequence[int], steps: int) -> list[tuple[int, Measure]]:
    """Greedy far-point sequence and its empirical measures.

    Each step appends the vertex maximizing the summed distance to the
    current multiset (ties go to the lowest index).  Entry 0 is ``(-1, seed
    measure)``; entry ``k`` holds the vertex added at step ``k`` and the
    empirical measure after adding it.
    """
    if not seed:
        raise BadParameter("seed must be nonempty")
    if steps < 0:
        raise BadParameter("steps must be >= 0")
    if any(not 0 <= v < g.n for v in seed):
        raise BadParameter("seed vertex out of range")
    D = g.distances
    counts = [0] * g.n
    for v in seed:
        counts[v] += 1
    total = len(seed)
    # sums[v] = sum over the multiset of d(v, u)
    sums = [sum(D[v][u] * counts[u] for u in range(g.n)) for v in range(g.n)]

    def empirical() -> Measure:
        return tuple(Fraction(c, total) for c in counts)

    out = [(-1, empirical())]
    for _ in range(steps):
        top = max(sums)
        v = sums.index(top)
        counts[v] += 1
        total += 1
        row = D[v]
        for w in range(g.n):
            sums[w] += row[w]
        out.append((v, empirical()))
    return out


def epsilon_balanced(g: Graph, mu: Sequence, eps) -> bool:
    eps = to_fraction(eps)
    if eps < 0:
        raise BadParameter("eps must be >= 0")
    return max_deficit(g, mu) <= eps


def max_deficit(g: Graph, mu: Sequence) -> Fraction:
    """Largest gap between the maximal cost and the cost at a support vertex."""
    costs = transport_cost(g, mu)
    top = max(costs)
    return max(top - costs[v] for v in support(mu))
