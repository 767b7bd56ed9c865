"""
Enumeration of basic balanced measures.

Every balanced measure ``mu`` determines its pair ``(S, M) = (spt mu, M_mu)``
and solves the *pair system*

    mu_k = 0 for k not in S,   sum(mu) = 1,   (D mu)_i = (D mu)_j for i, j in M.

The remaining conditions (``mu > 0`` on S, cost strictly below the maximum off
M) are open, so ``mu`` is basic exactly when its pair system has a unique
solution.  Scanning all nested pairs ``S <= M`` therefore finds every basic
measure at its own pair.  The scan below walks, for each support ``S``, a
decision tree over the vertices outside ``S`` and stops a branch as soon as
the system pins down a single point; it visits exactly the successes of
:func:`solve_pair` over all ``3**n`` pairs.

:func:`realizable_pair` decides by linear programming whether a pair is
realized by any balanced measure at all.  It shares no code with the kernel
test and serves as the oracle for the extremality characterization.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import BadSubsets, TooLarge
from .graph import Graph
from .linalg import DEPENDENT, INCONSISTENT, Echelon, phase_one
from .measure import (
    Measure,
    SupportMaxPair,
    is_compatible,
    pair_of,
    require_balanced,
    transport_cost,
)

DEFAULT_MAX_N = 16


def max_vertices() -> int:
    return int(os.environ.get("BALANCED_MAX_N", DEFAULT_MAX_N))


def _mask(vs: Iterable[int]) -> int:
    return sum(1 << v for v in vs)


def _diff_row(D, i: int, a: int, cols: Sequence[int], rhs: int = 0) -> list[int]:
    # (D x)_i - (D x)_a restricted to the columns in ``cols``
    return [D[i][s] - D[a][s] for s in cols] + [rhs]


def _pair_echelon(g: Graph, cols: Sequence[int], M: Iterable[int], rhs: int) -> Echelon:
    D = g.distances
    E = Echelon(len(cols))
    E.add([1] * len(cols) + [rhs])
    ms = sorted(M)
    a = ms[0]
    for i in ms[1:]:
        E.add(_diff_row(D, i, a, cols))
    return E


def _check_subsets(g: Graph, S, M) -> tuple[list[int], frozenset, frozenset]:
    S, M = frozenset(S), frozenset(M)
    if not S:
        raise BadSubsets("support must be nonempty")
    if not S <= M:
        raise BadSubsets("support must be contained in the max-set")
    if not M <= frozenset(range(g.n)):
        raise BadSubsets("vertex out of range")
    return sorted(S), S, M


def _expand(n: int, cols: Sequence[int], values: Sequence[Fraction]) -> Measure:
    mu = [Fraction(0)] * n
    for c, x in zip(cols, values):
        mu[c] = x
    return tuple(mu)


def solve_pair(g: Graph, S: Iterable[int], M: Iterable[int]) -> Optional[Measure]:
    """The unique balanced measure with support ``S`` and max-set ``M``, if the
    pair system is zero-dimensional and its solution meets the strict conditions."""
    cols, S, M = _check_subsets(g, S, M)
    E = _pair_echelon(g, cols, M, rhs=1)
    if E.inconsistent or E.rank < len(cols):
        return None
    mu = _expand(g.n, cols, E.particular())
    if any(mu[v] <= 0 for v in S):
        return None
    costs = transport_cost(g, mu)
    top = costs[cols[0]]
    if any(costs[k] >= top for k in range(g.n) if k not in M):
        return None
    return mu


def pair_kernel(g: Graph, mu: Sequence) -> list[tuple[int, ...]]:
    """Integer basis (full-length vectors) of the homogeneous pair system of ``mu``."""
    S, M = pair_of(g, mu)
    cols = sorted(S)
    E = _pair_echelon(g, cols, M, rhs=0)
    return [tuple(_expand(g.n, cols, [Fraction(x) for x in vec])) for vec in E.kernel()]


def is_basic(g: Graph, mu: Sequence) -> bool:
    """True iff no other probability measure shares the pair of ``mu``."""
    require_balanced(g, mu)
    S, M = pair_of(g, mu)
    return _pair_echelon(g, sorted(S), M, rhs=0).rank == len(S)


class BasicEntry(NamedTuple):
    mu: Measure
    pair: SupportMaxPair


def _sort_key(entry: BasicEntry):
    s, m = entry.pair
    return (len(s), _mask(s), _mask(m))


@dataclass(frozen=True)
class BasicCatalog:
    graph: Graph
    entries: tuple[BasicEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def measures(self) -> list[Measure]:
        return [e.mu for e in self.entries]

    def index(self, mu: Sequence) -> int:
        target = tuple(Fraction(x) for x in mu)
        for i, e in enumerate(self.entries):
            if e.mu == target:
                return i
        raise ValueError("measure not in catalog")


def _scan_support(g: Graph, S: Sequence[int], found: dict) -> None:
    D = g.distances
    n = g.n
    cols = list(S)
    k = len(cols)
    a = cols[0]
    base = Echelon(k)
    base.add([1] * k + [1])
    for i in cols[1:]:
        if base.add(_diff_row(D, i, a, cols)) == INCONSISTENT:
            return
    in_s = set(cols)
    outside = [v for v in range(n) if v not in in_s]

    def settle(E: Echelon, incl: list[int], excl: list[int]) -> None:
        mu = _expand(n, cols, E.particular())
        if any(mu[v] <= 0 for v in cols):
            return
        costs = transport_cost(g, mu)
        top = max(costs)
        if costs[a] != top:
            return
        M = frozenset(i for i in range(n) if costs[i] == top)
        if not M.issuperset(incl) or M.intersection(excl):
            return
        found.setdefault(mu, SupportMaxPair(frozenset(cols), M))

    def visit(E: Echelon, pos: int, incl: list[int], excl: list[int]) -> None:
        if E.rank == k:
            settle(E, incl, excl)
            return
        if pos == len(outside):
            return
        v = outside[pos]
        E2 = E.copy()
        status = E2.add(_diff_row(D, v, a, cols))
        if status != INCONSISTENT:
            visit(E2, pos + 1, incl + [v], excl)
        # a dependent row means cost(v) equals the max on the whole family
        if status != DEPENDENT:
            visit(E, pos + 1, incl, excl + [v])

    visit(base, 0, [], [])


def enumerate_basic(g: Graph, limit: Optional[int] = None) -> BasicCatalog:
    limit = max_vertices() if limit is None else limit
    if g.n > limit:
        raise TooLarge(f"{g.n} vertices exceeds the enumeration limit {limit}")
    found: dict[Measure, SupportMaxPair] = {}
    for size in range(1, g.n + 1):
        for S in combinations(range(g.n), size):
            _scan_support(g, S, found)
    entries = []
    for mu, pair in found.items():
        assert pair_of(g, mu) == pair
        entries.append(BasicEntry(mu, pair))
    entries.sort(key=_sort_key)
    return BasicCatalog(g, tuple(entries))


def enumerate_basic_bruteforce(g: Graph) -> BasicCatalog:
    """Direct scan of all ``3**n`` nested pairs with :func:`solve_pair`."""
    found = {}
    V = range(g.n)
    for ssize in range(1, g.n + 1):
        for S in combinations(V, ssize):
            rest = [v for v in V if v not in S]
            for extra in range(len(rest) + 1):
                for add in combinations(rest, extra):
                    M = frozenset(S) | frozenset(add)
                    mu = solve_pair(g, S, M)
                    if mu is not None:
                        found[mu] = SupportMaxPair(frozenset(S), M)
    entries = sorted((BasicEntry(mu, p) for mu, p in found.items()), key=_sort_key)
    return BasicCatalog(g, tuple(entries))


# ----------------------------------------------------------------------
# realizability oracle
# ----------------------------------------------------------------------

def realizable_pair(g: Graph, S: Iterable[int], M: Iterable[int]) -> Optional[Measure]:
    """A balanced measure with pair exactly ``(S, M)``, or None if there is none.

    Strict conditions are homogenized: with ``x = mu / eps`` they become
    ``x >= 1`` on S and a cost gap ``>= 1`` off M, and the result is
    renormalized.  Feasibility is decided by exact phase-one simplex.
    """
    cols, S, M = _check_subsets(g, S, M)
    D = g.distances
    outside = [k for k in range(g.n) if k not in M]
    ms = sorted(M)
    a = ms[0]
    A, b = [], []
    # substitute x_s = 1 + r_s with r_s >= 0
    for i in ms[1:]:
        coef = [D[i][s] - D[a][s] for s in cols]
        A.append(coef + [0] * len(outside))
        b.append(-sum(coef))
    for j, k in enumerate(outside):
        coef = [D[a][s] - D[k][s] for s in cols]
        slack = [0] * len(outside)
        slack[j] = -1
        A.append(coef + slack)
        b.append(1 - sum(coef))
    if A:
        res = phase_one(A, b)
        if not res.feasible:
            return None
        r = res.x[: len(cols)]
    else:
        r = [Fraction(0)] * len(cols)
    x = [1 + ri for ri in r]
    total = sum(x)
    mu = _expand(g.n, cols, [xi / total for xi in x])
    assert pair_of(g, mu) == (S, M)
    return mu


def realized_pairs(g: Graph) -> dict[SupportMaxPair, Measure]:
    """Every pair realized by a balanced measure, with one witness each."""
    out = {}
    V = range(g.n)
    for ssize in range(1, g.n + 1):
        for S in combinations(V, ssize):
            rest = [v for v in V if v not in S]
            for extra in range(len(rest) + 1):
                for add in combinations(rest, extra):
                    M = frozenset(S) | frozenset(add)
                    mu = realizable_pair(g, S, M)
                    if mu is not None:
                        out[SupportMaxPair(frozenset(S), M)] = mu
    return out


# ----------------------------------------------------------------------
# compatibility graph
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CompatibilityGraph:
    catalog: BasicCatalog
    edges: frozenset = field(default_factory=frozenset)

    @property
    def n(self) -> int:
        return len(self.catalog)

    def neighbors(self, i: int) -> set[int]:
        return {b if a == i else a for a, b in self.edges if i in (a, b)}


def compatibility_graph(cat: BasicCatalog) -> CompatibilityGraph:
    g = cat.graph
    # pairwise compatibility of balanced measures only needs the pairs
    es = set()
    for i, j in combinations(range(len(cat)), 2):
        si, mi = cat.entries[i].pair
        sj, mj = cat.entries[j].pair
        if (si | sj) <= (mi & mj):
            es.add((i, j))
    assert all(is_compatible([cat.entries[i].mu, cat.entries[j].mu], g) for i, j in es)
    return CompatibilityGraph(cat, frozenset(es))


def compatible_cliques(cg: CompatibilityGraph, upto: int) -> list[tuple[int, ...]]:
    """All cliques with at most ``upto`` vertices, in lexicographic order."""
    if upto < 1:
        raise ValueError("upto must be >= 1")
    nbrs = [cg.neighbors(i) for i in range(cg.n)]
    out: list[tuple[int, ...]] = []

    def grow(clique: tuple[int, ...], cands: list[int]) -> None:
        out.append(clique)
        if len(clique) == upto:
            return
        for idx, v in enumerate(cands):
            grow(clique + (v,), [w for w in cands[idx + 1:] if w in nbrs[v]])

    for v in range(cg.n):
        grow((v,), [w for w in range(v + 1, cg.n) if w in nbrs[v]])
    return sorted(out, key=lambda c: (len(c), c))


def maximal_cliques(cg: CompatibilityGraph) -> list[tuple[int, ...]]:
    cliques = compatible_cliques(cg, max(cg.n, 1)) if cg.n else []
    sets = [frozenset(c) for c in cliques]
    return [c for c, s in zip(cliques, sets) if not any(s < t for t in sets)]


def components(cg: CompatibilityGraph) -> list[list[int]]:
    parent = list(range(cg.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in cg.edges:
        parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for v in range(cg.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def count_components(cg: CompatibilityGraph) -> int:
    return len(components(cg))


@dataclass(frozen=True)
class BoundsReport:
    n: int
    count: int
    upper: int
    lower_target: Optional[int]

    @property
    def ok(self) -> bool:
        if self.count > self.upper:
            return False
        return self.lower_target is None or self.count == self.lower_target


def check_bounds(g: Graph, cat: BasicCatalog, join_family: bool = False) -> BoundsReport:
    """Compare the catalog size with ``2**(2n) - 1`` and, for the
    singleton/triple join family, with ``2**(n // 3) - 1``."""
    n = g.n
    target = 2 ** (n // 3) - 1 if join_family else None
    return BoundsReport(n, len(cat), 2 ** (2 * n) - 1, target)
