"""
Specific graphs and the measure families they carry.

* Joins of singletons and edgeless triples: ``l`` copies of K1 followed by
  ``k`` copies of the edgeless graph on three vertices.  Vertices ``0..l-1``
  are the singletons, triple ``t`` (0-based) occupies ``l + 3t .. l + 3t + 2``.
* The 14-vertex graph whose distance matrix ships as ``data/example14.csv``;
  it carries the family ``mu_a`` that stays balanced exactly for
  ``a`` in ``[1/18, 1/9]``.
* The 4x4 torus ``C4 x C4`` (cell ``(i, j)`` is vertex ``4 i + j``).
* ``G_H``: a graph on ``3 |H|`` vertices whose compatibility graph contains
  ``H`` as an induced subgraph.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

from .enumeration import is_basic
from .errors import BadPermutation, BadSpec, EmptyChoice, OutOfRange, TooLarge
from .graph import Graph, complete, cartesian_product, cycle, empty, join
from .measure import Measure, is_balanced, max_set, support, to_fraction


@dataclass(frozen=True)
class JoinFamilySpec:
    l: int
    k: int

    def __post_init__(self):
        if self.l < 0 or self.k < 1:
            raise BadSpec("need l >= 0 and k >= 1")
        if self.l == 0 and self.k == 1:
            raise BadSpec("a single edgeless triple is disconnected")

    @property
    def n(self) -> int:
        return self.l + 3 * self.k


def build_join_family(spec: JoinFamilySpec) -> Graph:
    parts = [complete(1)] * spec.l + [empty(3)] * spec.k
    g = parts[0]
    for p in parts[1:]:
        g = join(g, p)
    return g


def join_family_distances(spec: JoinFamilySpec) -> list[list[int]]:
    """Block formula: 2 inside a triple, 1 everywhere else off the diagonal."""
    n = spec.n
    block = [None] * spec.l + [t for t in range(spec.k) for _ in range(3)]
    return [
        [0 if i == j else (2 if block[i] is not None and block[i] == block[j] else 1) for j in range(n)]
        for i in range(n)
    ]


def triple_measure(spec: JoinFamilySpec, chosen: Iterable[int]) -> Measure:
    """Mass ``1/(3m)`` on each vertex of the ``m`` chosen triples (0-based indices)."""
    chosen = set(chosen)
    if not chosen:
        raise EmptyChoice("choose at least one triple")
    if not chosen <= set(range(spec.k)):
        raise BadSpec(f"triple indices must lie in 0..{spec.k - 1}")
    w = Fraction(1, 3 * len(chosen))
    mu = [Fraction(0)] * spec.n
    for t in chosen:
        for r in range(3):
            mu[spec.l + 3 * t + r] = w
    return tuple(mu)


# ----------------------------------------------------------------------
# the 14-vertex extrapolation example
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def example14_distances() -> tuple[tuple[int, ...], ...]:
    text = (resources.files("balanced") / "data" / "example14.csv").read_text(encoding="utf-8")
    return tuple(tuple(int(x) for x in row) for row in csv.reader(text.splitlines()))


def build_example_14() -> Graph:
    D = example14_distances()
    n = len(D)
    g = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if D[i][j] == 1])
    assert g.distances == D, "fixture is not the distance matrix of its own adjacency"
    return g


def mu_a(a) -> Measure:
    """``(b 1_3, a 1_3, 0, a 1_3, b 1_3, 0)`` with ``b = 1/6 - a``."""
    a = to_fraction(a)
    if not 0 <= a <= Fraction(1, 6):
        raise OutOfRange("a must lie in [0, 1/6]")
    b = Fraction(1, 6) - a
    z = Fraction(0)
    return (b,) * 3 + (a,) * 3 + (z,) + (a,) * 3 + (b,) * 3 + (z,)


# ----------------------------------------------------------------------
# C4 x C4
# ----------------------------------------------------------------------

def c4c4() -> Graph:
    return cartesian_product(cycle(4), cycle(4))


def cells_measure(cells: Iterable[tuple[int, int]]) -> Measure:
    """Uniform measure on the given ``(row, col)`` cells of the 4x4 torus."""
    idx = {4 * i + j for i, j in cells}
    if not idx:
        raise EmptyChoice("no cells given")
    w = Fraction(1, len(idx))
    return tuple(w if v in idx else Fraction(0) for v in range(16))


def permutation_measure_c4c4(perm: Sequence[int]) -> Measure:
    if len(perm) != 4 or sorted(perm) != [0, 1, 2, 3]:
        raise BadPermutation(f"{list(perm)!r} is not a permutation of 0..3")
    return cells_measure((i, p) for i, p in enumerate(perm))


# ----------------------------------------------------------------------
# G_H
# ----------------------------------------------------------------------

def gh_block_distances(h: Graph) -> list[list[int]]:
    """Blocks ``2J - 2I`` on the diagonal, ``J`` for non-edges, ``J + I`` for edges."""
    n = h.n
    D = [[0] * (3 * n) for _ in range(3 * n)]
    for i in range(n):
        for j in range(n):
            for p in range(3):
                for q in range(3):
                    if i == j:
                        d = 0 if p == q else 2
                    elif h.adjacent(i, j):
                        d = 2 if p == q else 1
                    else:
                        d = 1
                    D[3 * i + p][3 * j + q] = d
    return D


def build_gh(h: Graph) -> Graph:
    """Graph with adjacency ``2J - 2I - D`` for the block matrix ``D`` above.

    For ``h = K1`` the result is three isolated vertices and is returned in
    raw (disconnected) form.
    """
    D = gh_block_distances(h)
    m = len(D)
    edges = [(u, v) for u in range(m) for v in range(u + 1, m) if D[u][v] == 1]
    return Graph(m, edges, allow_disconnected=True)


def gh_vertex_measure(h: Graph, i: int) -> Measure:
    return tuple(Fraction(1, 3) if v // 3 == i else Fraction(0) for v in range(3 * h.n))


def verify_gh_embedding(h: Graph) -> bool:
    """Check that the block measures of ``G_H`` induce a copy of ``h`` in the
    compatibility graph, along with the ingredients this relies on: exact
    block distances, balancedness, basicness and the predicted max-sets."""
    n = h.n
    if n > 5:
        raise TooLarge("G_H verification is limited to |H| <= 5")
    if n == 1:
        # one block measure, no possible edges
        return True
    g = build_gh(h)
    if not g.is_connected or [list(r) for r in g.distances] != gh_block_distances(h):
        return False
    mus = [gh_vertex_measure(h, i) for i in range(n)]
    blocks = [frozenset(range(3 * i, 3 * i + 3)) for i in range(n)]
    for i, mu in enumerate(mus):
        if not is_balanced(g, mu) or not is_basic(g, mu):
            return False
        expected = blocks[i].union(*[blocks[j] for j in range(n) if h.adjacent(i, j)])
        if max_set(g, mu) != expected:
            return False
    maxsets = [max_set(g, mu) for mu in mus]
    for i in range(n):
        for j in range(i + 1, n):
            compatible = (support(mus[i]) | support(mus[j])) <= (maxsets[i] & maxsets[j])
            if compatible != h.adjacent(i, j):
                return False
    return True
