"""
Finite simple graphs with cached hop-count distance matrices.

Vertex numbering conventions (fixed so fixtures stay byte-stable):

* ``path(n)``: edges ``i -- i+1``.
* ``cycle(n)``: the path plus ``n-1 -- 0``.
* ``complete(n)``: all pairs.
* ``cartesian_product(g, h)``: vertex ``(i, j)`` is ``i * h.n + j``.
* ``join(g, h)``: g's vertices first, then h's shifted by ``g.n``.
"""

from __future__ import annotations

import json
from collections import deque
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import BadParameter, DisconnectedError, ParseError, SelfLoopError, UnknownFamily

Edge = tuple[int, int]


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Connectivity is enforced unless ``allow_disconnected`` is set; the raw
    vertex-set form only exists to serve as an operand of :func:`join`.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]] = (),
        labels: Optional[Sequence[str]] = None,
        *,
        allow_disconnected: bool = False,
    ):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise BadParameter(f"vertex count must be a positive integer, got {n!r}")
        es = set()
        for e in edges:
            if len(e) != 2:
                raise ParseError(f"edge {e!r} does not have two endpoints")
            u, v = e
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (u, v)):
                raise ParseError(f"edge {e!r} has non-integer endpoints")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            es.add((min(u, v), max(u, v)))
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise ParseError(f"expected {n} labels, got {len(labels)}")
        self.n = n
        self.edges: frozenset[Edge] = frozenset(es)
        self.labels = labels
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        self.neighbors: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        if not allow_disconnected and not self.is_connected:
            raise DisconnectedError(f"graph on {n} vertices is not connected")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def _bfs(self, source: int) -> list[int]:
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in self.neighbors[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    @cached_property
    def is_connected(self) -> bool:
        return min(self._bfs(0)) >= 0

    @cached_property
    def distances(self) -> tuple[tuple[int, ...], ...]:
        if not self.is_connected:
            raise DisconnectedError("distances are undefined on a disconnected graph")
        return tuple(tuple(self._bfs(s)) for s in range(self.n))

    @property
    def diameter(self) -> int:
        return max(max(row) for row in self.distances)


def all_pairs_distances(g: Graph) -> tuple[tuple[int, ...], ...]:
    """BFS hop distances; cached on the graph after the first call."""
    return g.distances


# ----------------------------------------------------------------------
# generators and operations
# ----------------------------------------------------------------------

def path(n: int) -> Graph:
    if n < 2:
        raise BadParameter("path needs n >= 2")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameter("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParameter("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    """The edgeless vertex set, i.e. the complement of ``complete(n)``."""
    return Graph(n, (), allow_disconnected=True)


def complement(g: Graph) -> Graph:
    es = [e for e in combinations(range(g.n), 2) if e not in g.edges]
    return Graph(g.n, es, g.labels, allow_disconnected=True)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    off = g.n
    es = list(g.edges)
    es += [(u + off, v + off) for u, v in h.edges]
    es += [(u, v + off) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n + h.n, es)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    m = h.n
    es = []
    for i in range(g.n):
        for a, b in h.edges:
            es.append((i * m + a, i * m + b))
    for a, b in g.edges:
        for j in range(m):
            es.append((a * m + j, b * m + j))
    return Graph(g.n * m, es)


FAMILIES = {"path": path, "cycle": cycle, "complete": complete}


def generate(family: str, *args) -> Graph:
    """Build a named family: ``path``, ``cycle``, ``complete`` (one integer each)
    or ``cartesian_product`` (two graphs)."""
    if family == "cartesian_product":
        if len(args) != 2 or not all(isinstance(a, Graph) for a in args):
            raise BadParameter("cartesian_product takes two graphs")
        return cartesian_product(*args)
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise UnknownFamily(f"unknown graph family {family!r}") from None
    if len(args) != 1 or not isinstance(args[0], int):
        raise BadParameter(f"{family} takes one integer parameter")
    return fn(args[0])


# ----------------------------------------------------------------------
# parsing and serialization
# ----------------------------------------------------------------------

def parse_graph(text: str, *, allow_disconnected: bool = False) -> Graph:
    """Parse a Graph JSON document or a plain edge list.

    JSON: ``{"n": int, "edges": [[u, v], ...], "labels": [...]}``.
    Edge list: first line ``n``, then ``u v`` per line; ``#`` starts a comment.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if not isinstance(doc, dict) or "n" not in doc:
            raise ParseError('graph JSON needs an "n" field')
        edges = doc.get("edges", [])
        if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
            raise ParseError('"edges" must be a list of pairs')
        n = doc["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ParseError('"n" must be an integer')
        return Graph(n, [tuple(e) for e in edges], doc.get("labels"),
                     allow_disconnected=allow_disconnected)

    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty graph document")
    try:
        n = int(lines[0])
        edges = []
        for line in lines[1:]:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"bad edge line {line!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError:
        raise ParseError("edge list entries must be integers") from None
    return Graph(n, edges, allow_disconnected=allow_disconnected)


def to_json(g: Graph) -> dict:
    doc = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    return doc


def to_edgelist(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{u} {v}\n" for u, v in g.sorted_edges()])


def to_dot(g: Graph, measure: Optional[Sequence] = None, name: str = "G") -> str:
    """Undirected DOT; ``measure`` entries become ``measure="p/q"`` attributes."""
    out = [f"graph {name} {{\n"]
    for v in range(g.n):
        attrs = []
        if g.labels is not None:
            attrs.append(f'label="{g.labels[v]}"')
        if measure is not None:
            attrs.append(f'measure="{measure[v]}"')
        out.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";\n")
    for u, v in g.sorted_edges():
        out.append(f"  {u} -- {v};\n")
    out.append("}\n")
    return "".join(out)
