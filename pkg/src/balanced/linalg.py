"""
Exact linear algebra over the rationals.

Rows are scaled to integers and reduced with fraction-free elimination, so
rank decisions never depend on rounding.  Pivots are taken at the first
nonzero column and rows are processed in the order given, which makes every
result (kernel bases in particular) deterministic.

Also provides an exact phase-one simplex used for feasibility questions that
elimination alone cannot settle (nonnegativity, strict inequalities).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

INDEPENDENT = "independent"
DEPENDENT = "dependent"
INCONSISTENT = "inconsistent"


def integer_row(values: Sequence) -> list[int]:
    """Scale a row of rationals by the lcm of its denominators."""
    fracs = [Fraction(v) for v in values]
    den = 1
    for f in fracs:
        den = lcm(den, f.denominator)
    return [int(f * den) for f in fracs]


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row


class Echelon:
    """Integer reduced row-echelon form of an augmented system, grown one row at a time.

    Each stored row has ``ncols + 1`` integer entries, the last one being the
    right-hand side.  Every stored row has a positive pivot and zeros in the
    pivot columns of all other rows.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []
        self.inconsistent = False

    def copy(self) -> "Echelon":
        other = Echelon(self.ncols)
        other.rows = list(self.rows)  # rows are never mutated in place
        other.pivots = list(self.pivots)
        other.inconsistent = self.inconsistent
        return other

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Sequence[int]) -> list[int]:
        row = list(row)
        for prow, c in zip(self.rows, self.pivots):
            a = row[c]
            if a:
                p = prow[c]
                row = [p * x - a * y for x, y in zip(row, prow)]
        return _primitive(row)

    def add(self, row: Sequence[int]) -> str:
        if len(row) != self.ncols + 1:
            raise ValueError("row length does not match the system")
        row = self.reduce(row)
        c = next((j for j in range(self.ncols) if row[j]), None)
        if c is None:
            if row[-1]:
                self.inconsistent = True
                return INCONSISTENT
            return DEPENDENT
        if row[c] < 0:
            row = [-x for x in row]
        p = row[c]
        for i, prow in enumerate(self.rows):
            a = prow[c]
            if a:
                self.rows[i] = _primitive([p * x - a * y for x, y in zip(prow, row)])
        k = 0
        while k < len(self.pivots) and self.pivots[k] < c:
            k += 1
        self.rows.insert(k, row)
        self.pivots.insert(k, c)
        return INDEPENDENT

    def particular(self) -> list[Fraction]:
        """A solution with every free variable set to zero."""
        x = [Fraction(0)] * self.ncols
        for row, c in zip(self.rows, self.pivots):
            x[c] = Fraction(row[-1], row[c])
        return x

    def kernel(self) -> list[list[int]]:
        """Integer basis of the homogeneous solution space, one vector per free column.

        Vectors are primitive and their first nonzero entry is positive.
        """
        pivot_set = set(self.pivots)
        basis = []
        for f in range(self.ncols):
            if f in pivot_set:
                continue
            # x_f = L, x_c = -row[f] * L / row[c] with L the lcm of the pivots involved
            scale = 1
            for row, c in zip(self.rows, self.pivots):
                if row[f]:
                    scale = lcm(scale, row[c])
            vec = [0] * self.ncols
            vec[f] = scale
            for row, c in zip(self.rows, self.pivots):
                if row[f]:
                    vec[c] = -row[f] * (scale // row[c])
            vec = _primitive(vec)
            lead = next(v for v in vec if v)
            if lead < 0:
                vec = [-v for v in vec]
            basis.append(vec)
        return basis


def echelon(A: Sequence[Sequence], b: Optional[Sequence] = None) -> Echelon:
    ncols = len(A[0]) if A else 0
    E = Echelon(ncols)
    for i, row in enumerate(A):
        rhs = 0 if b is None else b[i]
        E.add(integer_row(list(row) + [rhs]))
    return E


@dataclass(frozen=True)
class AffineSolution:
    particular: tuple[Fraction, ...]
    kernel: tuple[tuple[int, ...], ...]

    @property
    def unique(self) -> bool:
        return not self.kernel


def solve(A: Sequence[Sequence], b: Sequence) -> Optional[AffineSolution]:
    """Solve ``A x = b`` exactly; None when inconsistent."""
    E = echelon(A, b)
    if E.inconsistent:
        return None
    return AffineSolution(tuple(E.particular()), tuple(tuple(v) for v in E.kernel()))


def nullspace(A: Sequence[Sequence], ncols: Optional[int] = None) -> list[list[int]]:
    if not A:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    return echelon(A).kernel()


def rank(A: Sequence[Sequence]) -> int:
    return echelon(A).rank if A else 0


@dataclass(frozen=True)
class Feasibility:
    """Outcome of :func:`phase_one`.

    Exactly one of ``x`` (a nonnegative solution of ``A x = b``) and ``farkas``
    (a vector ``y`` with ``y A <= 0`` entrywise and ``y b > 0``) is set.
    """

    feasible: bool
    x: Optional[tuple[Fraction, ...]] = None
    farkas: Optional[tuple[Fraction, ...]] = None


def phase_one(A: Sequence[Sequence], b: Sequence) -> Feasibility:
    """Decide whether ``A x = b, x >= 0`` has a solution, exactly.

    Dense tableau simplex on the auxiliary problem ``min sum(z)`` subject to
    ``A x + z = b``; Bland's rule prevents cycling.  On infeasibility the
    optimal duals form a Farkas certificate, which is checked before return.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    sign = [1 if Fraction(bi) >= 0 else -1 for bi in b]
    T = []
    for i in range(m):
        row = [sign[i] * Fraction(a) for a in A[i]]
        row += [Fraction(int(i == j)) for j in range(m)]
        row.append(sign[i] * Fraction(b[i]))
        T.append(row)
    width = n + m
    # reduced costs of the auxiliary objective, last entry is -objective
    cost = [Fraction(0)] * (width + 1)
    for j in range(n):
        cost[j] = -sum((T[i][j] for i in range(m)), Fraction(0))
    cost[width] = -sum((T[i][width] for i in range(m)), Fraction(0))
    basis = [n + i for i in range(m)]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # cannot happen: the auxiliary objective is bounded below
            raise ArithmeticError("phase one reported unbounded")
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        prow = T[leave]
        for i in range(m):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], prow)]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, prow)]
        basis[leave] = enter

    value = -cost[width]
    if value == 0:
        x = [Fraction(0)] * n
        for i, j in enumerate(basis):
            if j < n:
                x[j] = T[i][width]
        return Feasibility(True, x=tuple(x))

    y = [sign[i] * (1 - cost[n + i]) for i in range(m)]
    for j in range(n):
        assert sum(y[i] * Fraction(A[i][j]) for i in range(m)) <= 0
    assert sum(y[i] * Fraction(b[i]) for i in range(m)) > 0
    return Feasibility(False, farkas=tuple(y))
