"""
Named, self-contained checks of the worked examples this package reproduces.

Each check returns ``(passed, detail)``.  ``run_all`` is what the
``verify-paper`` command prints.
"""

from __future__ import annotations

from fractions import Fraction as F
from typing import Callable, NamedTuple

from . import graph as gr
from .constructions import (
    JoinFamilySpec,
    build_example_14,
    build_join_family,
    c4c4,
    mu_a,
    permutation_measure_c4c4,
    triple_measure,
    verify_gh_embedding,
)
from .decomposition import decompose, hull_membership
from .enumeration import check_bounds, compatibility_graph, count_components, enumerate_basic, is_basic
from .extrapolation import LineFamily, extrapolate_right
from .measure import is_balanced, is_compatible, transport_cost, uniform


class Check(NamedTuple):
    name: str
    summary: str
    fn: Callable[[], tuple[bool, str]]


def _half_ends(n):
    return tuple(F(1, 2) if i in (0, n - 1) else F(0) for i in range(n))


def path_unique() -> tuple[bool, str]:
    bad = [n for n in range(2, 11) if enumerate_basic(gr.path(n)).measures != [_half_ends(n)]]
    return not bad, f"failing n: {bad}" if bad else "P2..P10 each have one basic measure"


def c4_two_basics():
    got = enumerate_basic(gr.cycle(4)).measures
    want = [(F(1, 2), 0, F(1, 2), 0), (0, F(1, 2), 0, F(1, 2))]
    return got == [tuple(F(x) for x in w) for w in want], f"{len(got)} basic measures"


def triple_join_counts():
    details = []
    ok = True
    for l, k in [(0, 2), (1, 1), (0, 3), (1, 2), (0, 4)]:
        spec = JoinFamilySpec(l, k)
        cat = enumerate_basic(build_join_family(spec))
        expected = {
            triple_measure(spec, [t for t in range(k) if mask >> t & 1]) for mask in range(1, 2 ** k)
        }
        good = len(cat) == 2 ** k - 1 and set(cat.measures) == expected
        ok &= good
        details.append(f"(l={l},k={k}):{len(cat)}")
    return ok, " ".join(details)


def example14_interval():
    g = build_example_14()
    grid = [F(1, 20), F(1, 18) - F(1, 1000), F(1, 18), F(1, 15), F(1, 12), F(1, 10), F(1, 9),
            F(1, 9) + F(1, 1000), F(1, 8)]
    wrong = [a for a in grid if bool(is_balanced(g, mu_a(a))) != (F(1, 18) <= a <= F(1, 9))]
    return not wrong, f"mismatches at {[str(a) for a in wrong]}" if wrong else f"{len(grid)} grid points"


def example14_costs():
    g = build_example_14()
    for a in (F(1, 18), F(1, 12), F(1, 9), F(1, 7)):
        b = F(1, 6) - a
        want = (8 * a + 8 * b,) * 6 + (9 * a + 6 * b,) + (8 * a + 8 * b,) * 6 + (6 * a + 9 * b,)
        if transport_cost(g, mu_a(a)) != want:
            return False, f"cost formula fails at a={a}"
    return True, "cost formula holds"


def example14_stop():
    g = build_example_14()
    ext = extrapolate_right(LineFamily(g, mu_a(F(1, 9)), mu_a(F(1, 12))))
    ok = (
        ext.lam_R == mu_a(F(1, 18))
        and ext.pair_R.support == ext.pair_nu.support
        and ext.pair_R.max_set > ext.pair_nu.max_set
    )
    return ok, f"R={ext.R}, binding={[c.to_json() for c in ext.binding]}"


def c4_stop():
    g = gr.cycle(4)
    ext = extrapolate_right(LineFamily(g, (F(1, 2), 0, F(1, 2), 0), uniform(4)))
    ok = ext.lam_R == (0, F(1, 2), 0, F(1, 2)) and ext.pair_R.support < ext.pair_nu.support
    return ok, f"R={ext.R}"


_C8 = {
    "mu": (F(1, 2), 0, 0, 0, F(1, 2), 0, 0, 0),
    "nu": (0, 0, F(1, 2), 0, 0, 0, F(1, 2), 0),
    "rho": (0, 0, 0, F(1, 2), 0, 0, 0, F(1, 2)),
    "sigma": (0, F(1, 2), 0, 0, 0, F(1, 2), 0, 0),
}


def c8_hull():
    g = gr.cycle(8)
    S = [_C8["mu"], _C8["nu"], _C8["rho"]]
    compatible = is_compatible(S, g)
    res = hull_membership(g, _C8["sigma"], S)
    return compatible and not res.member, f"compatible={compatible} member={res.member}"


def k33_uniform():
    spec = JoinFamilySpec(0, 2)
    g = build_join_family(spec)
    u = uniform(6)
    sides = [triple_measure(spec, [0]), triple_measure(spec, [1])]
    halves = tuple((a + b) / 2 for a, b in zip(*sides))
    ok = is_basic(g, u) and halves == u and all(is_balanced(g, s) for s in sides)
    single = decompose(g, u)
    ok &= len(single.parts) == 1
    return ok, "uniform is basic and the average of the two sides"


def c4c4_balanced():
    import itertools

    g = c4c4()
    perms = list(itertools.permutations(range(4)))
    bal = sum(bool(is_balanced(g, permutation_measure_c4c4(p))) for p in perms)
    return bal == 24, f"{bal}/24 permutation measures balanced"


def gh_small():
    hs = {"P3": gr.path(3), "C4": gr.cycle(4), "K1": gr.complete(1), "C5": gr.cycle(5)}
    bad = [k for k, h in hs.items() if not verify_gh_embedding(h)]
    return not bad, f"failing: {bad}" if bad else "P3, C4, K1, C5 embed"


def bounds():
    rows = []
    ok = True
    for n, (l, k) in {6: (0, 2), 7: (1, 2), 8: (2, 2), 9: (0, 3), 12: (0, 4)}.items():
        g = build_join_family(JoinFamilySpec(l, k))
        cat = enumerate_basic(g)
        rep = check_bounds(g, cat, join_family=True)
        comps = count_components(compatibility_graph(cat))
        ok &= rep.ok and comps == rep.count
        rows.append(f"n={n}:{rep.count}")
    return ok, " ".join(rows)


CHECKS = [
    Check("path-unique", "paths carry a single basic measure (1/2 at each end)", path_unique),
    Check("c4-two-basics", "C4 has exactly two basic measures", c4_two_basics),
    Check("triple-join-counts", "joins of edgeless triples have 2^k - 1 basics", triple_join_counts),
    Check("example14-interval", "mu_a balanced iff 1/18 <= a <= 1/9", example14_interval),
    Check("example14-costs", "cost vector of mu_a matches the closed form", example14_costs),
    Check("example14-stop", "extrapolation stops on a growing max-set", example14_stop),
    Check("c4-stop", "extrapolation on C4 stops on a shrinking support", c4_stop),
    Check("c8-hull", "a fourth basic measure on C8 is outside the hull of three", c8_hull),
    Check("k33-uniform", "uniform measure on K33 is basic yet a mix of the sides", k33_uniform),
    Check("c4c4-balanced", "row/column permutation measures on C4xC4 are balanced", c4c4_balanced),
    Check("gh-embedding", "G_H realizes H inside the compatibility graph", gh_small),
    Check("bounds", "join family attains 2^floor(n/3) - 1 basics and components", bounds),
]


def run_all() -> list[tuple[str, str, bool, str]]:
    out = []
    for c in CHECKS:
        try:
            passed, detail = c.fn()
        except Exception as exc:  # a crash is a failed check, reported not raised
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((c.name, c.summary, bool(passed), detail))
    return out
