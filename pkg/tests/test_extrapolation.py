import random
from fractions import Fraction as F

import pytest

from balanced import graph as gr
from balanced.constructions import build_example_14, mu_a
from balanced.enumeration import compatible_cliques, compatibility_graph, enumerate_basic
from balanced.errors import DegenerateError, HypothesisError
from balanced.extrapolation import Constraint, LineFamily, balanced_interval, extrapolate_right, line_measure
from balanced.measure import Order, convex_combination, is_balanced, pair_of, uniform

from conftest import random_connected_graph, random_weights

HALF = F(1, 2)
C4_FAM = LineFamily(gr.cycle(4), (HALF, 0, HALF, 0), uniform(4))


def test_line_measure_endpoints_and_overshoot():
    assert line_measure(C4_FAM, 0) == C4_FAM.mu
    assert line_measure(C4_FAM, 1) == C4_FAM.nu
    assert line_measure(C4_FAM, 2) == (0, HALF, 0, HALF)
    beyond = line_measure(C4_FAM, 3)
    assert beyond[0] == F(-1, 4) and sum(beyond) == 1


def test_c4_interval():
    iv = balanced_interval(C4_FAM)
    assert iv.R == 2
    assert set(iv.binding_R) == {Constraint("support", 0), Constraint("support", 2)}
    # the odd vertices already sit at zero when t = 0
    assert iv.L == 0
    assert set(iv.binding_L) == {Constraint("support", 1), Constraint("support", 3)}


def test_c4_extrapolation():
    ext = extrapolate_right(C4_FAM)
    assert ext.R == 2 and ext.lam_R == (0, HALF, 0, HALF)
    assert ext.pair_R.support < ext.pair_nu.support
    assert ext.relation is Order.LESS


def test_example14_extrapolation():
    g = build_example_14()
    ext = extrapolate_right(LineFamily(g, mu_a(F(1, 9)), mu_a(F(1, 12))))
    assert ext.lam_R == mu_a(F(1, 18))
    assert ext.pair_R.support == ext.pair_nu.support
    assert ext.pair_R.max_set > ext.pair_nu.max_set
    assert ext.binding == (Constraint("maxset", 13),)


def test_errors():
    with pytest.raises(DegenerateError):
        balanced_interval(LineFamily(gr.complete(2), (HALF, HALF), (HALF, HALF)))
    with pytest.raises(HypothesisError):
        balanced_interval(LineFamily(gr.path(3), uniform(3), (HALF, 0, HALF)))
    with pytest.raises(HypothesisError):
        # support of mu not inside support of nu
        balanced_interval(LineFamily(gr.cycle(4), uniform(4), (HALF, 0, HALF, 0)))


def _families():
    """Valid line families: nu a positive mix of a compatible clique, mu one of its members."""
    rng = random.Random(5)
    graphs = [gr.cycle(6), gr.cycle(8), gr.join(gr.empty(3), gr.empty(3)), gr.join(gr.complete(1), gr.cycle(5))]
    graphs += [random_connected_graph(rng, rng.randint(4, 7)) for _ in range(8)]
    out = []
    for g in graphs:
        cat = enumerate_basic(g)
        for clique in compatible_cliques(compatibility_graph(cat), 3):
            if len(clique) < 2:
                continue
            mus = [cat.entries[i].mu for i in clique]
            nu = convex_combination(mus, random_weights(rng, len(mus)))
            out.append(LineFamily(g, mus[0], nu))
    return out


FAMILIES = _families()


def test_family_corpus_is_nontrivial():
    assert len(FAMILIES) >= 10


@pytest.mark.parametrize("fam", FAMILIES)
def test_interval_properties(fam):
    g = fam.graph
    iv = balanced_interval(fam)
    assert iv.L <= 0 < 1 < iv.R
    pair_nu = pair_of(g, fam.nu)
    for k in range(1, 20):
        t = iv.L + (iv.R - iv.L) * F(k, 20)
        lam = line_measure(fam, t)
        assert sum(lam) == 1
        assert is_balanced(g, lam)
        assert pair_of(g, lam) == pair_nu
    for t in (iv.L, iv.R):
        assert is_balanced(g, line_measure(fam, t))
    for t in (iv.R + F(1, 1000), iv.L - F(1, 1000)):
        lam = line_measure(fam, t)
        assert min(lam) < 0 or not is_balanced(g, lam)


@pytest.mark.parametrize("fam", FAMILIES)
def test_extrapolation_moves_pair_strictly(fam):
    ext = extrapolate_right(fam)
    p, q = ext.pair_R, ext.pair_nu
    assert p.support < q.support or p.max_set > q.max_set
    assert p.support <= q.support and p.max_set >= q.max_set
    back = tuple(x / ext.R + (ext.R - 1) / ext.R * m for x, m in zip(ext.lam_R, fam.mu))
    assert back == fam.nu
