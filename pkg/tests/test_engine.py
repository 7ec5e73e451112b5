import random

import pytest

from conway_tower import fixtures, oracle
from conway_tower.descending import all_markings
from conway_tower.diagram import (
    Crossing,
    Diagram,
    DiagramError,
    change_crossing,
    component_count,
    mirror,
    skein_triple,
)
from conway_tower.engine import (
    ConwaySeries,
    MemoConflict,
    MemoTable,
    coefficient,
    conway_polynomial,
    evaluate_gamma,
)

from .oracles import knot_conway, linking_number

KNOTS = ("unknot", "trefoil_right", "trefoil_left", "figure_eight", "knot_5_1", "knot_5_2",
         "knot_6_2", "six_r3", "kink")


def test_degree_zero():
    unknot = Diagram((), 1)
    assert coefficient(unknot, 0) == 1
    assert coefficient(Diagram((), 2), 0) == 0
    assert coefficient(unknot, -1) == 0
    assert coefficient(unknot, 3) == 0


@pytest.mark.parametrize("name", KNOTS)
def test_knots_match_alexander(fx, name):
    d = fx(name)
    assert conway_polynomial(d).nonzero() == knot_conway(d)


@pytest.mark.parametrize("name", ["hopf_pos", "hopf_neg", "unlink2_r2"])
def test_two_component_c1_is_linking_number(fx, name):
    d = fx(name)
    series = conway_polynomial(d)
    assert series[0] == 0
    assert series[1] == linking_number(d)


@pytest.mark.parametrize("name", sorted(fixtures.EXPECTED))
def test_table(fx, name):
    assert conway_polynomial(fx(name)).nonzero() == fixtures.EXPECTED[name]


def test_torus_knot(fx):
    d = fx("torus_3_5")
    assert conway_polynomial(d).nonzero() == knot_conway(d)


def test_memo_on_off_agree(fx):
    for name in ("knot_5_2", "figure_eight", "hopf_neg", "knot_6_2"):
        d = fx(name)
        assert conway_polynomial(d).coefficients == conway_polynomial(d, use_memo=False).coefficients


def test_shared_memo_reused(fx):
    memo = MemoTable()
    conway_polynomial(fx("knot_5_1"), memo=memo)
    size = len(memo)
    assert size > 0
    hits = memo.hits
    conway_polynomial(fx("knot_5_1"), memo=memo)
    assert len(memo) == size and memo.hits > hits


def test_memo_conflict():
    memo = MemoTable()
    memo.put(b"k", 2, 5)
    assert memo.put(b"k", 2, 5) == 5
    with pytest.raises(MemoConflict):
        memo.put(b"k", 2, 6)


def test_gamma_independent_of_marking(fx):
    # with beta = c0, gamma of a positive Hopf diagram is its c1
    d = fx("hopf_pos")
    beta = lambda k: coefficient(k, 0)  # noqa: E731
    values = {evaluate_gamma(d, m, beta) for m in all_markings(d)}
    assert values == {1}


def test_gamma_order_validation(fx):
    d = fx("trefoil_right")
    from conway_tower.descending import default_marking, diff_set

    m = default_marking(d)
    y = diff_set(d, m)
    beta = lambda k: coefficient(k, 1)  # noqa: E731
    want = evaluate_gamma(d, m, beta)
    assert evaluate_gamma(d, m, beta, order=list(reversed(y))) == want
    with pytest.raises(DiagramError):
        evaluate_gamma(d, m, beta, order=y + [99])


@pytest.mark.parametrize("name", ["trefoil_right", "figure_eight", "hopf_pos", "knot_5_2"])
def test_skein_on_fixtures(fx, name):
    d = fx(name)
    memo = MemoTable()
    for c in d.crossings:
        t = skein_triple(d, c.id)
        for n in range(5):
            lhs = coefficient(t.k_plus, n, memo) - coefficient(t.k_minus, n, memo)
            assert lhs == coefficient(t.k_zero, n - 1, memo)


def test_mirror(fx):
    # mirroring sends z to -z; only degrees of the component parity survive
    for name in ("trefoil_right", "hopf_pos", "knot_5_2"):
        d = fx(name)
        a, b = conway_polynomial(d), conway_polynomial(mirror(d))
        k = component_count(d)
        for n in range(len(d.crossings) + 1):
            assert b[n] == (-1) ** (k - 1) * a[n]


def test_random_knots_match_alexander():
    rng = random.Random(11)
    checked = 0
    while checked < 25:
        d = oracle.random_diagram(rng, max_crossings=7)
        if component_count(d) != 1:
            continue
        assert conway_polynomial(d).nonzero() == knot_conway(d)
        checked += 1


def test_requires_over_data():
    c = Crossing(1, 1, 2, 2, 1, 1, None)
    with pytest.raises(DiagramError):
        coefficient(Diagram((c,)), 1)


def test_rejects_invalid():
    c = Crossing(1, 1, 2, 3, 4, 1, "A")
    with pytest.raises(DiagramError):
        conway_polynomial(Diagram((c,)))


def test_series_text():
    assert ConwaySeries({0: 1, 1: 0, 2: -3}, 2).text() == "c0=1 c2=-3"
    assert ConwaySeries({0: 0}, 0).text() == "0"


def test_degree_bound(fx):
    d = fx("trefoil_right")
    assert conway_polynomial(d).degree_bound == 3
    assert conway_polynomial(d, max_degree=10).degree_bound == 3
    assert conway_polynomial(d, max_degree=1).degree_bound == 1


def test_change_flips_crossing_term(fx):
    d = fx("trefoil_right")
    # switching one crossing of the trefoil gives an unknot
    assert conway_polynomial(change_crossing(d, 1)).nonzero() == {0: 1}
