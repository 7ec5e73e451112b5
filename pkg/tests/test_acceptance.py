"""Acceptance criteria, each run at its stated size and tolerance.

Every test prints one ``PASS``/``FAIL`` line for its criterion (visible
with ``pytest -s`` or in the captured output of a failure).
"""

import random
import time

import pytest

from conway_tower import fixtures, oracle
from conway_tower.descending import all_markings, descending_diagram
from conway_tower.diagram import component_count
from conway_tower.engine import MemoTable, conway_polynomial
from conway_tower.geometry import compute_shadow, orientation_determinant

CORPUS_SEED = 20240601


def emit(capsys, number, title, ok, detail):
    with capsys.disabled():
        print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'} {title}: {detail}")
    assert ok, detail


def corpus(seed, count, cap):
    rng = random.Random(seed)
    return [oracle.random_diagram(rng, max_crossings=cap) for _ in range(count)]


@pytest.fixture(scope="module")
def small_corpus():
    """Shared corpus for the ordering and marking criteria (<= 7 crossings)."""
    return corpus(CORPUS_SEED, 100, 7)


def test_1_fixture_table(capsys):
    bad = []
    slow = []
    for name, want in fixtures.EXPECTED.items():
        d = fixtures.load(name)
        t0 = time.perf_counter()
        cache: dict = {}
        brute = {n: oracle.brute_force_coefficient(d, n, cache=cache)
                 for n in range(len(d.crossings) + 1)}
        brute = {n: v for n, v in brute.items() if v}
        engine = conway_polynomial(d).nonzero()
        elapsed = time.perf_counter() - t0
        if brute != want or engine != want:
            bad.append((name, want, brute, engine))
        if elapsed >= 1.0:
            slow.append((name, round(elapsed, 3)))
    ok = not bad and not slow
    emit(capsys, 1, "fixture table", ok,
         f"{len(fixtures.EXPECTED)} fixtures, mismatches={bad}, over 1 s={slow}")


def test_2_skein(capsys):
    rng = random.Random(CORPUS_SEED + 2)
    instances = failures = diagrams = 0
    while instances < 250:
        d = oracle.random_diagram(rng, max_crossings=8)
        diagrams += 1
        memo = MemoTable()
        cid = rng.choice(d.crossings).id
        for n in range(5):
            instances += 1
            failures += not oracle.check_skein(d, cid, n, memo)
    emit(capsys, 2, "skein relation", failures == 0 and instances >= 200,
         f"{instances} instances on {diagrams} diagrams, {failures} failures")


def test_3_ordering(capsys, small_corpus):
    rep = oracle.VerificationReport("ordering")
    for i, d in enumerate(small_corpus):
        rep.merge(oracle.check_ordering(d, 4, order_cap=5, name=f"corpus#{i}"))
    ok = rep.passed and len(small_corpus) >= 100
    emit(capsys, 3, "ordering independence", ok,
         f"{len(small_corpus)} diagrams, {rep.instances} degree checks, failures={rep.failures[:3]}")


def test_4_marking(capsys, small_corpus):
    rep = oracle.VerificationReport("marking")
    too_few = []
    for i, d in enumerate(small_corpus):
        available = len(list(all_markings(d)))
        used = len(oracle.oracle_markings(d, 16, seed=i))
        if used < min(10, available):
            too_few.append(i)
        rep.merge(oracle.check_marking(d, 4, marking_cap=16, seed=i, name=f"corpus#{i}"))
    ok = rep.passed and not too_few
    emit(capsys, 4, "marking independence", ok,
         f"{len(small_corpus)} diagrams, {rep.instances} checks, "
         f"short of markings={too_few}, failures={rep.failures[:3]}")


def test_5_reidemeister(capsys):
    rng = random.Random(CORPUS_SEED + 5)
    rep = oracle.VerificationReport("moves")
    steps_taken = 0
    for i in range(100):
        d = oracle.random_diagram(rng, max_crossings=8)
        steps = rng.randint(1, 15)
        steps_taken += steps
        rep.merge(oracle.check_move_invariance(d, rng.randrange(2**31), steps, 6, name=f"walk#{i}"))
    emit(capsys, 5, "Reidemeister invariance", rep.passed and rep.instances >= 100,
         f"{rep.instances} walks, {steps_taken} moves, failures={rep.failures[:3]}")


def test_6_structure(capsys):
    diagrams = [(name, fixtures.load(name)) for name in fixtures.names()]
    diagrams += [(f"random#{i}", d) for i, d in enumerate(corpus(CORPUS_SEED + 6, 60, 8))]
    rep = oracle.VerificationReport("structure")
    for name, d in diagrams:
        rep.merge(oracle.check_structure(d, name=name))
    emit(capsys, 6, "structural properties", rep.passed,
         f"{len(diagrams)} diagrams, {rep.instances} checks, failures={rep.failures[:3]}")


def _through(segments, x):
    out = []
    for p, q in segments:
        if orientation_determinant(p, q, x) == 0 and \
                min(p[0], q[0]) <= x[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= x[1] <= max(p[1], q[1]):
            out.append((q[0] - p[0], q[1] - p[1]))
    return out


def test_7_geometry(capsys):
    problems = []
    checked = 0
    for name, crossings in (("hopf", 2), ("trefoil", 3)):
        s = fixtures.load_contours(name)
        d, points = compute_shadow(s)
        if len(d.crossings) != crossings:
            problems.append((name, "crossing count", len(d.crossings)))
        segments = [seg for c in s.contours for seg in c.segments()]
        for c in d.crossings:
            dirs = _through(segments, points[c.id])
            # strand A runs along the earlier segment, which comes first in contour order
            det = orientation_determinant((0, 0), dirs[0], dirs[1])
            if len(dirs) != 2 or c.orient != det:
                problems.append((name, "orient", c.id))
        for m in all_markings(d):
            series = conway_polynomial(descending_diagram(d, m))
            checked += 1
            want = {0: 1} if component_count(d) == 1 else {}
            if series.nonzero() != want:
                problems.append((name, "descending", m.base_edges, series.nonzero()))
    emit(capsys, 7, "geometry path", not problems,
         f"hopf and trefoil contours, {checked} markings, problems={problems}")


def test_8_performance(capsys):
    d = fixtures.load("torus_3_5")
    t0 = time.perf_counter()
    on = conway_polynomial(d)
    elapsed = time.perf_counter() - t0
    off = conway_polynomial(d, use_memo=False)
    ok = len(d.crossings) == 10 and elapsed < 10.0 and on.coefficients == off.coefficients
    emit(capsys, 8, "performance", ok,
         f"10-crossing torus knot in {elapsed:.2f} s with memo, "
         f"memo-off equal: {on.coefficients == off.coefficients}, series {on.text()}")
