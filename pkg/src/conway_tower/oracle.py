"""Brute-force cross-checks of the engine.

The oracle shares the diagram primitives (sign, change, smoothing) but
builds descending states and runs the accumulation on its own: no memo
table, no canonical keys, and every ordering of the crossing changes (up to
a cap) under many markings.  Any two evaluations that disagree are a bug.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Optional

from . import fixtures
from .diagram import (
    Diagram,
    change_crossing,
    component_count,
    is_self_crossing,
    sign,
    skein_triple,
    smooth_crossing,
)
from .engine import MemoTable, coefficient, conway_polynomial
from .geometry import compute_shadow, random_contours
from .reidemeister import random_equivalent

__all__ = [
    "OracleDisagreement",
    "VerificationReport",
    "brute_force_coefficient",
    "oracle_markings",
    "check_skein",
    "check_ordering",
    "check_marking",
    "check_move_invariance",
    "check_structure",
    "table_check",
    "random_diagram",
]


class OracleDisagreement(AssertionError):
    def __init__(self, first, second):
        self.first, self.second = first, second
        super().__init__(f"oracle disagreement: {first} vs {second}")


@dataclass
class VerificationReport:
    property: str
    instances: int = 0
    failures: list[dict] = field(default_factory=list)
    limits: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **info) -> None:
        self.failures.append(info)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.instances += other.instances
        self.failures.extend(other.failures)
        return self

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "instances": self.instances,
            "passed": self.passed,
            "failures": self.failures,
            "limits": self.limits,
        }


# -- independent accumulation --------------------------------------------------


def _heights(d: Diagram, bases: tuple[int, ...]) -> dict[tuple[int, str], tuple[int, int]]:
    """(component rank, steps from the marked edge) for every passage."""
    out = {}
    for rank, base in enumerate(bases):
        e, step = base, 0
        while True:
            out[d.heads[e]] = (rank, step)
            step += 1
            e = d.successor(e)
            if e == base:
                break
    return out


def _stacked(d: Diagram, bases: tuple[int, ...]) -> Diagram:
    h = _heights(d, bases)
    return d.with_crossings(
        replace(c, over="A" if h[(c.id, "A")] > h[(c.id, "B")] else "B") for c in d.crossings
    )


def oracle_markings(d: Diagram, cap: Optional[int] = None, seed: int = 0) -> list[tuple[int, ...]]:
    """Markings as base-edge tuples in component order; a seeded sample above ``cap``."""
    every = [
        bases
        for perm in itertools.permutations(d.cycles)
        for bases in itertools.product(*perm)
    ]
    if cap is not None and len(every) > cap:
        every = random.Random(seed).sample(every, cap)
    return every


def _walk(start: Diagram, changes: Iterable[int], beta: Callable[[Diagram], int]) -> int:
    total = 0
    cur = start
    for a in changes:
        total += -sign(cur, a) * beta(smooth_crossing(cur, a))
        cur = change_crossing(cur, a)
    return total


def _plain(d: Diagram, n: int, cache: dict) -> int:
    """One evaluation per diagram: least-edge marking, ascending changes."""
    if n < 0:
        return 0
    if n == 0:
        return int(component_count(d) == 1)
    key = (d.crossings, d.free_loops, n)
    if key in cache:
        return cache[key]
    bases = tuple(min(cyc) for cyc in d.cycles)
    start = _stacked(d, bases)
    y = [c.id for c, s in zip(d.crossings, start.crossings) if c.over != s.over]
    value = _walk(start, y, lambda k: _plain(k, n - 1, cache))
    cache[key] = value
    return value


def brute_force_coefficient(
    d: Diagram,
    n: int,
    order_cap: int = 5,
    marking_cap: int = 16,
    seed: int = 0,
    cache: Optional[dict] = None,
    markings: Optional[list[tuple[int, ...]]] = None,
) -> int:
    """c_n by exhaustive re-evaluation.

    Evaluates over every ordering of the difference set (at most
    ``order_cap!`` of them) and up to ``marking_cap`` markings (or the
    explicit ``markings``, as base-edge tuples), and raises
    :class:`OracleDisagreement` unless all of them agree.  Smaller diagrams
    in the recursion are evaluated once each; ``cache`` only reuses results
    for structurally identical diagrams.
    """
    if n < 0:
        return 0
    if n == 0:
        return int(component_count(d) == 1)
    if cache is None:
        cache = {}
    beta = lambda k: _plain(k, n - 1, cache)  # noqa: E731
    limit = math.factorial(order_cap)
    witness = None
    if markings is None:
        markings = oracle_markings(d, marking_cap, seed)
    for bases in markings:
        start = _stacked(d, bases)
        y = [c.id for c, s in zip(d.crossings, start.crossings) if c.over != s.over]
        for perm in itertools.islice(itertools.permutations(y), limit):
            value = _walk(start, perm, beta)
            if witness is None:
                witness = (value, bases, perm)
            elif value != witness[0]:
                raise OracleDisagreement(witness, (value, bases, perm))
    return witness[0] if witness else 0


# -- property checks -------------------------------------------------------


def check_skein(d: Diagram, cid: int, n: int, memo: Optional[MemoTable] = None) -> bool:
    memo = MemoTable() if memo is None else memo
    t = skein_triple(d, cid)
    lhs = coefficient(t.k_plus, n, memo) - coefficient(t.k_minus, n, memo)
    return lhs == coefficient(t.k_zero, n - 1, memo)


def skein_report(d: Diagram, n_max: int, name: str = "") -> VerificationReport:
    rep = VerificationReport("skein", limits={"n_max": n_max})
    memo = MemoTable()
    for c in d.crossings:
        for n in range(n_max + 1):
            rep.instances += 1
            if not check_skein(d, c.id, n, memo):
                rep.fail(diagram=name, crossing=c.id, n=n)
    return rep


def check_ordering(d: Diagram, n_max: int, order_cap: int = 5, name: str = "") -> VerificationReport:
    """Every ordering of the difference set (least-edge marking) against the engine."""
    rep = VerificationReport("ordering", limits={"n_max": n_max, "order_cap": order_cap})
    least = tuple(min(cyc) for cyc in d.cycles)
    memo = MemoTable()
    cache: dict = {}
    for n in range(1, n_max + 1):
        rep.instances += 1
        try:
            got = brute_force_coefficient(d, n, order_cap, cache=cache, markings=[least])
        except OracleDisagreement as exc:
            rep.fail(diagram=name, n=n, disagreement=[repr(exc.first), repr(exc.second)])
            continue
        want = coefficient(d, n, memo)
        if got != want:
            rep.fail(diagram=name, n=n, oracle=got, engine=want)
    return rep


def check_marking(
    d: Diagram, n_max: int, marking_cap: int = 16, seed: int = 0, name: str = ""
) -> VerificationReport:
    """Many markings against the engine; every descending state must evaluate to zero."""
    rep = VerificationReport("marking", limits={"n_max": n_max, "marking_cap": marking_cap})
    memo = MemoTable()
    cache: dict = {}
    for n in range(1, n_max + 1):
        rep.instances += 1
        try:
            got = brute_force_coefficient(d, n, order_cap=1, marking_cap=marking_cap,
                                          seed=seed, cache=cache)
        except OracleDisagreement as exc:
            rep.fail(diagram=name, n=n, disagreement=[repr(exc.first), repr(exc.second)])
            continue
        want = coefficient(d, n, memo)
        if got != want:
            rep.fail(diagram=name, n=n, oracle=got, engine=want)
    for bases in oracle_markings(d, marking_cap, seed):
        flat = _stacked(d, bases)
        for n in range(1, len(d.crossings) + 1):
            rep.instances += 1
            value = coefficient(flat, n, memo)
            if value != 0:
                rep.fail(diagram=name, marking=list(bases), n=n, descending_value=value)
    return rep


def check_move_invariance(
    d: Diagram,
    seed: int,
    steps: int,
    n_max: int,
    engine: Callable[[Diagram, int], dict] = None,
    name: str = "",
) -> VerificationReport:
    if engine is None:
        engine = lambda k, m: conway_polynomial(k, m).nonzero()  # noqa: E731
    rep = VerificationReport("moves", limits={"n_max": n_max, "steps": steps, "seed": seed})
    moved, log = random_equivalent(d, steps, seed)
    rep.instances = 1
    before, after = engine(d, n_max), engine(moved, n_max)
    if before != after:
        rep.fail(diagram=name, seed=seed, before=before, after=after,
                 moves=[str(mv) for mv in log])
    return rep


def check_structure(d: Diagram, n_max: Optional[int] = None, name: str = "") -> VerificationReport:
    """Vanishing/parity of c_n, smoothing component counts, sign flips."""
    rep = VerificationReport("structure")
    memo = MemoTable()
    top = len(d.crossings) + 2 if n_max is None else n_max
    parity = (component_count(d) - 1) % 2
    for n in range(top + 1):
        rep.instances += 1
        value = coefficient(d, n, memo)
        if value and (n > len(d.crossings) or n % 2 != parity):
            rep.fail(diagram=name, n=n, value=value, reason="coefficient should vanish")
    k = component_count(d)
    for c in d.crossings:
        rep.instances += 1
        diff = component_count(smooth_crossing(d, c.id)) - k
        want = 1 if is_self_crossing(d, c.id) else -1
        if diff != want:
            rep.fail(diagram=name, crossing=c.id, reason=f"smoothing changed components by {diff}")
        if sign(change_crossing(d, c.id), c.id) != -sign(d, c.id):
            rep.fail(diagram=name, crossing=c.id, reason="crossing change kept the sign")
    return rep


def table_check(names: Optional[Iterable[str]] = None) -> VerificationReport:
    rep = VerificationReport("tables", limits={"order_cap": 5, "marking_cap": 16})
    timings = {}
    for name in names or fixtures.EXPECTED:
        want = fixtures.EXPECTED[name]
        d = fixtures.load(name)
        t0 = time.perf_counter()
        cache: dict = {}
        degrees = range(len(d.crossings) + 1)
        rep.instances += 1
        try:
            oracle = {n: brute_force_coefficient(d, n, cache=cache) for n in degrees}
        except OracleDisagreement as exc:
            rep.fail(fixture=name, disagreement=[repr(exc.first), repr(exc.second)])
            continue
        oracle = {n: v for n, v in oracle.items() if v}
        engine = conway_polynomial(d).nonzero()
        timings[name] = round(time.perf_counter() - t0, 4)
        if oracle != want or engine != want:
            rep.fail(fixture=name, expected=want, oracle=oracle, engine=engine)
    rep.limits["seconds"] = timings
    return rep


# -- random inputs -----------------------------------------------------------


def random_diagram(rng: random.Random, max_crossings: int = 8, min_crossings: int = 1) -> Diagram:
    """Random polygonal shadow (one or two contours) with random over/under data."""
    while True:
        k = rng.choice((1, 1, 2))
        sizes = [rng.randint(4, 7) for _ in range(k)]
        shadow, _ = compute_shadow(random_contours(rng, k, sizes, box=30))
        if not min_crossings <= len(shadow.crossings) <= max_crossings:
            continue
        return shadow.with_crossings(
            replace(c, over=rng.choice("AB")) for c in shadow.crossings
        )

