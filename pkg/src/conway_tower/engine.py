"""Conway coefficients c_n from descending diagrams and crossing changes.

For n >= 1 the value on a diagram ``K`` is accumulated along the crossing
changes that turn the descending diagram of ``K`` into ``K``: each change at
crossing ``a`` contributes ``-sign(a) * c_{n-1}(smoothing at a)``, with the
sign read off the diagram *before* the change.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .descending import Marking, default_marking, descending_diagram, diff_set
from .diagram import (
    Diagram,
    DiagramError,
    canonical_key,
    change_crossing,
    component_count,
    forget_order,
    sign,
    smooth_crossing,
    validate,
)

__all__ = [
    "ConwaySeries",
    "MemoTable",
    "MemoConflict",
    "coefficient",
    "conway_polynomial",
    "evaluate_gamma",
    "accumulate",
]

Beta = Callable[[Diagram], int]


class MemoConflict(RuntimeError):
    pass


class MemoTable:
    """Shared (canonical key, degree) -> value map.

    Inserts are insert-if-absent; a second insert with a different value
    raises, since that can only come from a bug.
    """

    def __init__(self) -> None:
        self._entries: dict[tuple[bytes, int], int] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: bytes, n: int) -> Optional[int]:
        value = self._entries.get((key, n))
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, key: bytes, n: int, value: int) -> int:
        with self._lock:
            old = self._entries.setdefault((key, n), value)
        if old != value:
            raise MemoConflict(f"memo entry for degree {n} holds {old}, recomputed {value}")
        return old

    def __len__(self) -> int:
        return len(self._entries)

    def items(self):
        return list(self._entries.items())


@dataclass
class ConwaySeries:
    coefficients: dict[int, int] = field(default_factory=dict)
    degree_bound: int = 0

    def __getitem__(self, n: int) -> int:
        return self.coefficients.get(n, 0)

    def nonzero(self) -> dict[int, int]:
        return {n: c for n, c in sorted(self.coefficients.items()) if c != 0}

    def text(self) -> str:
        terms = self.nonzero()
        if not terms:
            return "0"
        return " ".join(f"c{n}={c}" for n, c in terms.items())


def accumulate(base: Diagram, changes: Iterable[int], beta: Beta) -> int:
    """Sum ``-sign(a, cur) * beta(cur smoothed at a)`` while changing ``cur`` at each ``a``."""
    total = 0
    cur = base
    for a in changes:
        total -= sign(cur, a) * beta(smooth_crossing(cur, a))
        cur = change_crossing(cur, a)
    return total


def evaluate_gamma(d: Diagram, m: Marking, beta: Beta, order: Optional[Iterable[int]] = None) -> int:
    """Accumulate from the descending diagram of ``d`` under marking ``m``.

    ``order`` defaults to the difference set in ascending id order; any
    rearrangement of the same crossings is accepted.
    """
    y = diff_set(d, m)
    if order is not None:
        order = list(order)
        if sorted(order) != y:
            raise DiagramError(f"order {order} is not a rearrangement of the difference set {y}")
        y = order
    return accumulate(descending_diagram(d, m), y, beta)


def _coefficient(d: Diagram, n: int, memo: Optional[MemoTable]) -> int:
    if n < 0:
        return 0
    if n == 0:
        return 1 if component_count(d) == 1 else 0

    key = None
    if memo is not None:
        key = canonical_key(forget_order(d))
        hit = memo.get(key, n)
        if hit is not None:
            return hit

    m = default_marking(d)
    value = evaluate_gamma(d, m, lambda k: _coefficient(k, n - 1, memo))
    if memo is not None:
        value = memo.put(key, n, value)
    return value


def coefficient(d: Diagram, n: int, memo: Optional[MemoTable] = None, use_memo: bool = True) -> int:
    """c_n of diagram ``d``.  Pass ``use_memo=False`` to recompute everything."""
    problems = validate(d)
    if problems:
        raise DiagramError("; ".join(problems))
    if any(c.over is None for c in d.crossings):
        raise DiagramError("diagram has crossings without over/under data")
    if use_memo and memo is None:
        memo = MemoTable()
    return _coefficient(d, n, memo if use_memo else None)


def conway_polynomial(
    d: Diagram,
    max_degree: Optional[int] = None,
    memo: Optional[MemoTable] = None,
    use_memo: bool = True,
) -> ConwaySeries:
    if max_degree is None:
        max_degree = len(d.crossings)
    if use_memo and memo is None:
        memo = MemoTable()
    coeffs = {n: coefficient(d, n, memo, use_memo) for n in range(max_degree + 1)}
    return ConwaySeries(coeffs, min(max_degree, len(d.crossings)))
