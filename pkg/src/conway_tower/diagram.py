"""Combinatorial oriented link diagrams.

A diagram is a finite set of crossings.  Every crossing records two directed
strand passages, ``A`` and ``B``, as ``(in_edge, out_edge)`` pairs, the
orientation of the frame (direction of A, direction of B) and which strand
is on top.  Edges are the arcs between consecutive passages; each edge id is
used exactly once as an in-slot and once as an out-slot.  Components with no
crossings at all are kept as a bare counter, ``free_loops``.

Diagrams are immutable.  Every operation returns a new diagram.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

__all__ = [
    "Crossing",
    "Diagram",
    "DiagramError",
    "SkeinTriple",
    "validate",
    "sign",
    "change_crossing",
    "smooth_crossing",
    "component_count",
    "skein_triple",
    "mirror",
    "canonical_key",
    "forget_order",
    "splice",
]

STRANDS = ("A", "B")


class DiagramError(ValueError):
    """Raised for malformed diagrams or references to missing crossings."""


@dataclass(frozen=True)
class Crossing:
    id: int
    a_in: int
    a_out: int
    b_in: int
    b_out: int
    orient: int  # orientation of the frame (dir A, dir B): +1 or -1
    over: Optional[str] = None  # "A", "B", or None for a bare shadow

    def slots(self, strand: str) -> tuple[int, int]:
        if strand == "A":
            return self.a_in, self.a_out
        if strand == "B":
            return self.b_in, self.b_out
        raise DiagramError(f"unknown strand {strand!r}")

    @property
    def edges(self) -> tuple[int, int, int, int]:
        return self.a_in, self.a_out, self.b_in, self.b_out

    def flipped(self) -> "Crossing":
        if self.over is None:
            raise DiagramError(f"crossing {self.id} has no over/under data")
        return replace(self, over="B" if self.over == "A" else "A")


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0
    component_order: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.crossings, key=lambda c: c.id))
        object.__setattr__(self, "crossings", ordered)
        if self.component_order is not None:
            object.__setattr__(self, "component_order", tuple(self.component_order))

    # -- lookups -----------------------------------------------------------

    @cached_property
    def by_id(self) -> dict[int, Crossing]:
        return {c.id: c for c in self.crossings}

    def crossing(self, cid: int) -> Crossing:
        try:
            return self.by_id[cid]
        except KeyError:
            raise DiagramError(f"unknown crossing id {cid}") from None

    @cached_property
    def heads(self) -> dict[int, tuple[int, str]]:
        """edge -> (crossing id, strand) where the edge ends."""
        out = {}
        for c in self.crossings:
            out[c.a_in] = (c.id, "A")
            out[c.b_in] = (c.id, "B")
        return out

    @cached_property
    def tails(self) -> dict[int, tuple[int, str]]:
        """edge -> (crossing id, strand) where the edge starts."""
        out = {}
        for c in self.crossings:
            out[c.a_out] = (c.id, "A")
            out[c.b_out] = (c.id, "B")
        return out

    @property
    def edges(self) -> list[int]:
        return sorted(self.heads)

    def successor(self, edge: int) -> int:
        cid, strand = self.heads[edge]
        return self.by_id[cid].slots(strand)[1]

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Edge cycles, each starting at its least edge, sorted by that edge."""
        seen: set[int] = set()
        found = []
        for e in self.edges:
            if e in seen:
                continue
            cyc = [e]
            seen.add(e)
            nxt = self.successor(e)
            while nxt != e:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.successor(nxt)
            found.append(tuple(cyc))
        return tuple(found)

    @cached_property
    def component_of(self) -> dict[int, int]:
        """edge -> index into ``cycles``."""
        return {e: i for i, cyc in enumerate(self.cycles) for e in cyc}

    @property
    def crossing_ids(self) -> list[int]:
        return [c.id for c in self.crossings]

    def __len__(self) -> int:
        return len(self.crossings)

    def with_crossings(self, crossings: Iterable[Crossing]) -> "Diagram":
        return replace(self, crossings=tuple(crossings))


@dataclass(frozen=True)
class SkeinTriple:
    k_plus: Diagram
    k_minus: Diagram
    k_zero: Diagram
    site: int


# ---------------------------------------------------------------------------


def validate(d: Diagram) -> list[str]:
    """Return a list of violations; an empty list means the diagram is valid."""
    problems: list[str] = []
    if d.free_loops < 0:
        problems.append(f"negative free loop count {d.free_loops}")
    ids = [c.id for c in d.crossings]
    for cid in {i for i in ids if ids.count(i) > 1}:
        problems.append(f"duplicate crossing id {cid}")

    ins: dict[int, list[int]] = {}
    outs: dict[int, list[int]] = {}
    for c in d.crossings:
        for e in c.edges:
            if not isinstance(e, int) or isinstance(e, bool) or e <= 0:
                problems.append(f"crossing {c.id}: edge id {e!r} is not a positive integer")
        if c.a_in == c.a_out:
            problems.append(f"crossing {c.id}: strand A enters and leaves on edge e{c.a_in}")
        if c.b_in == c.b_out:
            problems.append(f"crossing {c.id}: strand B enters and leaves on edge e{c.b_in}")
        if c.orient not in (1, -1):
            problems.append(f"crossing {c.id}: orient must be +1 or -1, got {c.orient!r}")
        if c.over not in ("A", "B", None):
            problems.append(f"crossing {c.id}: over must be A or B, got {c.over!r}")
        ins.setdefault(c.a_in, []).append(c.id)
        ins.setdefault(c.b_in, []).append(c.id)
        outs.setdefault(c.a_out, []).append(c.id)
        outs.setdefault(c.b_out, []).append(c.id)

    for e in sorted(set(ins) | set(outs)):
        n_in, n_out = len(ins.get(e, ())), len(outs.get(e, ()))
        if n_in == 1 and n_out == 1:
            continue
        if n_out == 0:
            problems.append(f"dangling edge e{e}: no out-slot (entered at crossing {ins[e][0]})")
        elif n_in == 0:
            problems.append(f"dangling edge e{e}: no in-slot (leaves crossing {outs[e][0]})")
        else:
            problems.append(f"edge e{e} used {n_in} times as in-slot and {n_out} times as out-slot")

    if problems or d.component_order is None:
        return problems

    seen_cycles: set[int] = set()
    comp = d.component_of
    for rep in d.component_order:
        if rep not in comp:
            problems.append(f"component order names unknown edge e{rep}")
            continue
        if comp[rep] in seen_cycles:
            problems.append(f"component order lists the component of e{rep} twice")
        seen_cycles.add(comp[rep])
    for i, cyc in enumerate(d.cycles):
        if i not in seen_cycles:
            problems.append(f"component order omits the component containing e{cyc[0]}")
    return problems


def check(d: Diagram) -> Diagram:
    problems = validate(d)
    if problems:
        raise DiagramError("; ".join(problems))
    return d


def sign(d: Diagram, cid: int) -> int:
    """Crossing sign: orientation of the frame (over direction, under direction)."""
    c = d.crossing(cid)
    if c.over is None:
        raise DiagramError(f"crossing {cid} has no over/under data")
    return c.orient if c.over == "A" else -c.orient


def change_crossing(d: Diagram, cid: int) -> Diagram:
    c = d.crossing(cid)
    return d.with_crossings(c.flipped() if x.id == cid else x for x in d.crossings)


def change_crossings(d: Diagram, cids: Iterable[int]) -> Diagram:
    flips = set()
    for cid in cids:
        d.crossing(cid)
        flips ^= {cid}
    return d.with_crossings(x.flipped() if x.id in flips else x for x in d.crossings)


def mirror(d: Diagram) -> Diagram:
    return d.with_crossings(c.flipped() for c in d.crossings)


def forget_order(d: Diagram) -> Diagram:
    return d if d.component_order is None else replace(d, component_order=None)


def component_count(d: Diagram) -> int:
    return len(d.cycles) + d.free_loops


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def splice(
    d: Diagram,
    passages: Mapping[int, Sequence[tuple[int, int]]],
    keep_order: bool = False,
) -> Diagram:
    """Delete crossings, joining each listed ``(in_edge, out_edge)`` passage.

    Joined arcs take the least edge id among them.  Chains that close up
    without meeting a surviving crossing become free loops.
    """
    uf = _UnionFind()
    for cid, pairs in passages.items():
        d.crossing(cid)
        for e_in, e_out in pairs:
            uf.union(e_in, e_out)

    removed = set(passages)
    survivors = [c for c in d.crossings if c.id not in removed]
    touched = {e for c in survivors for e in c.edges}
    classes: dict[int, set[int]] = {}
    for e in d.heads:
        classes.setdefault(uf.find(e), set()).add(e)
    new_loops = sum(1 for members in classes.values() if not members & touched)

    rename = {e: uf.find(e) for e in d.heads}
    crossings = [
        replace(
            c,
            a_in=rename[c.a_in],
            a_out=rename[c.a_out],
            b_in=rename[c.b_in],
            b_out=rename[c.b_out],
        )
        for c in survivors
    ]

    order = None
    if keep_order and d.component_order is not None:
        live = {rename[e] for e in touched}
        mapped = tuple(rename[e] for e in d.component_order)
        if all(e in live for e in mapped):
            order = mapped
    return Diagram(tuple(crossings), d.free_loops + new_loops, order)


def smooth_crossing(d: Diagram, cid: int) -> Diagram:
    """Orientation-respecting smoothing; the result is unordered."""
    c = d.crossing(cid)
    return splice(d, {cid: [(c.a_in, c.b_out), (c.b_in, c.a_out)]})


def is_self_crossing(d: Diagram, cid: int) -> bool:
    c = d.crossing(cid)
    return d.component_of[c.a_in] == d.component_of[c.b_in]


def skein_triple(d: Diagram, cid: int) -> SkeinTriple:
    flipped = change_crossing(d, cid)
    if sign(d, cid) > 0:
        plus, minus = d, flipped
    else:
        plus, minus = flipped, d
    return SkeinTriple(plus, minus, smooth_crossing(d, cid), cid)


# -- canonical form ----------------------------------------------------------


def _labelings(d: Diagram, succ: dict[int, int], head: dict[int, int]):
    """Yield (edge_label, crossings in label order) from traversal relabelings."""
    ordered = d.component_order is not None
    cycles = d.cycles
    if ordered:
        comp = d.component_of
        order = [comp[e] for e in d.component_order]
    by_id = d.by_id

    def walk(start, el, seq, seen):
        e = start
        while True:
            el[e] = len(el) + 1
            cid = head[e]
            if cid not in seen:
                seen.add(cid)
                seq.append(cid)
            e = succ[e]
            if e == start:
                return

    def starts(el, seq, k):
        if ordered:
            return cycles[order[k]]
        for cid in seq:
            c = by_id[cid]
            if c.a_in not in el:
                return (c.a_in,)
            if c.b_in not in el:
                return (c.b_in,)
        return [e for e in succ if e not in el]

    def rec(el, seq, seen, k):
        if k == len(cycles):
            yield el, seq
            return
        for s in starts(el, seq, k):
            el2, seq2, seen2 = dict(el), list(seq), set(seen)
            walk(s, el2, seq2, seen2)
            yield from rec(el2, seq2, seen2, k + 1)

    yield from rec({}, [], set(), 0)


_OVER_CODE = {"A": 0, "B": 1, None: 2}
_OVER_SWAP = (1, 0, 2)


def _serialize(rows_in: dict, el: dict[int, int], seq: list[int]) -> tuple:
    rows = []
    for cid in seq:
        a_in, a_out, b_in, b_out, orient, over = rows_in[cid]
        a = (el[a_in], el[a_out])
        b = (el[b_in], el[b_out])
        if b < a:
            rows.append((*b, *a, -orient, _OVER_SWAP[over]))
        else:
            rows.append((*a, *b, orient, over))
    return tuple(rows)


def canonical_key(d: Diagram) -> bytes:
    """Relabeling-invariant key: least serialization over traversal relabelings."""
    succ: dict[int, int] = {}
    head: dict[int, int] = {}
    rows_in = {}
    for c in d.crossings:
        succ[c.a_in], succ[c.b_in] = c.a_out, c.b_out
        head[c.a_in] = head[c.b_in] = c.id
        rows_in[c.id] = (*c.edges, c.orient, _OVER_CODE[c.over])
    best = min(
        (_serialize(rows_in, el, seq) for el, seq in _labelings(d, succ, head)),
        default=(),
    )
    tag = f"{'o' if d.component_order is not None else 'u'}{d.free_loops}:"
    body = ";".join(",".join(str(v) for v in row) for row in best)
    return (tag + body).encode()


def relabel(d: Diagram, edge_map: Mapping[int, int], crossing_map: Mapping[int, int]) -> Diagram:
    """Rename edges and crossings; maps must be injective on the ids used."""
    crossings = [
        replace(
            c,
            id=crossing_map[c.id],
            a_in=edge_map[c.a_in],
            a_out=edge_map[c.a_out],
            b_in=edge_map[c.b_in],
            b_out=edge_map[c.b_out],
        )
        for c in d.crossings
    ]
    order = None
    if d.component_order is not None:
        order = tuple(edge_map[e] for e in d.component_order)
    return Diagram(tuple(crossings), d.free_loops, order)


def swap_strands(d: Diagram, cid: int) -> Diagram:
    """Relabel A<->B at one crossing (same geometric crossing)."""
    c = d.crossing(cid)
    over = None if c.over is None else ("B" if c.over == "A" else "A")
    swapped = Crossing(c.id, c.b_in, c.b_out, c.a_in, c.a_out, -c.orient, over)
    return d.with_crossings(swapped if x.id == cid else x for x in d.crossings)


def next_ids(d: Diagram) -> tuple[itertools.count, itertools.count]:
    """Fresh edge and crossing id counters."""
    top_edge = max(d.heads, default=0)
    top_cross = max(d.by_id, default=0)
    return itertools.count(top_edge + 1), itertools.count(top_cross + 1)
