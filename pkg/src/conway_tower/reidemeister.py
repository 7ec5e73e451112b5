"""Reidemeister moves on the rotation system of a diagram.

The planar embedding is never stored.  At each crossing the counterclockwise
order of the four edge-ends is fixed by ``orient``::

    orient = +1:  a_out, b_out, a_in, b_in
    orient = -1:  a_out, b_in, a_in, b_out

Faces are traced as sequences of darts ``(edge, +1)`` (along the edge) or
``(edge, -1)`` (against it).  After arriving at a crossing the walk leaves
through the counterclockwise neighbour of the arrival end, so every face
lies to the right of its darts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Optional

from .diagram import Crossing, Diagram, DiagramError, next_ids, splice

__all__ = [
    "MoveDescriptor",
    "StaleMove",
    "rotation",
    "faces",
    "validate_planarity",
    "find_moves",
    "apply_move",
    "random_equivalent",
]

Dart = tuple[int, int]

_CCW = {
    1: ("a_out", "b_out", "a_in", "b_in"),
    -1: ("a_out", "b_in", "a_in", "b_out"),
}
_STRAND_OF = {"a_in": "A", "a_out": "A", "b_in": "B", "b_out": "B"}


class StaleMove(DiagramError):
    """The move descriptor does not apply to this diagram."""


@dataclass(frozen=True)
class MoveDescriptor:
    kind: str  # R1_add, R1_remove, R2_add, R2_remove, R3
    site: tuple
    params: tuple = ()

    def __str__(self) -> str:
        extra = f" {self.params}" if self.params else ""
        return f"{self.kind} at {self.site}{extra}"


def rotation(d: Diagram) -> dict[int, tuple[str, ...]]:
    return {c.id: _CCW[c.orient] for c in d.crossings}


def _arrival(d: Diagram, dart: Dart) -> tuple[int, str]:
    """(crossing, slot) where the dart ends."""
    e, direction = dart
    cid, strand = d.heads[e] if direction > 0 else d.tails[e]
    suffix = "_in" if direction > 0 else "_out"
    return cid, strand.lower() + suffix


def _leave(d: Diagram, cid: int, slot: str) -> Dart:
    e = getattr(d.by_id[cid], slot)
    return (e, 1) if slot.endswith("_out") else (e, -1)


def _next_dart(d: Diagram, dart: Dart) -> Dart:
    cid, slot = _arrival(d, dart)
    cyc = _CCW[d.by_id[cid].orient]
    return _leave(d, cid, cyc[(cyc.index(slot) + 1) % 4])


def faces(d: Diagram) -> list[tuple[Dart, ...]]:
    darts = [(e, s) for e in d.edges for s in (1, -1)]
    seen: set[Dart] = set()
    out = []
    for start in darts:
        if start in seen:
            continue
        face = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            face.append(dart)
            dart = _next_dart(d, dart)
        out.append(tuple(face))
    return out


def _pieces(d: Diagram) -> list[set[int]]:
    """Connected pieces of the shadow graph, as crossing id sets."""
    adj: dict[int, set[int]] = {c.id: set() for c in d.crossings}
    for e in d.heads:
        u, v = d.tails[e][0], d.heads[e][0]
        adj[u].add(v)
        adj[v].add(u)
    seen: set[int] = set()
    out = []
    for start in adj:
        if start in seen:
            continue
        stack, piece = [start], set()
        while stack:
            x = stack.pop()
            if x in piece:
                continue
            piece.add(x)
            stack.extend(adj[x] - piece)
        seen |= piece
        out.append(piece)
    return out


def validate_planarity(d: Diagram) -> bool:
    """Euler characteristic 2 on every connected piece of the shadow."""
    if not d.crossings:
        return True
    piece_of = {}
    for i, piece in enumerate(_pieces(d)):
        for cid in piece:
            piece_of[cid] = i
    counts = [[0, 0, 0] for _ in set(piece_of.values())]  # V, E, F
    for c in d.crossings:
        counts[piece_of[c.id]][0] += 1
    for e in d.heads:
        counts[piece_of[d.heads[e][0]]][1] += 1
    for face in faces(d):
        counts[piece_of[d.heads[face[0][0]][0]]][2] += 1
    return all(v - e + f == 2 for v, e, f in counts)


def _face_vertices(d: Diagram, face) -> list[int]:
    return [_arrival(d, dart)[0] for dart in face]


def _strand_at(d: Diagram, e: int, cid: int) -> str:
    """Strand of crossing ``cid`` that edge ``e`` enters or leaves by."""
    c = d.by_id[cid]
    for slot in ("a_in", "a_out", "b_in", "b_out"):
        if getattr(c, slot) == e:
            return _STRAND_OF[slot]
    raise StaleMove(f"edge e{e} does not touch crossing {cid}")


def find_moves(d: Diagram) -> list[MoveDescriptor]:
    moves: list[MoveDescriptor] = []
    fs = faces(d)

    for face in fs:
        verts = _face_vertices(d, face)
        if len(face) == 1:
            e = face[0][0]
            moves.append(MoveDescriptor("R1_remove", (d.heads[e][0], e)))
        elif len(face) == 2 and verts[0] != verts[1]:
            (e, _), (f, _) = face
            if e == f:
                continue
            x, y = sorted(verts)
            for top in sorted((e, f)):
                if all(d.by_id[v].over == _strand_at(d, top, v) for v in (x, y)):
                    moves.append(MoveDescriptor("R2_remove", (x, y), (top,)))
        elif len(face) == 3 and len(set(verts)) == 3 and len({e for e, _ in face}) == 3:
            for e, _ in sorted(face):
                ends = (d.tails[e][0], d.heads[e][0])
                if all(d.by_id[v].over == _strand_at(d, e, v) for v in ends):
                    moves.append(MoveDescriptor("R3", tuple(sorted(face)), (e,)))

    for e in d.edges:
        for orient in (1, -1):
            for over in ("A", "B"):
                moves.append(MoveDescriptor("R1_add", ("edge", e), (orient, over)))
    if d.free_loops:
        for orient in (1, -1):
            for over in ("A", "B"):
                moves.append(MoveDescriptor("R1_add", ("loop",), (orient, over)))

    for face in fs:
        for i, de in enumerate(face):
            for df in face[i + 1:]:
                if de[0] == df[0]:
                    continue
                for first, second in ((de, df), (df, de)):
                    # first pushes a finger across second
                    for over in ("finger", "other"):
                        moves.append(MoveDescriptor("R2_add", (first, second), (over,)))
    # two bigon faces between the same crossings describe the same removal
    return list(dict.fromkeys(moves))


# -- application -----------------------------------------------------------


def _set_slot(crossings: dict[int, Crossing], cid: int, slot: str, value: int) -> None:
    crossings[cid] = replace(crossings[cid], **{slot: value})


def _slot_holding(c: Crossing, e: int, kind: str) -> str:
    for slot in (f"a_{kind}", f"b_{kind}"):
        if getattr(c, slot) == e:
            return slot
    raise StaleMove(f"edge e{e} is not an {kind}-slot of crossing {c.id}")


def _passthrough(c: Crossing) -> list[tuple[int, int]]:
    return [(c.a_in, c.a_out), (c.b_in, c.b_out)]


def apply_move(d: Diagram, mv: MoveDescriptor) -> Diagram:
    if mv not in find_moves(d):
        raise StaleMove(f"{mv} does not apply")
    kind = mv.kind
    if kind == "R1_remove":
        cid, _ = mv.site
        return splice(d, {cid: _passthrough(d.by_id[cid])}, keep_order=True)
    if kind == "R2_remove":
        x, y = mv.site
        return splice(
            d, {x: _passthrough(d.by_id[x]), y: _passthrough(d.by_id[y])}, keep_order=True
        )
    if kind == "R1_add":
        return _r1_add(d, mv)
    if kind == "R2_add":
        return _r2_add(d, mv)
    if kind == "R3":
        return _r3(d, mv)
    raise StaleMove(f"unknown move kind {kind!r}")


def _r1_add(d: Diagram, mv: MoveDescriptor) -> Diagram:
    orient, over = mv.params
    edges, cross_ids = next_ids(d)
    x = next(cross_ids)
    loop, new = next(edges), next(edges)
    crossings = dict(d.by_id)
    if mv.site[0] == "loop":
        crossings[x] = Crossing(x, new, loop, loop, new, orient, over)
        return Diagram(tuple(crossings.values()), d.free_loops - 1, None)
    e = mv.site[1]
    head, _ = d.heads[e]
    _set_slot(crossings, head, _slot_holding(crossings[head], e, "in"), new)
    crossings[x] = Crossing(x, e, loop, loop, new, orient, over)
    return Diagram(tuple(crossings.values()), d.free_loops, d.component_order)


def _r2_add(d: Diagram, mv: MoveDescriptor) -> Diagram:
    """Push a finger of one boundary edge of a face across another.

    Local picture: the finger edge ``e`` runs along the bottom of the face,
    the other edge ``f`` along the top.  ``ex``/``fx`` are their horizontal
    directions (+1 rightwards).  The finger goes up through ``f`` at its first
    crossing and back down at its second.
    """
    (e, de), (f, df) = mv.site
    (over_choice,) = mv.params
    ex = 1 if de < 0 else -1  # face on the left of e: e runs rightwards
    fx = 1 if df > 0 else -1  # face on the right of f (f above it): f runs rightwards

    edges, cross_ids = next_ids(d)
    x, y = next(cross_ids), next(cross_ids)
    mid_e, tail_e, mid_f, tail_f = next(edges), next(edges), next(edges), next(edges)
    crossings = dict(d.by_id)

    he, _ = d.heads[e]
    _set_slot(crossings, he, _slot_holding(crossings[he], e, "in"), tail_e)
    hf, _ = d.heads[f]
    _set_slot(crossings, hf, _slot_holding(crossings[hf], f, "in"), tail_f)

    if ex == fx:  # f meets the first finger crossing first
        fx_slots, fy_slots = (f, mid_f), (mid_f, tail_f)
    else:
        fy_slots, fx_slots = (f, mid_f), (mid_f, tail_f)
    over = "A" if over_choice == "finger" else "B"
    crossings[x] = Crossing(x, e, mid_e, *fx_slots, -fx, over)
    crossings[y] = Crossing(y, mid_e, tail_e, *fy_slots, fx, over)
    return Diagram(tuple(crossings.values()), d.free_loops, d.component_order)


def _r3(d: Diagram, mv: MoveDescriptor) -> Diagram:
    """Slide the top strand across the opposite crossing of a triangular face.

    Along each side of the triangle the two crossings swap places; every
    crossing keeps its strands, orientation and over/under data.
    """
    old = dict(d.by_id)
    crossings = dict(old)
    for e, _ in mv.site:
        p, sp = d.tails[e]
        q, sq = d.heads[e]
        p_in = old[p].slots(sp)[0]
        q_out = old[q].slots(sq)[1]
        lp, lq = sp.lower(), sq.lower()
        _set_slot(crossings, p, f"{lp}_in", e)
        _set_slot(crossings, p, f"{lp}_out", q_out)
        _set_slot(crossings, q, f"{lq}_in", p_in)
        _set_slot(crossings, q, f"{lq}_out", e)
    return Diagram(tuple(crossings.values()), d.free_loops, d.component_order)


_GROWING = {"R1_add", "R2_add"}


def random_equivalent(
    d: Diagram,
    steps: int,
    seed: int,
    max_crossings: Optional[int] = None,
    kinds: Optional[tuple[str, ...]] = None,
) -> tuple[Diagram, list[MoveDescriptor]]:
    """Seeded random walk through Reidemeister moves.

    A move kind is drawn uniformly from the kinds available, then a site of
    that kind.  Once the walk reaches ``max_crossings`` (default: start + 4)
    moves that add crossings are dropped from the menu.
    """
    rng = random.Random(seed)
    cap = len(d.crossings) + 4 if max_crossings is None else max_crossings
    log: list[MoveDescriptor] = []
    cur = d
    for _ in range(steps):
        by_kind: dict[str, list[MoveDescriptor]] = {}
        for mv in find_moves(cur):
            if kinds is not None and mv.kind not in kinds:
                continue
            if mv.kind == "R2_add" and len(cur.crossings) + 2 > cap:
                continue
            if mv.kind == "R1_add" and len(cur.crossings) + 1 > cap:
                continue
            by_kind.setdefault(mv.kind, []).append(mv)
        if not by_kind:
            break
        kind = rng.choice(sorted(by_kind))
        mv = rng.choice(by_kind[kind])
        cur = apply_move(cur, mv)
        log.append(mv)
    return cur, log
