"""Descending (trivial) diagrams built from a shadow and a marking.

Components are stacked in marking order, the later one on top.  Within a
component, walking from the marked edge, each passage lies above every
passage met before it.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .diagram import Diagram, DiagramError, change_crossings

__all__ = [
    "Marking",
    "MarkingError",
    "default_marking",
    "all_markings",
    "descending_diagram",
    "is_descending",
    "diff_set",
]


class MarkingError(DiagramError):
    pass


@dataclass(frozen=True)
class Marking:
    """Base edges listed in component order, one per component with crossings."""

    base_edges: tuple[int, ...]

    @property
    def component_order(self) -> tuple[int, ...]:
        return tuple(range(len(self.base_edges)))


def default_marking(d: Diagram) -> Marking:
    comp = d.component_of
    if d.component_order is not None:
        cycles = [d.cycles[comp[e]] for e in d.component_order]
    else:
        cycles = list(d.cycles)  # already sorted by least edge
    return Marking(tuple(min(cyc) for cyc in cycles))


def all_markings(d: Diagram, keep_order: bool = False):
    """Every marking of the shadow: component orders times base edges."""
    import itertools

    cycles = list(d.cycles)
    if keep_order and d.component_order is not None:
        orders = [[cycles[d.component_of[e]] for e in d.component_order]]
    else:
        orders = itertools.permutations(cycles)
    for perm in orders:
        for bases in itertools.product(*perm):
            yield Marking(tuple(bases))


def _check_marking(d: Diagram, m: Marking) -> None:
    comp = d.component_of
    try:
        hit = [comp[e] for e in m.base_edges]
    except KeyError as exc:
        raise MarkingError(f"marking names unknown edge e{exc.args[0]}") from None
    if sorted(hit) != list(range(len(d.cycles))):
        raise MarkingError(
            f"marking {m.base_edges} does not pick exactly one edge per component"
        )


def descending_diagram(shadow: Diagram, m: Marking) -> Diagram:
    _check_marking(shadow, m)
    comp = shadow.component_of
    rank = {comp[e]: i for i, e in enumerate(m.base_edges)}

    # passage time along each component, counted from the marked edge
    when: dict[tuple[int, str], int] = {}
    for base in m.base_edges:
        e, t = base, 0
        while True:
            when[shadow.heads[e]] = t
            t += 1
            e = shadow.successor(e)
            if e == base:
                break

    crossings = []
    for c in shadow.crossings:
        ra, rb = rank[comp[c.a_in]], rank[comp[c.b_in]]
        if ra != rb:
            over = "A" if ra > rb else "B"
        else:
            over = "A" if when[(c.id, "A")] > when[(c.id, "B")] else "B"
        crossings.append(replace(c, over=over))
    return shadow.with_crossings(crossings)


def is_descending(d: Diagram, m: Marking) -> bool:
    return diff_set(d, m) == []


def diff_set(k: Diagram, m: Marking) -> list[int]:
    """Crossings at which ``k`` differs from its descending diagram, ascending."""
    base = descending_diagram(k, m)
    return [c.id for c, b in zip(k.crossings, base.crossings) if c.over != b.over]


def undo_diff(k: Diagram, m: Marking) -> Diagram:
    return change_crossings(descending_diagram(k, m), diff_set(k, m))
