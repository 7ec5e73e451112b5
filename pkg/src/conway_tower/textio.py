"""Line-oriented text formats for diagrams and contour sets.

Diagram documents::

    diagram hopf_pos
    crossing 1 A=4:1 B=2:3 orient=+ over=A
    crossing 2 A=1:2 B=3:4 orient=+ over=B
    order 1,3
    end

Contour documents::

    contour left
    point 0 0
    point 1/3 2
    ...
    end
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .diagram import Crossing, Diagram, validate
from .geometry import Contour, ContourSet

__all__ = [
    "ParseError",
    "DiagramDocument",
    "ContourDocument",
    "parse_diagram",
    "parse_diagrams",
    "serialize_diagram",
    "parse_contours",
    "serialize_contours",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(message if line is None else f"{message} at line {line}")


@dataclass(frozen=True)
class DiagramDocument:
    name: str
    diagram: Diagram


@dataclass(frozen=True)
class ContourDocument:
    name: str
    contours: ContourSet


def _lines(text: str):
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield num, line


_CROSSING = re.compile(
    r"^crossing\s+(\d+)\s+A=(\d+):(\d+)\s+B=(\d+):(\d+)\s+orient=([+-])(?:\s+over=([AB]))?$"
)


def parse_diagrams(text: str) -> list[DiagramDocument]:
    docs = []
    current = None
    for num, line in _lines(text):
        head, _, rest = line.partition(" ")
        if current is None:
            if head != "diagram" or not rest.strip():
                raise ParseError(f"expected 'diagram <name>', got {line!r}", num)
            current = {"name": rest.strip(), "start": num, "loops": None, "crossings": [],
                       "order": None, "lines": {}}
            continue
        if head == "end":
            docs.append(_finish_diagram(current))
            current = None
        elif head == "loops":
            if current["loops"] is not None:
                raise ParseError("duplicate 'loops' line", num)
            if not rest.strip().isdigit():
                raise ParseError(f"bad loop count {rest.strip()!r}", num)
            current["loops"] = int(rest)
        elif head == "crossing":
            m = _CROSSING.match(line)
            if m is None:
                raise ParseError(f"malformed crossing record {line!r}", num)
            cid, ai, ao, bi, bo = (int(g) for g in m.groups()[:5])
            orient = 1 if m.group(6) == "+" else -1
            c = Crossing(cid, ai, ao, bi, bo, orient, m.group(7))
            current["crossings"].append(c)
            for e in c.edges:
                current["lines"].setdefault(e, num)
        elif head == "order":
            if current["order"] is not None:
                raise ParseError("duplicate 'order' line", num)
            try:
                current["order"] = tuple(int(tok) for tok in rest.replace(" ", "").split(","))
            except ValueError:
                raise ParseError(f"bad component order {rest.strip()!r}", num) from None
        else:
            raise ParseError(f"unknown keyword {head!r}", num)
    if current is not None:
        raise ParseError(f"diagram {current['name']!r} is missing 'end'", current["start"])
    return docs


def _finish_diagram(block: dict) -> DiagramDocument:
    d = Diagram(tuple(block["crossings"]), block["loops"] or 0, block["order"])
    problems = validate(d)
    if problems:
        first = problems[0]
        m = re.search(r"e(\d+)", first)
        line = block["lines"].get(int(m.group(1))) if m else None
        raise ParseError(f"diagram {block['name']!r}: {first}", line or block["start"])
    return DiagramDocument(block["name"], d)


def parse_diagram(text: str) -> Diagram:
    docs = parse_diagrams(text)
    if len(docs) != 1:
        raise ParseError(f"expected exactly one diagram, found {len(docs)}")
    return docs[0].diagram


def serialize_diagram(d: Diagram, name: str = "K") -> str:
    out = [f"diagram {name}"]
    if d.free_loops:
        out.append(f"loops {d.free_loops}")
    for c in d.crossings:
        rec = (
            f"crossing {c.id} A={c.a_in}:{c.a_out} B={c.b_in}:{c.b_out} "
            f"orient={'+' if c.orient > 0 else '-'}"
        )
        if c.over is not None:
            rec += f" over={c.over}"
        out.append(rec)
    if d.component_order:
        out.append("order " + ",".join(str(e) for e in d.component_order))
    out.append("end")
    return "\n".join(out) + "\n"


# -- contours ----------------------------------------------------------------


def _rational(tok: str, num: int) -> Fraction:
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", tok):
        raise ParseError(f"bad coordinate {tok!r} (integers or p/q only)", num)
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {tok!r}", num) from None


def parse_contour_documents(text: str) -> list[tuple[str, list[tuple[Fraction, Fraction]]]]:
    blocks = []
    current = None
    for num, line in _lines(text):
        toks = line.split()
        if current is None:
            if toks[0] != "contour":
                raise ParseError(f"expected 'contour <name>', got {line!r}", num)
            current = (" ".join(toks[1:]) or f"c{len(blocks) + 1}", [], num)
            continue
        if toks[0] == "end":
            name, pts, start = current
            if len(pts) < 3:
                raise ParseError(f"contour {name!r} has {len(pts)} points, needs at least 3", start)
            blocks.append((name, pts))
            current = None
        elif toks[0] == "point":
            if len(toks) != 3:
                raise ParseError(f"expected 'point <x> <y>', got {line!r}", num)
            current[1].append((_rational(toks[1], num), _rational(toks[2], num)))
        else:
            raise ParseError(f"unknown keyword {toks[0]!r}", num)
    if current is not None:
        raise ParseError(f"contour {current[0]!r} is missing 'end'", current[2])
    return blocks


def parse_contours(text: str) -> ContourSet:
    blocks = parse_contour_documents(text)
    try:
        return ContourSet(tuple(Contour(tuple(pts)) for _, pts in blocks))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def serialize_contours(s: ContourSet, names: Optional[list[str]] = None) -> str:
    out = []
    for i, contour in enumerate(s.contours):
        out.append(f"contour {names[i] if names else f'c{i + 1}'}")
        for x, y in contour.vertices:
            out.append(f"point {x} {y}")
        out.append("end")
    return "\n".join(out) + "\n"
