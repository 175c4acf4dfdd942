"""Pair and witness analysis for codes.

A vertex v witnesses a pair {c, c'} when its identifying set is exactly
{c, c'}.  For a codeword c, p(c) counts the witnesses of pairs containing c.
The auxiliary graph joins two codewords precisely when some vertex witnesses
them as a pair; in a valid code each pair has at most one witness, so the
degree of c equals p(c).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .code import PeriodicCode, Window, identifying_set
from .grid import GridKind, Vertex, ball_set, neighbors


@dataclass
class PairReport:
    """Witnesses found in a window, and per-codeword pair counts."""

    witnesses: dict[Vertex, tuple[Vertex, Vertex]]
    p: dict[Vertex, int]


def pair_report(code: PeriodicCode, r: int, window: Window) -> PairReport:
    """Scan the window for witnesses and tally p per codeword.

    Identifying sets are exact (computed on the infinite grid); the window
    only scopes which witnesses are recorded.  p(c) is exact for interior
    codewords, whose witnesses all lie inside the window.
    """
    if window.kind is not code.kind:
        raise ValueError("window grid kind does not match the code")
    witnesses: dict[Vertex, tuple[Vertex, Vertex]] = {}
    p: dict[Vertex, int] = {}
    for v in window.vertices():
        ids = identifying_set(code, v, r)
        if len(ids) == 2:
            c1, c2 = sorted(ids)
            witnesses[v] = (c1, c2)
            p[c1] = p.get(c1, 0) + 1
            p[c2] = p.get(c2, 0) + 1
    return PairReport(witnesses, p)


def interior_codewords(code: PeriodicCode, r: int, window: Window) -> list[Vertex]:
    """Codewords whose ball of radius 2r lies inside the window.

    For these, all witnesses of their pairs are inside the window, so the
    reported p value is exact.
    """
    out = []
    for v in window.vertices():
        if v in code and all(u in window for u in ball_set(code.kind, v, 2 * r)):
            out.append(v)
    return out


@dataclass(frozen=True)
class AuxGraph:
    """Codewords in a region, joined when they form a pair."""

    vertices: tuple[Vertex, ...]
    edges: frozenset[tuple[Vertex, Vertex]]

    def degree(self, v: Vertex) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> dict[Vertex, int]:
        deg = {v: 0 for v in self.vertices}
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def neighbors_of(self, v: Vertex) -> list[Vertex]:
        out = [b if a == v else a for a, b in self.edges if v in (a, b)]
        return sorted(out)


def aux_graph(code: PeriodicCode, r: int, window: Window) -> AuxGraph:
    """Auxiliary graph induced on the codewords inside the window.

    An edge {c, c'} requires some witness of the pair; any such witness is
    within distance r of both codewords, so scanning the window padded by r
    finds every edge with both ends inside the window.
    """
    if window.kind is not code.kind:
        raise ValueError("window grid kind does not match the code")
    verts = tuple(v for v in window.vertices() if v in code)
    vset = set(verts)
    edges = set()
    pad = range(-window.m - r, window.m + r + 1)
    for i in pad:
        for j in pad:
            ids = identifying_set(code, (i, j), r)
            if len(ids) == 2:
                c1, c2 = sorted(ids)
                if c1 in vset and c2 in vset:
                    edges.add((c1, c2))
    return AuxGraph(verts, frozenset(edges))


@dataclass(frozen=True)
class CodewordClass:
    adjacent_to_codeword: bool
    type1: bool
    type2: bool
    type3: bool

    def tags(self) -> frozenset[str]:
        out = set()
        if self.adjacent_to_codeword:
            out.add("AdjacentToCodeword")
        if self.type1:
            out.add("Type1")
        if self.type2:
            out.add("Type2")
        if self.type3:
            out.add("Type3")
        return frozenset(out)


# Defining cell pairs for the square-grid codeword types, relative to the
# codeword, under the four rotations.  Reflections map each family to itself.
TYPE1_PATTERNS: tuple[tuple[Vertex, ...], ...] = (
    ((0, 1), (0, -1)),
    ((-1, 0), (1, 0)),
)
TYPE2_PATTERNS: tuple[tuple[Vertex, ...], ...] = (
    ((-1, 2), (2, -1)),
    ((-2, -1), (1, 2)),
    ((-2, 1), (1, -2)),
    ((-1, -2), (2, 1)),
)
TYPE3_PATTERNS: tuple[tuple[Vertex, ...], ...] = (
    ((-2, 1), (2, 1)),
    ((-1, -2), (-1, 2)),
    ((-2, -1), (2, -1)),
    ((1, -2), (1, 2)),
)


def classify_codeword(code: PeriodicCode, c: Vertex) -> CodewordClass:
    """Structural tags of a codeword (types are square-grid notions)."""
    if c not in code:
        raise ValueError(f"{c} is not a codeword")
    adjacent = any(u in code for u in neighbors(code.kind, c))
    type1 = type2 = type3 = False
    if code.kind is GridKind.SQUARE:

        def has(patterns):
            return any(
                all((c[0] + di, c[1] + dj) in code for di, dj in pat)
                for pat in patterns
            )

        type1 = has(TYPE1_PATTERNS)
        type2 = has(TYPE2_PATTERNS)
        type3 = has(TYPE3_PATTERNS)
    return CodewordClass(adjacent, type1, type2, type3)


def covered_by_union(kind: GridKind, r: int, v: Vertex, S: Iterable[Vertex]) -> bool:
    """True iff ball(v, r) is contained in the union of ball(s, r), s in S."""
    union: set[Vertex] = set()
    for s in S:
        union |= ball_set(kind, s, r)
    return ball_set(kind, v, r) <= union


# The eight "right angle" witness patterns around a square-grid codeword,
# in canonical order.
RIGHT_ANGLES: tuple[tuple[Vertex, Vertex, Vertex], ...] = (
    ((1, 0), (2, 0), (1, 1)),
    ((1, 0), (2, 0), (1, -1)),
    ((0, 1), (0, 2), (1, 1)),
    ((0, 1), (0, 2), (-1, 1)),
    ((-1, 0), (-2, 0), (-1, 1)),
    ((-1, 0), (-2, 0), (-1, -1)),
    ((0, -1), (0, -2), (1, -1)),
    ((0, -1), (0, -2), (-1, -1)),
)


def right_angle_of_witnesses(
    report: PairReport, c: Vertex
) -> Optional[tuple[Vertex, Vertex, Vertex]]:
    """First canonical right-angle set whose members all witness pairs with c.

    Returns the three vertices translated to c, or None.
    """

    def witnesses_pair_with_c(v: Vertex) -> bool:
        pair = report.witnesses.get(v)
        return pair is not None and c in pair

    for pattern in RIGHT_ANGLES:
        translated = tuple((c[0] + di, c[1] + dj) for di, dj in pattern)
        if all(witnesses_pair_with_c(v) for v in translated):
            return translated  # type: ignore[return-value]
    return None


def report_lines(report: PairReport) -> list[str]:
    """Stable line-oriented serialization of a pair report."""
    out = []
    for v in sorted(report.witnesses):
        (a, b) = report.witnesses[v]
        out.append(f"witness {v[0]} {v[1]} pair {a[0]} {a[1]} {b[0]} {b[1]}")
    for c in sorted(report.p):
        out.append(f"p {c[0]} {c[1]} {report.p[c]}")
    return out
