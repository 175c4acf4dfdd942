"""Periodic codes on infinite grids: membership, validity, density, pattern files.

A periodic code is given by a rectangular fundamental domain px x py and a
set of codeword offsets inside it; the code is the union of all periodic
translates of the offsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .grid import GridKind, Vertex, ball, ball_set


@dataclass(frozen=True)
class PeriodicCode:
    kind: GridKind
    px: int
    py: int
    offsets: frozenset[Vertex]

    def __post_init__(self):
        if self.px < 1 or self.py < 1:
            raise ValueError("period must be positive")
        if self.kind is GridKind.HEX and (self.px % 2 or self.py % 2):
            raise ValueError("hex periods must be even in both directions")
        if not self.offsets:
            raise ValueError("code must contain at least one codeword")
        for i, j in self.offsets:
            if not (0 <= i < self.px and 0 <= j < self.py):
                raise ValueError(f"offset ({i}, {j}) outside fundamental domain")

    def __contains__(self, v: Vertex) -> bool:
        return (v[0] % self.px, v[1] % self.py) in self.offsets

    def domain(self) -> list[Vertex]:
        """Fundamental-domain vertices in sorted order."""
        return [(i, j) for i in range(self.px) for j in range(self.py)]

    def translate(self, t: Vertex) -> "PeriodicCode":
        """The code shifted by t (offsets shift cyclically)."""
        shifted = frozenset(
            ((i + t[0]) % self.px, (j + t[1]) % self.py) for i, j in self.offsets
        )
        return PeriodicCode(self.kind, self.px, self.py, shifted)


def make_code(kind: GridKind, px: int, py: int, offsets: Iterable[Vertex]) -> PeriodicCode:
    return PeriodicCode(kind, px, py, frozenset(tuple(v) for v in offsets))


@dataclass(frozen=True)
class Window:
    """The square window of vertices [-m, m] x [-m, m]."""

    kind: GridKind
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("window half-width must be positive")

    def vertices(self) -> list[Vertex]:
        rng = range(-self.m, self.m + 1)
        return [(i, j) for i in rng for j in rng]

    def __contains__(self, v: Vertex) -> bool:
        return abs(v[0]) <= self.m and abs(v[1]) <= self.m

    def size(self) -> int:
        return (2 * self.m + 1) ** 2


@dataclass(frozen=True)
class Violation:
    kind: str  # "empty" or "indistinct"
    vertices: tuple[Vertex, ...]


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    violation: Optional[Violation] = None


def identifying_set(code: PeriodicCode, v: Vertex, r: int) -> frozenset[Vertex]:
    """Codewords at distance at most r from v (as absolute vertices)."""
    return frozenset(u for u in ball_set(code.kind, v, r) if u in code)


def is_identifying_code(code: PeriodicCode, r: int) -> ValidityReport:
    """Check the two code conditions exactly.

    Every vertex needs a nonempty identifying set, and distinct vertices need
    distinct identifying sets.  By periodicity it suffices to scan one
    fundamental domain; for the distinctness condition, pairs at distance
    more than 2r have disjoint balls, so once all identifying sets are
    nonempty only pairs within distance 2r can collide.  The first violation
    in lexicographic scan order is reported.
    """
    if r < 1:
        raise ValueError("r must be positive")
    cache: dict[Vertex, frozenset[Vertex]] = {}

    def idset(v: Vertex) -> frozenset[Vertex]:
        got = cache.get(v)
        if got is None:
            got = identifying_set(code, v, r)
            cache[v] = got
        return got

    dom = code.domain()
    for v in dom:
        if not idset(v):
            return ValidityReport(False, Violation("empty", (v,)))
    for v in dom:
        iv = idset(v)
        for u in ball(code.kind, v, 2 * r).members:
            if u == v:
                continue
            if idset(u) == iv:
                return ValidityReport(False, Violation("indistinct", (v, u)))
    return ValidityReport(True, None)


def density(code: PeriodicCode) -> Fraction:
    """Exact codeword density |offsets| / (px * py)."""
    return Fraction(len(code.offsets), code.px * code.py)


def window_census(code: PeriodicCode, m: int) -> tuple[int, int]:
    """(number of codewords in the window [-m, m]^2, window size)."""
    if m < 1:
        raise ValueError("m must be positive")
    count = 0
    for i in range(-m, m + 1):
        ii = i % code.px
        for j in range(-m, m + 1):
            if (ii, j % code.py) in code.offsets:
                count += 1
    return count, (2 * m + 1) ** 2


class PatternError(ValueError):
    """Pattern file parse failure, carrying 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


def parse_pattern(text: str) -> tuple[PeriodicCode, int]:
    """Parse the plain-text pattern format.

    Line 1: ``grid square`` or ``grid hex``; line 2: ``r <int>``; line 3:
    ``period <px> <py>``; then py rows of ``#``/``.`` characters, the row for
    j = py - 1 first.
    """
    lines = text.splitlines()

    def need(idx: int) -> str:
        if idx >= len(lines):
            raise PatternError(idx + 1, 1, "unexpected end of file")
        return lines[idx]

    head = need(0).split()
    if len(head) != 2 or head[0] != "grid" or head[1] not in ("square", "hex"):
        raise PatternError(1, 1, "expected 'grid square' or 'grid hex'")
    kind = GridKind.SQUARE if head[1] == "square" else GridKind.HEX

    rline = need(1).split()
    if len(rline) != 2 or rline[0] != "r" or not rline[1].isdigit() or int(rline[1]) < 1:
        raise PatternError(2, 1, "expected 'r <positive integer>'")
    r = int(rline[1])

    pline = need(2).split()
    if (
        len(pline) != 3
        or pline[0] != "period"
        or not pline[1].isdigit()
        or not pline[2].isdigit()
        or int(pline[1]) < 1
        or int(pline[2]) < 1
    ):
        raise PatternError(3, 1, "expected 'period <px> <py>'")
    px, py = int(pline[1]), int(pline[2])
    if kind is GridKind.HEX and (px % 2 or py % 2):
        raise PatternError(3, 1, "hex periods must be even in both directions")

    offsets = set()
    for rowidx in range(py):
        lineno = 4 + rowidx
        row = need(lineno - 1)
        j = py - 1 - rowidx
        if len(row) != px:
            raise PatternError(lineno, len(row) + 1, f"expected row of width {px}")
        for x, ch in enumerate(row):
            if ch == "#":
                offsets.add((x, j))
            elif ch != ".":
                raise PatternError(lineno, x + 1, "expected '#' or '.'")
    if len(lines) > 3 + py and any(s.strip() for s in lines[3 + py :]):
        raise PatternError(4 + py, 1, "trailing content after pattern rows")
    if not offsets:
        raise PatternError(4, 1, "pattern has no codewords")
    return PeriodicCode(kind, px, py, frozenset(offsets)), r


def format_pattern(code: PeriodicCode, r: int) -> str:
    """Serialize a code in the pattern file format (inverse of parse_pattern)."""
    rows = []
    for j in range(code.py - 1, -1, -1):
        rows.append(
            "".join("#" if (i, j) in code.offsets else "." for i in range(code.px))
        )
    head = [f"grid {code.kind.value}", f"r {r}", f"period {code.px} {code.py}"]
    return "\n".join(head + rows) + "\n"
