"""Exact geometry of the infinite square and hexagonal grids.

The hexagonal grid uses the "brick wall" drawing on the integer lattice:
every vertex (i, j) has its two horizontal neighbors (i-1, j) and (i+1, j),
plus one vertical neighbor whose direction alternates with the parity of
i + j (down when i + j is even, up when it is odd).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

Vertex = tuple[int, int]


class GridKind(Enum):
    SQUARE = "square"
    HEX = "hex"


def neighbors(kind: GridKind, v: Vertex) -> tuple[Vertex, ...]:
    """All vertices adjacent to v, in sorted order (4 for square, 3 for hex)."""
    i, j = v
    if kind is GridKind.SQUARE:
        out = [(i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)]
    else:
        dj = 1 if (i + j) % 2 else -1
        out = [(i - 1, j), (i + 1, j), (i, j + dj)]
    return tuple(sorted(out))


def distance(kind: GridKind, u: Vertex, v: Vertex) -> int:
    """Graph distance between u and v.

    The square grid has the Manhattan closed form.  The hex brick-wall
    metric is parity sensitive, so it is computed by breadth-first search.
    """
    if kind is GridKind.SQUARE:
        return abs(u[0] - v[0]) + abs(u[1] - v[1])
    if u == v:
        return 0
    # A horizontal unit costs 1 step and a vertical unit at most 3, so this
    # limit always suffices.
    limit = abs(u[0] - v[0]) + 3 * abs(u[1] - v[1]) + 3
    seen = {u}
    frontier = [u]
    for d in range(1, limit + 1):
        nxt = []
        for w in frontier:
            for x in neighbors(kind, w):
                if x == v:
                    return d
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    raise AssertionError("hex BFS limit exceeded")


@dataclass(frozen=True)
class Ball:
    """The set of vertices at distance at most `radius` from `center`."""

    center: Vertex
    radius: int
    members: tuple[Vertex, ...]

    def __contains__(self, v: Vertex) -> bool:
        return v in self.members


@lru_cache(maxsize=None)
def _ball_offsets(kind: GridKind, parity: int, r: int) -> tuple[Vertex, ...]:
    # Offsets relative to a base center of the requested parity.  Hex ball
    # shapes depend on the center's parity; square shapes do not.
    base = (0, 0) if parity == 0 else (1, 0)
    seen = {base}
    frontier = [base]
    for _ in range(r):
        nxt = []
        for w in frontier:
            for x in neighbors(kind, w):
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return tuple(sorted((i - base[0], j - base[1]) for i, j in seen))


def _parity(kind: GridKind, v: Vertex) -> int:
    return 0 if kind is GridKind.SQUARE else (v[0] + v[1]) % 2


def ball(kind: GridKind, v: Vertex, r: int) -> Ball:
    """The radius-r ball around v, members in sorted order."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    offs = _ball_offsets(kind, _parity(kind, v), r)
    # Translation preserves lexicographic order, so members stay sorted.
    members = tuple((v[0] + di, v[1] + dj) for di, dj in offs)
    return Ball(v, r, members)


def ball_set(kind: GridKind, v: Vertex, r: int) -> frozenset[Vertex]:
    """Fast-path ball membership set."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    offs = _ball_offsets(kind, _parity(kind, v), r)
    return frozenset((v[0] + di, v[1] + dj) for di, dj in offs)


def ball_size(kind: GridKind, r: int) -> int:
    """|ball(kind, v, r)|, independent of the center v."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    if kind is GridKind.SQUARE:
        return 2 * r * r + 2 * r + 1
    # Center independent: the two hex parity classes are exchanged by the
    # glide automorphism (i, j) -> (i + 1, -j).
    return len(_ball_offsets(GridKind.HEX, 0, r))


def origin_symmetries(kind: GridKind) -> tuple:
    """Grid automorphisms fixing the origin, as coordinate maps.

    Square: the dihedral group of order 8.  Hex: only the identity and the
    horizontal mirror are lattice maps in brick-wall coordinates.
    """
    if kind is GridKind.SQUARE:
        return (
            lambda i, j: (i, j),
            lambda i, j: (-i, j),
            lambda i, j: (i, -j),
            lambda i, j: (-i, -j),
            lambda i, j: (j, i),
            lambda i, j: (-j, i),
            lambda i, j: (j, -i),
            lambda i, j: (-j, -i),
        )
    return (
        lambda i, j: (i, j),
        lambda i, j: (-i, j),
    )
