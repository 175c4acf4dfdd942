"""Minimum identifying codes on n x n toroidal grids.

The torus is the quotient of the grid modulo n in both coordinates (n even
for hex, so the brick-wall parity survives the wrap).  Codes here are finite
sets, checked with full pairwise comparison of identifying sets, so no
window-locality argument is needed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .code import PeriodicCode
from .grid import GridKind, Vertex, ball_size, neighbors
from .pairs import AuxGraph


@dataclass(frozen=True)
class TorusInstance:
    kind: GridKind
    n: int
    r: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("torus side must be at least 2")
        if self.r < 1:
            raise ValueError("r must be positive")
        if self.kind is GridKind.HEX and self.n % 2:
            raise ValueError("hex torus side must be even")


class TorusGraph:
    """Compiled torus geometry: vertex indexing and radius-r ball masks."""

    def __init__(self, inst: TorusInstance):
        self.inst = inst
        n = inst.n
        self.n = n
        self.verts: list[Vertex] = [(i, j) for i in range(n) for j in range(n)]
        self.index = {v: i for i, v in enumerate(self.verts)}
        self.size = n * n
        self.ball_lists: list[tuple[int, ...]] = []
        for v in self.verts:
            seen = {v}
            frontier = [v]
            for _ in range(inst.r):
                nxt = []
                for w in frontier:
                    for a, b in neighbors(inst.kind, w):
                        x = (a % n, b % n)
                        if x not in seen:
                            seen.add(x)
                            nxt.append(x)
                frontier = nxt
            self.ball_lists.append(tuple(sorted(self.index[u] for u in seen)))
        self.ball_masks = [
            sum(1 << i for i in cells) for cells in self.ball_lists
        ]

    def twins(self) -> Optional[tuple[Vertex, Vertex]]:
        """Two distinct vertices with identical balls, if any exist.

        Twins can never be distinguished, so no identifying code exists.
        Without twins the full vertex set is itself a valid code.
        """
        seen: dict[int, int] = {}
        for i, mask in enumerate(self.ball_masks):
            if mask in seen:
                return self.verts[seen[mask]], self.verts[i]
            seen[mask] = i
        return None

    def valid_mask(self, mask: int) -> bool:
        if mask == 0:
            return False
        seen = set()
        for bm in self.ball_masks:
            ids = mask & bm
            if ids == 0 or ids in seen:
                return False
            seen.add(ids)
        return True

    def code_from_mask(self, mask: int) -> frozenset[Vertex]:
        return frozenset(v for i, v in enumerate(self.verts) if mask >> i & 1)

    def mask_from_code(self, codeset) -> int:
        return sum(1 << self.index[(v[0] % self.n, v[1] % self.n)] for v in codeset)


def is_valid_torus_code(inst: TorusInstance, codeset) -> bool:
    g = TorusGraph(inst)
    return g.valid_mask(g.mask_from_code(codeset))


@dataclass(frozen=True)
class ExactResult:
    status: str  # "optimal", "no_code" or "inconclusive"
    size: Optional[int]
    code: Optional[frozenset[Vertex]]
    nodes: int


def _density_floor(inst: TorusInstance) -> int:
    """Counting lower bound on code size, valid when every radius-2r window
    of the torus is grid isomorphic (n >= 4r + 1)."""
    if inst.r != 2 or inst.n < 4 * inst.r + 1:
        return 1
    k = 8 if inst.kind is GridKind.SQUARE else 6
    b = ball_size(inst.kind, inst.r)
    num = 6 * inst.n * inst.n
    den = 2 * b + 4 + k
    return -(-num // den)


DEFAULT_NODE_BUDGET = 2_000_000


def min_code_exact(inst: TorusInstance, budget: int = DEFAULT_NODE_BUDGET) -> ExactResult:
    """Exact minimum identifying code size by branch and bound.

    Cells are decided in index order with the origin fixed as a codeword
    (every code has an automorphic image containing the origin).  Pruning:
    forced inclusions from coverage and distinctness, an uncovered-vertices
    bound, and the density floor on instances where it applies.  The default
    budget completes sides up to 6; larger instances come back inconclusive
    with the incumbent as an upper bound, or use the heuristic instead.
    """
    g = TorusGraph(inst)
    if g.twins() is not None:
        return ExactResult("no_code", None, None, 0)
    N = g.size
    floor = _density_floor(inst)
    b_r = max(len(cells) for cells in g.ball_lists)

    # Pairwise distinctness constraints as symmetric-difference cell lists.
    diffs = []
    for a in range(N):
        for b in range(a + 1, N):
            d = g.ball_masks[a] ^ g.ball_masks[b]
            cells = tuple(i for i in range(N) if d >> i & 1)
            diffs.append(cells)
    cell_diffs: list[list[int]] = [[] for _ in range(N)]
    for di, cells in enumerate(diffs):
        for i in cells:
            cell_diffs[i].append(di)

    state = [-1] * N
    ball_ones = [0] * N
    ball_undec = [len(cells) for cells in g.ball_lists]
    diff_ones = [0] * len(diffs)
    diff_undec = [len(cells) for cells in diffs]
    cell_balls: list[list[int]] = [[] for _ in range(N)]
    for v, cells in enumerate(g.ball_lists):
        for i in cells:
            cell_balls[i].append(v)

    best_mask = (1 << N) - 1  # the full set is valid (no twins)
    best_size = N
    nodes = 0
    exceeded = False
    trail: list[int] = []
    inc = 0  # included cells, maintained incrementally
    uncovered = N  # vertices with no codeword in their ball yet

    def assign(pending) -> bool:
        nonlocal inc, uncovered
        while pending:
            i, val = pending.pop()
            cur = state[i]
            if cur != -1:
                if cur != val:
                    return False
                continue
            state[i] = val
            trail.append(i)
            # Update every counter before checking conflicts: an early return
            # must leave the counters in the state undo expects.
            if val:
                inc += 1
            for v in cell_balls[i]:
                ball_undec[v] -= 1
                if val:
                    if ball_ones[v] == 0:
                        uncovered -= 1
                    ball_ones[v] += 1
            for d in cell_diffs[i]:
                diff_undec[d] -= 1
                if val:
                    diff_ones[d] += 1
            if not val:
                for v in cell_balls[i]:
                    if ball_ones[v] == 0:
                        if ball_undec[v] == 0:
                            return False
                        if ball_undec[v] == 1:
                            for j in g.ball_lists[v]:
                                if state[j] == -1:
                                    pending.append((j, 1))
                for d in cell_diffs[i]:
                    if diff_ones[d] == 0:
                        if diff_undec[d] == 0:
                            return False
                        if diff_undec[d] == 1:
                            for j in diffs[d]:
                                if state[j] == -1:
                                    pending.append((j, 1))
        return True

    def undo(mark):
        nonlocal inc, uncovered
        while len(trail) > mark:
            i = trail.pop()
            val = state[i]
            state[i] = -1
            if val:
                inc -= 1
            for v in cell_balls[i]:
                ball_undec[v] += 1
                if val:
                    ball_ones[v] -= 1
                    if ball_ones[v] == 0:
                        uncovered += 1
            for d in cell_diffs[i]:
                diff_undec[d] += 1
                if val:
                    diff_ones[d] -= 1

    def dfs(next_cell: int) -> None:
        nonlocal best_mask, best_size, nodes, exceeded
        if exceeded:
            return
        bound = inc + -(-uncovered // b_r)
        if bound >= best_size or best_size <= floor:
            return
        i = next_cell
        while i < N and state[i] != -1:
            i += 1
        if i >= N:
            mask = sum(1 << j for j in range(N) if state[j] == 1)
            if g.valid_mask(mask) and inc < best_size:
                best_size = inc
                best_mask = mask
            return
        nodes += 1
        if nodes > budget:
            exceeded = True
            return
        for val in (0, 1):
            mark = len(trail)
            if assign([(i, val)]):
                dfs(i + 1)
            undo(mark)
            if exceeded:
                return

    if not assign([(0, 1)]):
        return ExactResult("no_code", None, None, 0)
    dfs(1)
    if exceeded:
        return ExactResult("inconclusive", best_size, g.code_from_mask(best_mask), nodes)
    return ExactResult("optimal", best_size, g.code_from_mask(best_mask), nodes)


def heuristic_upper(
    inst: TorusInstance, seed: int = 0, iterations: int = 20
) -> tuple[int, frozenset[Vertex]]:
    """Randomized remove-and-repair local search; deterministic per seed.

    Returns a valid code, so the size is an upper bound on the minimum.
    """
    g = TorusGraph(inst)
    if g.twins() is not None:
        raise ValueError("no identifying code exists on this torus")
    rng = random.Random(seed)
    N = g.size

    def reduce(mask: int) -> int:
        order = [i for i in range(N) if mask >> i & 1]
        rng.shuffle(order)
        for i in order:
            m2 = mask & ~(1 << i)
            if m2 and g.valid_mask(m2):
                mask = m2
        return mask

    def repair(mask: int) -> int:
        while not g.valid_mask(mask):
            fixed = False
            seen: dict[int, int] = {}
            for v in range(N):
                ids = mask & g.ball_masks[v]
                if ids == 0:
                    choices = [j for j in g.ball_lists[v] if not mask >> j & 1]
                    mask |= 1 << rng.choice(choices)
                    fixed = True
                    break
                if ids in seen:
                    d = g.ball_masks[seen[ids]] ^ g.ball_masks[v]
                    choices = [j for j in range(N) if d >> j & 1 and not mask >> j & 1]
                    mask |= 1 << rng.choice(choices)
                    fixed = True
                    break
                seen[ids] = v
            if not fixed:
                raise AssertionError("repair made no progress")
        return mask

    best = reduce((1 << N) - 1)
    cur = best
    for _ in range(iterations):
        m = cur
        drops = [i for i in range(N) if m >> i & 1]
        rng.shuffle(drops)
        for i in drops[:2]:
            m &= ~(1 << i)
        m = reduce(repair(m))
        if m.bit_count() <= cur.bit_count():
            cur = m
        if cur.bit_count() < best.bit_count():
            best = cur
    return best.bit_count(), g.code_from_mask(best)


def to_periodic_code(inst: TorusInstance, codeset) -> PeriodicCode:
    """Lift a torus code to the periodic code with period n x n."""
    offsets = frozenset((v[0] % inst.n, v[1] % inst.n) for v in codeset)
    return PeriodicCode(inst.kind, inst.n, inst.n, offsets)


def torus_aux_graph(inst: TorusInstance, codeset) -> AuxGraph:
    """Auxiliary pair graph of a torus code (witnesses scanned on the torus)."""
    g = TorusGraph(inst)
    mask = g.mask_from_code(codeset)
    edges = set()
    for v in range(g.size):
        ids = mask & g.ball_masks[v]
        if ids.bit_count() == 2:
            a = (ids & -ids).bit_length() - 1
            b = (ids ^ (ids & -ids)).bit_length() - 1
            edges.add(tuple(sorted((g.verts[a], g.verts[b]))))
    verts = tuple(sorted(g.code_from_mask(mask)))
    return AuxGraph(verts, frozenset(edges))
