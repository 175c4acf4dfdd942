"""Exhaustive verification of local pair-count bounds.

Everything here works on a window: the ball of radius 2r around a central
codeword at the origin.  Any witness of a pair containing the center lies in
the radius-r ball, and its whole identifying set lies in the window, so the
number of such witnesses is determined by the window alone.

Only necessary conditions of a globally valid code are imposed on window
completions ("window laws"): vertices whose balls lie inside the window must
have nonempty and pairwise distinct identifying sets.  The restriction of
any valid code satisfies the laws, so a maximum proved over law-satisfying
completions bounds the true maximum over codes.  The search enumerates
candidate witness sets from large to small, rejects sets that fail the ball
coverage test (a covered candidate cannot witness alongside the rest), and
decides the remainder with a backtracking solver with unit propagation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .grid import GridKind, Vertex, ball, ball_set, neighbors, origin_symmetries
from .pairs import TYPE1_PATTERNS, TYPE2_PATTERNS, TYPE3_PATTERNS

CODEWORD = 1
NONCODEWORD = 0
FREE = -1

DEFAULT_BUDGET = 50_000_000

ORIGIN: Vertex = (0, 0)


class BudgetExceeded(Exception):
    def __init__(self, used: int):
        super().__init__(f"search budget exceeded after {used} nodes")
        self.used = used


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self):
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded(self.used)


@dataclass(frozen=True, eq=False)
class WindowConfig:
    """Tri-state assignment over the ball of radius 2r around the center."""

    kind: GridKind
    r: int
    center: Vertex
    cells: dict[Vertex, int]


def window_config(
    kind: GridKind,
    r: int,
    codewords: Iterable[Vertex] = (),
    noncodewords: Iterable[Vertex] = (),
) -> WindowConfig:
    """A window with the center fixed as a codeword plus the given cells."""
    if r < 1:
        raise ValueError("r must be positive")
    cells = {v: FREE for v in ball(kind, ORIGIN, 2 * r).members}
    cells[ORIGIN] = CODEWORD
    for v in codewords:
        v = (v[0], v[1])
        if v not in cells:
            raise ValueError(f"{v} is outside the window")
        if cells[v] == NONCODEWORD:
            raise ValueError(f"inconsistent fixed cell {v}")
        cells[v] = CODEWORD
    for v in noncodewords:
        v = (v[0], v[1])
        if v not in cells:
            raise ValueError(f"{v} is outside the window")
        if cells[v] == CODEWORD:
            raise ValueError(f"inconsistent fixed cell {v}")
        cells[v] = NONCODEWORD
    return WindowConfig(kind, r, ORIGIN, cells)


class _Window:
    """Compiled window geometry: cell indexing, ball and difference masks."""

    def __init__(self, kind: GridKind, r: int):
        self.kind = kind
        self.r = r
        self.cells: tuple[Vertex, ...] = ball(kind, ORIGIN, 2 * r).members
        self.index = {v: i for i, v in enumerate(self.cells)}
        self.cellset = frozenset(self.cells)
        self.n = len(self.cells)
        self.core: tuple[Vertex, ...] = ball(kind, ORIGIN, r).members
        # Vertices whose whole ball lies in the window; identifying sets of
        # these are decided by the window, so the laws apply to them.
        self.scope = tuple(
            v for v in self.cells if ball_set(kind, v, r) <= self.cellset
        )
        self.ballv = {v: ball_set(kind, v, r) for v in self.scope}
        self.ball_idx = {
            v: tuple(sorted(self.index[u] for u in self.ballv[v])) for v in self.scope
        }
        diffs = []
        for a in range(len(self.scope)):
            for b in range(a + 1, len(self.scope)):
                u, v = self.scope[a], self.scope[b]
                d = self.ballv[u] ^ self.ballv[v]
                diffs.append(tuple(sorted(self.index[w] for w in d)))
        self.diff_idx = tuple(diffs)

    def base_from(self, config: WindowConfig) -> list[int]:
        if config.kind is not self.kind or config.r != self.r:
            raise ValueError("configuration does not match this window")
        if set(config.cells) != set(self.cells):
            raise ValueError("configuration domain must be the full window")
        if config.cells[ORIGIN] != CODEWORD:
            raise ValueError("center must be a codeword")
        return [config.cells[v] for v in self.cells]

    def symmetry_perms(self, base: list[int]) -> tuple[tuple[int, ...], ...]:
        """Index permutations of origin symmetries that preserve the base."""
        perms = []
        for g in origin_symmetries(self.kind):
            perm = tuple(self.index[g(*v)] for v in self.cells)
            if all(base[perm[i]] == base[i] for i in range(self.n)):
                perms.append(perm)
        return tuple(perms)


# Constraint kinds over cell index tuples.
_EXACT2 = 0  # exactly two codewords among the cells
_NOT2 = 1  # any number of codewords except two
_ATLEAST1 = 2  # at least one codeword


def _law_constraints(window: _Window) -> list[tuple[int, tuple[int, ...]]]:
    cons = [(_ATLEAST1, window.ball_idx[v]) for v in window.scope]
    cons.extend((_ATLEAST1, d) for d in window.diff_idx)
    return cons


def _scenario_constraints(
    window: _Window, witnesses: frozenset[Vertex], exact: bool
) -> list[tuple[int, tuple[int, ...]]]:
    cons = _law_constraints(window)
    for v in window.core:
        if v in witnesses:
            cons.append((_EXACT2, window.ball_idx[v]))
        elif exact:
            cons.append((_NOT2, window.ball_idx[v]))
    return cons


class _Search:
    """Backtracking satisfiability over window completions.

    Counter-based unit propagation on three constraint kinds; deterministic
    branch order (first undecided cell of the tightest unresolved
    cardinality constraint, value 1 first).
    """

    def __init__(self, n, base, constraints, budget: _Budget):
        self.state = list(base)
        self.cons = constraints
        self.budget = budget
        ncons = len(constraints)
        self.ones = [0] * ncons
        self.undec = [0] * ncons
        self.cell_cons: list[list[int]] = [[] for _ in range(n)]
        for ci, (_typ, cells) in enumerate(constraints):
            o = u = 0
            for cell in cells:
                self.cell_cons[cell].append(ci)
                s = self.state[cell]
                if s == 1:
                    o += 1
                elif s == -1:
                    u += 1
            self.ones[ci] = o
            self.undec[ci] = u
        self.trail: list[int] = []
        pending: list[tuple[int, int]] = []
        ok = True
        for ci in range(ncons):
            if not self._derive(ci, pending):
                ok = False
                break
        self.ok_init = ok and self._assign(pending)

    def _derive(self, ci, pending) -> bool:
        typ, cells = self.cons[ci]
        o, u = self.ones[ci], self.undec[ci]
        if typ == _EXACT2:
            if o > 2 or o + u < 2:
                return False
            if u and o == 2:
                for cell in cells:
                    if self.state[cell] == -1:
                        pending.append((cell, 0))
            elif u and o + u == 2:
                for cell in cells:
                    if self.state[cell] == -1:
                        pending.append((cell, 1))
        elif typ == _NOT2:
            if o == 2:
                if u == 0:
                    return False
                if u == 1:
                    for cell in cells:
                        if self.state[cell] == -1:
                            pending.append((cell, 1))
            elif o == 1 and u == 1:
                for cell in cells:
                    if self.state[cell] == -1:
                        pending.append((cell, 0))
        else:
            if o == 0:
                if u == 0:
                    return False
                if u == 1:
                    for cell in cells:
                        if self.state[cell] == -1:
                            pending.append((cell, 1))
        return True

    def _assign(self, pending) -> bool:
        while pending:
            cell, val = pending.pop()
            cur = self.state[cell]
            if cur != -1:
                if cur != val:
                    return False
                continue
            self.state[cell] = val
            self.trail.append(cell)
            # Update every counter before deriving: an early conflict return
            # must leave the counters in the state _undo expects.
            for ci in self.cell_cons[cell]:
                self.undec[ci] -= 1
                if val:
                    self.ones[ci] += 1
            for ci in self.cell_cons[cell]:
                if not self._derive(ci, pending):
                    return False
        return True

    def _undo(self, mark):
        while len(self.trail) > mark:
            cell = self.trail.pop()
            if self.state[cell]:
                for ci in self.cell_cons[cell]:
                    self.undec[ci] += 1
                    self.ones[ci] -= 1
            else:
                for ci in self.cell_cons[cell]:
                    self.undec[ci] += 1
            self.state[cell] = -1

    def _pick(self) -> Optional[int]:
        best_u = None
        best_ci = -1
        for ci, (typ, _cells) in enumerate(self.cons):
            if typ != _EXACT2:
                continue
            o, u = self.ones[ci], self.undec[ci]
            if o == 2 and u == 0:
                continue
            if best_u is None or u < best_u:
                best_u, best_ci = u, ci
        if best_u is not None:
            for cell in self.cons[best_ci][1]:
                if self.state[cell] == -1:
                    return cell
        for ci, (typ, cells) in enumerate(self.cons):
            o, u = self.ones[ci], self.undec[ci]
            if typ == _NOT2:
                if o >= 3 or o + u <= 1:
                    continue
            elif typ == _ATLEAST1:
                if o >= 1:
                    continue
            else:
                continue
            for cell in cells:
                if self.state[cell] == -1:
                    return cell
        return None

    def satisfiable(self) -> bool:
        if not self.ok_init:
            return False
        return self._dfs()

    def _dfs(self) -> bool:
        cell = self._pick()
        if cell is None:
            return True
        self.budget.spend()
        for val in (1, 0):
            mark = len(self.trail)
            if self._assign([(cell, val)]) and self._dfs():
                return True
            self._undo(mark)
        return False


def _coverage_reject(S: tuple[Vertex, ...], ballv: Mapping[Vertex, frozenset]) -> bool:
    """True if some candidate's ball is covered by the other candidates'.

    A covered vertex cannot witness a pair with the center while all the
    others do: its second codeword would land in another witness's ball and
    give that witness a third codeword.
    """
    for v in S:
        union: set[Vertex] = set()
        for s in S:
            if s != v:
                union |= ballv[s]
        if ballv[v] <= union:
            return True
    return False


def _set_key(S: Iterable[Vertex], window: _Window) -> tuple[int, ...]:
    return tuple(sorted(window.index[v] for v in S))


def _canonical_set(S, window: _Window, perms) -> bool:
    key = _set_key(S, window)
    idxs = [window.index[v] for v in S]
    for perm in perms:
        img = tuple(sorted(perm[i] for i in idxs))
        if img < key:
            return False
    return True


@dataclass(frozen=True)
class MaxPairsResult:
    max_p: int
    extremal: tuple[tuple[Vertex, ...], ...]
    nodes: int


def max_pairs(
    config: WindowConfig,
    budget_limit: int = DEFAULT_BUDGET,
    symmetry: bool = True,
) -> MaxPairsResult:
    """Exact maximum number of center-pair witnesses over law completions.

    Iterates candidate witness subsets of the radius-r ball from large to
    small; the first size with a satisfiable subset is the maximum, and the
    satisfiable subsets of that size (canonical under the window symmetries
    preserving the fixed cells, unless symmetry=False) are the extremal
    configurations.
    """
    window = _Window(config.kind, config.r)
    base = window.base_from(config)
    budget = _Budget(budget_limit)
    perms = (
        window.symmetry_perms(base)
        if symmetry
        else (tuple(range(window.n)),)
    )
    ballv = {v: window.ballv[v] for v in window.core}
    for size in range(len(window.core), -1, -1):
        sats = []
        for S in itertools.combinations(window.core, size):
            if symmetry and len(perms) > 1 and not _canonical_set(S, window, perms):
                continue
            if _coverage_reject(S, ballv):
                continue
            cons = _scenario_constraints(window, frozenset(S), exact=False)
            if _Search(window.n, base, cons, budget).satisfiable():
                sats.append(tuple(sorted(S)))
        if sats:
            return MaxPairsResult(size, tuple(sorted(sats)), budget.used)
    raise ValueError("fixed cells are inconsistent with the window laws")


def complete_scenario(
    config: WindowConfig,
    witnesses: Iterable[Vertex] = (),
    exact: bool = False,
    budget_limit: int = DEFAULT_BUDGET,
) -> Optional[WindowConfig]:
    """A lawful completion realizing the given witness set, or None.

    With exact=True the completion's center-pair witnesses are exactly the
    given set; otherwise they are a superset.  Free cells left unconstrained
    by the solved system are completed as non-codewords, which preserves
    every resolved constraint.
    """
    window = _Window(config.kind, config.r)
    base = window.base_from(config)
    cons = _scenario_constraints(window, frozenset(witnesses), exact)
    search = _Search(window.n, base, cons, _Budget(budget_limit))
    if not search.satisfiable():
        return None
    cells = {
        v: (search.state[i] if search.state[i] != -1 else NONCODEWORD)
        for i, v in enumerate(window.cells)
    }
    return WindowConfig(config.kind, config.r, ORIGIN, cells)


def check_window_laws(config: WindowConfig) -> bool:
    """Evaluate the window laws directly on a fully decided configuration."""
    window = _Window(config.kind, config.r)
    base = window.base_from(config)
    if any(s == FREE for s in base):
        raise ValueError("configuration has free cells")
    for v in window.scope:
        if not any(base[i] for i in window.ball_idx[v]):
            return False
    for d in window.diff_idx:
        if not any(base[i] for i in d):
            return False
    return True


def witness_count(config: WindowConfig) -> int:
    """Center-pair witnesses of a fully decided configuration."""
    window = _Window(config.kind, config.r)
    base = window.base_from(config)
    if any(s == FREE for s in base):
        raise ValueError("configuration has free cells")
    count = 0
    for v in window.core:
        if sum(base[i] for i in window.ball_idx[v]) == 2:
            count += 1
    return count


def apply_symmetry(config: WindowConfig, g) -> WindowConfig:
    """Transform a configuration by an origin symmetry coordinate map."""
    cells = {g(*v): s for v, s in config.cells.items()}
    return WindowConfig(config.kind, config.r, ORIGIN, cells)


def config_from_code(code, r: int, center: Vertex) -> WindowConfig:
    """The fully decided window cut from a periodic code around a codeword.

    The window is translated so the codeword sits at the origin; for hex
    codes the codeword must have even coordinate sum, since only such
    translations preserve the brick-wall structure (the odd class is
    equivalent under a glide symmetry).
    """
    if center not in code:
        raise ValueError(f"{center} is not a codeword")
    if code.kind is GridKind.HEX and (center[0] + center[1]) % 2:
        raise ValueError("hex windows must be centered on an even-parity codeword")
    cells = {}
    for v in ball(code.kind, ORIGIN, 2 * r).members:
        cells[v] = (
            CODEWORD if (center[0] + v[0], center[1] + v[1]) in code else NONCODEWORD
        )
    return WindowConfig(code.kind, r, ORIGIN, cells)


def naive_enumerate(
    config: WindowConfig,
    reduced_window_radius: int,
    max_free: int = 25,
) -> tuple[int, tuple[tuple[Vertex, ...], ...]]:
    """Brute-force oracle: enumerate every completion of a reduced window.

    The window is shrunk to radius `reduced_window_radius`; laws apply to
    vertices whose balls stay inside it.  Radius-r-ball vertices whose balls
    leave the reduced window are counted optimistically (their identifying
    set could still reach size two outside), so the reduced maximum never
    falls below the full-window maximum.  At radius 2r the scopes coincide
    with the pruned search exactly.
    """
    kind, r = config.kind, config.r
    rho = reduced_window_radius
    if not r <= rho <= 2 * r:
        raise ValueError("reduced radius must lie between r and 2r")
    cells = ball(kind, ORIGIN, rho).members
    index = {v: i for i, v in enumerate(cells)}
    cellset = frozenset(cells)
    base = [config.cells[v] for v in cells]
    if base[index[ORIGIN]] != CODEWORD:
        raise ValueError("center must be a codeword")
    free = [i for i, s in enumerate(base) if s == FREE]
    if len(free) > max_free:
        raise ValueError(f"{len(free)} free cells exceed the naive limit {max_free}")
    fixed1 = 0
    for i, s in enumerate(base):
        if s == CODEWORD:
            fixed1 |= 1 << i

    def mask_of(vs) -> int:
        m = 0
        for u in vs:
            if u in index:
                m |= 1 << index[u]
        return m

    scope = [v for v in cells if ball_set(kind, v, r) <= cellset]
    scopeset = set(scope)
    nonempty = [mask_of(ball_set(kind, v, r)) for v in scope]
    diffs = []
    for a in range(len(scope)):
        for b in range(a + 1, len(scope)):
            diffs.append(
                mask_of(ball_set(kind, scope[a], r) ^ ball_set(kind, scope[b], r))
            )
    diffs.sort(key=lambda m: m.bit_count())
    core = ball(kind, ORIGIN, r).members
    exact = [(v, mask_of(ball_set(kind, v, r))) for v in core if v in scopeset]
    optimistic = [(v, mask_of(ball_set(kind, v, r))) for v in core if v not in scopeset]

    best = -1
    best_sets: set[frozenset[Vertex]] = set()
    for m in range(1 << len(free)):
        conf = fixed1
        mm = m
        while mm:
            low = mm & -mm
            conf |= 1 << free[low.bit_length() - 1]
            mm ^= low
        ok = True
        for d in diffs:
            if not conf & d:
                ok = False
                break
        if not ok:
            continue
        for ne in nonempty:
            if not conf & ne:
                ok = False
                break
        if not ok:
            continue
        wit = [v for v, mask in exact if (conf & mask).bit_count() == 2]
        wit.extend(v for v, mask in optimistic if (conf & mask).bit_count() <= 2)
        cnt = len(wit)
        if cnt > best:
            best = cnt
            best_sets = {frozenset(wit)}
        elif cnt == best:
            best_sets.add(frozenset(wit))
    if best < 0:
        raise ValueError("fixed cells are inconsistent with the window laws")
    return best, tuple(sorted(tuple(sorted(s)) for s in best_sets))


@dataclass(frozen=True)
class NeighborBound:
    """A codeword certified to be in few pairs, with the cells that prove it."""

    vertex: Vertex
    bound: int
    reason: str  # "type1", "type2", "type3" or "adjacent"
    cells: tuple[Vertex, ...]


@dataclass(frozen=True)
class LeafRecord:
    assignments: tuple[tuple[Vertex, int], ...]
    prop: str  # "P1" or "P2" ("none" on failure)
    bounds: tuple[NeighborBound, ...]


@dataclass(frozen=True)
class ScenarioAnalysis:
    witnesses: tuple[Vertex, ...]
    forced_codewords: tuple[Vertex, ...]
    forced_noncodewords: tuple[Vertex, ...]
    leaves: tuple[LeafRecord, ...]
    certified: bool


@dataclass(frozen=True)
class VerificationCertificate:
    statement: str
    claimed_bound: Optional[int]
    max_found: Optional[int]
    extremal_count: Optional[int]
    status: str  # "pass", "fail" or "inconclusive"
    nodes: int
    scenarios: tuple[ScenarioAnalysis, ...] = ()
    case1_unsatisfiable: Optional[bool] = None


class _ClaimAnalyzer:
    """Certify the low-pair neighbor structure of an eight-witness scenario.

    Works on the exact-witness constraint system of one scenario.  A cell is
    "forced" when every law-satisfying completion agrees on it; a neighbor
    is certified once a recognizable pattern (codeword types or an adjacent
    codeword) is forced inside the window.  If the forced cells do not yet
    carry a certificate, the analyzer splits on an undecided relevant cell
    and requires every satisfiable branch to certify.
    """

    def __init__(self, window: _Window, base, S, budget: _Budget, require_p1: bool):
        self.window = window
        self.base = base
        self.S = tuple(sorted(S))
        self.cons = _scenario_constraints(window, frozenset(S), exact=True)
        self.budget = budget
        self.require_p1 = require_p1
        partner: set[Vertex] = set()
        for v in self.S:
            partner |= window.ballv[v]
        partner.discard(ORIGIN)
        self.partner_cells = tuple(sorted(partner))

    def _search(self, extra) -> Optional[_Search]:
        base = list(self.base)
        for cell, val in extra:
            if base[cell] not in (FREE, val):
                return None
            base[cell] = val
        s = _Search(self.window.n, base, self.cons, self.budget)
        return s if s.ok_init else None

    def _sat(self, extra) -> bool:
        s = self._search(extra)
        return s is not None and s.satisfiable()

    def _forced_view(self, extra):
        """(known codeword cells, known non-codeword cells, undecided cells)."""
        s = self._search(extra)
        assert s is not None
        known1 = {i for i, st in enumerate(s.state) if st == 1}
        known0 = {i for i, st in enumerate(s.state) if st == 0}
        undecided = [i for i, st in enumerate(s.state) if st == -1]
        still = []
        for i in undecided:
            if not self._sat(extra + [(i, 0)]):
                known1.add(i)
            elif not self._sat(extra + [(i, 1)]):
                known0.add(i)
            else:
                still.append(i)
        return known1, known0, still

    def _pattern_bounds(self, w: Vertex, known1_verts) -> list[NeighborBound]:
        out = []
        window = self.window
        for pats, bound, reason in (
            (TYPE1_PATTERNS, 4, "type1"),
            (TYPE2_PATTERNS, 6, "type2"),
            (TYPE3_PATTERNS, 6, "type3"),
        ):
            for pat in pats:
                cells = tuple((w[0] + di, w[1] + dj) for di, dj in pat)
                if all(u in window.cellset and u in known1_verts for u in cells):
                    out.append(NeighborBound(w, bound, reason, cells))
                    break
        for nb in neighbors(GridKind.SQUARE, w):
            if nb in window.cellset and nb in known1_verts:
                out.append(NeighborBound(w, 6, "adjacent", (nb,)))
                break
        return out

    def _certificate(self, known1) -> Optional[tuple[str, tuple[NeighborBound, ...]]]:
        window = self.window
        known1_verts = {window.cells[i] for i in known1}
        gamma = sorted(
            w
            for w in known1_verts
            if w != ORIGIN and any(w in window.ballv[v] for v in self.S)
        )
        four: dict[Vertex, NeighborBound] = {}
        six: dict[Vertex, NeighborBound] = {}
        for w in gamma:
            for b in self._pattern_bounds(w, known1_verts):
                if b.bound <= 4 and w not in four:
                    four[w] = b
                if w not in six:
                    six[w] = b
        for w1 in sorted(four):
            rest = [six[w] for w in sorted(six) if w != w1]
            if len(rest) >= 2:
                return "P1", (four[w1], rest[0], rest[1])
        if not self.require_p1 and len(six) >= 6:
            picks = tuple(six[w] for w in sorted(six)[:6])
            return "P2", picks
        return None

    def _split_candidates(self, known1, undecided):
        window = self.window
        undec = set(undecided)
        cand = set()
        positions = set(self.partner_cells)
        positions.update(window.cells[i] for i in known1 if window.cells[i] != ORIGIN)
        for w in positions:
            iw = window.index.get(w)
            if iw is not None and iw in undec:
                cand.add(iw)
            for pats in (TYPE1_PATTERNS, TYPE2_PATTERNS, TYPE3_PATTERNS):
                for pat in pats:
                    for di, dj in pat:
                        i = window.index.get((w[0] + di, w[1] + dj))
                        if i is not None and i in undec:
                            cand.add(i)
            for nb in neighbors(GridKind.SQUARE, w):
                i = window.index.get(nb)
                if i is not None and i in undec:
                    cand.add(i)
        return min(cand) if cand else min(undecided)

    def analyze(self) -> ScenarioAnalysis:
        root1, root0, _ = self._forced_view([])
        leaves, ok = self._node([])
        window = self.window
        return ScenarioAnalysis(
            witnesses=self.S,
            forced_codewords=tuple(sorted(window.cells[i] for i in root1)),
            forced_noncodewords=tuple(sorted(window.cells[i] for i in root0)),
            leaves=tuple(leaves),
            certified=ok,
        )

    def _node(self, extra) -> tuple[list[LeafRecord], bool]:
        window = self.window
        known1, _known0, undecided = self._forced_view(extra)
        named = tuple((window.cells[i], val) for i, val in extra)
        cert = self._certificate(known1)
        if cert is not None:
            prop, bounds = cert
            return [LeafRecord(named, prop, bounds)], True
        if not undecided:
            return [LeafRecord(named, "none", ())], False
        cell = self._split_candidates(known1, undecided)
        leaves: list[LeafRecord] = []
        ok = True
        for val in (1, 0):
            e2 = extra + [(cell, val)]
            if self._sat(e2):
                sub, subok = self._node(e2)
                leaves.extend(sub)
                ok = ok and subok
        return leaves, ok


@dataclass(frozen=True)
class BoundStatement:
    name: str
    kind: GridKind
    r: int
    bound: int
    codewords: tuple[Vertex, ...]


BOUND_STATEMENTS: dict[str, BoundStatement] = {
    s.name: s
    for s in (
        BoundStatement("hex-p6", GridKind.HEX, 2, 6, ()),
        BoundStatement("square-p8", GridKind.SQUARE, 2, 8, ()),
        BoundStatement("adjacent-p6", GridKind.SQUARE, 2, 6, ((0, 1),)),
        BoundStatement("type1-p4", GridKind.SQUARE, 2, 4, ((0, 1), (0, -1))),
        BoundStatement("type2-p6", GridKind.SQUARE, 2, 6, ((-1, 2), (2, -1))),
        BoundStatement("type3-p6", GridKind.SQUARE, 2, 6, ((-2, 1), (2, 1))),
    )
}

CLAIM_STATEMENTS = ("claim-pair", "claim-nopair")

STATEMENT_NAMES = tuple(BOUND_STATEMENTS) + CLAIM_STATEMENTS

# The witness pattern whose impossibility the no-pair claim also records:
# all four axis vertices at distances one and two, corners excluded.
_CASE1_WITNESSES: tuple[Vertex, ...] = tuple(
    sorted([(1, 0), (-1, 0), (2, 0), (-2, 0), (0, 1), (0, -1), (0, 2), (0, -2)])
)


def verify_bound(name: str, budget_limit: int = DEFAULT_BUDGET) -> VerificationCertificate:
    """Run a pair-count bound statement and certify the outcome."""
    st = BOUND_STATEMENTS[name]
    config = window_config(st.kind, st.r, codewords=st.codewords)
    try:
        res = max_pairs(config, budget_limit)
    except BudgetExceeded as e:
        return VerificationCertificate(name, st.bound, None, None, "inconclusive", e.used)
    status = "pass" if res.max_p <= st.bound else "fail"
    return VerificationCertificate(
        name, st.bound, res.max_p, len(res.extremal), status, res.nodes
    )


def enumerate_eight_pair(
    name: str, budget_limit: int = DEFAULT_BUDGET
) -> VerificationCertificate:
    """Enumerate all eight-witness scenarios and certify their structure.

    claim-pair: the center witnesses one of its own pairs; every scenario
    must carry a P1 certificate (a forced type-1 neighbor plus two forced
    low-pair neighbors).  claim-nopair: the center is not a witness; every
    scenario must carry P1 or P2 (six forced low-pair neighbors).
    """
    if name not in CLAIM_STATEMENTS:
        raise KeyError(name)
    center_witness = name == "claim-pair"
    window = _Window(GridKind.SQUARE, 2)
    config = window_config(GridKind.SQUARE, 2)
    base = window.base_from(config)
    budget = _Budget(budget_limit)
    perms = window.symmetry_perms(base)
    others = tuple(v for v in window.core if v != ORIGIN)
    ballv = {v: window.ballv[v] for v in window.core}
    try:
        scenarios = []
        for S in itertools.combinations(others, 7 if center_witness else 8):
            full = tuple(sorted(S + ((ORIGIN,) if center_witness else ())))
            if not _canonical_set(full, window, perms):
                continue
            if _coverage_reject(full, ballv):
                continue
            cons = _scenario_constraints(window, frozenset(full), exact=True)
            if _Search(window.n, base, cons, budget).satisfiable():
                scenarios.append(full)
        case1 = None
        if not center_witness:
            cons = _scenario_constraints(window, frozenset(_CASE1_WITNESSES), exact=True)
            case1 = not (
                not _coverage_reject(_CASE1_WITNESSES, ballv)
                and _Search(window.n, base, cons, budget).satisfiable()
            )
        analyses = []
        for S in scenarios:
            analyzer = _ClaimAnalyzer(window, base, S, budget, center_witness)
            analyses.append(analyzer.analyze())
    except BudgetExceeded as e:
        return VerificationCertificate(name, 8, None, None, "inconclusive", e.used)
    ok = all(a.certified for a in analyses)
    if case1 is False:
        ok = False
    return VerificationCertificate(
        name,
        8,
        8 if scenarios else None,
        len(scenarios),
        "pass" if ok else "fail",
        budget.used,
        scenarios=tuple(analyses),
        case1_unsatisfiable=case1,
    )


def run_statement(name: str, budget_limit: int = DEFAULT_BUDGET) -> VerificationCertificate:
    if name in BOUND_STATEMENTS:
        return verify_bound(name, budget_limit)
    if name in CLAIM_STATEMENTS:
        return enumerate_eight_pair(name, budget_limit)
    raise KeyError(name)


def certificate_lines(cert: VerificationCertificate) -> list[str]:
    """Stable line-oriented rendering of a certificate."""
    out = [f"statement {cert.statement}"]
    if cert.claimed_bound is not None:
        out.append(f"bound {cert.claimed_bound}")
    out.append(f"max_found {cert.max_found if cert.max_found is not None else 'none'}")
    out.append(
        "extremal_count "
        f"{cert.extremal_count if cert.extremal_count is not None else 'none'}"
    )
    if cert.case1_unsatisfiable is not None:
        out.append(f"case1_unsatisfiable {'yes' if cert.case1_unsatisfiable else 'no'}")
    for idx, sc in enumerate(cert.scenarios):
        wits = " ".join(f"{v[0]},{v[1]}" for v in sc.witnesses)
        out.append(f"scenario {idx} witnesses {wits}")
        forced = " ".join(f"{v[0]},{v[1]}" for v in sc.forced_codewords)
        out.append(f"scenario {idx} forced_codewords {forced}")
        p1 = sum(1 for leaf in sc.leaves if leaf.prop == "P1")
        p2 = sum(1 for leaf in sc.leaves if leaf.prop == "P2")
        out.append(
            f"scenario {idx} leaves {len(sc.leaves)} p1 {p1} p2 {p2} "
            f"certified {'yes' if sc.certified else 'no'}"
        )
    out.append(f"status {cert.status}")
    out.append(f"nodes {cert.nodes}")
    return out
