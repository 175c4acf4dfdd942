"""Discharging on the auxiliary graph: average pair-count at most 7.

Every vertex starts with charge deg - 7.  Each degree-8 vertex sends away one
unit of charge: 2/3 to a neighbor of degree at most 4 plus 1/6 to two
neighbors of degree at most 6 (rule 1), or 1/6 to six neighbors of degree at
most 6 (rule 2).  When every degree-8 vertex admits one of the rules, all
final charges are nonpositive, which proves sum(deg) <= 7 |V|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .grid import Vertex
from .pairs import AuxGraph

TWO_THIRDS = Fraction(2, 3)
ONE_SIXTH = Fraction(1, 6)


@dataclass(frozen=True)
class Transfer:
    src: Vertex
    dst: Vertex
    amount: Fraction
    rule: int


@dataclass(frozen=True)
class ChargeLedger:
    initial: dict[Vertex, Fraction]
    transfers: tuple[Transfer, ...]
    final: dict[Vertex, Fraction]


class DischargingError(ValueError):
    """A degree-8 vertex admits neither discharging rule."""

    def __init__(self, vertex: Vertex):
        super().__init__(
            f"degree-8 vertex {vertex} has neither a (<=4, <=6, <=6) nor a "
            f"six-(<=6) neighbor pattern"
        )
        self.vertex = vertex


def run_discharging(graph: AuxGraph) -> ChargeLedger:
    """Apply the two discharging rules with canonical target selection.

    Rule 1 is preferred; targets are the lexicographically smallest eligible
    neighbors.  Raises DischargingError if a degree-8 vertex supports
    neither rule.
    """
    deg = graph.degrees()
    initial = {v: Fraction(deg[v] - 7) for v in graph.vertices}
    transfers: list[Transfer] = []
    for v in graph.vertices:
        if deg[v] != 8:
            continue
        nbrs = graph.neighbors_of(v)
        low4 = [u for u in nbrs if deg[u] <= 4]
        low6 = [u for u in nbrs if deg[u] <= 6]
        applied = False
        if low4:
            u1 = low4[0]
            rest = [u for u in low6 if u != u1]
            if len(rest) >= 2:
                transfers.append(Transfer(v, u1, TWO_THIRDS, 1))
                transfers.append(Transfer(v, rest[0], ONE_SIXTH, 1))
                transfers.append(Transfer(v, rest[1], ONE_SIXTH, 1))
                applied = True
        if not applied and len(low6) >= 6:
            for u in low6[:6]:
                transfers.append(Transfer(v, u, ONE_SIXTH, 2))
            applied = True
        if not applied:
            raise DischargingError(v)
    final = dict(initial)
    for t in transfers:
        final[t.src] -= t.amount
        final[t.dst] += t.amount
    return ChargeLedger(initial, tuple(transfers), final)


def check_average_bound(graph: AuxGraph) -> tuple[bool, int, int]:
    """Compare sum of degrees against 7 |V| exactly.

    Returns (holds, sum_of_degrees, 7 * vertex_count).
    """
    total = sum(graph.degrees().values())
    rhs = 7 * len(graph.vertices)
    return total <= rhs, total, rhs


def ledger_lines(ledger: ChargeLedger) -> list[str]:
    """Stable line-oriented dump of a charge ledger."""

    def frac(x: Fraction) -> str:
        return f"{x.numerator}/{x.denominator}"

    out = []
    for v in sorted(ledger.initial):
        out.append(
            f"charge {v[0]} {v[1]} initial {frac(ledger.initial[v])} "
            f"final {frac(ledger.final[v])}"
        )
    for t in sorted(ledger.transfers, key=lambda t: (t.src, t.dst)):
        out.append(
            f"transfer {t.src[0]} {t.src[1]} {t.dst[0]} {t.dst[1]} {frac(t.amount)}"
        )
    return out
