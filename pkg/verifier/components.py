"""
Quotient-cycle census of 2-regular periodic edge sets.

Reducing levels mod p turns a periodic class into a finite 2-regular
multigraph on the k x p window (self-loops and parallel edges allowed). Each
closed trajectory there has a winding w: its net vertical displacement in G
divided by p. A trajectory with w = 0 lifts to infinitely many finite cycles,
one with w != 0 to |w| disjoint double-rays, each with a tail in both ends.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from core.cayley import Edge, Vertex
from core.errors import NotTwoRegular
from core.periodic import PeriodicEdgeSet

logger = logging.getLogger(__name__)

# Edge-end in the quotient: (m, n mod p, dir, side)
EdgeKey = Tuple[int, int, str]


@dataclass(frozen=True)
class QuotientCycle:
    length: int
    covered: FrozenSet[Vertex]
    winding: int
    displacement: int
    # (window edge, traversed base-to-head) along the trajectory
    steps: Tuple[Tuple[Edge, bool], ...] = field(repr=False, default=())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "length": self.length,
            "winding": self.winding,
            "covered": sorted([v.m, v.n] for v in self.covered),
        }


@dataclass(frozen=True)
class ComponentReport:
    cycles: Tuple[QuotientCycle, ...]
    window_vertices: int

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    @property
    def covered(self) -> FrozenSet[Vertex]:
        result = frozenset()
        for cycle in self.cycles:
            result |= cycle.covered
        return result

    @property
    def windings(self) -> Tuple[int, ...]:
        return tuple(cycle.winding for cycle in self.cycles)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cycle_count": self.cycle_count,
            "covered": len(self.covered),
            "window_vertices": self.window_vertices,
            "cycles": [cycle.to_dict() for cycle in self.cycles],
        }


def quotient_components(s: PeriodicEdgeSet) -> ComponentReport:
    """Trace the closed trajectories of a 2-regular class in the Up^p-quotient"""
    params, p = s.params, s.period

    # (key, side) -> (window vertex, displacement to the far end, far window vertex)
    ends: Dict[Tuple[EdgeKey, int], Tuple[Vertex, int, Vertex]] = {}
    member_ends: Dict[Vertex, List[Tuple[EdgeKey, int]]] = {}
    for v in params.window_vertices(p):
        at_v = []
        for edge, side, other in params.incident_edges(v):
            if edge not in s:
                continue
            key = (edge.m, edge.n % p, edge.dir)
            dn = params.vertical_displacement(edge) if side == 0 else -params.vertical_displacement(edge)
            ends[(key, side)] = (v, dn, Vertex(other.m, other.n % p))
            at_v.append((key, side))
        if len(at_v) != 2:
            raise NotTwoRegular(v, len(at_v))
        member_ends[v] = at_v

    visited = set()
    cycles: List[QuotientCycle] = []
    for v in params.window_vertices(p):
        for start in member_ends[v]:
            if start[0] in visited:
                continue
            current = start
            length = displacement = 0
            covered = []
            steps = []
            while True:
                key, side = current
                here, dn, there = ends[current]
                visited.add(key)
                covered.append(here)
                steps.append((Edge(Vertex(key[0], key[1]), key[2]), side == 0))
                length += 1
                displacement += dn
                arrival = (key, 1 - side)
                first, second = member_ends[there]
                current = second if first == arrival else first
                if current == start:
                    break
            if displacement % p:
                raise AssertionError(f"closed trajectory with displacement {displacement} not divisible by {p}")
            cycles.append(QuotientCycle(length, frozenset(covered), displacement // p, displacement, tuple(steps)))

    report = ComponentReport(tuple(cycles), params.k * p)
    logger.debug(f"{params} p={p}: windings {report.windings}")
    return report


class VerdictTag(str, Enum):
    DOUBLE_RAY = "HamiltonianDoubleRay"
    CIRCLE = "HamiltonianCircle"
    OTHER = "Other"


class OtherReason(str, Enum):
    FINITE_CYCLE = "FiniteCycle"
    TOO_MANY_COMPONENTS = "TooManyComponents"
    NOT_SPANNING = "NotSpanning"
    NOT_TWO_REGULAR = "NotTwoRegular"


@dataclass(frozen=True)
class ClassVerdict:
    tag: VerdictTag
    reason: Optional[OtherReason] = None
    witness: Optional[Dict[str, Any]] = None

    @property
    def label(self) -> str:
        return self.reason.value if self.reason else self.tag.value

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"tag": self.tag.value}
        if self.reason:
            result["reason"] = self.reason.value
        if self.witness:
            result["witness"] = self.witness
        return result


def classify_class(s: PeriodicEdgeSet) -> ClassVerdict:
    """Hamiltonian double-ray, Hamiltonian circle, or Other with a witness"""
    try:
        report = quotient_components(s)
    except NotTwoRegular as e:
        return ClassVerdict(VerdictTag.OTHER, OtherReason.NOT_TWO_REGULAR, e.witness)

    for cycle in report.cycles:
        if cycle.winding == 0:
            return ClassVerdict(VerdictTag.OTHER, OtherReason.FINITE_CYCLE, cycle.to_dict())

    all_vertices = frozenset(s.params.window_vertices(s.period))
    missing = all_vertices - report.covered
    if missing:
        v = min(missing, key=lambda x: (x.n, x.m))
        return ClassVerdict(VerdictTag.OTHER, OtherReason.NOT_SPANNING, {"vertex": [v.m, v.n]})

    windings = sorted(abs(w) for w in report.windings)
    if windings == [1]:
        return ClassVerdict(VerdictTag.DOUBLE_RAY)
    if windings in ([1, 1], [2]):
        return ClassVerdict(VerdictTag.CIRCLE)
    return ClassVerdict(VerdictTag.OTHER, OtherReason.TOO_MANY_COMPONENTS,
                        {"windings": list(report.windings), "cycle_count": report.cycle_count})
