"""
Vertically periodic edge sets and edge 2-colorings of G_{k,l}.

A set with period p is stored as a dense k x p x 2 table over the window
edges (m, n, dir) with 0 <= n < p; an edge belongs to the set iff its
canonical form reduced mod p does.
"""
import logging
from typing import Callable, List, Optional, Tuple

import numpy as np

from core.cayley import DIRECTIONS, Edge, GklParams, H, V, Vertex
from core.errors import ChainMismatch, InvalidDecomposition, UsageError
from core.isomorphism import IsomorphismChain

logger = logging.getLogger(__name__)

DIR_INDEX = {H: 0, V: 1}


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _pullback(params: GklParams, period: int, lookup: Callable[[Edge], int], dtype) -> np.ndarray:
    """Fill a window table by asking `lookup` about every window edge"""
    table = np.zeros((params.k, period, 2), dtype=dtype)
    for edge in params.window_edges(period):
        table[edge.m, edge.n, DIR_INDEX[edge.dir]] = lookup(edge)
    return table


def _minimal_period(table: np.ndarray) -> int:
    period = table.shape[1]
    for d in _divisors(period):
        if np.array_equal(np.tile(table[:, :d, :], (1, period // d, 1)), table):
            return d
    return period


class PeriodicEdgeSet:
    """Edge set of G_{k,l} invariant under translation by Up^period"""

    def __init__(self, params: GklParams, period: int, window: np.ndarray):
        if period < 1:
            raise UsageError(f"period must be at least 1, got {period}")
        window = np.asarray(window, dtype=bool)
        if window.shape != (params.k, period, 2):
            raise UsageError(f"window shape {window.shape} != {(params.k, period, 2)}")
        self.params = params
        self.period = period
        self.window = window.copy()
        self.window.flags.writeable = False

    @classmethod
    def all_of(cls, params: GklParams, dir: str, period: int = 1) -> "PeriodicEdgeSet":
        window = np.zeros((params.k, period, 2), dtype=bool)
        window[:, :, DIR_INDEX[dir]] = True
        return cls(params, period, window)

    def __contains__(self, edge: Edge) -> bool:
        edge = self.params.canonical_edge(edge.m, edge.n, edge.dir)
        return bool(self.window[edge.m, edge.n % self.period, DIR_INDEX[edge.dir]])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PeriodicEdgeSet):
            return NotImplemented
        return (self.params == other.params and self.period == other.period
                and np.array_equal(self.window, other.window))

    def __repr__(self) -> str:
        return f"PeriodicEdgeSet({self.params}, period={self.period}, size={self.size})"

    @property
    def size(self) -> int:
        return int(self.window.sum())

    def translate(self, g: Tuple[int, int]) -> "PeriodicEdgeSet":
        """Image under v -> v + g"""
        dm, dn = g
        table = _pullback(self.params, self.period,
                          lambda e: (self.params.canonical_edge(e.m - dm, e.n - dn, e.dir) in self), bool)
        return PeriodicEdgeSet(self.params, self.period, table)

    def minimize_period(self) -> "PeriodicEdgeSet":
        period = _minimal_period(self.window)
        if period == self.period:
            return self
        return PeriodicEdgeSet(self.params, period, self.window[:, :period, :])


class Decomposition:
    """2-coloring of E(G_{k,l}) with classes 1 and 2, periodic under Up^period"""

    def __init__(self, params: GklParams, period: int, coloring: np.ndarray,
                 provenance: Tuple[str, ...] = ()):
        coloring = np.asarray(coloring, dtype=np.int8)
        if period < 1 or coloring.shape != (params.k, period, 2):
            raise UsageError(f"coloring shape {coloring.shape} does not fit {params} with period {period}")
        if not np.isin(coloring, (1, 2)).all():
            m, n, d = (int(x) for x in np.argwhere(~np.isin(coloring, (1, 2)))[0])
            raise InvalidDecomposition(f"window edge ({m},{n},{DIRECTIONS[d]}) has no class",
                                       {"edge": [m, n, DIRECTIONS[d]], "color": int(coloring[m, n, d])})
        self.params = params
        self.period = period
        self.coloring = coloring.copy()
        self.coloring.flags.writeable = False
        self.provenance = tuple(provenance)

    @classmethod
    def from_class(cls, first: PeriodicEdgeSet, provenance: Tuple[str, ...] = ()) -> "Decomposition":
        """Class 1 is `first`, class 2 its complement"""
        return cls(first.params, first.period, np.where(first.window, 1, 2), provenance)

    @classmethod
    def from_lookup(cls, params: GklParams, period: int, lookup: Callable[[Edge], int],
                    provenance: Tuple[str, ...] = ()) -> "Decomposition":
        return cls(params, period, _pullback(params, period, lookup, np.int8), provenance)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return (self.params == other.params and self.period == other.period
                and np.array_equal(self.coloring, other.coloring))

    def __repr__(self) -> str:
        return f"Decomposition({self.params}, period={self.period})"

    def color_of(self, edge: Edge) -> int:
        edge = self.params.canonical_edge(edge.m, edge.n, edge.dir)
        return int(self.coloring[edge.m, edge.n % self.period, DIR_INDEX[edge.dir]])

    def class_edges(self, i: int) -> PeriodicEdgeSet:
        if i not in (1, 2):
            raise UsageError(f"class index must be 1 or 2, got {i}")
        return PeriodicEdgeSet(self.params, self.period, self.coloring == i)

    def with_provenance(self, *steps: str) -> "Decomposition":
        return Decomposition(self.params, self.period, self.coloring, self.provenance + steps)

    def mode(self):
        """DoubleRays, Circles or Mixed when both classes pass, else None"""
        from verifier.verify import infer_mode
        return infer_mode(self)

    def degree_violations(self) -> List[Tuple[Vertex, int]]:
        """Window vertices whose class-1 degree is not 2, with that degree"""
        violations = []
        for v in self.params.window_vertices(self.period):
            ones = sum(1 for edge, _, _ in self.params.incident_edges(v) if self.color_of(edge) == 1)
            if ones != 2:
                violations.append((v, ones))
        return violations

    def translate(self, g: Tuple[int, int]) -> "Decomposition":
        dm, dn = g
        result = Decomposition.from_lookup(
            self.params, self.period,
            lambda e: self.color_of(Edge(Vertex(e.m - dm, e.n - dn), e.dir)),
            self.provenance + (f"translate({dm},{dn})",))
        return result

    def minimize_period(self) -> "Decomposition":
        period = _minimal_period(self.coloring)
        if period == self.period:
            return self
        return Decomposition(self.params, period, self.coloring[:, :period, :], self.provenance)

    def transport(self, chain: IsomorphismChain, step_name: Optional[str] = None) -> "Decomposition":
        """Carry the coloring along the chain into the target graph"""
        if chain.source != self.params:
            raise ChainMismatch(f"chain starts at {chain.source}, decomposition lives in {self.params}")
        if not chain.steps:
            return self
        inverse = chain.inverse()
        period = chain.vertical_period(self.period)
        result = Decomposition.from_lookup(
            chain.target, period,
            lambda e: self.color_of(inverse.map_edge(e)),
            self.provenance + (step_name or f"transport[{chain.describe()}]",))
        logger.debug(f"Transported {self.params} p={self.period} to {chain.target} p={period}")
        return result.minimize_period()
