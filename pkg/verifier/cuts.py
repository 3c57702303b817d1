"""
Brute-force enumeration of small finite cuts with two infinite sides.

The truncation |n| <= N is split into a free band of levels [-band, band],
everything below it (merged into the bottom terminal) and everything above it
(merged into the top terminal). Every assignment of the band vertices to the
two sides is a candidate S; its cut is the set of edges with one end on each
side. The assignments are explored depth first with a max-flow lower bound,
so a branch is dropped as soon as no completion fits in max_edges. Each cut
found is checked to separate the two boundaries of the full truncation.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, List, Sequence, Set, Tuple

import networkx as nx

from config import Config
from core.cayley import Edge, GklParams, H, V, Vertex
from core.errors import BudgetExceeded, UsageError

logger = logging.getLogger(__name__)

MAX_CUT_EDGES = 12
MAX_CUT_WINDOW = 30

BOTTOM = "bottom"
TOP = "top"
UNBOUNDED = float("inf")


@dataclass(frozen=True)
class CutCensus:
    params: GklParams
    max_edges: int
    window: int
    sizes: Tuple[int, ...]
    nodes_explored: int
    cuts: Tuple[FrozenSet[Edge], ...] = field(default=(), repr=False, compare=False)

    @property
    def has_odd_cut(self) -> bool:
        return any(size % 2 for size in self.sizes)

    def to_dict(self) -> Dict:
        return {
            "k": self.params.k,
            "l": self.params.l,
            "max_edges": self.max_edges,
            "window": self.window,
            "sizes": list(self.sizes),
            "odd_cut": self.has_odd_cut,
            "nodes_explored": self.nodes_explored,
        }


def truncated_graph(params: GklParams, N: int) -> nx.Graph:
    """G_{k,l} on levels |n| <= N with the two boundaries attached to terminals"""
    graph = nx.Graph()
    for n in range(-N, N + 1):
        for m in range(params.k):
            for dir in (H, V):
                u, v = params.endpoints(Edge(Vertex(m, n), dir))
                if abs(v.n) <= N:
                    graph.add_edge(u, v)
    graph.add_edges_from((BOTTOM, Vertex(m, -N)) for m in range(params.k))
    graph.add_edges_from((TOP, Vertex(m, N)) for m in range(params.k))
    return graph


def separates(graph: nx.Graph, params: GklParams, cut: Set[Edge]) -> bool:
    remaining = graph.copy()
    remaining.remove_edges_from(params.endpoints(edge) for edge in cut)
    return not nx.has_path(remaining, BOTTOM, TOP)


def profile_cut(params: GklParams, thresholds: Sequence[int]) -> Set[Edge]:
    """Edges leaving S = {(m, n) : n < thresholds[m]}"""
    k, l = params.k, params.l
    cut = {Edge(Vertex(m, thresholds[m] - 1), V) for m in range(k)}
    for m in range(k - 1):
        lo, hi = sorted((thresholds[m], thresholds[m + 1]))
        cut.update(Edge(Vertex(m, n), H) for n in range(lo, hi))
    # wrap edge (k-1, n) - (0, n-l) crosses iff exactly one of n < c_{k-1}, n-l < c_0
    lo, hi = sorted((thresholds[k - 1], thresholds[0] + l))
    cut.update(Edge(Vertex(k - 1, n), H) for n in range(lo, hi))
    return cut


def banded_edges(params: GklParams, N: int, band: int) -> List[Tuple[Edge, Hashable, Hashable]]:
    """Edges of the truncation as (edge, a, b) with levels outside the band merged into the terminals"""
    def node(v: Vertex) -> Hashable:
        if v.n < -band:
            return BOTTOM
        if v.n > band:
            return TOP
        return v

    edges = []
    for n in range(-N, N + 1):
        for m in range(params.k):
            for dir in (H, V):
                edge = Edge(Vertex(m, n), dir)
                u, v = params.endpoints(edge)
                if abs(v.n) > N:
                    continue
                a, b = node(u), node(v)
                if a != b:
                    edges.append((edge, a, b))
    return edges


def flow_network(edges: List[Tuple[Edge, Hashable, Hashable]]) -> nx.DiGraph:
    """Unit capacity per edge in both directions; parallel edges add up"""
    network = nx.DiGraph()
    network.add_nodes_from((BOTTOM, TOP))
    for _, a, b in edges:
        for x, y in ((a, b), (b, a)):
            if network.has_edge(x, y):
                network[x][y]["capacity"] += 1
            else:
                network.add_edge(x, y, capacity=1)
    return network


class CutSearch:
    """Depth-first assignment of band vertices to the bottom or top side"""

    def __init__(self, params: GklParams, max_edges: int, N: int, band: int, budget: int):
        self.params = params
        self.max_edges = max_edges
        self.budget = budget
        self.edges = banded_edges(params, N, band)
        self.network = flow_network(self.edges)
        self.free = sorted((v for v in self.network if v not in (BOTTOM, TOP)), key=lambda v: (v.n, v.m))
        self.side: Dict[Vertex, str] = {}
        self.cuts: List[FrozenSet[Edge]] = []
        self.explored = 0

    def lower_bound(self) -> int:
        """Smallest cut of any completion of the current assignment"""
        trial = self.network.copy()
        for v, side in self.side.items():
            if side == BOTTOM:
                trial.add_edge(BOTTOM, v, capacity=UNBOUNDED)
            else:
                trial.add_edge(v, TOP, capacity=UNBOUNDED)
        return nx.maximum_flow_value(trial, BOTTOM, TOP)

    def current_cut(self) -> FrozenSet[Edge]:
        def side_of(x: Hashable) -> str:
            return x if x in (BOTTOM, TOP) else self.side[x]
        return frozenset(edge for edge, a, b in self.edges if side_of(a) != side_of(b))

    def branch(self, index: int):
        self.explored += 1
        if self.explored > self.budget:
            raise BudgetExceeded(f"cut search for {self.params} explored more than {self.budget} nodes",
                                 {"budget": self.budget, "max_edges": self.max_edges})
        if self.lower_bound() > self.max_edges:
            return
        if index == len(self.free):
            self.cuts.append(self.current_cut())
            return
        v = self.free[index]
        for side in (BOTTOM, TOP):
            self.side[v] = side
            self.branch(index + 1)
        del self.side[v]

    def run(self) -> List[FrozenSet[Edge]]:
        self.branch(0)
        return self.cuts


def enumerate_small_cuts(params: GklParams, max_edges: int, N: int,
                         band: int = Config.CUT_BAND, budget: int = Config.CUT_BUDGET) -> CutCensus:
    """Sizes of all separating cuts with at most max_edges edges, all edges touching the band"""
    params.require_four_regular()
    if max_edges > MAX_CUT_EDGES or N > MAX_CUT_WINDOW:
        raise UsageError(f"desk-scale limits: max_edges <= {MAX_CUT_EDGES}, N <= {MAX_CUT_WINDOW}")
    if N <= band + abs(params.l) + 1:
        raise UsageError(f"window N={N} must exceed band + |l| + 1 = {band + abs(params.l) + 1}")

    search = CutSearch(params, max_edges, N, band, budget)
    graph = truncated_graph(params, N)
    cuts = []
    for cut in search.run():
        if separates(graph, params, cut):
            cuts.append(cut)
        else:
            logger.warning(f"{params}: candidate cut of size {len(cut)} does not separate the boundaries")

    census = CutCensus(params, max_edges, N, tuple(sorted(len(cut) for cut in cuts)),
                       search.explored, tuple(cuts))
    logger.info(f"{params}: {len(cuts)} separating cuts with <= {max_edges} edges, "
                f"{search.explored} nodes, odd={census.has_odd_cut}")
    return census
