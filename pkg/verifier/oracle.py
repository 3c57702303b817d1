"""
Brute-force cross-check of the winding classifier on a finite truncation.

The truncation keeps the levels |n| <= N. Each class is cut into paths and
cycles; paths that reach both boundary bands are the visible parts of the
class's infinite components.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from config import Config
from core.cayley import DIRECTIONS, Edge, Vertex
from core.errors import WindowTooSmall
from core.periodic import Decomposition
from verifier.components import classify_class

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleVerdict:
    passed: bool
    window: int
    oracle_labels: Tuple[str, ...] = ()
    classifier_labels: Tuple[str, ...] = ()
    failure: Optional[str] = None
    witness: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "window": self.window,
            "oracle": list(self.oracle_labels),
            "classifier": list(self.classifier_labels),
            "failure": self.failure,
            "witness": self.witness,
        }


def truncated_class_graph(d: Decomposition, color: int, N: int) -> nx.Graph:
    """Subgraph of class `color` induced on the levels |n| <= N"""
    params, p = d.params, d.period
    graph = nx.Graph()
    graph.add_nodes_from(Vertex(m, n) for n in range(-N, N + 1) for m in range(params.k))
    for n in range(-N, N + 1):
        for m in range(params.k):
            for index, dir in enumerate(DIRECTIONS):
                if d.coloring[m, n % p, index] != color:
                    continue
                u, v = params.endpoints(Edge(Vertex(m, n), dir))
                if abs(v.n) <= N:
                    graph.add_edge(u, v)
    return graph


def _oracle_label(graph: nx.Graph, N: int, margin: int) -> Tuple[str, Dict[str, Any]]:
    endpoints = [v for v in graph if graph.degree(v) < 2]
    interior = [v for v in endpoints if N - abs(v.n) > margin]
    if interior:
        v = min(interior, key=lambda x: (x.n, x.m))
        return "InteriorEndpoint", {"vertex": [v.m, v.n]}

    paths = long_paths = 0
    path_ends = 0
    for component in nx.connected_components(graph):
        if all(graph.degree(v) == 2 for v in component):
            v = min(component, key=lambda x: (x.n, x.m))
            return "FiniteCycle", {"vertex": [v.m, v.n], "size": len(component)}
        paths += 1
        # a single vertex is both ends of its path
        path_ends += 1 if len(component) == 1 else 2
        levels = [v.n for v in component]
        if min(levels) <= -N + margin and max(levels) >= N - margin:
            long_paths += 1

    witness = {"long_paths": long_paths, "paths": paths, "endpoints": len(endpoints)}
    if len(endpoints) != path_ends:
        return "BranchingComponent", witness
    if long_paths == 1:
        return "HamiltonianDoubleRay", witness
    if long_paths == 2:
        return "HamiltonianCircle", witness
    return "TooManyComponents", witness


def window_oracle(d: Decomposition, N: Optional[int] = None,
                  multiplier: int = Config.ORACLE_WINDOW_MULTIPLIER) -> OracleVerdict:
    """Compare per-class component structure of a truncation with classify_class"""
    params, p = d.params, d.period
    margin = params.k + abs(params.l)
    if N is None:
        N = multiplier * p * margin
    if N < 3 * p:
        raise WindowTooSmall(f"window N={N} is smaller than 3*p={3 * p}", {"N": N, "period": p})
    if N <= 2 * margin:
        raise WindowTooSmall(f"window N={N} leaves no interior between the boundary bands of width {margin}",
                             {"N": N, "margin": margin})

    violations = d.degree_violations()
    if violations:
        v, ones = violations[0]
        return OracleVerdict(False, N, failure="degree",
                             witness={"vertex": [v.m, v.n], "class_1_degree": ones})

    oracle_labels: List[str] = []
    classifier_labels: List[str] = []
    witnesses = {}
    for color in (1, 2):
        label, witness = _oracle_label(truncated_class_graph(d, color, N), N, margin)
        oracle_labels.append(label)
        classifier_labels.append(classify_class(d.class_edges(color)).label)
        witnesses[f"class_{color}"] = witness

    passed = oracle_labels == classifier_labels
    if not passed:
        logger.error(f"Oracle disagrees with classifier on {params} p={p}: "
                     f"{oracle_labels} vs {classifier_labels}")
    return OracleVerdict(passed, N, tuple(oracle_labels), tuple(classifier_labels),
                         None if passed else "internal-consistency", witnesses)
