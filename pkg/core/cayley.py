"""
Group and graph arithmetic for G_{k,l}, the Cayley graph of Z^2 / <(k,l)>
with generators Right = (1,0) and Up = (0,1).

Vertices are canonical coset representatives (m, n) with 0 <= m < k. The
three kinds of edges are vertical {(m,n),(m,n+1)}, horizontal
{(m,n),(m+1,n)} for m < k-1, and wrap edges {(k-1,n),(0,n-l)}.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Set, Tuple

from core.errors import NotFourRegular, UsageError

logger = logging.getLogger(__name__)

H = "H"
V = "V"
DIRECTIONS = (H, V)


class Vertex(NamedTuple):
    m: int
    n: int


class Edge(NamedTuple):
    """Undirected edge in canonical form: {base, base+Right} or {base, base+Up}"""
    base: Vertex
    dir: str

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def n(self) -> int:
        return self.base.n

    def sort_key(self) -> Tuple[int, int, int]:
        return (self.base.n, self.base.m, DIRECTIONS.index(self.dir))


@dataclass(frozen=True)
class GklParams:
    """The pair (k, l) defining G_{k,l}"""
    k: int
    l: int

    def __post_init__(self):
        if self.k < 1:
            raise UsageError(f"k must be at least 1, got {self.k}")

    def __str__(self) -> str:
        return f"G_{{{self.k},{self.l}}}"

    @property
    def name(self) -> str:
        return f"G{self.k}_{self.l}"

    def canonicalize(self, m: int, n: int) -> Vertex:
        """Canonical representative (m mod k, n - l*floor(m/k))"""
        t = m // self.k
        return Vertex(m - t * self.k, n - t * self.l)

    def is_four_regular(self) -> bool:
        """True iff Right, Up and their inverses are four distinct non-identity elements"""
        origin = Vertex(0, 0)
        images = {self.canonicalize(dm, dn) for dm, dn in ((1, 0), (-1, 0), (0, 1), (0, -1))}
        return len(images) == 4 and origin not in images

    def require_four_regular(self) -> "GklParams":
        if not self.is_four_regular():
            raise NotFourRegular(self.k, self.l)
        return self

    def satisfies_parity_P(self) -> bool:
        """Every finite cut is even iff k and l have the same parity"""
        self.require_four_regular()
        return (self.k - self.l) % 2 == 0

    def neighbors(self, v: Vertex) -> List[Vertex]:
        """v+Right, v-Right, v+Up, v-Up, canonicalized"""
        result = [
            self.canonicalize(v.m + 1, v.n),
            self.canonicalize(v.m - 1, v.n),
            Vertex(v.m, v.n + 1),
            Vertex(v.m, v.n - 1),
        ]
        if len(set(result)) != 4:
            raise NotFourRegular(self.k, self.l)
        return result

    def endpoints(self, edge: Edge) -> Tuple[Vertex, Vertex]:
        if edge.dir == H:
            return edge.base, self.canonicalize(edge.m + 1, edge.n)
        return edge.base, Vertex(edge.m, edge.n + 1)

    def incident_edges(self, v: Vertex) -> List[Tuple[Edge, int, Vertex]]:
        """The four edge-ends at v as (edge, side, neighbour); side 0 is the base end"""
        left = self.canonicalize(v.m - 1, v.n)
        return [
            (Edge(v, H), 0, self.canonicalize(v.m + 1, v.n)),
            (Edge(left, H), 1, left),
            (Edge(v, V), 0, Vertex(v.m, v.n + 1)),
            (Edge(Vertex(v.m, v.n - 1), V), 1, Vertex(v.m, v.n - 1)),
        ]

    def edge_between(self, u: Vertex, v: Vertex) -> Edge:
        """Canonical edge joining two adjacent vertices"""
        for edge, _, other in self.incident_edges(u):
            if other == v:
                return edge
        raise UsageError(f"{tuple(u)} and {tuple(v)} are not adjacent in {self}")

    def canonical_edge(self, m: int, n: int, dir: str) -> Edge:
        """Edge with base canonicalize(m, n); the edge set is invariant under the relation"""
        if dir not in DIRECTIONS:
            raise UsageError(f"edge direction must be H or V, got {dir!r}")
        return Edge(self.canonicalize(m, n), dir)

    def vertical_displacement(self, edge: Edge) -> int:
        """Level change walking an edge from its base end to its other end"""
        if edge.dir == V:
            return 1
        return -self.l if edge.m == self.k - 1 else 0

    def level_cut(self, c: int) -> Set[Edge]:
        """Edges with exactly one endpoint below level c; always k + |l| of them"""
        self.require_four_regular()
        cut = {Edge(Vertex(m, c - 1), V) for m in range(self.k)}
        if self.l > 0:
            levels = range(c, c + self.l)
        else:
            levels = range(c + self.l, c)
        cut.update(Edge(Vertex(self.k - 1, n), H) for n in levels)
        return cut

    def window_vertices(self, period: int) -> Iterator[Vertex]:
        """Vertices of the k x p window in (n, m) order"""
        for n in range(period):
            for m in range(self.k):
                yield Vertex(m, n)

    def window_edges(self, period: int) -> Iterator[Edge]:
        """The 2*k*p window edges sorted by (n, m, dir)"""
        for v in self.window_vertices(period):
            yield Edge(v, H)
            yield Edge(v, V)
