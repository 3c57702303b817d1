"""
Coordinate isomorphisms between graphs of the family G_{k,l}:
Flip G_{k,l} -> G_{k,-l}, Transpose G_{k,l} -> G_{l,k} (or G_{-l,-k} when
l < 0) and translations by a group element.
"""
import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Tuple, Union

from core.cayley import Edge, GklParams, H, V, Vertex
from core.errors import ChainMismatch, UsageError

logger = logging.getLogger(__name__)

IDENTITY = "Identity"
FLIP = "Flip"
TRANSPOSE = "Transpose"
TRANSLATE = "Translate"


def flipped(params: GklParams) -> GklParams:
    return GklParams(params.k, -params.l)


def transposed(params: GklParams) -> GklParams:
    if params.l == 0:
        raise UsageError(f"{params} has no transpose (l = 0)")
    if params.l > 0:
        return GklParams(params.l, params.k)
    return GklParams(-params.l, -params.k)


@dataclass(frozen=True)
class IsomorphismStep:
    """One primitive coordinate map between two graphs of the family"""
    kind: str
    source: GklParams
    target: GklParams
    shift: Tuple[int, int] = (0, 0)

    @classmethod
    def flip(cls, source: GklParams) -> "IsomorphismStep":
        return cls(FLIP, source, flipped(source))

    @classmethod
    def transpose(cls, source: GklParams) -> "IsomorphismStep":
        return cls(TRANSPOSE, source, transposed(source))

    @classmethod
    def translate(cls, params: GklParams, shift: Tuple[int, int]) -> "IsomorphismStep":
        return cls(TRANSLATE, params, params, (int(shift[0]), int(shift[1])))

    def inverse(self) -> "IsomorphismStep":
        if self.kind == TRANSLATE:
            return IsomorphismStep(TRANSLATE, self.target, self.source, (-self.shift[0], -self.shift[1]))
        return IsomorphismStep(self.kind, self.target, self.source)

    def map_vertex(self, v: Vertex) -> Vertex:
        if self.kind == FLIP:
            return self.target.canonicalize(v.m, -v.n)
        if self.kind == TRANSPOSE:
            return self.target.canonicalize(v.n, v.m)
        if self.kind == TRANSLATE:
            return self.target.canonicalize(v.m + self.shift[0], v.n + self.shift[1])
        return v

    def map_edge(self, e: Edge) -> Edge:
        if self.kind == FLIP:
            if e.dir == H:
                return Edge(self.target.canonicalize(e.m, -e.n), H)
            return Edge(self.target.canonicalize(e.m, -e.n - 1), V)
        if self.kind == TRANSPOSE:
            return Edge(self.map_vertex(e.base), V if e.dir == H else H)
        return Edge(self.map_vertex(e.base), e.dir)

    def vertical_period(self, period: int) -> int:
        """A vertical period of the image of an Up^period-invariant set"""
        if self.kind != TRANSPOSE:
            return period
        # Up^p becomes Right^p in the target, and Right^K = Up^-L there
        return abs(self.target.l) * period // gcd(period, self.target.k)

    def describe(self) -> str:
        if self.kind == TRANSLATE:
            return f"Translate{self.shift}"
        return f"{self.kind}({self.source}->{self.target})"


@dataclass(frozen=True)
class IsomorphismChain:
    """Composable coordinate maps from `source` to `target`, applied left to right"""
    source: GklParams
    target: GklParams
    steps: Tuple[IsomorphismStep, ...] = field(default_factory=tuple)

    def __post_init__(self):
        current = self.source
        for step in self.steps:
            if step.source != current:
                raise ChainMismatch(f"step {step.describe()} does not start at {current}")
            current = step.target
        if current != self.target:
            raise ChainMismatch(f"chain ends at {current}, expected {self.target}")

    @classmethod
    def identity(cls, params: GklParams) -> "IsomorphismChain":
        return cls(params, params, ())

    @classmethod
    def of(cls, *steps: IsomorphismStep) -> "IsomorphismChain":
        if not steps:
            raise UsageError("an empty chain needs explicit params; use identity()")
        return cls(steps[0].source, steps[-1].target, tuple(steps))

    def then(self, other: "IsomorphismChain") -> "IsomorphismChain":
        if other.source != self.target:
            raise ChainMismatch(f"cannot compose: {self.target} != {other.source}")
        return IsomorphismChain(self.source, other.target, self.steps + other.steps)

    def inverse(self) -> "IsomorphismChain":
        return IsomorphismChain(self.target, self.source,
                                tuple(step.inverse() for step in reversed(self.steps)))

    def map_vertex(self, v: Vertex) -> Vertex:
        v = self.source.canonicalize(*v)
        for step in self.steps:
            v = step.map_vertex(v)
        return v

    def map_edge(self, e: Edge) -> Edge:
        e = Edge(self.source.canonicalize(*e.base), e.dir)
        for step in self.steps:
            e = step.map_edge(e)
        return e

    def vertical_period(self, period: int) -> int:
        for step in self.steps:
            period = step.vertical_period(period)
        return period

    def describe(self) -> str:
        if not self.steps:
            return "Identity"
        return " then ".join(step.describe() for step in self.steps)


def map_through(chain: IsomorphismChain, x: Union[Vertex, Edge]) -> Union[Vertex, Edge]:
    """Image of a vertex or edge of the chain's source graph"""
    if isinstance(x, Edge):
        return chain.map_edge(x)
    return chain.map_vertex(Vertex(*x))


def normalize(params: GklParams) -> Tuple[GklParams, IsomorphismChain]:
    """Map G_{k,l} onto an isomorphic G_{k',l'} with k' >= l' >= 0"""
    params.require_four_regular()
    steps = []
    current = params
    if current.l < 0:
        steps.append(IsomorphismStep.flip(current))
        current = steps[-1].target
    if current.l > current.k:
        steps.append(IsomorphismStep.transpose(current))
        current = steps[-1].target
    chain = IsomorphismChain(params, current, tuple(steps))
    if steps:
        logger.info(f"Normalized {params} to {current} via {chain.describe()}")
    return current, chain
