"""
Drawing convention shared by all output formats: vertex (m, n) sits at
(m, n); wrap edges {(k-1, n), (0, n-l)} are drawn as two half-edges leaving
the right border at level n and entering the left border at level n - l,
both marked with the same label. Labels count from 1 top to bottom by the
right-side level.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from core.cayley import Edge, H, V, Vertex
from core.errors import RangeTooSmall, UsageError
from core.periodic import Decomposition

logger = logging.getLogger(__name__)

FORMATS = ("ascii", "svg", "tikz")
LABEL_STYLES = ("number", "level")


@dataclass(frozen=True)
class RenderSpec:
    n_lo: int
    n_hi: int
    fmt: str = "ascii"
    palette: Tuple[str, str] = ("red", "blue")
    label_style: str = "number"

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}; use one of {', '.join(FORMATS)}")
        if self.label_style not in LABEL_STYLES:
            raise UsageError(f"unknown label style {self.label_style!r}")
        if len(self.palette) != 2:
            raise UsageError("palette needs exactly two colors")


@dataclass(frozen=True)
class Segment:
    """A drawn edge or half-edge from (x1, y1) to (x2, y2) in lattice units"""
    edge: Edge
    color: int
    start: Tuple[float, float]
    end: Tuple[float, float]
    half: Optional[str] = None
    label: Optional[str] = None


@dataclass(frozen=True)
class Layout:
    k: int
    top: int
    bottom: int
    vertices: Tuple[Vertex, ...]
    segments: Tuple[Segment, ...]

    @property
    def wrap_count(self) -> int:
        return sum(1 for s in self.segments if s.half == "right")


def layout(d: Decomposition, spec: RenderSpec) -> Layout:
    """Edges in range: V-edges with n_lo <= n < n_hi, H-edges with base level in [n_lo, n_hi]"""
    if spec.n_hi - spec.n_lo < 2 * d.period:
        raise RangeTooSmall(f"level range [{spec.n_lo},{spec.n_hi}] shows less than two periods "
                            f"(period {d.period})", {"n_lo": spec.n_lo, "n_hi": spec.n_hi, "period": d.period})
    k, l = d.params.k, d.params.l
    levels = range(spec.n_hi, spec.n_lo - 1, -1)
    vertices = tuple(Vertex(m, n) for n in levels for m in range(k))

    segments: List[Segment] = []
    label = 0
    for n in levels:
        for m in range(k - 1):
            edge = Edge(Vertex(m, n), H)
            segments.append(Segment(edge, d.color_of(edge), (m, n), (m + 1, n)))
        wrap = Edge(Vertex(k - 1, n), H)
        label += 1
        text = str(label) if spec.label_style == "number" else str(n)
        color = d.color_of(wrap)
        segments.append(Segment(wrap, color, (k - 1, n), (k - 0.5, n), "right", text))
        segments.append(Segment(wrap, color, (-0.5, n - l), (0, n - l), "left", text))
        if n < spec.n_hi:
            for m in range(k):
                edge = Edge(Vertex(m, n), V)
                segments.append(Segment(edge, d.color_of(edge), (m, n), (m, n + 1)))

    return Layout(k, max(spec.n_hi, spec.n_hi - l), min(spec.n_lo, spec.n_lo - l),
                  vertices, tuple(segments))
