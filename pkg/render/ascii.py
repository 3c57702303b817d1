"""Text grid: vertices 'o', class 1 edges '=' and '#', class 2 edges '-' and '|'"""
from typing import List

from render.layout import Layout, RenderSpec

H_CHARS = {1: "=", 2: "-"}
V_CHARS = {1: "#", 2: "|"}


def header(k: int, l: int, period: int, spec: RenderSpec) -> str:
    return f"G_{{{k},{l}}} p={period} n={spec.n_lo}..{spec.n_hi}"


def to_ascii(drawing: Layout, spec: RenderSpec, l: int, period: int) -> str:
    k = drawing.k
    w = max((len(s.label) for s in drawing.segments if s.label), default=1)
    width = 2 * w + 2 * k + 1
    rows: List[List[str]] = [[" "] * width for _ in range(2 * (drawing.top - drawing.bottom) + 1)]

    def row_of(level: float) -> int:
        return int(2 * (drawing.top - level))

    for v in drawing.vertices:
        rows[row_of(v.n)][w + 1 + 2 * v.m] = "o"
    for s in drawing.segments:
        if s.half == "right":
            row = rows[row_of(s.edge.n)]
            row[w + 2 * k] = H_CHARS[s.color]
            row[w + 2 * k + 1:w + 2 * k + 1 + len(s.label)] = list(s.label)
        elif s.half == "left":
            row = rows[row_of(s.edge.n - l)]
            row[w] = H_CHARS[s.color]
            row[w - len(s.label):w] = list(s.label)
        elif s.edge.dir == "H":
            rows[row_of(s.edge.n)][w + 2 + 2 * s.edge.m] = H_CHARS[s.color]
        else:
            rows[row_of(s.edge.n) - 1][w + 1 + 2 * s.edge.m] = V_CHARS[s.color]

    lines = [header(k, l, period, spec)] + ["".join(r).rstrip() for r in rows]
    return "\n".join(lines) + "\n"
