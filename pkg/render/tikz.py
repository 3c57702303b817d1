from render.layout import Layout, RenderSpec

PREAMBLE = ("\\documentclass[tikz,border=5pt]{standalone}\n"
            "\\begin{document}\n"
            "\\begin{tikzpicture}[scale=0.8]\n")
CLOSING = "\\end{tikzpicture}\n\\end{document}\n"


def _coord(x: float, y: float) -> str:
    return f"({x:g},{y:g})"


def to_tikz(drawing: Layout, spec: RenderSpec) -> str:
    """Standalone LaTeX document"""
    lines = []
    for s in drawing.segments:
        color = spec.palette[s.color - 1]
        lines.append(f"\\draw[{color}, thick] {_coord(*s.start)} -- {_coord(*s.end)};")
        if s.half == "right":
            lines.append(f"\\node[{color}, right] at {_coord(*s.end)} {{\\scriptsize {s.label}}};")
        elif s.half == "left":
            lines.append(f"\\node[{color}, left] at {_coord(*s.start)} {{\\scriptsize {s.label}}};")
    for v in drawing.vertices:
        lines.append(f"\\fill {_coord(v.m, v.n)} circle (2pt);")
    return PREAMBLE + "\n".join(lines) + "\n" + CLOSING
