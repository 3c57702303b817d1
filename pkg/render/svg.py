import svgwrite

from render.layout import Layout, RenderSpec

SCALE = 40
MARGIN = 30


def to_svg(drawing: Layout, spec: RenderSpec) -> str:
    """One line per non-wrap edge, two per wrap edge, one circle per vertex"""
    k = drawing.k

    def point(x: float, y: float):
        return (MARGIN + SCALE * (x + 1), MARGIN + SCALE * (drawing.top - y))

    dwg = svgwrite.Drawing(size=(2 * MARGIN + SCALE * (k + 1),
                                 2 * MARGIN + SCALE * (drawing.top - drawing.bottom)),
                           debug=False)
    edges = dwg.add(dwg.g(id="edges", stroke_width=3))
    labels = dwg.add(dwg.g(id="labels", font_size=12, font_family="monospace"))
    for s in drawing.segments:
        color = spec.palette[s.color - 1]
        start, end = point(*s.start), point(*s.end)
        edges.add(dwg.line(start, end, stroke=color))
        if s.half == "right":
            labels.add(dwg.text(s.label, insert=(end[0] + 3, end[1] + 4), fill=color))
        elif s.half == "left":
            labels.add(dwg.text(s.label, insert=(start[0] - 3, start[1] + 4), fill=color,
                                text_anchor="end"))

    vertices = dwg.add(dwg.g(id="vertices", fill="black"))
    for v in drawing.vertices:
        vertices.add(dwg.circle(center=point(v.m, v.n), r=4))
    return dwg.tostring()
