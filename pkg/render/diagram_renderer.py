import os
import logging

from config import Config
from core.file_manager import FileManager
from core.periodic import Decomposition
from render.ascii import to_ascii
from render.layout import RenderSpec, layout
from render.svg import to_svg
from render.tikz import to_tikz

logger = logging.getLogger(__name__)

EXTENSIONS = {"ascii": ".txt", "svg": ".svg", "tikz": ".tex"}


class DiagramRenderer:
    """Drawings of a decomposition over a window of levels"""

    @staticmethod
    def render(d: Decomposition, spec: RenderSpec) -> str:
        drawing = layout(d, spec)
        logger.debug(f"Rendering {d.params} levels {spec.n_lo}..{spec.n_hi} as {spec.fmt}: "
                     f"{len(drawing.segments)} segments, {drawing.wrap_count} wrap edges")
        if spec.fmt == "ascii":
            return to_ascii(drawing, spec, d.params.l, d.period)
        if spec.fmt == "svg":
            return to_svg(drawing, spec)
        return to_tikz(drawing, spec)

    @staticmethod
    def default_filename(d: Decomposition, spec: RenderSpec) -> str:
        stem = FileManager.safe_filename(f"{d.params.name}_p{d.period}_{spec.n_lo}_{spec.n_hi}")
        return os.path.join(Config.OUTPUT_DIR, stem + EXTENSIONS[spec.fmt])

    @staticmethod
    def save(d: Decomposition, spec: RenderSpec, path: str = None) -> str:
        """Render and write atomically; returns the written path"""
        path = path or DiagramRenderer.default_filename(d, spec)
        try:
            FileManager.write_text_atomic(path, DiagramRenderer.render(d, spec))
            logger.info(f"Diagram saved: {path}")
            return path
        except OSError as e:
            logger.error(f"Error saving diagram {path}: {e}")
            raise


def render(d: Decomposition, spec: RenderSpec) -> str:
    return DiagramRenderer.render(d, spec)
