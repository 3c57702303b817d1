import logging

from commands.base_command import BaseCommand
from core import codec
from core.errors import UsageError
from render.diagram_renderer import DiagramRenderer
from render.layout import RenderSpec

logger = logging.getLogger(__name__)


class RenderCommand(BaseCommand):
    name = "render"

    def register(self, subparsers):
        parser = subparsers.add_parser(self.name, help="draw a decomposition over a range of levels")
        parser.add_argument("file")
        parser.add_argument("--format", default="ascii", help="ascii, svg or tikz")
        parser.add_argument("--from", dest="n_lo", type=int, required=True)
        parser.add_argument("--to", dest="n_hi", type=int, required=True)
        parser.add_argument("--palette", default="red,blue", help="class colors C1,C2")
        parser.add_argument("--labels", default="number", help="wrap labels: number or level")
        parser.add_argument("--out", help="write to a file instead of stdout")
        parser.set_defaults(handler=self.run)

    def run(self, args) -> int:
        palette = tuple(c.strip() for c in args.palette.split(","))
        if len(palette) != 2 or not all(palette):
            raise UsageError(f"--palette needs two colors, got {args.palette!r}")
        d = codec.read(args.file)
        logger.info(f"Rendering {args.file} as {args.format} over levels {args.n_lo}..{args.n_hi}")
        spec = RenderSpec(args.n_lo, args.n_hi, args.format, palette, args.labels)
        if args.out:
            DiagramRenderer.save(d, spec, args.out)
        else:
            self.emit(DiagramRenderer.render(d, spec))
        return 0
