import logging

from commands.base_command import BaseCommand
from commands.decompose_command import summary
from core import codec
from core.cayley import GklParams
from constructor.search import search_decomposition
from verifier.verify import Mode

logger = logging.getLogger(__name__)


class SearchCommand(BaseCommand):
    """Exhaustive search over small periods"""
    name = "search"

    def register(self, subparsers):
        parser = subparsers.add_parser(self.name, help="exhaustive search for a periodic decomposition")
        parser.add_argument("--k", type=int, required=True)
        parser.add_argument("--l", type=int, required=True)
        parser.add_argument("--pmax", type=int, required=True)
        parser.add_argument("--mode", default="auto", help="rays, circles, mixed or auto")
        parser.add_argument("--bi-prevalent", action="store_true", help="only accept bi-prevalent solutions")
        parser.add_argument("--json", metavar="OUT", help="write the solution JSON to OUT")
        parser.set_defaults(handler=self.run)

    def run(self, args) -> int:
        d = search_decomposition(GklParams(args.k, args.l), args.pmax, Mode.parse(args.mode),
                                 args.bi_prevalent, self.config.SEARCH_BUDGET)
        if args.json:
            codec.write(args.json, d)
            logger.info(f"Search result written to {args.json}")
        self.emit_json(summary(d))
        return 0
