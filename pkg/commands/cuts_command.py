import logging

from commands.base_command import BaseCommand
from core.cayley import GklParams
from verifier.cuts import enumerate_small_cuts

logger = logging.getLogger(__name__)


class CutsCommand(BaseCommand):
    """Census of small finite cuts"""
    name = "cuts"

    def register(self, subparsers):
        parser = subparsers.add_parser(self.name, help="enumerate small cuts separating the two ends")
        parser.add_argument("--k", type=int, required=True)
        parser.add_argument("--l", type=int, required=True)
        parser.add_argument("--max-edges", type=int, required=True)
        parser.add_argument("--window", type=int, metavar="N",
                            help="truncation half-height (default: band + |l| + 2)")
        parser.set_defaults(handler=self.run)

    def run(self, args) -> int:
        params = GklParams(args.k, args.l)
        band = self.config.CUT_BAND
        window = args.window if args.window is not None else band + abs(params.l) + 2
        logger.info(f"Cut census for {params.name} up to {args.max_edges} edges, window {window}")
        census = enumerate_small_cuts(params, args.max_edges, window, band, self.config.CUT_BUDGET)
        self.emit_json(census.to_dict())
        return 0
