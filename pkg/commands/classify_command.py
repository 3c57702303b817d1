import logging

from commands.base_command import BaseCommand, parse_pair
from core.errors import UsageError
from core.lattice import classify_generators, classify_involution_presentation

logger = logging.getLogger(__name__)

GROUPS = {"Z2": 0, "Z": 1}


class ClassifyCommand(BaseCommand):
    """Identify Cay(Z + Z_m, {a, b}) as the square grid, a G_{k,l}, or neither"""
    name = "classify"

    def register(self, subparsers):
        parser = subparsers.add_parser(self.name, help="classify a two-generator Cayley graph")
        parser.add_argument("--group", default="Z2", help="Z2 (= Z+Z), Z, or Z+Zm with --m")
        parser.add_argument("--m", type=int, help="torsion order for --group Z+Zm")
        parser.add_argument("--a", help="first generator, e.g. 1,0")
        parser.add_argument("--b", help="second generator, e.g. 2,1")
        parser.add_argument("--involutions", type=int, metavar="N",
                            help="look up a generating set of size N (3 or 4) containing involutions")
        parser.add_argument("--finite-order", action="store_true",
                            help="with --involutions 3: the non-involution has finite order")
        parser.set_defaults(handler=self.run)

    def torsion(self, args) -> int:
        if args.group in GROUPS:
            return GROUPS[args.group]
        if args.group in ("Z+Zm", "Z+Z_m"):
            if args.m is None or args.m < 2:
                raise UsageError("--group Z+Zm needs --m M with M >= 2")
            return args.m
        raise UsageError(f"unknown group {args.group!r}; use Z2, Z or Z+Zm")

    def run(self, args) -> int:
        if args.involutions is not None:
            result = classify_involution_presentation(args.involutions, not args.finite_order)
        else:
            if args.a is None or args.b is None:
                raise UsageError("classify needs --a and --b (or --involutions N)")
            result = classify_generators(self.torsion(args), parse_pair(args.a), parse_pair(args.b))
        logger.info(f"Classification: {result.tag.value}")
        self.emit_json(result.to_dict())
        return 0
