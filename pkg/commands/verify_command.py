import logging

from commands.base_command import BaseCommand
from core import codec
from core.errors import VerificationFailed
from verifier.oracle import window_oracle
from verifier.prevalence import prevalence
from verifier.verify import Mode, verify

logger = logging.getLogger(__name__)


class VerifyCommand(BaseCommand):
    """Check a decomposition JSON file against a mode"""
    name = "verify"

    def register(self, subparsers):
        parser = subparsers.add_parser(self.name, help="verify a decomposition JSON file")
        parser.add_argument("file")
        parser.add_argument("--mode", default="auto", help="rays, circles, mixed or auto")
        parser.add_argument("--oracle", action="store_true",
                            help="also compare against the truncated-window oracle")
        parser.add_argument("--window", type=int, metavar="N", help="oracle window half-height")
        parser.set_defaults(handler=self.run)

    def run(self, args) -> int:
        d = codec.read(args.file)
        verdict = verify(d, Mode.parse(args.mode))
        result = {"file": args.file, "graph": str(d.params), "period": d.period,
                  "verdict": verdict.to_dict()}
        if not verdict.passed:
            raise VerificationFailed(f"{args.file} fails {verdict.mode.value}: {verdict.failure}",
                                     verdict.to_dict())

        result["prevalence"] = prevalence(d).to_dict()
        if args.oracle:
            oracle = window_oracle(d, args.window, self.config.ORACLE_WINDOW_MULTIPLIER)
            result["oracle"] = oracle.to_dict()
            if not oracle.passed:
                raise VerificationFailed(f"window oracle disagrees on {args.file}", oracle.to_dict())
        self.emit_json(result)
        return 0
