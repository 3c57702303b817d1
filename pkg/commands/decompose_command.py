import os
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Tuple

from commands.base_command import BaseCommand
from core import codec
from core.cayley import GklParams
from core.errors import HamcayError, UsageError
from core.file_manager import FileManager
from constructor.planner import decompose
from verifier.prevalence import prevalence
from verifier.verify import Mode

logger = logging.getLogger(__name__)


def summary(d) -> Dict[str, Any]:
    report = prevalence(d)
    mode = d.mode()
    return {
        "graph": str(d.params),
        "k": d.params.k,
        "l": d.params.l,
        "period": d.period,
        "mode": mode.value if mode else None,
        "vertically_prevalent": report.vertically_prevalent,
        "horizontally_prevalent": report.horizontally_prevalent,
        "provenance": list(d.provenance),
    }


def sweep_pairs(k_max: int, mode: Mode) -> List[Tuple[int, int]]:
    """Normalized 4-regular (k, l) with l <= k <= k_max compatible with the mode"""
    pairs = []
    for k in range(1, k_max + 1):
        for l in range(0, k + 1):
            if not GklParams(k, l).is_four_regular():
                continue
            even = (k - l) % 2 == 0
            if (mode in (Mode.RAYS, Mode.CIRCLES) and not even) or (mode == Mode.MIXED and even):
                continue
            pairs.append((k, l))
    return pairs


def sweep_job(k: int, l: int, mode_value: str, preference: str, out_dir: str) -> Dict[str, Any]:
    """One sweep entry; runs in a worker process"""
    try:
        d = decompose(GklParams(k, l), Mode(mode_value), preference)
        path = codec.write(os.path.join(out_dir, f"{d.params.name}.json"), d)
        return {**summary(d), "file": path, "passed": True}
    except HamcayError as e:
        return {"graph": str(GklParams(k, l)), "k": k, "l": l, "passed": False,
                "exit_code": e.exit_code, **e.to_dict()}


class DecomposeCommand(BaseCommand):
    """Construct a verified decomposition of G_{k,l}"""
    name = "decompose"

    def register(self, subparsers):
        parser = subparsers.add_parser(self.name, help="construct a Hamiltonian decomposition")
        parser.add_argument("--k", type=int)
        parser.add_argument("--l", type=int)
        parser.add_argument("--mode", default="auto", help="rays, circles, mixed or auto")
        parser.add_argument("--json", metavar="OUT", help="write the decomposition JSON to OUT ('-' for stdout)")
        parser.add_argument("--no-verify", action="store_true",
                            help="UNSAFE, for benchmarking only: skip the final verification")
        parser.add_argument("--sweep", type=int, metavar="KMAX",
                            help="decompose every normalized G_{k,l} with l <= k <= KMAX")
        parser.add_argument("--jobs", type=int, help="worker processes for --sweep")
        parser.add_argument("--out-dir", help="directory for --sweep output files")
        parser.set_defaults(handler=self.run)

    def run(self, args) -> int:
        mode = Mode.parse(args.mode)
        if args.sweep is not None:
            return self.run_sweep(args, mode)
        if args.k is None or args.l is None:
            raise UsageError("decompose needs --k and --l (or --sweep KMAX)")

        d = decompose(GklParams(args.k, args.l), mode, self.config.AUTO_PREFERENCE,
                      verify_result=not args.no_verify)
        if args.json == "-":
            self.emit(codec.dumps(d))
        elif args.json:
            codec.write(args.json, d)
            self.emit_json({**summary(d), "file": args.json})
        else:
            self.emit_json(summary(d))
        return 0

    def run_sweep(self, args, mode: Mode) -> int:
        if args.sweep < 1:
            raise UsageError(f"--sweep needs KMAX >= 1, got {args.sweep}")
        jobs = args.jobs or self.config.SWEEP_JOBS
        out_dir = FileManager.ensure_directory(args.out_dir or self.config.OUTPUT_DIR)
        pairs = sweep_pairs(args.sweep, mode)
        logger.info(f"Sweeping {len(pairs)} graphs with {jobs} job(s) into {out_dir}")

        job_args = [(k, l, mode.value, self.config.AUTO_PREFERENCE, out_dir) for k, l in pairs]
        if jobs == 1:
            results = [sweep_job(*a) for a in job_args]
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(sweep_job, *zip(*job_args)))

        failed = [r for r in results if not r["passed"]]
        for r in failed:
            logger.error(f"Sweep entry {r['graph']} failed: {r['message']}")
        self.emit_json({"k_max": args.sweep, "mode": mode.value, "count": len(results),
                        "failed": len(failed), "results": results})
        return max((r["exit_code"] for r in failed), default=0)
