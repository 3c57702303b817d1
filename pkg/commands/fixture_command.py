import logging

from commands.base_command import BaseCommand
from core.errors import VerificationRegression
from fixtures.fixture_store import FixtureStore

logger = logging.getLogger(__name__)


class FixtureCommand(BaseCommand):
    """Committed figure patterns"""
    name = "fixtures"

    def register(self, subparsers):
        parser = subparsers.add_parser(self.name, help="list or re-verify the committed fixtures")
        group = parser.add_mutually_exclusive_group()
        group.add_argument("--list", action="store_true", help="list fixtures with their stored verdicts")
        group.add_argument("--check", action="store_true", help="re-verify every fixture")
        parser.set_defaults(handler=self.run)

    def run(self, args) -> int:
        store = FixtureStore(self.config.FIXTURE_DIR)
        if args.check:
            results = store.verify_all()
            failed = sorted(name for name, r in results.items() if not r["passed"])
            if failed:
                raise VerificationRegression(f"{len(failed)} fixture(s) fail: {', '.join(failed)}", results)
            self.emit_json(results)
            return 0

        for name in store.list_fixtures():
            stored = store.stored_verdict(name)
            self.emit(f"{name:<14} {stored['mode']:<8} {stored.get('caption', '')}")
        stats = store.get_statistics()
        logger.info(f"{stats['total_fixtures']} fixtures: {stats['by_mode']}")
        return 0
