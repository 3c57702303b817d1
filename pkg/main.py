#!/usr/bin/env python3
"""
hamcay - Hamiltonian decompositions of the 4-regular Cayley graphs G_{k,l}
Command-line entry point
"""

import sys
import json
import logging
import argparse
from typing import List, Optional, TextIO

from config import Config
from core.errors import HamcayError, UsageError

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


class HamcayArgumentParser(argparse.ArgumentParser):
    """Usage errors become UsageError so they share the exit-code contract"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def show_version() -> str:
    return f"hamcay {Config.VERSION} | Hamiltonian decompositions of G_{{k,l}}"


class HamcayApp:
    """Parses arguments, loads configuration and dispatches to a command handler"""

    def __init__(self, out: TextIO = None, err: TextIO = None):
        self.out = out or sys.stdout
        self.err = err or sys.stderr
        self.config = Config()
        self.parser = self._build_parser()

    def _build_parser(self) -> argparse.ArgumentParser:
        from commands.classify_command import ClassifyCommand
        from commands.cuts_command import CutsCommand
        from commands.decompose_command import DecomposeCommand
        from commands.fixture_command import FixtureCommand
        from commands.render_command import RenderCommand
        from commands.search_command import SearchCommand
        from commands.verify_command import VerifyCommand

        parser = HamcayArgumentParser(prog="hamcay", description=show_version())
        parser.add_argument("--config", help="key = value settings file (default: $HAMCAY_CONFIG)")
        parser.add_argument("--verbose", action="store_true", help="log construction steps")
        parser.add_argument("--debug", action="store_true", help="log search and trace detail")
        parser.add_argument("--version", action="store_true", help="print the version and exit")
        subparsers = parser.add_subparsers(dest="command")

        self.commands = [cls(self) for cls in (ClassifyCommand, DecomposeCommand, VerifyCommand,
                                               RenderCommand, SearchCommand, CutsCommand,
                                               FixtureCommand)]
        for command in self.commands:
            command.register(subparsers)
        return parser

    def _configure(self, args):
        level = "DEBUG" if args.debug else "INFO" if args.verbose else None
        self.config = Config.load(args.config).with_overrides(log_level=level)
        logging.basicConfig(level=getattr(logging, self.config.LOG_LEVEL.upper(), logging.WARNING),
                            format=LOG_FORMAT, stream=self.err, force=True)

    def run(self, argv: Optional[List[str]] = None) -> int:
        try:
            args = self.parser.parse_args(argv)
            if args.version:
                self.out.write(show_version() + "\n")
                return 0
            if not args.command:
                raise UsageError("missing subcommand; see --help")
            self._configure(args)
            return args.handler(args)
        except HamcayError as e:
            self.err.write(f"hamcay: {e.message}\n")
            if e.exit_code == 3:
                self.err.write(json.dumps(e.to_dict(), indent=2, sort_keys=True) + "\n")
            return e.exit_code
        except SystemExit as e:
            # --help
            return e.code if isinstance(e.code, int) else 0


def run(argv: Optional[List[str]] = None) -> int:
    return HamcayApp().run(argv)


def main():
    """Main application entry point"""
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        logger.error("Interrupted")
        sys.exit(130)


if __name__ == "__main__":
    main()
