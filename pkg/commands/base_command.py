import json
import logging
from typing import Any, Tuple

from core.errors import UsageError

logger = logging.getLogger(__name__)


def parse_pair(text: str) -> Tuple[int, ...]:
    """'3' -> (3,), '1,2' -> (1, 2)"""
    try:
        return tuple(int(part) for part in text.split(','))
    except ValueError:
        raise UsageError(f"expected an integer or an integer pair like 1,2; got {text!r}") from None


class BaseCommand:
    """Shared plumbing: access to the app's config and output streams"""
    name = ""

    def __init__(self, main_app):
        self.app = main_app

    @property
    def config(self):
        return self.app.config

    def emit(self, text: str):
        self.app.out.write(text if text.endswith("\n") else text + "\n")

    def emit_json(self, payload: Any):
        self.emit(json.dumps(payload, indent=2, sort_keys=True))

    def register(self, subparsers):
        raise NotImplementedError

    def run(self, args) -> int:
        raise NotImplementedError
