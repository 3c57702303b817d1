import os
import json
from typing import Any, Dict, List, Optional
import logging

from config import Config
from core import codec
from core.errors import UnknownFixture, VerificationRegression
from core.file_manager import FileManager
from core.periodic import Decomposition
from verifier.prevalence import prevalence
from verifier.verify import Mode, verify

logger = logging.getLogger(__name__)

VERDICT_SUFFIX = ".verdict.json"


class FixtureStore:
    """Committed figure patterns, each re-verified against its stored verdict on load"""

    def __init__(self, directory: Optional[str] = None):
        self.directory = directory or Config.FIXTURE_DIR
        self._cache: Dict[str, Decomposition] = {}

    def list_fixtures(self) -> List[str]:
        """Names of all fixtures with a decomposition file"""
        names = []
        for path in FileManager.list_files(self.directory, "*.json"):
            filename = os.path.basename(path)
            if not filename.endswith(VERDICT_SUFFIX):
                names.append(filename[:-len(".json")])
        return names

    def stored_verdict(self, name: str) -> Dict[str, Any]:
        path = os.path.join(self.directory, name + VERDICT_SUFFIX)
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return json.load(f)
        except FileNotFoundError:
            raise UnknownFixture(f"fixture {name!r} has no stored verdict", {"name": name}) from None

    def load(self, name: str) -> Decomposition:
        """Fixture by name, checked against its stored verdict and prevalence flags"""
        if name in self._cache:
            return self._cache[name]

        path = os.path.join(self.directory, name + ".json")
        if not os.path.exists(path):
            raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(self.list_fixtures())}",
                                 {"name": name})
        d = codec.loads(FileManager.read_text(path))
        d = Decomposition(d.params, d.period, d.coloring, (f"fixture {name}",))
        self.check(name, d)
        self._cache[name] = d
        logger.info(f"Loaded fixture {name}: {d.params}, period {d.period}")
        return d

    def check(self, name: str, d: Decomposition) -> Dict[str, Any]:
        """Recompute verdict and prevalence and compare with the stored record"""
        stored = self.stored_verdict(name)
        verdict = verify(d, Mode.parse(stored["mode"]))
        report = prevalence(d)
        found = {
            "mode": stored["mode"],
            "classes": [c.label for c in verdict.classes] if verdict.classes[0] else None,
            "vertically_prevalent": report.vertically_prevalent,
            "horizontally_prevalent": report.horizontally_prevalent,
        }
        expected = {key: stored[key] for key in found}
        if not verdict.passed or found != expected:
            logger.error(f"Fixture {name} does not match its stored verdict: {found} != {expected}")
            raise VerificationRegression(f"fixture {name} does not match its stored verdict",
                                         {"found": found, "stored": expected})
        return found

    def verify_all(self) -> Dict[str, Any]:
        """Repository check over every committed fixture"""
        results = {}
        for name in self.list_fixtures():
            try:
                self.load(name)
                results[name] = {"passed": True, "caption": self.stored_verdict(name).get("caption", "")}
            except (UnknownFixture, VerificationRegression) as e:
                results[name] = {"passed": False, **e.to_dict()}
        return results

    def get_statistics(self) -> Dict[str, Any]:
        """Fixture counts per mode"""
        stats: Dict[str, Any] = {'total_fixtures': 0, 'by_mode': {}}
        try:
            for name in self.list_fixtures():
                mode = self.stored_verdict(name).get("mode", "unknown")
                stats['total_fixtures'] += 1
                stats['by_mode'][mode] = stats['by_mode'].get(mode, 0) + 1
            stats.update(FileManager.get_folder_stats(self.directory))
        except Exception as e:
            logger.error(f"Error getting fixture statistics: {e}")
        return stats


_default_store: Optional[FixtureStore] = None


def base_pattern(name: str) -> Decomposition:
    """Named figure fixture from the default store"""
    global _default_store
    if _default_store is None:
        _default_store = FixtureStore()
    return _default_store.load(name)
