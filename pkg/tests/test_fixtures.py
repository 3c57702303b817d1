import json
import shutil

import pytest

from core.errors import UnknownFixture, VerificationRegression
from fixtures.fixture_store import FixtureStore
from verifier.verify import Mode, verify

NAMES = ["G21_mixed", "G22_circles", "G22_rays", "G31_circles", "G32_mixed", "G40_circles",
         "G40_rays", "G41_mixed", "G42_circles", "G42_rays"]


class TestFixtureStore:
    def test_list(self, store):
        assert store.list_fixtures() == NAMES

    def test_g21_mixed(self, fixture):
        d = fixture("G21_mixed")
        assert d.period == 1
        assert verify(d, Mode.MIXED).passed
        assert d.provenance == ("fixture G21_mixed",)

    def test_g22_circles(self, fixture):
        assert verify(fixture("G22_circles"), Mode.CIRCLES).passed

    def test_verify_all(self, store):
        results = store.verify_all()
        assert sorted(results) == NAMES
        assert all(r["passed"] for r in results.values())

    def test_unknown(self, store):
        with pytest.raises(UnknownFixture):
            store.load("G99_rays")

    def test_statistics(self, store):
        stats = store.get_statistics()
        assert stats["total_fixtures"] == 10
        assert stats["by_mode"] == {"mixed": 3, "circles": 4, "rays": 3}

    def test_tampered_verdict(self, store, tmp_path):
        for suffix in (".json", ".verdict.json"):
            shutil.copy(f"{store.directory}/G42_rays{suffix}", tmp_path / f"G42_rays{suffix}")
        path = tmp_path / "G42_rays.verdict.json"
        stored = json.loads(path.read_text(encoding="utf-8"))
        stored["horizontally_prevalent"] = False
        path.write_text(json.dumps(stored), encoding="utf-8")

        with pytest.raises(VerificationRegression):
            FixtureStore(str(tmp_path)).load("G42_rays")
        assert FixtureStore(str(tmp_path)).verify_all()["G42_rays"]["passed"] is False
