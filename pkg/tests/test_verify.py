import numpy as np
import pytest

from core.cayley import GklParams, H, V
from core.errors import UsageError
from core.periodic import Decomposition, PeriodicEdgeSet
from constructor.lift import lift_base
from verifier.components import VerdictTag, classify_class
from verifier.verify import Mode, infer_mode, verify


FIXTURES = ["G21_mixed", "G22_circles", "G22_rays", "G31_circles", "G32_mixed",
            "G40_circles", "G40_rays", "G41_mixed", "G42_circles", "G42_rays"]


def hv_split(k: int, l: int) -> Decomposition:
    return Decomposition.from_class(PeriodicEdgeSet.all_of(GklParams(k, l), H))


class TestVerify:
    def test_g21_split_is_mixed(self):
        verdict = verify(hv_split(2, 1), Mode.MIXED)
        assert verdict.passed
        assert [c.label for c in verdict.classes] == ["HamiltonianDoubleRay", "HamiltonianCircle"]

    def test_g22_split_is_circles(self):
        assert verify(hv_split(2, 2), Mode.CIRCLES).passed

    def test_wrong_mode_names_the_circle_class(self):
        verdict = verify(hv_split(2, 1), Mode.RAYS)
        assert not verdict.passed
        assert verdict.witness["class"] == 2
        assert verdict.witness["tag"] == "HamiltonianCircle"

    def test_degree_failure(self):
        d = Decomposition(GklParams(2, 1), 1, np.ones((2, 1, 2), dtype=np.int8))
        verdict = verify(d, Mode.AUTO)
        assert verdict.failure == "degree"
        assert verdict.witness["class_1_degree"] == 4

    def test_auto_reports_achieved_mode(self):
        assert verify(hv_split(2, 1), Mode.AUTO).mode == Mode.MIXED
        assert infer_mode(hv_split(2, 2)) == Mode.CIRCLES

    def test_mixed_accepts_either_class_order(self):
        vertical_first = Decomposition.from_class(PeriodicEdgeSet.all_of(GklParams(2, 1), V))
        assert verify(vertical_first, Mode.MIXED).passed

    def test_verdict_serializes(self):
        doc = verify(hv_split(2, 1), Mode.MIXED).to_dict()
        assert doc["passed"] is True and doc["mode"] == "mixed"


class TestModeParse:
    @pytest.mark.parametrize("text,mode", [("rays", Mode.RAYS), ("DoubleRays", Mode.RAYS),
                                           ("circles", Mode.CIRCLES), (" Auto ", Mode.AUTO)])
    def test_aliases(self, text, mode):
        assert Mode.parse(text) == mode

    def test_unknown(self):
        with pytest.raises(UsageError):
            Mode.parse("spirals")


def assert_cut_parity(d: Decomposition):
    """Double-ray classes cross every level cut an odd number of times, circle classes an even number"""
    for color in (1, 2):
        tag = classify_class(d.class_edges(color)).tag
        assert tag in (VerdictTag.DOUBLE_RAY, VerdictTag.CIRCLE)
        for c in range(-d.period, d.period + 1):
            meets = sum(1 for edge in d.params.level_cut(c) if d.color_of(edge) == color)
            assert meets % 2 == (1 if tag == VerdictTag.DOUBLE_RAY else 0), (color, c, meets)


class TestCutParity:
    @pytest.mark.parametrize("name", FIXTURES)
    def test_fixtures(self, fixture, name):
        assert_cut_parity(fixture(name))

    @pytest.mark.parametrize("k,l,mode", [(3, 1, Mode.RAYS), (4, 2, Mode.RAYS), (4, 1, Mode.MIXED),
                                          (5, 2, Mode.MIXED), (4, 0, Mode.CIRCLES), (3, 2, Mode.MIXED)])
    def test_lifts(self, k, l, mode):
        assert_cut_parity(lift_base(GklParams(k, l), mode))

    def test_g21_split(self):
        assert_cut_parity(hv_split(2, 1))
