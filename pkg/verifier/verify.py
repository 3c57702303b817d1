import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from core.errors import UsageError
from core.periodic import Decomposition
from verifier.components import ClassVerdict, VerdictTag, classify_class

logger = logging.getLogger(__name__)


class Mode(str, Enum):
    RAYS = "rays"
    CIRCLES = "circles"
    MIXED = "mixed"
    AUTO = "auto"

    @classmethod
    def parse(cls, value: str) -> "Mode":
        aliases = {"doublerays": cls.RAYS, "double-rays": cls.RAYS}
        value = value.strip().lower()
        if value in aliases:
            return aliases[value]
        try:
            return cls(value)
        except ValueError:
            raise UsageError(f"unknown mode {value!r}; use rays, circles, mixed or auto") from None


EXPECTED_TAGS = {
    Mode.RAYS: (VerdictTag.DOUBLE_RAY, VerdictTag.DOUBLE_RAY),
    Mode.CIRCLES: (VerdictTag.CIRCLE, VerdictTag.CIRCLE),
    Mode.MIXED: (VerdictTag.DOUBLE_RAY, VerdictTag.CIRCLE),
}


@dataclass(frozen=True)
class Verdict:
    passed: bool
    mode: Mode
    classes: Tuple[Optional[ClassVerdict], Optional[ClassVerdict]] = (None, None)
    failure: Optional[str] = None
    witness: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "mode": self.mode.value,
            "classes": [c.to_dict() if c else None for c in self.classes],
            "failure": self.failure,
            "witness": self.witness,
        }


def mode_of(tags: Tuple[VerdictTag, VerdictTag]) -> Optional[Mode]:
    """The mode a pair of class verdicts satisfies, if any"""
    for mode, expected in EXPECTED_TAGS.items():
        if tuple(tags) == expected or (mode == Mode.MIXED and tuple(tags) == expected[::-1]):
            return mode
    return None


def verify(d: Decomposition, mode: Mode) -> Verdict:
    """Partition, degree condition and per-class verdicts against a mode"""
    violations = d.degree_violations()
    if violations:
        v, ones = violations[0]
        return Verdict(False, mode, failure="degree",
                       witness={"vertex": [v.m, v.n], "class_1_degree": ones})

    verdicts = (classify_class(d.class_edges(1)), classify_class(d.class_edges(2)))
    achieved = mode_of((verdicts[0].tag, verdicts[1].tag))
    if achieved is not None and (mode == Mode.AUTO or achieved == mode):
        return Verdict(True, achieved if mode == Mode.AUTO else mode, verdicts)

    wanted = EXPECTED_TAGS.get(mode)
    for index, verdict in enumerate(verdicts, start=1):
        mismatched = wanted is not None and mode != Mode.MIXED and verdict.tag != wanted[index - 1]
        if verdict.tag == VerdictTag.OTHER or mismatched:
            witness = {"class": index, **verdict.to_dict()}
            break
    else:
        witness = {"classes": [v.label for v in verdicts]}
    logger.info(f"{d.params} p={d.period} fails {mode.value}: {[v.label for v in verdicts]}")
    return Verdict(False, mode, verdicts, failure="class verdicts", witness=witness)


def infer_mode(d: Decomposition) -> Optional[Mode]:
    verdict = verify(d, Mode.AUTO)
    return verdict.mode if verdict.passed else None
