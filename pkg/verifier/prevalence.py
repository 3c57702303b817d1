"""
Prevalence of the two classes in vertical and horizontal cuts.

A vertical cut is the orbit of a horizontal edge under Up, so it is named by
its column. A horizontal cut is the orbit of a vertical edge under Right;
Right^k = Up^-l, so the orbit of a level-n vertical edge covers every column
at the levels n - l*t, and with period p the cuts are the levels mod
gcd(l, p). A periodic class prevails in a cut as soon as it owns one edge of
the cut's orbit inside the window.
"""
import logging
from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, FrozenSet, Tuple

import numpy as np

from core.periodic import DIR_INDEX, Decomposition
from core.cayley import H, V

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassPrevalence:
    vertical_columns: FrozenSet[int]
    horizontal_residues: FrozenSet[int]
    vertical_in_every_column: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertical_columns": sorted(self.vertical_columns),
            "horizontal_residues": sorted(self.horizontal_residues),
            "vertical_in_every_column": self.vertical_in_every_column,
        }


@dataclass(frozen=True)
class PrevalenceReport:
    classes: Tuple[ClassPrevalence, ClassPrevalence]
    horizontal_modulus: int

    @property
    def common_columns(self) -> FrozenSet[int]:
        return self.classes[0].vertical_columns & self.classes[1].vertical_columns

    @property
    def common_residues(self) -> FrozenSet[int]:
        return self.classes[0].horizontal_residues & self.classes[1].horizontal_residues

    @property
    def vertically_prevalent(self) -> bool:
        return bool(self.common_columns)

    @property
    def horizontally_prevalent(self) -> bool:
        return bool(self.common_residues)

    @property
    def bi_prevalent(self) -> bool:
        return self.vertically_prevalent and self.horizontally_prevalent

    def to_dict(self) -> Dict[str, Any]:
        return {
            "classes": [c.to_dict() for c in self.classes],
            "horizontal_modulus": self.horizontal_modulus,
            "common_columns": sorted(self.common_columns),
            "common_residues": sorted(self.common_residues),
            "vertically_prevalent": self.vertically_prevalent,
            "horizontally_prevalent": self.horizontally_prevalent,
            "bi_prevalent": self.bi_prevalent,
        }


def prevalence(d: Decomposition) -> PrevalenceReport:
    modulus = gcd(d.params.l, d.period)
    per_class = []
    for i in (1, 2):
        mask = d.coloring == i
        horizontal = mask[:, :, DIR_INDEX[H]]
        vertical = mask[:, :, DIR_INDEX[V]]
        columns = frozenset(int(m) for m in np.flatnonzero(horizontal.any(axis=1)))
        residues = frozenset(int(n) % modulus for n in np.flatnonzero(vertical.any(axis=0)))
        per_class.append(ClassPrevalence(columns, residues, bool(vertical.any(axis=1).all())))
    report = PrevalenceReport((per_class[0], per_class[1]), modulus)
    logger.debug(f"Prevalence of {d.params} p={d.period}: columns {sorted(report.common_columns)}, "
                 f"residues {sorted(report.common_residues)} mod {modulus}")
    return report
