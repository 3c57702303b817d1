"""
Induction steps G_{k,l} -> G_{k+2,l} and G_{k,l} -> G_{k,l+2}.

extend_k cuts the graph along the vertical cut of wrap edges e_n at column
k-1 and inserts two new columns. Each wrap edge e_n of class i is replaced
by the walk

    W_n = (k-1, n) [R] [U]^(h_n - 1) [R] [D]^(h_n - 1) [R]

where h_n is the gap to the next wrap edge of the same class; the walks of
one class are disjoint and fill the two new columns between them.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple

import numpy as np

from core.cayley import GklParams
from core.errors import InvalidDecomposition, LNotPositive, NotPrevalent, VerificationRegression
from core.isomorphism import IsomorphismChain, IsomorphismStep
from core.periodic import Decomposition
from verifier.prevalence import prevalence
from verifier.verify import Mode, infer_mode, verify

logger = logging.getLogger(__name__)

HI, VI = 0, 1


@dataclass(frozen=True)
class ExtensionTrace:
    column: int
    owners: Tuple[int, ...]
    gaps: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {"column": self.column, "owners": list(self.owners), "gaps": list(self.gaps)}


def extension_trace(d: Decomposition, column: int) -> ExtensionTrace:
    """Owner class of each wrap-cut edge (column, n) and its gap h_n within a period"""
    p = d.period
    owners = tuple(int(d.coloring[column, n, HI]) for n in range(p))
    gaps = []
    for n in range(p):
        h = 1
        while owners[(n + h) % p] != owners[n]:
            h += 1
        gaps.append(h)
    return ExtensionTrace(column, owners, tuple(gaps))


def _require_mode(d: Decomposition) -> Mode:
    mode = infer_mode(d)
    if mode is None:
        raise InvalidDecomposition(f"{d.params} p={d.period} is not a decomposition into "
                                   f"Hamiltonian double-rays and circles", verify(d, Mode.AUTO).to_dict())
    return mode


def extend_k(d: Decomposition) -> Decomposition:
    """Decomposition of G_{k+2,l} of the same mode and period"""
    mode = _require_mode(d)
    report = prevalence(d)
    if not report.vertically_prevalent:
        raise NotPrevalent(f"{d.params} p={d.period} has no vertical cut shared by both classes", report)

    k, l, p = d.params.k, d.params.l, d.period
    column = k - 1 if (k - 1) in report.common_columns else max(report.common_columns)
    if column != k - 1:
        d = d.translate((k - 1 - column, 0))
    trace = extension_trace(d, k - 1)

    coloring = np.zeros((k + 2, p, 2), dtype=np.int8)
    coloring[:k, :, VI] = d.coloring[:, :, VI]
    coloring[:k - 1, :, HI] = d.coloring[:k - 1, :, HI]
    for n in range(p):
        color, h = trace.owners[n], trace.gaps[n]
        # the three horizontal edges of W_n: into column k at level n, across at n+h-1, out of k+1 at n
        for m, level in ((k - 1, n), (k, n + h - 1), (k + 1, n)):
            if coloring[m, level % p, HI]:
                raise VerificationRegression(f"walk edge ({m},{level},H) assigned twice")
            coloring[m, level % p, HI] = color
        for j in range(n, n + h - 1):
            for m in (k, k + 1):
                if coloring[m, j % p, VI]:
                    raise VerificationRegression(f"walk edge ({m},{j},V) assigned twice")
                coloring[m, j % p, VI] = color
    if not coloring.all():
        m, n, index = (int(x) for x in np.argwhere(coloring == 0)[0])
        raise VerificationRegression(f"edge ({m},{n},{'HV'[index]}) not covered by any walk")

    result = Decomposition(GklParams(k + 2, l), p, coloring,
                           d.provenance + (f"extend_k({k},{l})->({k + 2},{l}) column={column}",))
    verdict = verify(result, mode)
    if not verdict.passed:
        raise VerificationRegression(f"extend_k output fails {mode.value}", verdict.to_dict())
    after = prevalence(result)
    if k + 1 not in after.common_columns:
        raise VerificationRegression(f"new wrap column {k + 1} is not shared by both classes", after.to_dict())
    if report.horizontally_prevalent and not after.horizontally_prevalent:
        raise VerificationRegression("horizontal prevalence lost", after.to_dict())
    logger.info(f"Extended {d.params} to {result.params} (period {p}, column {column})")
    return result


def extend_l(d: Decomposition) -> Decomposition:
    """Decomposition of G_{k,l+2} via the transposed graph G_{l,k}"""
    k, l = d.params.k, d.params.l
    if l <= 0:
        raise LNotPositive(f"extend_l needs l > 0, got {d.params}", {"k": k, "l": l})
    mode_before = _require_mode(d)
    report = prevalence(d)
    if not report.horizontally_prevalent:
        raise NotPrevalent(f"{d.params} p={d.period} has no horizontal cut shared by both classes", report)

    there = IsomorphismChain.of(IsomorphismStep.transpose(d.params))
    extended = extend_k(d.transport(there, f"transpose({k},{l})->({l},{k})"))
    back = IsomorphismChain.of(IsomorphismStep.transpose(extended.params))
    result = extended.transport(back, f"transpose({l + 2},{k})->({k},{l + 2})")

    mode = infer_mode(result)
    after = prevalence(result)
    if mode != mode_before or not after.horizontally_prevalent:
        raise VerificationRegression(f"extend_l output for {result.params} lost its verdict or prevalence",
                                     after.to_dict())
    if report.vertically_prevalent and not after.vertically_prevalent:
        raise VerificationRegression("vertical prevalence lost", after.to_dict())
    logger.info(f"Extended {d.params} to {result.params} (period {result.period})")
    return result
