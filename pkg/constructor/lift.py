"""
Base decompositions lifted from a Hamiltonian cycle of a cyclic quotient.

With q = |k + l| the map pi(m, n) = (m + n) mod q is a homomorphism onto Z_q
whose kernel contains (k, l) and the diagonal D = Right^-1 * Up. Both Right
and Up map to +1, so the Cayley graph of the quotient is a q-cycle with
doubled edges. Choosing one of the two edges at every position gives a
Hamiltonian cycle C; its preimage under pi is class 1 and the preimage of the
other choices is class 2. If C uses a Right-edges and b = q - a Up-edges, its
signed sum (a, b) is congruent to D^t with t = s*k - a where s = sign(k + l);
|t| = 1 lifts to one double-ray and |t| = 2 to a circle.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, Tuple

import numpy as np

from core.cayley import GklParams
from core.errors import NoLiftSolution, QuotientTooSmall, UsageError
from core.periodic import Decomposition
from verifier.prevalence import prevalence
from verifier.verify import Mode, verify

logger = logging.getLogger(__name__)

TARGETS = {
    Mode.RAYS: (1, 1),
    Mode.CIRCLES: (2, 2),
    Mode.MIXED: (1, 2),
}


@dataclass(frozen=True)
class LiftSpec:
    params: GklParams
    q: int
    a: int
    b: int
    t: int
    complement_t: int
    positions: Tuple[int, ...] = ()

    def describe(self) -> str:
        return (f"lift_base({self.params.k},{self.params.l}) q={self.q} a={self.a} b={self.b} "
                f"t={self.t} t'={self.complement_t} positions={list(self.positions)}")


def quotient_order(params: GklParams) -> int:
    q = abs(params.k + params.l)
    if q < 3:
        raise QuotientTooSmall(f"{params} has quotient order {q} < 3", {"q": q})
    return q


def candidate_specs(params: GklParams, mode: Mode) -> Iterator[LiftSpec]:
    """Label counts a in ascending order whose class targets match the mode"""
    params.require_four_regular()
    if mode not in TARGETS:
        raise UsageError(f"lift needs rays, circles or mixed, got {mode.value}")
    q = quotient_order(params)
    s = 1 if params.k + params.l > 0 else -1
    want, want_complement = TARGETS[mode]
    for a in range(q + 1):
        t = s * params.k - a
        # complement takes the other label everywhere: a' = q - a
        complement_t = a - s * params.l
        if abs(t) == want and abs(complement_t) == want_complement:
            yield LiftSpec(params, q, a, q - a, t, complement_t)


def lift_decomposition(spec: LiftSpec, positions: Tuple[int, ...]) -> Decomposition:
    """Class 1 holds (m, n, H) iff pi(m, n) is a Right position, (m, n, V) otherwise"""
    k, q = spec.params.k, spec.q
    horizontal = np.zeros(q, dtype=bool)
    horizontal[list(positions)] = True
    pi = (np.arange(k)[:, None] + np.arange(q)[None, :]) % q
    coloring = np.empty((k, q, 2), dtype=np.int8)
    coloring[:, :, 0] = np.where(horizontal[pi], 1, 2)
    coloring[:, :, 1] = np.where(horizontal[pi], 2, 1)
    described = LiftSpec(spec.params, spec.q, spec.a, spec.b, spec.t, spec.complement_t, tuple(positions))
    return Decomposition(spec.params, q, coloring, (described.describe(),))


def solve_lift(params: GklParams, mode: Mode, require_prevalence: bool = False) -> Tuple[LiftSpec, Decomposition]:
    """First admissible label placement in lexicographic order"""
    for spec in candidate_specs(params, mode):
        for positions in itertools.combinations(range(spec.q), spec.a):
            d = lift_decomposition(spec, positions)
            if not verify(d, mode).passed:
                logger.debug(f"{params} a={spec.a} positions {positions} fails {mode.value}")
                continue
            if require_prevalence and not prevalence(d).bi_prevalent:
                logger.debug(f"{params} a={spec.a} positions {positions} is not bi-prevalent")
                continue
            solved = LiftSpec(params, spec.q, spec.a, spec.b, spec.t, spec.complement_t, tuple(positions))
            logger.info(f"Solved {solved.describe()} for {mode.value}")
            return solved, d
    raise NoLiftSolution(f"no Hamiltonian cycle of the quotient of {params} lifts to {mode.value}",
                         {"k": params.k, "l": params.l, "mode": mode.value})


def lift_base(params: GklParams, mode: Mode, require_prevalence: bool = False) -> Decomposition:
    _, d = solve_lift(params, mode, require_prevalence)
    return d.minimize_period()
