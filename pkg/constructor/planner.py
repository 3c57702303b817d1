"""
Plans for decomposing any 4-regular G_{k,l}.

After normalizing to k >= l >= 0 the construction starts from a fixture or a
quotient lift and applies extend_l until l is reached, then extend_k until k
is reached. Both steps move in increments of two, so the base is chosen with
the parity of the target.
"""
import logging

from config import Config
from core.cayley import GklParams
from core.errors import (NotFourRegular, ParityMismatch, SquareGridUnsupported, UsageError,
                         VerificationRegression)
from core.isomorphism import normalize
from core.lattice import ClassificationResult, ClassificationTag
from core.periodic import Decomposition
from constructor.extension import extend_k, extend_l
from constructor.lift import lift_base
from fixtures.fixture_store import base_pattern
from verifier.prevalence import prevalence
from verifier.verify import Mode, verify

logger = logging.getLogger(__name__)


def resolve_mode(params: GklParams, mode: Mode, preference: str = Config.AUTO_PREFERENCE) -> Mode:
    """Pick the mode for auto and reject modes that contradict the cut parity"""
    parity = params.satisfies_parity_P()
    if mode == Mode.AUTO:
        return Mode.parse(preference) if parity else Mode.MIXED

    cut = params.level_cut(0)
    if mode in (Mode.RAYS, Mode.CIRCLES) and not parity:
        raise ParityMismatch(
            f"{params} has an odd finite cut: the level cut at 0 has {len(cut)} edges. "
            f"A Hamiltonian double-ray meets it an odd number of times and a Hamiltonian circle "
            f"an even number, so two classes of the same kind cannot cover it",
            {"k": params.k, "l": params.l, "cut_size": len(cut), "mode": mode.value})
    if mode == Mode.MIXED and parity:
        raise ParityMismatch(
            f"every finite cut of {params} is even (the level cut at 0 has {len(cut)} edges), "
            f"but a double-ray plus a circle meets it an odd number of times",
            {"k": params.k, "l": params.l, "cut_size": len(cut), "mode": mode.value})
    return mode


def _extend_l_to(d: Decomposition, l: int) -> Decomposition:
    while d.params.l < l:
        d = extend_l(d)
    return d


def _extend_k_to(d: Decomposition, k: int) -> Decomposition:
    while d.params.k < k:
        d = extend_k(d)
    return d


def _base_and_extend(base: Decomposition, k: int, l: int) -> Decomposition:
    d = _extend_k_to(_extend_l_to(base, l), k)
    if d.params != GklParams(k, l):
        raise VerificationRegression(f"plan overshot: reached {d.params}, wanted G_{{{k},{l}}}")
    return d


def build_normalized(params: GklParams, mode: Mode) -> Decomposition:
    """Construction for k >= l >= 0 in the resolved mode"""
    k, l = params.k, params.l
    l0 = 1 if l % 2 else 2

    if mode == Mode.RAYS:
        if (k, l) == (2, 2):
            return base_pattern("G22_rays")
        if l == 0:
            return _base_and_extend(base_pattern("G40_rays"), k, l)
        return _base_and_extend(lift_base(GklParams(l0 + 2, l0), mode, require_prevalence=True), k, l)

    if mode == Mode.CIRCLES:
        if (k, l) == (2, 2):
            return base_pattern("G22_circles")
        if l == 0:
            return _base_and_extend(lift_base(GklParams(4, 0), mode, require_prevalence=True), k, l)
        fixture = "G31_circles" if l % 2 else "G42_circles"
        return _base_and_extend(base_pattern(fixture), k, l)

    if mode == Mode.MIXED:
        if (k, l) == (2, 1):
            return base_pattern("G21_mixed")
        if (k, l) == (3, 2):
            return lift_base(params, mode)
        if l == 0:
            return _base_and_extend(lift_base(GklParams(3, 0), mode, require_prevalence=True), k, l)
        return _base_and_extend(lift_base(GklParams(l0 + 3, l0), mode, require_prevalence=True), k, l)

    raise UsageError(f"cannot build mode {mode.value}")


def decompose(params: GklParams, mode: Mode, preference: str = Config.AUTO_PREFERENCE,
              verify_result: bool = True) -> Decomposition:
    """Decomposition of G_{k,l} in the requested mode, in the caller's coordinates"""
    params.require_four_regular()
    normalized, chain = normalize(params)
    resolved = resolve_mode(params, mode, preference)
    logger.info(f"Decomposing {params} as {normalized} into {resolved.value}")

    d = build_normalized(normalized, resolved)
    if chain.steps:
        d = d.transport(chain.inverse(), f"denormalize[{chain.inverse().describe()}]")

    if not verify_result:
        logger.warning(f"Skipping final verification of {params}")
        return d
    verdict = verify(d, resolved)
    if not verdict.passed:
        raise VerificationRegression(f"constructed decomposition of {params} fails {resolved.value}",
                                     verdict.to_dict())
    logger.info(f"{params}: {resolved.value} with period {d.period}, "
                f"bi-prevalent={prevalence(d).bi_prevalent}")
    return d


def decompose_classified(result: ClassificationResult, mode: Mode,
                         preference: str = Config.AUTO_PREFERENCE) -> Decomposition:
    if result.tag == ClassificationTag.SQUARE_GRID:
        raise SquareGridUnsupported("the square grid is not one of the graphs G_{k,l}")
    if result.tag != ClassificationTag.GKL or result.params is None:
        if result.params is not None:
            raise NotFourRegular(result.params.k, result.params.l)
        raise UsageError(f"nothing to decompose: {result.tag.value} ({result.reason})")
    return decompose(result.params, mode, preference)
