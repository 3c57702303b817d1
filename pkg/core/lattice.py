"""
Classification of 4-regular Cayley graphs of two-generator presentations of
Z + Z_m via the kernel lattice of (x, y) -> x*a + y*b.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union

from sympy import Matrix, eye
from sympy.core.intfunc import igcdex

from core.cayley import GklParams
from core.errors import NotGenerating, UsageError

logger = logging.getLogger(__name__)

GroupElement = Union[int, Sequence[int]]


class ClassificationTag(str, Enum):
    SQUARE_GRID = "SquareGrid"
    GKL = "Gkl"
    NOT_FOUR_REGULAR_INFINITE = "NotFourRegularInfinite"
    FINITE_GROUP = "FiniteGroup"


@dataclass(frozen=True)
class ClassificationResult:
    tag: ClassificationTag
    params: Optional[GklParams] = None
    iso: str = ""
    reason: str = ""

    def to_dict(self) -> dict:
        result = {"tag": self.tag.value}
        if self.params is not None:
            result["k"] = self.params.k
            result["l"] = self.params.l
        if self.iso:
            result["iso"] = self.iso
        if self.reason:
            result["reason"] = self.reason
        return result


def column_hermite(A: Matrix) -> Tuple[Matrix, Matrix, List[int]]:
    """Column echelon form H = A*U with U unimodular; returns (H, U, pivot values)"""
    H = A.copy()
    rows, cols = H.shape
    U = eye(cols)
    pivots: List[int] = []
    c = 0
    for i in range(rows):
        if c >= cols:
            break
        for j in range(c + 1, cols):
            a, b = int(H[i, c]), int(H[i, j])
            if b == 0:
                continue
            x, y, g = (int(v) for v in igcdex(a, b))
            # [[x, -b/g], [y, a/g]] has determinant 1
            for M in (H, U):
                col_c, col_j = M[:, c], M[:, j]
                M[:, c] = x * col_c + y * col_j
                M[:, j] = (-b // g) * col_c + (a // g) * col_j
        if H[i, c] == 0:
            continue
        if H[i, c] < 0:
            H[:, c] = -H[:, c]
            U[:, c] = -U[:, c]
        pivots.append(int(H[i, c]))
        c += 1
    return H, U, pivots


def _as_pair(value: GroupElement, torsion: int) -> Tuple[int, int]:
    if isinstance(value, int):
        return value, 0
    if len(value) == 1:
        return int(value[0]), 0
    if len(value) != 2:
        raise UsageError(f"group element must have one or two coordinates, got {value!r}")
    second = int(value[1])
    if torsion > 1:
        second %= torsion
    elif torsion == 1:
        second = 0
    return int(value[0]), second


def kernel_lattice(torsion: int, a: GroupElement, b: GroupElement) -> List[Tuple[int, int]]:
    """Basis of N = {(x,y) : x*a + y*b = 0 in Z + Z_m}; raises NotGenerating"""
    if torsion < 0:
        raise UsageError(f"torsion must be >= 0, got {torsion}")
    a1, a2 = _as_pair(a, torsion)
    b1, b2 = _as_pair(b, torsion)

    # Third column encodes the relation m = 0 in the torsion factor
    A = Matrix([[a1, b1, 0], [a2, b2, -torsion]])
    H, U, pivots = column_hermite(A)
    product = 1
    for pivot in pivots:
        product *= pivot
    if len(pivots) != 2 or abs(product) != 1:
        raise NotGenerating(f"a={a!r}, b={b!r} do not generate Z + Z_{torsion}",
                            {"a": list(_as_pair(a, torsion)), "b": list(_as_pair(b, torsion)),
                             "torsion": torsion})

    projected = [U[:2, j] for j in range(len(pivots), U.shape[1])]
    projected = [col for col in projected if any(entry != 0 for entry in col)]
    if not projected:
        return []
    basis, _, _ = column_hermite(Matrix.hstack(*projected))
    return [(int(basis[0, j]), int(basis[1, j]))
            for j in range(basis.shape[1]) if basis[0, j] != 0 or basis[1, j] != 0]


def classify_generators(torsion: int, a: GroupElement, b: GroupElement) -> ClassificationResult:
    """Identify Cay(Z + Z_m, {a, b}) as the square grid, some G_{k,l}, or neither"""
    basis = kernel_lattice(torsion, a, b)
    logger.info(f"Kernel lattice for m={torsion}, a={a!r}, b={b!r}: {basis}")

    if not basis:
        return ClassificationResult(ClassificationTag.SQUARE_GRID, reason="trivial kernel")
    if len(basis) == 2:
        return ClassificationResult(ClassificationTag.FINITE_GROUP,
                                    reason=f"kernel has rank 2: {basis}")

    k, l = basis[0]
    iso = "Right = a, Up = b"
    if k < 0 or (k == 0 and l < 0):
        k, l = -k, -l
    if k == 0:
        k, l = l, 0
        iso = "Right = b, Up = a (axes swapped)"

    params = GklParams(k, l)
    if not params.is_four_regular():
        return ClassificationResult(ClassificationTag.NOT_FOUR_REGULAR_INFINITE, params, iso,
                                    reason=f"{params} has coinciding generators")
    return ClassificationResult(ClassificationTag.GKL, params, iso)


def classify_involution_presentation(generator_count: int, infinite_order: bool = True) -> ClassificationResult:
    """Generating sets containing involutions (|S| = 3 or 4)"""
    if generator_count == 4:
        return ClassificationResult(ClassificationTag.FINITE_GROUP,
                                    reason="four involutions generate a finite group")
    if generator_count == 3:
        if not infinite_order:
            return ClassificationResult(ClassificationTag.FINITE_GROUP,
                                        reason="two involutions and a generator of finite order")
        return ClassificationResult(ClassificationTag.GKL, GklParams(4, 0),
                                    iso="Z + V4 with two involutions; same graph as Z + Z4",
                                    reason="Z + V4")
    raise UsageError(f"involution table covers |S| = 3 or 4, got {generator_count}")
