import logging
from typing import List, Optional, Tuple

import numpy as np

from config import Config
from core.cayley import GklParams
from core.errors import BudgetExceeded, NotFound
from core.periodic import DIR_INDEX, Decomposition
from verifier.prevalence import prevalence
from verifier.verify import Mode, verify

logger = logging.getLogger(__name__)


def _quotient_ends(params: GklParams, period: int) -> List[Tuple[Tuple[int, int, int], int, int]]:
    """Window edges as (table index, quotient end u, quotient end w)"""
    result = []
    for edge in params.window_edges(period):
        u, w = params.endpoints(edge)
        result.append(((edge.m, edge.n, DIR_INDEX[edge.dir]),
                       u.m + params.k * (u.n % period),
                       w.m + params.k * (w.n % period)))
    return result


def _search_period(params: GklParams, period: int, mode: Mode,
                   require_bi_prevalence: bool) -> Optional[Decomposition]:
    edges = _quotient_ends(params, period)
    vertex_count = params.k * period
    counts = {1: [0] * vertex_count, 2: [0] * vertex_count}
    coloring = np.zeros((params.k, period, 2), dtype=np.int8)
    leaves = 0

    def backtrack(i: int) -> Optional[Decomposition]:
        nonlocal leaves
        if i == len(edges):
            leaves += 1
            candidate = Decomposition(params, period, coloring,
                                      (f"search({params.k},{params.l}) p={period} mode={mode.value}",))
            if not verify(candidate, mode).passed:
                return None
            if require_bi_prevalence and not prevalence(candidate).bi_prevalent:
                return None
            return candidate
        index, u, w = edges[i]
        for color in (1, 2):
            count = counts[color]
            count[u] += 1
            count[w] += 1
            if count[u] <= 2 and count[w] <= 2:
                coloring[index] = color
                found = backtrack(i + 1)
                if found is not None:
                    return found
            count[u] -= 1
            count[w] -= 1
        coloring[index] = 0
        return None

    found = backtrack(0)
    logger.debug(f"{params} p={period}: {leaves} degree-feasible colorings checked")
    return found


def search_decomposition(params: GklParams, p_max: int, mode: Mode,
                         require_bi_prevalence: bool = False,
                         budget: int = Config.SEARCH_BUDGET) -> Decomposition:
    """First decomposition passing verify(mode) over periods 1..p_max, in deterministic order"""
    params.require_four_regular()
    if 2 * params.k * p_max > budget:
        raise BudgetExceeded(f"2*k*pMax = {2 * params.k * p_max} exceeds the search budget {budget}",
                             {"k": params.k, "p_max": p_max, "budget": budget})
    for period in range(1, p_max + 1):
        found = _search_period(params, period, mode, require_bi_prevalence)
        if found is not None:
            logger.info(f"Search found a {mode.value} decomposition of {params} with period {period}")
            return found
    raise NotFound(f"no {mode.value} decomposition of {params} with period <= {p_max}",
                   {"k": params.k, "l": params.l, "p_max": p_max, "mode": mode.value})
