import itertools

import pytest

from config import Config
from core.cayley import GklParams
from core.errors import BudgetExceeded, UsageError
from verifier.cuts import enumerate_small_cuts, profile_cut, separates, truncated_graph


def profile_cuts(params: GklParams, max_edges: int, band: int = Config.CUT_BAND):
    thresholds = itertools.product(range(-band, band + 2), repeat=params.k)
    cuts = (frozenset(profile_cut(params, c)) for c in thresholds)
    return {cut for cut in cuts if len(cut) <= max_edges}


class TestCuts:
    def test_g21_has_odd_cut(self):
        census = enumerate_small_cuts(GklParams(2, 1), 4, 12)
        assert 3 in census.sizes
        assert census.has_odd_cut

    def test_g31_all_even(self):
        census = enumerate_small_cuts(GklParams(3, 1), 5, 12)
        assert census.sizes
        assert not census.has_odd_cut

    def test_g42_all_even(self):
        census = enumerate_small_cuts(GklParams(4, 2), 6, 12)
        assert 6 in census.sizes
        assert all(size % 2 == 0 for size in census.sizes)

    def test_negative_l(self):
        census = enumerate_small_cuts(GklParams(3, -2), 5, 12)
        assert 5 in census.sizes
        assert census.has_odd_cut

    def test_level_cut_is_found(self):
        params = GklParams(4, 2)
        census = enumerate_small_cuts(params, 6, 12)
        assert frozenset(params.level_cut(0)) in census.cuts

    def test_constant_profile_is_the_level_cut(self):
        params = GklParams(4, 2)
        assert profile_cut(params, (0, 0, 0, 0)) == params.level_cut(0)

    def test_finds_every_profile_and_more(self):
        params = GklParams(2, 1)
        census = enumerate_small_cuts(params, 7, 12)
        found = set(census.cuts)
        profiles = profile_cuts(params, 7)
        assert profiles <= found
        # e.g. the level cut plus the four edges around an isolated vertex above it
        assert len(found) > len(profiles)
        assert len(found) == len(census.sizes)

    def test_search_prunes(self):
        census = enumerate_small_cuts(GklParams(3, 1), 4, 12)
        free = 3 * (2 * Config.CUT_BAND + 1)
        assert census.nodes_explored < 2 ** free

    def test_separation_check(self):
        params = GklParams(3, 1)
        graph = truncated_graph(params, 12)
        cut = params.level_cut(0)
        assert separates(graph, params, cut)
        assert not separates(graph, params, cut - {next(iter(cut))})

    def test_limits(self):
        with pytest.raises(UsageError):
            enumerate_small_cuts(GklParams(2, 1), 13, 12)
        with pytest.raises(UsageError):
            enumerate_small_cuts(GklParams(2, 1), 4, 31)
        with pytest.raises(UsageError):
            enumerate_small_cuts(GklParams(4, 2), 6, 5)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            enumerate_small_cuts(GklParams(8, 0), 12, 12, budget=1000)

    def test_census_serializes(self):
        doc = enumerate_small_cuts(GklParams(2, 1), 3, 12).to_dict()
        assert doc["sizes"] and set(doc["sizes"]) == {3}
        assert doc["odd_cut"] is True
        assert "cuts" not in doc


@pytest.mark.slow
class TestParityLaw:
    @pytest.mark.parametrize("k,l", [(k, l) for k in range(1, 6) for l in range(0, k + 1)
                                     if GklParams(k, l).is_four_regular()])
    def test_odd_cut_iff_parities_differ(self, k, l):
        params = GklParams(k, l)
        census = enumerate_small_cuts(params, k + l, 12)
        assert k + l in census.sizes
        assert census.has_odd_cut == ((k - l) % 2 == 1)
