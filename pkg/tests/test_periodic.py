import numpy as np
import pytest
from hypothesis import given, strategies as st

from core.cayley import Edge, GklParams, H, V, Vertex
from core.errors import ChainMismatch, InvalidDecomposition
from core.isomorphism import IsomorphismChain, IsomorphismStep
from core.periodic import Decomposition, PeriodicEdgeSet
from verifier.components import quotient_components
from tests.strategies import SLOW_SETTINGS, four_regular_params

G21 = GklParams(2, 1)


def hv_split(params: GklParams) -> Decomposition:
    return Decomposition.from_class(PeriodicEdgeSet.all_of(params, H))


class TestPeriodicEdgeSet:
    def test_all_of_window(self):
        s = PeriodicEdgeSet.all_of(G21, H)
        assert s.size == 2
        assert Edge(Vertex(0, 0), H) in s and Edge(Vertex(1, 0), H) in s
        assert hv_split(G21).class_edges(2) == PeriodicEdgeSet.all_of(G21, V)

    def test_contains_far_copies(self):
        s = PeriodicEdgeSet.all_of(GklParams(4, 2), V, period=3)
        assert Edge(Vertex(2, -17), V) in s
        assert Edge(Vertex(2, -17), H) not in s

    def test_translate_identity_and_period(self):
        window = np.zeros((3, 2, 2), dtype=bool)
        window[0, 0, 0] = window[2, 1, 1] = True
        s = PeriodicEdgeSet(GklParams(3, 1), 2, window)
        assert s.translate((0, 0)) == s
        assert s.translate((0, 2)) == s
        assert s.translate((0, 1)) != s

    def test_h_set_is_translation_invariant(self):
        s = PeriodicEdgeSet.all_of(GklParams(4, 2), H)
        assert s.translate((1, 0)) == s

    def test_minimize_period(self):
        s = PeriodicEdgeSet.all_of(GklParams(3, 1), V, period=4)
        assert s.minimize_period() == PeriodicEdgeSet.all_of(GklParams(3, 1), V)

    def test_minimize_period_keeps_aperiodic_window(self):
        window = np.zeros((2, 3, 2), dtype=bool)
        window[0, 1, 0] = True
        s = PeriodicEdgeSet(G21, 3, window)
        assert s.minimize_period() is s

    def test_window_is_read_only(self):
        s = PeriodicEdgeSet.all_of(G21, V)
        with pytest.raises(ValueError):
            s.window[0, 0, 0] = True

    @SLOW_SETTINGS
    @given(st.lists(st.booleans(), min_size=24, max_size=24), st.integers(-6, 6), st.integers(-6, 6))
    def test_translation_round_trip(self, bits, dm, dn):
        params = GklParams(3, 1)
        s = PeriodicEdgeSet(params, 4, np.array(bits).reshape(3, 4, 2))
        assert s.translate((dm, dn)).translate((-dm, -dn)) == s

    @SLOW_SETTINGS
    @given(st.data(), four_regular_params(max_k=4, max_l=4), st.integers(1, 3), st.integers(1, 4),
           st.randoms(use_true_random=True))
    def test_minimize_period_keeps_membership(self, data, params, base, repeats, rnd):
        bits = data.draw(st.lists(st.booleans(), min_size=2 * params.k * base, max_size=2 * params.k * base))
        tile = np.array(bits).reshape(params.k, base, 2)
        s = PeriodicEdgeSet(params, base * repeats, np.tile(tile, (1, repeats, 1)))
        small = s.minimize_period()
        assert base % small.period == 0
        reach = 10 * s.period
        for _ in range(1000):
            edge = Edge(Vertex(rnd.randrange(params.k), rnd.randint(-reach, reach)), rnd.choice((H, V)))
            assert (edge in small) == (edge in s)


class TestDecomposition:
    def test_from_class(self):
        d = hv_split(G21)
        assert d.color_of(Edge(Vertex(1, 5), H)) == 1
        assert d.color_of(Edge(Vertex(0, -3), V)) == 2
        assert d.class_edges(2) == PeriodicEdgeSet.all_of(G21, V)

    def test_rejects_uncoloured_edges(self):
        with pytest.raises(InvalidDecomposition):
            Decomposition(G21, 1, np.zeros((2, 1, 2), dtype=np.int8))

    def test_degree_violations(self):
        coloring = np.ones((2, 1, 2), dtype=np.int8)
        coloring[0, 0, 1] = 2
        d = Decomposition(G21, 1, coloring)
        assert d.degree_violations()
        assert not hv_split(G21).degree_violations()

    def test_from_lookup(self):
        d = Decomposition.from_lookup(G21, 1, lambda e: 1 if e.dir == V else 2)
        assert d.class_edges(1) == PeriodicEdgeSet.all_of(G21, V)

    def test_transport_round_trip(self):
        d = hv_split(G21)
        there = IsomorphismChain.of(IsomorphismStep.transpose(G21))
        moved = d.transport(there)
        assert moved.params == GklParams(1, 2)
        back = moved.transport(there.inverse())
        assert back.minimize_period() == d

    def test_transport_through_flip_keeps_components(self):
        params = GklParams(3, -1)
        d = hv_split(params)
        moved = d.transport(IsomorphismChain.of(IsomorphismStep.flip(params)))
        for i in (1, 2):
            before = quotient_components(d.class_edges(i))
            after = quotient_components(moved.class_edges(i))
            assert sorted(map(abs, before.windings)) == sorted(map(abs, after.windings))

    def test_transport_needs_matching_source(self):
        with pytest.raises(ChainMismatch):
            hv_split(G21).transport(IsomorphismChain.of(IsomorphismStep.flip(GklParams(3, 1))))

    def test_translate_records_provenance(self, fixture):
        d = fixture("G22_rays").translate((1, 0))
        assert d.provenance[-1] == "translate(1,0)"
        assert d.mode() == fixture("G22_rays").mode()
