import pytest
from hypothesis import given

from core.cayley import Edge, GklParams, V, Vertex
from core.errors import ChainMismatch, UsageError
from core.isomorphism import (IsomorphismChain, IsomorphismStep, map_through, normalize,
                              transposed)
from tests.strategies import PROPERTY_SETTINGS, coordinates, four_regular_params


class TestNormalize:
    def test_flip(self):
        target, chain = normalize(GklParams(3, -2))
        assert target == GklParams(3, 2)
        assert [s.kind for s in chain.steps] == ["Flip"]

    def test_transpose(self):
        target, chain = normalize(GklParams(2, 5))
        assert target == GklParams(5, 2)
        assert [s.kind for s in chain.steps] == ["Transpose"]

    def test_identity(self):
        target, chain = normalize(GklParams(4, 2))
        assert target == GklParams(4, 2)
        assert chain.steps == ()

    def test_flip_then_transpose(self):
        target, chain = normalize(GklParams(2, -4))
        assert target == GklParams(4, 2)
        assert len(chain.steps) == 2

    @PROPERTY_SETTINGS
    @given(four_regular_params())
    def test_result_is_normalized(self, params):
        target, chain = normalize(params)
        assert target.k >= target.l >= 0
        assert chain.source == params and chain.target == target


class TestMaps:
    def test_transpose_vertex(self):
        chain = IsomorphismChain.of(IsomorphismStep.transpose(GklParams(2, 5)))
        assert map_through(chain, Vertex(1, 3)) == Vertex(3, 1)

    def test_flip_edge(self):
        chain = IsomorphismChain.of(IsomorphismStep.flip(GklParams(3, -2)))
        assert map_through(chain, Edge(Vertex(0, 0), V)) == Edge(Vertex(0, -1), V)

    def test_identity(self):
        chain = IsomorphismChain.identity(GklParams(4, 2))
        assert map_through(chain, Vertex(2, 9)) == Vertex(2, 9)

    def test_transpose_needs_nonzero_l(self):
        with pytest.raises(UsageError):
            transposed(GklParams(4, 0))

    def test_broken_chain(self):
        with pytest.raises(ChainMismatch):
            IsomorphismChain(GklParams(3, 1), GklParams(3, 1), (IsomorphismStep.flip(GklParams(3, 2)),))

    @PROPERTY_SETTINGS
    @given(four_regular_params(), coordinates, coordinates)
    def test_maps_preserve_adjacency(self, params, m, n):
        _, chain = normalize(params)
        v = params.canonicalize(m, n)
        image = chain.map_vertex(v)
        assert {chain.map_vertex(u) for u in params.neighbors(v)} == set(chain.target.neighbors(image))

    @PROPERTY_SETTINGS
    @given(four_regular_params(), coordinates, coordinates)
    def test_inverse_round_trip(self, params, m, n):
        _, chain = normalize(params)
        v = params.canonicalize(m, n)
        assert chain.inverse().map_vertex(chain.map_vertex(v)) == v
