"""Shared hypothesis strategies and settings"""
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from core.cayley import GklParams

PROPERTY_SETTINGS = settings(
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)

SLOW_SETTINGS = settings(
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def four_regular_params(draw, max_k: int = 8, max_l: int = 8) -> GklParams:
    k = draw(st.integers(min_value=1, max_value=max_k))
    l = draw(st.integers(min_value=-max_l, max_value=max_l))
    params = GklParams(k, l)
    if not params.is_four_regular():
        params = GklParams(k + 2, l)
    return params


coordinates = st.integers(min_value=-40, max_value=40)
