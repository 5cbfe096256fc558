import random

import pytest
from hypothesis import HealthCheck, settings
import hypothesis.strategies as st

from algnorm.scalars import gr
from algnorm.algebra import Element

settings.register_profile(
    "ci", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


small_rationals = st.fractions(
    min_value=-8, max_value=8, max_denominator=9,
).map(lambda f: f"{f.numerator}/{f.denominator}")

scalars = st.builds(gr, small_rationals, small_rationals)

nonzero_scalars = scalars.filter(lambda z: not z.is_zero())


def elements(max_index=30, max_size=5):
    return st.dictionaries(
        st.integers(min_value=1, max_value=max_index), scalars,
        max_size=max_size,
    ).map(Element)


@pytest.fixture
def rng():
    return random.Random(20240817)
