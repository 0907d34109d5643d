from fractions import Fraction

import pytest
from hypothesis import strategies as st


def rationals(max_num=20, max_den=9):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


@pytest.fixture
def F():
    return Fraction
