import pytest
from hypothesis import strategies as st

from rrsim import workload


@st.composite
def workloads(draw, max_n=10, max_burst=60, max_priority=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    bursts = draw(
        st.lists(st.integers(1, max_burst), min_size=n, max_size=n)
    )
    priorities = draw(
        st.lists(st.integers(1, max_priority), min_size=n, max_size=n)
    )
    return workload(bursts, priorities)


@pytest.fixture
def increasing_w():
    return workload([5, 12, 16, 21, 23], [2, 3, 1, 4, 5])


@pytest.fixture
def random_w():
    return workload([11, 53, 8, 41, 20], [3, 1, 2, 4, 5])


@pytest.fixture
def illustration_w():
    return workload([25, 60, 12, 43, 5], [3, 1, 2, 1, 1])


@pytest.fixture
def decreasing_w():
    return workload([31, 23, 16, 9, 1], [2, 1, 4, 5, 3])
