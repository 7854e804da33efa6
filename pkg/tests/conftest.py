import os

import pytest
from hypothesis import HealthCheck, settings

from heptacol.GraphCore.graph_basic import build_graph
from heptacol.TestKit.kit_named import cycle

settings.register_profile("heptacol", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "heptacol"))


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def k3():
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])
