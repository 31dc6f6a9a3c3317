import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from alertgame import scenario

SCENARIO_DIR = os.path.join(os.path.dirname(__file__), "..", "scenarios")


@pytest.fixture(scope="session")
def fraud_cfg():
    return scenario.builtin_fraud()


@pytest.fixture(scope="session")
def ids_cfg():
    return scenario.builtin_ids()


@pytest.fixture(scope="session")
def toy_cfg():
    return scenario.toy_scenario()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
