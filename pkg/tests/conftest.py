import random

import pytest

from genfourier.core.config import Config
from genfourier.quadoracle import QuadOracle


@pytest.fixture
def config():
    return Config()


@pytest.fixture
def rng(config):
    return random.Random(config.DEFAULT_SEED)


@pytest.fixture
def oracle(config):
    return QuadOracle(config)
