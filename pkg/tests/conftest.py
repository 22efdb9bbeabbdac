import os
import sys

import numpy as np
import pytest

# Add repository root to path
sys.path.append(os.path.join(os.path.dirname(__file__), ".."))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def dirichlet_pair(rng):
    """Two random interior distributions on 4 atoms."""
    return rng.dirichlet(np.ones(4)), rng.dirichlet(np.ones(4))
