import numpy as np
import pytest

from meanineq import Configuration


def sample_config(rng, n_max=8, zero_prob=0.0, log_spread=1.0):
    """One random configuration: lognormal samples, Dirichlet weights."""
    n = int(rng.integers(2, n_max + 1))
    x = np.exp(rng.normal(0.0, log_spread, n))
    if zero_prob and rng.random() < zero_prob:
        x[np.argmin(x)] = 0.0
    return Configuration(x, rng.dirichlet(np.ones(n)))


def pinned_config(rng, n, q_target, zero_prob=0.0, max_tries=500):
    """A configuration whose minimum weight equals q_target exactly."""
    for _ in range(max_tries):
        rest = (1.0 - q_target) * rng.dirichlet(np.ones(n - 1))
        if rest.min() >= q_target:
            w = np.insert(rest, int(rng.integers(n)), q_target)
            x = np.sort(rng.uniform(0.0, 1.0, n))
            if zero_prob and rng.random() < zero_prob:
                x[0] = 0.0
            if x[-1] - x[0] < 0.05 * max(x[-1], 1e-12):
                x[-1] = x[-1] + 1.0
            return Configuration(x, w)
    return None


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
