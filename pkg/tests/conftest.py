"""Independent oracles shared by the test modules."""

from functools import lru_cache

import pytest


@lru_cache(maxsize=None)
def pbar_oracle(trunc):
    """p-bar(n) from (-q;q)_inf/(q;q)_inf = 1/theta_4(q): p(n) = -2 sum_k (-1)^k p(n - k^2)."""
    p = [1]
    for n in range(1, trunc):
        acc = 0
        k = 1
        while k * k <= n:
            acc += (-1) ** k * p[n - k * k]
            k += 1
        p.append(-2 * acc)
    return tuple(p)


@pytest.fixture(scope="session")
def pbar_ref():
    return pbar_oracle
