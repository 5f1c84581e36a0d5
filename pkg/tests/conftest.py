import time

import pytest

from boolgb import buchberger, get_order, interreduce, make_H


@pytest.fixture(scope="session")
def reduced_h():
    """Memoized reduced deglex/degrevlex bases of H(n), with build times.

    Returns a callable get(n, scheme="deglex") -> (GroebnerBasis, seconds).
    """
    cache = {}

    def get(n, scheme="deglex"):
        key = (n, scheme)
        if key not in cache:
            order = get_order(scheme)
            start = time.perf_counter()
            raw, _ = buchberger(make_H(n, order=order))
            basis = interreduce(raw)
            cache[key] = (basis, time.perf_counter() - start)
        return cache[key]

    return get
