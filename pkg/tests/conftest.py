import random
from math import gcd

import pytest

from cyclomat import Digraph


def random_symmetrizable(rng: random.Random, nmax: int = 7, charge_prob: float = 0.5) -> Digraph:
    """Random symmetrizable integer matrix with entries in [-4, 4].

    Balancing is built in: a random dsq vector is fixed first and every
    edge pair is a multiple of (dsq_i/g, dsq_j/g), so the witness exists by
    construction and the generator never needs rejection sampling.
    """
    n = rng.randint(1, nmax)
    dsq = [rng.randint(1, 4) for _ in range(n)]
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        if rng.random() < charge_prob:
            m[i][i] = rng.randint(-4, 4)
        for j in range(i + 1, n):
            if rng.random() < 0.45:
                g = gcd(dsq[i], dsq[j])
                p, q = dsq[i] // g, dsq[j] // g
                kmax = 4 // max(p, q)
                if kmax == 0:
                    continue
                k = rng.choice([x for x in range(-kmax, kmax + 1) if x])
                m[i][j], m[j][i] = k * p, k * q
    return Digraph(m)


def random_digraph(rng: random.Random, nmax: int = 5, bound: int = 3) -> Digraph:
    n = rng.randint(1, nmax)
    return Digraph(
        [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC1C10)
