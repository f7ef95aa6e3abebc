import random

import pytest

from gf4lrc.code import LinearCode
from gf4lrc.matrix import FieldMatrix


def random_linear_code(rng: random.Random, q: int, n: int, k: int) -> LinearCode:
    """Random [n, k] code over GF(q) from a random full-rank generator."""
    while True:
        rows = [[rng.randrange(q if q == 2 else 4) for _ in range(n)] for _ in range(k)]
        mat = FieldMatrix.from_rows(q, rows)
        if mat.rank() == k:
            return LinearCode.from_generator(mat)


def random_code_corpus(seed: int, count: int, max_n: int, max_k: int, q: int = 4):
    """Deterministic corpus of random codes with 1 <= k <= min(max_k, n)."""
    rng = random.Random(seed)
    corpus = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        k = rng.randint(1, min(max_k, n))
        corpus.append(random_linear_code(rng, q, n, k))
    return corpus


@pytest.fixture(scope="session")
def outer_corpus():
    """The shared random GF(4) outer-code corpus (n <= 7, k <= 4)."""
    return random_code_corpus(seed=0xC0DE4, count=200, max_n=7, max_k=4)
