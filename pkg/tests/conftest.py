import random

import pytest

from linkhom.braids import BraidWord
from linkhom.claspers import ClaspVector, enumerate_comb_claspers


def random_braid(rng: random.Random, n: int, length: int) -> BraidWord:
    letters = tuple(
        (rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)
    )
    return BraidWord(n, letters)


def random_pure_braid(rng: random.Random, n: int, length: int) -> BraidWord:
    """Rejection-sample a pure braid word of the requested length.

    Odd lengths are rounded down: a braid word can only be pure when its
    length is even (each letter is a transposition).
    """
    length -= length % 2
    while True:
        word = random_braid(rng, n, length)
        if word.is_pure():
            return word


def random_clasp_vector(rng: random.Random, n: int, bound: int = 2,
                        min_degree: int = 1) -> ClaspVector:
    return ClaspVector(
        n,
        {
            c.sequence: rng.randint(-bound, bound)
            for c in enumerate_comb_claspers(n)
            if c.degree >= min_degree
        },
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC1A5)
