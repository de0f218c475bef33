import random
from fractions import Fraction

import pytest

from muntzcad.partitions import Partition, partitions_of_weight_at_most


def rand_positive(rng: random.Random, hi: int = 9) -> Fraction:
    """Small positive rational with numerator/denominator up to hi."""
    return Fraction(rng.randint(1, hi), rng.randint(1, hi))


def rand_signed(rng: random.Random, hi: int = 9) -> Fraction:
    f = rand_positive(rng, hi)
    return f if rng.random() < 0.5 else -f


def rand_distinct_positive(rng: random.Random, count: int, hi: int = 24) -> tuple[Fraction, ...]:
    seen: set[Fraction] = set()
    while len(seen) < count:
        seen.add(Fraction(rng.randint(1, hi), rng.randint(1, hi)))
    return tuple(sorted(seen))


def shapes_up_to(weight: int, max_len: int | None = None) -> list[Partition]:
    out = []
    for shape in partitions_of_weight_at_most(weight):
        if max_len is None or len(shape) <= max_len:
            out.append(shape)
    return out


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)
