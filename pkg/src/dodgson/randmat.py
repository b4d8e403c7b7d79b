"""Seeded random integer matrices.

Generator: ``random.Random(seed)`` (MT19937 seeded from the integer), and
every entry is ``-B + floor(random() * (2B + 1))``, drawn row by row.  Only
``Random.random()`` is used because CPython guarantees its output sequence
for a given seed across versions and platforms; ``randint``/``randrange``
carry no such promise.
"""
from __future__ import annotations

import random
from typing import Iterator

from .matrix import Matrix


def _entry(rng: random.Random, bound: int) -> int:
    return -bound + int(rng.random() * (2 * bound + 1))


def random_matrix(n: int, rng: random.Random, bound: int = 5) -> Matrix:
    if n < 1 or bound < 0:
        raise ValueError("need n >= 1 and bound >= 0")
    return Matrix([[_entry(rng, bound) for _ in range(n)] for _ in range(n)])


def random_matrices(n: int, seed: int, count: int = 1, bound: int = 5) -> list[Matrix]:
    rng = random.Random(seed)
    return [random_matrix(n, rng, bound) for _ in range(count)]


def random_suite(max_order: int, count: int, seed: int,
                 bound: int = 5) -> Iterator[Matrix]:
    """``count`` matrices whose orders are drawn uniformly from 1..max_order."""
    rng = random.Random(seed)
    for _ in range(count):
        n = 1 + int(rng.random() * max_order)
        yield random_matrix(n, rng, bound)
