"""Sampled integer sequences for the sequence-quantified congruence families.

The catalog claims hold for every sequence of p-adic integers; the engine
checks them on a fixed, reproducible sample: geometric and monomial
sequences plus seeded pseudorandom ones. Prefixes are stable: extending the
length never changes earlier terms.
"""

from __future__ import annotations

import random
from functools import lru_cache

__all__ = ["SEQUENCE_IDS", "sequence_terms"]

_GEOMETRIC = (1, 2, 3, -1, -2)
_MONOMIAL = (0, 1, 2, 3)
_RANDOM_COUNT = 10
_RANDOM_SEED_BASE = 20260800

SEQUENCE_IDS: tuple[str, ...] = (
    *(f"geom{r}" for r in _GEOMETRIC),
    *(f"pow{j}" for j in _MONOMIAL),
    *(f"rand{i}" for i in range(_RANDOM_COUNT)),
)


@lru_cache(maxsize=64)
def _random_prefix(i: int, length: int) -> tuple[int, ...]:
    rng = random.Random(_RANDOM_SEED_BASE + i)
    return tuple(rng.randint(-9, 9) for _ in range(length))


def sequence_terms(seq_id: str, length: int) -> list[int]:
    """First `length` terms of the named sample sequence, exact integers."""
    if seq_id.startswith("geom"):
        r = int(seq_id[4:])
        return [r**k for k in range(length)]
    if seq_id.startswith("pow"):
        j = int(seq_id[3:])
        return [k**j for k in range(length)]
    if seq_id.startswith("rand"):
        return list(_random_prefix(int(seq_id[4:]), length))
    raise KeyError(f"unknown sequence id {seq_id!r}")
