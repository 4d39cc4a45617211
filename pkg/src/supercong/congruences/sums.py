"""Exact truncated sums of binomial products over a power denominator.

truncated_sum is the reference evaluator for every catalog family: one big
integer numerator accumulated over the common denominator
lcm(1..upper+1) * m^upper, reduced to a Fraction once at the end.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, lcm
from typing import Callable

from ..errors import NonUnitDivisor
from ..padic import OddPrime, _prime_int

__all__ = ["TERM_KINDS", "truncated_sum"]


def _central_sq(k: int, d: int) -> int:
    return comb(2 * k, k) ** 2


def _central_shift(k: int, d: int) -> int:
    return comb(2 * k, k) * comb(2 * k, k + d)


def _central_double(k: int, d: int) -> int:
    return comb(2 * k, k) * comb(2 * (k + d), k + d)


def _cubic(k: int, d: int) -> int:
    return comb(3 * k, k) * comb(2 * k, k)


def _cubic_shift(k: int, d: int) -> int:
    return comb(3 * k, k) * comb(2 * k, k + d)


def _cubic_double(k: int, d: int) -> int:
    return comb(3 * k, k) * comb(2 * (k + d), k + d)


def _quartic(k: int, d: int) -> int:
    return comb(4 * k, 2 * k) * comb(2 * k, k)


def _quartic_shift(k: int, d: int) -> int:
    return comb(4 * k, 2 * k) * comb(2 * k, k + d)


def _quartic_double(k: int, d: int) -> int:
    return comb(4 * k, 2 * k) * comb(2 * (k + d), k + d)


def _sextic(k: int, d: int) -> int:
    return comb(6 * k, 3 * k) * comb(3 * k, k)


TERM_KINDS: dict[str, Callable[[int, int], int]] = {
    "central_sq": _central_sq,
    "central_shift": _central_shift,
    "central_double": _central_double,
    "cubic": _cubic,
    "cubic_shift": _cubic_shift,
    "cubic_double": _cubic_double,
    "quartic": _quartic,
    "quartic_shift": _quartic_shift,
    "quartic_double": _quartic_double,
    "sextic": _sextic,
}


def truncated_sum(
    kind: str,
    p: OddPrime | int,
    upper: int,
    m: int,
    *,
    d: int = 0,
    k_factor: bool = False,
    catalan_weight: bool = False,
) -> Fraction:
    """sum_{k=0}^{upper} N_kind(k, d) [k] / ((k+1) m^k), exact.

    [k] is present when k_factor is set, the (k+1) divisor when
    catalan_weight is set. upper must be (p-1)/2 or p-1, and m a unit mod p
    (so the result is a p-adic integer whenever the congruence claims one).
    """
    q = _prime_int(p)
    n = (q - 1) // 2
    if upper not in (n, q - 1):
        raise ValueError(f"upper must be (p-1)/2 or p-1, got {upper} for p={q}")
    if m == 0 or m % q == 0:
        raise NonUnitDivisor(f"base {m} is not a unit modulo {q}")
    term = TERM_KINDS[kind]
    big = lcm(*range(1, upper + 2)) if catalan_weight else 1
    mpow = [1] * (upper + 1)
    for i in range(1, upper + 1):
        mpow[i] = mpow[i - 1] * m
    num = 0
    for k in range(upper + 1):
        t = term(k, d)
        if not t:
            continue
        if k_factor:
            if k == 0:
                continue
            t *= k
        if catalan_weight:
            t = t * (big // (k + 1))
        num += t * mpow[upper - k]
    return Fraction(num, big * mpow[upper])
