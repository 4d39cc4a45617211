"""truncated_sum against a direct Fraction reference, plus its input rules."""

import random
from fractions import Fraction
from math import comb

import pytest

from supercong.congruences import TERM_KINDS, truncated_sum
from supercong.errors import NonUnitDivisor
from supercong.padic import primes_between


def _reference(kind, upper, m, d, k_factor, catalan_weight):
    term = TERM_KINDS[kind]
    acc = Fraction(0)
    for k in range(upper + 1):
        t = Fraction(term(k, d), m**k)
        if k_factor:
            t *= k
        if catalan_weight:
            t /= k + 1
        acc += t
    return acc


def test_spec_anchor_21_over_64():
    # weight-shifted central sum at p = 7 (upper 3, shift d = 2, base 8)
    val = truncated_sum("central_shift", 7, 3, 8, d=2)
    assert val == Fraction(21, 64)
    assert val.numerator % 7 == 0


def test_small_hand_sums():
    # sum_{k<=2} binom(2k,k)^2 / 16^k = 1 + 4/16 + 36/256
    assert truncated_sum("central_sq", 5, 2, 16) == Fraction(1 + Fraction(1, 4) + Fraction(36, 256))
    # k_factor drops the k = 0 term
    assert truncated_sum("central_sq", 5, 2, 16, k_factor=True) == Fraction(1, 4) + Fraction(72, 256)
    # catalan_weight divides by k + 1
    assert truncated_sum("central_sq", 5, 2, 16, catalan_weight=True) == (
        1 + Fraction(4, 16 * 2) + Fraction(36, 256 * 3)
    )


def test_every_kind_matches_reference():
    rng = random.Random(959)
    primes = primes_between(5, 40)
    for kind in TERM_KINDS:
        for _ in range(12):
            q = rng.choice(primes)
            n = (q - 1) // 2
            upper = rng.choice((n, q - 1))
            m = rng.choice((8, 16, -16, 27, 64, -192, 432, rng.randint(1, 500)))
            if m % q == 0:
                m += 1
            d = rng.randint(0, 3) if "shift" in kind or "double" in kind else 0
            k_factor = rng.random() < 0.5
            catalan_weight = rng.random() < 0.5
            got = truncated_sum(
                kind, q, upper, m, d=d, k_factor=k_factor, catalan_weight=catalan_weight
            )
            want = _reference(kind, upper, m, d, k_factor, catalan_weight)
            assert got == want, (kind, q, upper, m, d, k_factor, catalan_weight)


def test_shift_kind_formula():
    # spot-check the term shapes really are the advertised products
    assert TERM_KINDS["central_shift"](3, 1) == comb(6, 3) * comb(6, 4)
    assert TERM_KINDS["central_double"](2, 2) == comb(4, 2) * comb(8, 4)
    assert TERM_KINDS["cubic"](3, 0) == comb(9, 3) * comb(6, 3)
    assert TERM_KINDS["quartic"](2, 0) == comb(8, 4) * comb(4, 2)
    assert TERM_KINDS["sextic"](2, 0) == comb(12, 6) * comb(6, 2)


def test_upper_bound_validation():
    with pytest.raises(ValueError):
        truncated_sum("central_sq", 7, 2, 16)  # 2 is neither 3 nor 6
    truncated_sum("central_sq", 7, 3, 16)
    truncated_sum("central_sq", 7, 6, 16)


def test_base_must_be_a_unit():
    with pytest.raises(NonUnitDivisor):
        truncated_sum("central_sq", 7, 3, 0)
    with pytest.raises(NonUnitDivisor):
        truncated_sum("central_sq", 7, 3, 14)
    truncated_sum("central_sq", 7, 3, -15)
