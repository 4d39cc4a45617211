"""Truncated p-adic arithmetic: canonical residues mod p^K for K in {1, 2, 3}.

Exact rationals (fractions.Fraction) are the working representation in the
rest of the package; this module is the boundary where a rational collapses
to a residue, once, at comparison time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import (
    InvalidPrime,
    NonUnitDivisor,
    NotPAdicInteger,
    PrecisionMismatch,
)

__all__ = [
    "OddPrime",
    "PadicResidue",
    "is_prime",
    "legendre_symbol",
    "mod_inverse",
    "odd_prime",
    "padic_from_rational",
    "primes_between",
    "signed_residue",
]

# Deterministic Miller-Rabin witness set, exact below 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes in the closed interval [lo, hi], by sieve."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, int(hi**0.5) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytearray(len(sieve[q * q :: q]))
    return [n for n in range(max(lo, 2), hi + 1) if sieve[n]]


@dataclass(frozen=True, order=True)
class OddPrime:
    """A prime >= 5; the only modulus base the engine accepts."""

    value: int

    def __post_init__(self) -> None:
        if self.value < 5 or not is_prime(self.value):
            raise InvalidPrime(f"{self.value} is not a prime >= 5")

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


@lru_cache(maxsize=None)
def odd_prime(value: int) -> OddPrime:
    """Validated OddPrime, cached so sweeps do not re-run primality tests."""
    return OddPrime(value)


def _prime_int(p: OddPrime | int) -> int:
    if isinstance(p, OddPrime):
        return p.value
    return odd_prime(int(p)).value


def signed_residue(residue: int, modulus: int) -> int:
    """Balanced representative of residue in (-modulus/2, modulus/2]."""
    r = residue % modulus
    return r - modulus if r > modulus // 2 else r


def mod_inverse(a: int, modulus: int) -> int:
    """Inverse of a modulo modulus; NonUnitDivisor when gcd(a, modulus) > 1."""
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    a %= modulus
    if gcd(a, modulus) != 1:
        raise NonUnitDivisor(f"{a} is not a unit modulo {modulus}")
    return pow(a, -1, modulus)


def legendre_symbol(a: int, p: OddPrime | int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1}, by Euler's criterion."""
    q = _prime_int(p)
    r = pow(a % q, (q - 1) // 2, q)
    return r - q if r == q - 1 else r


@dataclass(frozen=True)
class PadicResidue:
    """Canonical residue in [0, p^K); K is the precision, in {1, 2, 3}."""

    p: OddPrime
    precision: int
    residue: int

    def __post_init__(self) -> None:
        if self.precision not in (1, 2, 3):
            raise PrecisionMismatch(f"precision must be 1, 2 or 3, got {self.precision}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    @property
    def modulus(self) -> int:
        return self.p.value**self.precision

    @property
    def signed(self) -> int:
        """Balanced representative; -p is easier to recognize than p^K - p."""
        return signed_residue(self.residue, self.modulus)

    def truncate(self, precision: int) -> "PadicResidue":
        """Reduce to a lower precision. Truncation commutes with arithmetic."""
        if not 1 <= precision <= self.precision:
            raise PrecisionMismatch(
                f"cannot truncate precision {self.precision} to {precision}"
            )
        return PadicResidue(self.p, precision, self.residue % self.p.value**precision)

    def _check_compatible(self, other: "PadicResidue") -> None:
        if not isinstance(other, PadicResidue):
            raise TypeError(f"expected PadicResidue, got {type(other).__name__}")
        if self.p != other.p:
            raise PrecisionMismatch(f"mixed primes {self.p} and {other.p}")
        if self.precision != other.precision:
            raise PrecisionMismatch(
                f"mixed precisions {self.precision} and {other.precision}"
            )

    def __add__(self, other: "PadicResidue") -> "PadicResidue":
        self._check_compatible(other)
        return PadicResidue(self.p, self.precision, self.residue + other.residue)

    def __sub__(self, other: "PadicResidue") -> "PadicResidue":
        self._check_compatible(other)
        return PadicResidue(self.p, self.precision, self.residue - other.residue)

    def __mul__(self, other: "PadicResidue") -> "PadicResidue":
        self._check_compatible(other)
        return PadicResidue(self.p, self.precision, self.residue * other.residue)

    def __truediv__(self, other: "PadicResidue") -> "PadicResidue":
        self._check_compatible(other)
        if other.residue % self.p.value == 0:
            raise NonUnitDivisor(f"{other.residue} is not a unit modulo {self.p}")
        inv = pow(other.residue, -1, self.modulus)
        return PadicResidue(self.p, self.precision, self.residue * inv)

    def __repr__(self) -> str:
        return f"PadicResidue({self.residue} mod {self.p}^{self.precision})"


def padic_from_rational(
    q: Fraction | int, p: OddPrime | int, precision: int
) -> PadicResidue:
    """Reduce an exact rational to its canonical residue mod p^precision.

    Raises NotPAdicInteger when p divides the (reduced) denominator.
    """
    if precision not in (1, 2, 3):
        raise PrecisionMismatch(f"precision must be 1, 2 or 3, got {precision}")
    prime = odd_prime(_prime_int(p))
    q = Fraction(q)
    if q.denominator % prime.value == 0:
        raise NotPAdicInteger(f"{q} has {prime.value} in its denominator")
    m = prime.value**precision
    return PadicResidue(prime, precision, q.numerator * pow(q.denominator, -1, m) % m)
