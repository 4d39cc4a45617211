"""The congruence family catalog.

Each CongruenceFamily turns a prime into a stream of FamilyCase rows: two
residues that the underlying theorem says must agree modulo p^K. Evaluators
accumulate exact rationals (or int64 residue vectors where the claim is
linear in a sampled sequence) and reduce once per case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterator

import numpy as np

from ..combinatorics import euler_polynomial_half_grid
from ..curves import cornacchia_two_squares, thm11_rhs_grid, weighted_char_sum, weighted_char_sum_grid
from ..errors import UnknownId
from ..padic import OddPrime, PadicResidue, legendre_symbol, padic_from_rational
from .sequences import SEQUENCE_IDS, sequence_terms
from .sums import TERM_KINDS, truncated_sum

__all__ = ["CongruenceFamily", "FamilyCase", "family_catalog", "family_ids", "get_family"]


@dataclass(frozen=True)
class FamilyCase:
    params: dict
    lhs: PadicResidue
    rhs: PadicResidue
    skipped: bool = False
    note: str | None = None

    @property
    def passed(self) -> bool:
        return self.skipped or self.lhs == self.rhs


@dataclass(frozen=True)
class CongruenceFamily:
    """One catalog entry; cases(p) yields every residue check at that prime."""

    id: str
    description: str
    modulus_power: int
    applies: Callable[[int], bool]
    cases: Callable[[OddPrime], Iterator[FamilyCase]]
    heavy: bool = False  # swept only up to the engine's sweep cap


# -- small arithmetic helpers ------------------------------------------------


def _leg_m1(q: int) -> int:
    return 1 if q % 4 == 1 else -1


def _leg_2(q: int) -> int:
    return 1 if q % 8 in (1, 7) else -1


def _leg_m2(q: int) -> int:
    return 1 if q % 8 in (1, 3) else -1


def _p_over_3(q: int) -> int:
    return 1 if q % 3 == 1 else -1


def _case(prime: OddPrime, power: int, params: dict, lhs, rhs, note: str | None = None) -> FamilyCase:
    return FamilyCase(
        params,
        padic_from_rational(lhs, prime, power),
        padic_from_rational(rhs, prime, power),
        note=note,
    )


def _skip(prime: OddPrime, power: int, params: dict, note: str) -> FamilyCase:
    zero = PadicResidue(prime, power, 0)
    return FamilyCase(params, zero, zero, skipped=True, note=note)


def _chain(prime: OddPrime, power: int, labels: list[str], members: list[Fraction], extra: dict | None = None):
    """Pairwise comparisons along a chain of claimed-congruent values."""
    for i in range(len(members) - 1):
        params = {"pair": f"{labels[i]}={labels[i + 1]}"}
        if extra:
            params.update(extra)
        yield _case(prime, power, params, members[i], members[i + 1])


@lru_cache(maxsize=4)
def _binom_mod_matrix(modulus: int, size: int) -> np.ndarray:
    """M[k, j] = binom(k, j) (-1)^j mod modulus, as int64."""
    rows = np.zeros((size, size), dtype=np.int64)
    rows[0, 0] = 1
    for k in range(1, size):
        rows[k, 0] = 1
        rows[k, 1 : k + 1] = (rows[k - 1, 1 : k + 1] + rows[k - 1, 0:k]) % modulus
    signs = np.where(np.arange(size) % 2 == 0, 1, -1)
    return rows * signs[None, :] % modulus


@lru_cache(maxsize=32)
def _weight_residues(kind: str, base: int, modulus: int, count: int) -> np.ndarray:
    """Residues of N_kind(k, 0)/base^k mod modulus for k < count."""
    term = TERM_KINDS[kind]
    inv = pow(base, -1, modulus)
    out = np.empty(count, dtype=np.int64)
    w = 1
    for k in range(count):
        out[k] = term(k, 0) * w % modulus
        w = w * inv % modulus
    return out


# -- T1.1: the weighted-trace closed form ------------------------------------


def _t11_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    lhs = weighted_char_sum_grid(q)
    rhs = thm11_rhs_grid(q)
    for d in range(lhs.shape[0]):
        for lam in range(q):
            yield FamilyCase(
                {"lam": lam, "d": d},
                PadicResidue(prime, 1, int(lhs[d, lam])),
                PadicResidue(prime, 1, int(rhs[d, lam])),
            )


# -- E1.3 / E1.4: central binomial sums with shift d --------------------------


def _e13_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    n = (q - 1) // 2
    sign = _leg_m1(q)
    for d in range(n + 1):
        lhs = truncated_sum("central_double", q, n, 16, d=d)
        yield _case(prime, 2, {"d": d}, lhs, Fraction(4**d * sign))


def _e14_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    n = (q - 1) // 2
    sign = _leg_m1(q)
    grid = euler_polynomial_half_grid(q - 3, n + 1)
    for d in range(n + 1):
        lhs = truncated_sum("central_shift", q, n, 16, d=d)
        rhs = sign + Fraction(q * q * (-1) ** d, 4) * grid[d]
        yield _case(prime, 3, {"d": d}, lhs, rhs)


# -- E1.5 / E1.6 / E1.7: base 8 and -16 sums, p == 3 (mod 4) ------------------


def _e15_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    n = (q - 1) // 2
    members = [
        truncated_sum("central_sq", q, n, 8, catalan_weight=True),
        -2 * truncated_sum("central_sq", q, n, 8, k_factor=True),
        Fraction(-1, 2) * truncated_sum("central_sq", q, n, -16, catalan_weight=True),
        4 * truncated_sum("central_sq", q, n, -16, k_factor=True),
        Fraction((-1) ** ((q + 1) // 4) * comb((q + 1) // 2, (q + 1) // 4), 2),
    ]
    yield from _chain(prime, 1, ["cat8", "k8", "cat-16", "k-16", "closed"], members)


def _e16_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    n = (q - 1) // 2
    members = [
        truncated_sum("central_sq", q, n, 8),
        -truncated_sum("central_sq", q, n, -16),
        Fraction(2 * q * (-1) ** ((q + 1) // 4), comb((q + 1) // 2, (q + 1) // 4)),
    ]
    yield from _chain(prime, 2, ["S8", "-S-16", "closed"], members)


def _e17_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    n = (q - 1) // 2
    claimed_parity = (q + 1) // 2 % 2
    for d in range(n + 1):
        value = truncated_sum("central_shift", q, n, 8, d=d)
        if d % 2 == claimed_parity:
            yield _case(prime, 1, {"d": d}, value, Fraction(0))
        else:
            r = padic_from_rational(value, prime, 1).residue
            yield _skip(prime, 1, {"d": d}, f"parity outside the claim; informational residue {r}")


# -- E1.8-E1.10: full-range Rodriguez-Villegas sums ---------------------------


def _rv_family(kind: str, base: int, eps: Callable[[int], int]):
    def gen(prime: OddPrime) -> Iterator[FamilyCase]:
        q = prime.value
        lhs = truncated_sum(kind, q, q - 1, base)
        yield _case(prime, 2, {}, lhs, Fraction(eps(q)))

    return gen


# -- E1.11-E1.13 and R1.4c: sequence-quantified congruences -------------------


def _seq_vector(seq_id: str, q: int, modulus: int) -> np.ndarray:
    return np.array([t % modulus for t in sequence_terms(seq_id, q)], dtype=np.int64)


def _dual_family(kind: str, base: int, eps: Callable[[int], int]):
    def gen(prime: OddPrime) -> Iterator[FamilyCase]:
        q = prime.value
        m2 = q * q
        mat = _binom_mod_matrix(m2, q)
        w = _weight_residues(kind, base, m2, q)
        e = eps(q) % m2
        for seq_id in SEQUENCE_IDS:
            a = _seq_vector(seq_id, q, m2)
            astar = mat @ a % m2
            lhs = int(w @ a % m2)
            rhs = e * int(w @ astar % m2) % m2
            yield FamilyCase(
                {"sequence": seq_id},
                PadicResidue(prime, 2, lhs),
                PadicResidue(prime, 2, rhs),
            )

    return gen


def _r14c_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    n = (q - 1) // 2
    m2 = q * q
    mat = _binom_mod_matrix(m2, q)[: n + 1, : n + 1]
    w = _weight_residues("central_sq", 16, m2, n + 1)
    e = _leg_m1(q) % m2
    for seq_id in SEQUENCE_IDS:
        a = _seq_vector(seq_id, q, m2)[: n + 1]
        astar = mat @ a % m2
        lhs = int(w @ ((a - e * astar) % m2) % m2)
        yield FamilyCase(
            {"sequence": seq_id},
            PadicResidue(prime, 2, lhs),
            PadicResidue(prime, 2, 0),
        )


# -- R1.4a / R1.4b: d-shifted mod-p analogues ---------------------------------


def _r14_family(double_kind: str, shift_kind: str, base: int, div: int, eps: Callable[[int], int]):
    def gen(prime: OddPrime) -> Iterator[FamilyCase]:
        q = prime.value
        n = (q - 1) // 2
        closed = Fraction(eps(q))
        for d in range(q // div + 1):
            m1 = truncated_sum(double_kind, q, n, base, d=d) / 4**d
            m2 = truncated_sum(shift_kind, q, n, base, d=d)
            yield _case(prime, 1, {"d": d, "pair": "double=shift"}, m1, m2)
            yield _case(prime, 1, {"d": d, "pair": "shift=closed"}, m2, closed)

    return gen


# -- E1.14-E1.19 and R1.5: coefficient-wise polynomial congruences ------------


_SPOTS_CUBIC = (Fraction(1, 2), Fraction(9, 8), Fraction(2), Fraction(-1), Fraction(1, 3))
_SPOTS_QUARTIC = (Fraction(1, 2), Fraction(4, 3), Fraction(8, 9), Fraction(64, 63), Fraction(2))
_SPOTS_SEXTIC = (Fraction(1, 2), Fraction(2), Fraction(-1), Fraction(1, 3), Fraction(3, 2))


def _poly_family(
    kind: str,
    base: int,
    eps_fun: Callable[[int], int],
    *,
    power: int = 2,
    deriv: bool = False,
    upper_fun: Callable[[int], int] = lambda q: q - 1,
    spots: tuple[Fraction, ...],
):
    def gen(prime: OddPrime) -> Iterator[FamilyCase]:
        q = prime.value
        mod = q**power
        upper = upper_fun(q)
        eps = eps_fun(q)
        v = _weight_residues(kind, base, mod, upper + 1)
        if deriv:
            vec = (np.arange(upper + 1, dtype=np.int64) * v % mod)[1:]
            sgn = -1
        else:
            vec = v
            sgn = 1
        size = len(vec)
        mat = _binom_mod_matrix(mod, size)
        rhs_vec = sgn * eps * (mat.T @ vec) % mod
        mismatch = np.nonzero(vec != rhs_vec)[0]
        if mismatch.size:
            j = int(mismatch[0])
            yield FamilyCase(
                {"coefficient": j},
                PadicResidue(prime, power, int(vec[j])),
                PadicResidue(prime, power, int(rhs_vec[j])),
                note=f"{mismatch.size} of {size} coefficients disagree",
            )
        else:
            zero = PadicResidue(prime, power, 0)
            yield FamilyCase({"coefficients": size}, zero, zero, note="all coefficients agree")
        term = TERM_KINDS[kind]
        for x in spots:
            params = {"x": str(x)}
            if x.denominator % q == 0:
                yield _skip(prime, power, params, "x is not a p-adic integer at this prime")
                continue
            total = Fraction(0)
            xp, yp = Fraction(1), Fraction(1)
            if deriv:
                for k in range(1, upper + 1):
                    total += k * Fraction(term(k, 0), base**k) * (xp + eps * yp)
                    xp *= x
                    yp *= 1 - x
            else:
                for k in range(upper + 1):
                    total += Fraction(term(k, 0), base**k) * (xp - eps * yp)
                    xp *= x
                    yp *= 1 - x
            yield _case(prime, power, params, total, Fraction(0))

    return gen


# -- C1.1 / C1.2 and the Catalan-weighted corollaries -------------------------


def _zero_sum_family(kind: str, base: int, *, k_factor: bool):
    def gen(prime: OddPrime) -> Iterator[FamilyCase]:
        q = prime.value
        lhs = truncated_sum(kind, q, q - 1, base, k_factor=k_factor)
        yield _case(prime, 2, {}, lhs, Fraction(0))

    return gen


def _pair_sum_family(kind: str, base_a: int, base_b: int, scale: Callable[[int], Fraction], *, k_factor: bool):
    def gen(prime: OddPrime) -> Iterator[FamilyCase]:
        q = prime.value
        lhs = truncated_sum(kind, q, q - 1, base_a, k_factor=k_factor)
        rhs = scale(q) * truncated_sum(kind, q, q - 1, base_b, k_factor=k_factor)
        yield _case(prime, 2, {}, lhs, rhs)

    return gen


def _catalan_p_family(kind: str, base: int):
    def gen(prime: OddPrime) -> Iterator[FamilyCase]:
        q = prime.value
        lhs = truncated_sum(kind, q, q - 1, base, catalan_weight=True)
        yield _case(prime, 2, {}, lhs, Fraction(q))

    return gen


def _e123_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    lhs = truncated_sum("cubic", q, q - 1, 24, catalan_weight=True)
    inner = truncated_sum("cubic", q, q - 1, -216, catalan_weight=True) - q
    rhs = q + Fraction(_p_over_3(q), 9) * inner
    yield _case(prime, 2, {}, lhs, rhs)


# -- T1.6 and the two-squares families ----------------------------------------


def _t16_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    m1 = truncated_sum("quartic", q, q - 1, 72, k_factor=True)
    m2 = Fraction(3, 2) * truncated_sum("quartic", q, q - 1, 72, catalan_weight=True)
    l6 = legendre_symbol(6, q)
    if q % 4 == 1:
        closed = Fraction(l6 * cornacchia_two_squares(q).x)
        branch = "two-squares"
    else:
        closed = Fraction(3 * l6 * comb((q + 1) // 2, (q + 1) // 4), 4)
        branch = "binomial"
    yield from _chain(prime, 1, ["k72", "cat72", "closed"], [m1, m2, closed], {"branch": branch})


def _g1_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    x = cornacchia_two_squares(q).x
    yield _case(prime, 1, {}, Fraction(comb((q - 1) // 2, (q - 1) // 4)), Fraction(2 * x))


def _g2_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    x = cornacchia_two_squares(q).x
    rhs = Fraction(2 ** (q - 1) + 1, 2) * (2 * x - Fraction(q, 2 * x))
    yield _case(prime, 2, {}, Fraction(comb((q - 1) // 2, (q - 1) // 4)), rhs)


def _g3_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    n = (q - 1) // 2
    x = cornacchia_two_squares(q).x
    l2 = _leg_2(q)
    members = [
        truncated_sum("central_sq", q, n, 8),
        truncated_sum("central_sq", q, n, -16),
        l2 * truncated_sum("central_sq", q, n, 32),
        l2 * (2 * x - Fraction(q, 2 * x)),
    ]
    yield from _chain(prime, 2, ["S8", "S-16", "S32", "closed"], members)


def _g4_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    n = (q - 1) // 2
    x = cornacchia_two_squares(q).x
    l2 = _leg_2(q)
    members = [
        truncated_sum("central_sq", q, n, 8, catalan_weight=True),
        -2 * truncated_sum("central_sq", q, q - 1, 8, k_factor=True),
        Fraction(1, 2) * truncated_sum("central_sq", q, n, -16, catalan_weight=True),
        -4 * truncated_sum("central_sq", q, n, -16, k_factor=True),
        l2 * (2 * x - Fraction(q, x)),
    ]
    yield from _chain(prime, 2, ["cat8", "k8full", "cat-16", "k-16", "closed"], members)


# -- L1, A1/A2, B1-B4, D-base, and the binomial lemma families ----------------


def _l1_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    u = [comb(2 * k, k) ** 2 for k in range(q)]
    num = 0
    mpow = (-16) ** (q - 1)
    for h in range(q):
        conv = sum(u[k] * u[h - k] for k in range(h + 1))
        num += (2 * h + 1) * conv * mpow
        if h < q - 1:
            mpow //= -16
    lhs = Fraction(num, (-16) ** (q - 1))
    yield _case(prime, 2, {}, lhs, Fraction(q * _leg_m1(q)))


def _a1_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    a2 = weighted_char_sum(q, 2, 0)
    am1 = weighted_char_sum(q, -1, 0)
    yield _case(prime, 1, {"lam": 2}, Fraction(a2), Fraction(0))
    yield _case(prime, 1, {"lam": -1}, Fraction(am1), Fraction(0))
    yield _case(prime, 1, {"pair": "lam2=lam-1"}, Fraction(a2), Fraction(am1))


def _a2_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    n = (q - 1) // 2
    lhs = Fraction(weighted_char_sum(q, 2, 1))
    closed = Fraction((-1) ** ((q - 3) // 4) * comb(n, (n - 1) // 2))
    split = Fraction(weighted_char_sum(q, -1, 0) + weighted_char_sum(q, -1, 1))
    yield _case(prime, 1, {"pair": "closed"}, lhs, closed)
    yield _case(prime, 1, {"pair": "shifted-split"}, lhs, split)


def _binom_family(top: Callable[[int], tuple[int, int]], power: int, rhs_fun: Callable[[int], Fraction]):
    def gen(prime: OddPrime) -> Iterator[FamilyCase]:
        q = prime.value
        a, b = top(q)
        yield _case(prime, power, {}, Fraction(comb(a, b)), rhs_fun(q))

    return gen


def _dbase_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    n = (q - 1) // 2
    lhs = truncated_sum("central_shift", q, n, 8, d=n - 1)
    yield _case(prime, 1, {"d": n - 1}, lhs, Fraction(0))


def _i9_family_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    n = (q - 1) // 2
    for k in range(n + 1):
        yield _case(
            prime, 2, {"k": k}, Fraction(comb(n + k, 2 * k)), Fraction(comb(2 * k, k), (-16) ** k)
        )


def _i10_family_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    n = (q - 1) // 2
    for k in range(q):
        yield _case(prime, 1, {"k": k}, Fraction(comb(n, k)), Fraction(comb(2 * k, k), (-4) ** k))


def _i11_family_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    n = (q - 1) // 2
    for k in range(n + 1):
        yield _case(prime, 1, {"k": k}, Fraction(comb(n, 2 * k)), Fraction(comb(4 * k, 2 * k), 16**k))


def _morley_cases(prime: OddPrime) -> Iterator[FamilyCase]:
    q = prime.value
    n = (q - 1) // 2
    yield _case(prime, 3, {}, Fraction(comb(q - 1, n)), Fraction((-1) ** n * 4 ** (q - 1)))


def _always(q: int) -> bool:
    return True


_CATALOG: tuple[CongruenceFamily, ...] = (
    CongruenceFamily(
        "T1.1",
        "weighted curve trace a_p^(d)(lam) matches its central-binomial closed form, "
        "all lam in [0,p) and d in [0,(p-1)/2]",
        1,
        _always,
        _t11_cases,
        heavy=True,
    ),
    CongruenceFamily(
        "E1.3",
        "sum binom(2k,k) binom(2k+2d,k+d)/16^k == 4^d (-1/p) mod p^2",
        2,
        _always,
        _e13_cases,
    ),
    CongruenceFamily(
        "E1.4",
        "sum binom(2k,k) binom(2k,k+d)/16^k == (-1/p) + p^2 (-1)^d/4 E_(p-3)(d+1/2) mod p^3",
        3,
        _always,
        _e14_cases,
    ),
    CongruenceFamily(
        "E1.5",
        "five-member mod-p chain linking Catalan and k-weighted central sums over 8^k "
        "and (-16)^k to (-1)^((p+1)/4)/2 binom((p+1)/2,(p+1)/4), p == 3 mod 4",
        1,
        lambda q: q % 4 == 3,
        _e15_cases,
    ),
    CongruenceFamily(
        "E1.6",
        "sum binom(2k,k)^2/8^k == -sum binom(2k,k)^2/(-16)^k == "
        "2p(-1)^((p+1)/4)/binom((p+1)/2,(p+1)/4) mod p^2, p == 3 mod 4",
        2,
        lambda q: q % 4 == 3,
        _e16_cases,
    ),
    CongruenceFamily(
        "E1.7",
        "sum binom(2k,k) binom(2k,k+d)/8^k == 0 mod p for d == (p+1)/2 mod 2",
        1,
        _always,
        _e17_cases,
    ),
    CongruenceFamily(
        "E1.8",
        "sum_{k<p} binom(3k,k) binom(2k,k)/27^k == (p/3) mod p^2",
        2,
        _always,
        _rv_family("cubic", 27, _p_over_3),
    ),
    CongruenceFamily(
        "E1.9",
        "sum_{k<p} binom(4k,2k) binom(2k,k)/64^k == (-2/p) mod p^2",
        2,
        _always,
        _rv_family("quartic", 64, _leg_m2),
    ),
    CongruenceFamily(
        "E1.10",
        "sum_{k<p} binom(6k,3k) binom(3k,k)/432^k == (-1/p) mod p^2",
        2,
        _always,
        _rv_family("sextic", 432, _leg_m1),
    ),
    CongruenceFamily(
        "E1.11",
        "27^k-weighted sum of a_k equals (p/3) times the same sum of the dual "
        "sequence mod p^2, over sampled sequences",
        2,
        _always,
        _dual_family("cubic", 27, _p_over_3),
    ),
    CongruenceFamily(
        "E1.12",
        "64^k-weighted sum of a_k equals (-2/p) times the dual-sequence sum mod p^2",
        2,
        _always,
        _dual_family("quartic", 64, _leg_m2),
    ),
    CongruenceFamily(
        "E1.13",
        "432^k-weighted sum of a_k equals (-1/p) times the dual-sequence sum mod p^2",
        2,
        _always,
        _dual_family("sextic", 432, _leg_m1),
    ),
    CongruenceFamily(
        "R1.4a",
        "1/4^d sum binom(3k,k) binom(2k+2d,k+d)/27^k == sum binom(3k,k) binom(2k,k+d)/27^k "
        "== (p/3) mod p for d <= floor(p/3)",
        1,
        _always,
        _r14_family("cubic_double", "cubic_shift", 27, 3, _p_over_3),
    ),
    CongruenceFamily(
        "R1.4b",
        "1/4^d sum binom(4k,2k) binom(2k+2d,k+d)/64^k == sum binom(4k,2k) binom(2k,k+d)/64^k "
        "== (-2/p) mod p for d <= floor(p/4)",
        1,
        _always,
        _r14_family("quartic_double", "quartic_shift", 64, 4, _leg_m2),
    ),
    CongruenceFamily(
        "R1.4c",
        "sum binom(2k,k)^2/16^k (a_k - (-1/p) a*_k) == 0 mod p^2 over sampled sequences",
        2,
        _always,
        _r14c_cases,
    ),
    CongruenceFamily(
        "E1.14",
        "sum binom(3k,k) binom(2k,k)/27^k (x^k - (p/3)(1-x)^k) == 0 in Z_p[x] mod p^2",
        2,
        _always,
        _poly_family("cubic", 27, _p_over_3, spots=_SPOTS_CUBIC),
    ),
    CongruenceFamily(
        "E1.15",
        "sum binom(4k,2k) binom(2k,k)/64^k (x^k - (-2/p)(1-x)^k) == 0 in Z_p[x] mod p^2",
        2,
        _always,
        _poly_family("quartic", 64, _leg_m2, spots=_SPOTS_QUARTIC),
    ),
    CongruenceFamily(
        "E1.16",
        "sum binom(6k,3k) binom(3k,k)/432^k (x^k - (-1/p)(1-x)^k) == 0 in Z_p[x] mod p^2",
        2,
        _always,
        _poly_family("sextic", 432, _leg_m1, spots=_SPOTS_SEXTIC),
    ),
    CongruenceFamily(
        "E1.17",
        "sum k binom(3k,k) binom(2k,k)/27^k (x^(k-1) + (p/3)(1-x)^(k-1)) == 0 mod p^2",
        2,
        _always,
        _poly_family("cubic", 27, _p_over_3, deriv=True, spots=_SPOTS_CUBIC),
    ),
    CongruenceFamily(
        "E1.18",
        "sum k binom(4k,2k) binom(2k,k)/64^k (x^(k-1) + (-2/p)(1-x)^(k-1)) == 0 mod p^2",
        2,
        _always,
        _poly_family("quartic", 64, _leg_m2, deriv=True, spots=_SPOTS_QUARTIC),
    ),
    CongruenceFamily(
        "E1.19",
        "sum k binom(6k,3k) binom(3k,k)/432^k (x^(k-1) + (-1/p)(1-x)^(k-1)) == 0 mod p^2",
        2,
        _always,
        _poly_family("sextic", 432, _leg_m1, deriv=True, spots=_SPOTS_SEXTIC),
    ),
    CongruenceFamily(
        "R1.5",
        "sum_{k<=floor(p/3)} binom(3k,k) binom(2k,k)/27^k "
        "(x^k - (-1)^floor(p/3) (1-x)^k) == 0 in Z_p[x] mod p",
        1,
        _always,
        _poly_family(
            "cubic",
            27,
            lambda q: (-1) ** (q // 3),
            power=1,
            upper_fun=lambda q: q // 3,
            spots=_SPOTS_CUBIC,
        ),
    ),
    CongruenceFamily(
        "C1.1a",
        "sum k binom(3k,k) binom(2k,k)/54^k == 0 mod p^2 for p == 1 mod 3",
        2,
        lambda q: q % 3 == 1,
        _zero_sum_family("cubic", 54, k_factor=True),
    ),
    CongruenceFamily(
        "C1.1b",
        "sum binom(3k,k) binom(2k,k)/54^k == 0 mod p^2 for p == 2 mod 3",
        2,
        lambda q: q % 3 == 2,
        _zero_sum_family("cubic", 54, k_factor=False),
    ),
    CongruenceFamily(
        "C1.1c",
        "sum k binom(4k,2k) binom(2k,k)/128^k == 0 mod p^2 for p == 1,3 mod 8",
        2,
        lambda q: q % 8 in (1, 3),
        _zero_sum_family("quartic", 128, k_factor=True),
    ),
    CongruenceFamily(
        "C1.1d",
        "sum binom(4k,2k) binom(2k,k)/128^k == 0 mod p^2 for p == 5,7 mod 8",
        2,
        lambda q: q % 8 in (5, 7),
        _zero_sum_family("quartic", 128, k_factor=False),
    ),
    CongruenceFamily(
        "C1.1e",
        "sum k binom(6k,3k) binom(3k,k)/864^k == 0 mod p^2 for p == 1 mod 4",
        2,
        lambda q: q % 4 == 1,
        _zero_sum_family("sextic", 864, k_factor=True),
    ),
    CongruenceFamily(
        "C1.1f",
        "sum binom(6k,3k) binom(3k,k)/864^k == 0 mod p^2 for p == 3 mod 4",
        2,
        lambda q: q % 4 == 3,
        _zero_sum_family("sextic", 864, k_factor=False),
    ),
    CongruenceFamily(
        "C1.2a",
        "sum binom(3k,k) binom(2k,k)/24^k == (p/3) sum binom(3k,k) binom(2k,k)/(-216)^k mod p^2",
        2,
        _always,
        _pair_sum_family("cubic", 24, -216, lambda q: Fraction(_p_over_3(q)), k_factor=False),
    ),
    CongruenceFamily(
        "C1.2b",
        "sum k binom(3k,k) binom(2k,k)/24^k == 9 (p/3) sum k binom(3k,k) binom(2k,k)/(-216)^k mod p^2",
        2,
        _always,
        _pair_sum_family("cubic", 24, -216, lambda q: Fraction(9 * _p_over_3(q)), k_factor=True),
    ),
    CongruenceFamily(
        "C1.2c",
        "sum binom(4k,2k) binom(2k,k)/48^k == (-2/p) sum binom(4k,2k) binom(2k,k)/(-192)^k mod p^2",
        2,
        _always,
        _pair_sum_family("quartic", 48, -192, lambda q: Fraction(_leg_m2(q)), k_factor=False),
    ),
    CongruenceFamily(
        "C1.2d",
        "sum k binom(4k,2k) binom(2k,k)/48^k == 4 (-2/p) sum k binom(4k,2k) binom(2k,k)/(-192)^k mod p^2",
        2,
        _always,
        _pair_sum_family("quartic", 48, -192, lambda q: Fraction(4 * _leg_m2(q)), k_factor=True),
    ),
    CongruenceFamily(
        "C1.2e",
        "sum binom(4k,2k) binom(2k,k)/72^k == (-2/p) sum binom(4k,2k) binom(2k,k)/576^k mod p^2",
        2,
        _always,
        _pair_sum_family("quartic", 72, 576, lambda q: Fraction(_leg_m2(q)), k_factor=False),
    ),
    CongruenceFamily(
        "C1.2f",
        "sum k binom(4k,2k) binom(2k,k)/72^k == -8 (-2/p) sum k binom(4k,2k) binom(2k,k)/576^k mod p^2",
        2,
        _always,
        _pair_sum_family("quartic", 72, 576, lambda q: Fraction(-8 * _leg_m2(q)), k_factor=True),
    ),
    CongruenceFamily(
        "C1.2g",
        "sum binom(4k,2k) binom(2k,k)/63^k == (-2/p) sum binom(4k,2k) binom(2k,k)/(-4032)^k "
        "mod p^2 for p != 7",
        2,
        lambda q: q != 7,
        _pair_sum_family("quartic", 63, -4032, lambda q: Fraction(_leg_m2(q)), k_factor=False),
    ),
    CongruenceFamily(
        "C1.2h",
        "sum k binom(4k,2k) binom(2k,k)/63^k == 64 (-2/p) sum k binom(4k,2k) binom(2k,k)/(-4032)^k "
        "mod p^2 for p != 7",
        2,
        lambda q: q != 7,
        _pair_sum_family("quartic", 63, -4032, lambda q: Fraction(64 * _leg_m2(q)), k_factor=True),
    ),
    CongruenceFamily(
        "E1.20",
        "sum binom(3k,k) C_k/54^k == p mod p^2 for p == 1 mod 3",
        2,
        lambda q: q % 3 == 1,
        _catalan_p_family("cubic", 54),
    ),
    CongruenceFamily(
        "E1.21",
        "sum binom(4k,2k) C_k/128^k == p mod p^2 for p == 1,3 mod 8",
        2,
        lambda q: q % 8 in (1, 3),
        _catalan_p_family("quartic", 128),
    ),
    CongruenceFamily(
        "E1.22",
        "sum binom(6k,3k) binom(3k,k)/((k+1) 864^k) == p mod p^2 for p == 1 mod 4",
        2,
        lambda q: q % 4 == 1,
        _catalan_p_family("sextic", 864),
    ),
    CongruenceFamily(
        "E1.23",
        "sum binom(3k,k) C_k/24^k == p + (p/3)/9 (sum binom(3k,k) C_k/(-216)^k - p) mod p^2",
        2,
        _always,
        _e123_cases,
    ),
    CongruenceFamily(
        "T1.6",
        "sum k binom(4k,2k) binom(2k,k)/72^k == 3/2 sum binom(4k,2k) C_k/72^k == "
        "(6/p)x or 3/4 (6/p) binom((p+1)/2,(p+1)/4) mod p by p mod 4",
        1,
        _always,
        _t16_cases,
    ),
    CongruenceFamily(
        "G1",
        "binom((p-1)/2,(p-1)/4) == 2x mod p where p = x^2 + y^2, x == 1 mod 4",
        1,
        lambda q: q % 4 == 1,
        _g1_cases,
    ),
    CongruenceFamily(
        "G2",
        "binom((p-1)/2,(p-1)/4) == (2^(p-1)+1)/2 (2x - p/(2x)) mod p^2",
        2,
        lambda q: q % 4 == 1,
        _g2_cases,
    ),
    CongruenceFamily(
        "G3",
        "central-square sums over 8^k, (-16)^k and (2/p) 32^k all equal "
        "(2/p)(2x - p/(2x)) mod p^2",
        2,
        lambda q: q % 4 == 1,
        _g3_cases,
    ),
    CongruenceFamily(
        "G4",
        "Catalan/k-weighted central-square chain over 8^k and (-16)^k equals "
        "(2/p)(2x - p/x) mod p^2",
        2,
        lambda q: q % 4 == 1,
        _g4_cases,
    ),
    CongruenceFamily(
        "L1",
        "sum_h (2h+1)/(-16)^h sum_k binom(2k,k)^2 binom(2(h-k),h-k)^2 == p(-1/p) mod p^2",
        2,
        _always,
        _l1_cases,
    ),
    CongruenceFamily(
        "A1",
        "a_p^(0)(2) = a_p^(0)(-1) == 0 mod p for p == 3 mod 4",
        1,
        lambda q: q % 4 == 3,
        _a1_cases,
    ),
    CongruenceFamily(
        "A2",
        "a_p^(1)(2) == (-1)^((p-3)/4) binom((p-1)/2,(p-3)/4) mod p for p == 3 mod 4",
        1,
        lambda q: q % 4 == 3,
        _a2_cases,
    ),
    CongruenceFamily(
        "B1",
        "binom(2p-2,p-1) == -p mod p^2",
        2,
        _always,
        _binom_family(lambda q: (2 * q - 2, q - 1), 2, lambda q: Fraction(-q)),
    ),
    CongruenceFamily(
        "B2",
        "binom(3p-3,p-1) == -p mod p^2",
        2,
        _always,
        _binom_family(lambda q: (3 * q - 3, q - 1), 2, lambda q: Fraction(-q)),
    ),
    CongruenceFamily(
        "B3",
        "binom(4p-4,2p-2) == -p mod p^2",
        2,
        _always,
        _binom_family(lambda q: (4 * q - 4, 2 * q - 2), 2, lambda q: Fraction(-q)),
    ),
    CongruenceFamily(
        "B4",
        "binom(6p-6,3p-3) == -p mod p^2 for p > 5",
        2,
        lambda q: q > 5,
        _binom_family(lambda q: (6 * q - 6, 3 * q - 3), 2, lambda q: Fraction(-q)),
    ),
    CongruenceFamily(
        "D-base",
        "sum binom(2k,k) binom(2k,k+n-1)/8^k == 0 mod p at the base shift d = n-1",
        1,
        _always,
        _dbase_cases,
    ),
    CongruenceFamily(
        "I8",
        "binom(p-1,(p-1)/2) == (-1)^((p-1)/2) 4^(p-1) mod p^3",
        3,
        _always,
        _morley_cases,
    ),
    CongruenceFamily(
        "I9",
        "binom(n+k,2k) == binom(2k,k)/(-16)^k mod p^2 for k <= n = (p-1)/2",
        2,
        _always,
        _i9_family_cases,
    ),
    CongruenceFamily(
        "I10",
        "binom((p-1)/2,k) == binom(2k,k)/(-4)^k mod p for k < p",
        1,
        _always,
        _i10_family_cases,
    ),
    CongruenceFamily(
        "I11",
        "binom((p-1)/2,2k) == binom(4k,2k)/16^k mod p for k <= (p-1)/2",
        1,
        _always,
        _i11_family_cases,
    ),
)

_BY_ID = {fam.id: fam for fam in _CATALOG}


def family_catalog() -> tuple[CongruenceFamily, ...]:
    return _CATALOG


def family_ids() -> list[str]:
    return [fam.id for fam in _CATALOG]


def get_family(family_id: str) -> CongruenceFamily:
    try:
        return _BY_ID[family_id]
    except KeyError:
        raise UnknownId(f"unknown family id {family_id!r}") from None
