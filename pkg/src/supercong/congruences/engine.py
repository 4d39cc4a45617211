"""Suite runner: evaluates catalog families over a prime range.

Reports list rows in (family, prime, case) order no matter how the work was
scheduled. Parallel runs fan out one job per prime (so per-prime tables are
built once) and reassemble in catalog order; fail-fast truncates the report
at the first failing row; a time budget converts never-run pairs into skip
markers rather than aborting the report.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from time import perf_counter
from typing import Sequence

from ..padic import odd_prime
from .families import CongruenceFamily, FamilyCase, family_ids, get_family

__all__ = ["SuiteReport", "VerificationReport", "run_suite", "verify_family_case"]

DEFAULT_SWEEP_CAP = 100


@dataclass(frozen=True)
class VerificationReport:
    """One verified (or skipped) case row."""

    family: str
    p: int
    params: dict
    modulus: int
    lhs: int
    rhs: int
    passed: bool | None  # None marks a skipped row
    note: str | None = None
    elapsed: float = 0.0

    @property
    def skipped(self) -> bool:
        return self.passed is None

    @property
    def lhs_signed(self) -> int:
        return self.lhs - self.modulus if self.lhs > self.modulus // 2 else self.lhs

    @property
    def rhs_signed(self) -> int:
        return self.rhs - self.modulus if self.rhs > self.modulus // 2 else self.rhs


@dataclass
class SuiteReport:
    config: dict
    started: str
    elapsed: float = 0.0
    cases: list[VerificationReport] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if c.passed is False)

    @property
    def skipped(self) -> int:
        return sum(1 for c in self.cases if c.passed is None)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[VerificationReport]:
        return [c for c in self.cases if c.passed is False]


def _row(family: CongruenceFamily, p: int, case: FamilyCase, elapsed: float) -> VerificationReport:
    return VerificationReport(
        family=family.id,
        p=p,
        params=case.params,
        modulus=case.lhs.modulus,
        lhs=case.lhs.residue,
        rhs=case.rhs.residue,
        passed=None if case.skipped else case.lhs == case.rhs,
        note=case.note,
        elapsed=elapsed,
    )


def _marker(family: CongruenceFamily, p: int, params: dict, note: str) -> VerificationReport:
    return VerificationReport(
        family=family.id,
        p=p,
        params=params,
        modulus=p**family.modulus_power,
        lhs=0,
        rhs=0,
        passed=None,
        note=note,
    )


def verify_family_case(family_id: str, p: int, *, sweep_cap: int | None = None) -> list[VerificationReport]:
    """All case rows for one family at one prime (empty when not applicable)."""
    family = get_family(family_id)
    prime = odd_prime(p)
    if not family.applies(p):
        return []
    if family.heavy and sweep_cap is not None and p > sweep_cap:
        return [
            _marker(
                family,
                p,
                {"sweep_cap": sweep_cap},
                f"heavy family capped at p <= {sweep_cap}; pass --sweep-cap to raise",
            )
        ]
    rows = []
    tick = perf_counter()
    for case in family.cases(prime):
        now = perf_counter()
        rows.append(_row(family, p, case, now - tick))
        tick = now
    return rows


def _eval_prime(args: tuple[tuple[str, ...], int, int]) -> dict[str, list[VerificationReport]]:
    ids, p, sweep_cap = args
    return {fid: verify_family_case(fid, p, sweep_cap=sweep_cap) for fid in ids}


def _truncate_at_failure(rows: list[VerificationReport]) -> tuple[list[VerificationReport], bool]:
    for i, row in enumerate(rows):
        if row.passed is False:
            return rows[: i + 1], True
    return rows, False


def run_suite(
    primes: Sequence[int],
    families: Sequence[str] | None = None,
    *,
    parallelism: int = 1,
    fail_fast: bool = False,
    time_limit: float | None = None,
    sweep_cap: int = DEFAULT_SWEEP_CAP,
) -> SuiteReport:
    """Verify the selected families at every prime given.

    time_limit is a soft wall-clock budget in seconds: pairs that never ran
    appear as skipped marker rows, and the exit verdict reflects only what
    was actually evaluated.
    """
    selected = list(families) if families is not None else family_ids()
    for fid in selected:
        get_family(fid)  # raises UnknownId early
    prime_list = sorted({int(p) for p in primes})
    for p in prime_list:
        odd_prime(p)  # raises InvalidPrime early
    started = datetime.now(timezone.utc).isoformat(timespec="seconds")
    config = {
        "primes": prime_list,
        "families": selected,
        "parallelism": parallelism,
        "fail_fast": fail_fast,
        "time_limit": time_limit,
        "sweep_cap": sweep_cap,
    }
    report = SuiteReport(config=config, started=started)
    t0 = perf_counter()

    def out_of_time() -> bool:
        return time_limit is not None and perf_counter() - t0 > time_limit

    pairs = [(fid, p) for fid in selected for p in prime_list]
    budget_note = "not evaluated: time budget exhausted"

    if parallelism <= 1 or len(prime_list) <= 1:
        for fid, p in pairs:
            family = get_family(fid)
            if not family.applies(p):
                continue
            if out_of_time():
                report.cases.append(_marker(family, p, {}, budget_note))
                continue
            rows = verify_family_case(fid, p, sweep_cap=sweep_cap)
            if fail_fast:
                rows, hit = _truncate_at_failure(rows)
                report.cases.extend(rows)
                if hit:
                    break
            else:
                report.cases.extend(rows)
    else:
        job = tuple(selected)
        results: dict[int, dict[str, list[VerificationReport]]] = {}
        skip_note: dict[int, str] = {}
        seen_failure = False
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            futures = {pool.submit(_eval_prime, (job, p, sweep_cap)): p for p in prime_list}
            for fut, p in futures.items():
                if out_of_time() and fut.cancel():
                    skip_note[p] = budget_note
                    continue
                if fail_fast and seen_failure and fut.cancel():
                    skip_note[p] = "not evaluated: stopped after earlier failure"
                    continue
                results[p] = fut.result()
                if fail_fast and not seen_failure:
                    seen_failure = any(
                        r.passed is False for rs in results[p].values() for r in rs
                    )
        stop = False
        for fid, p in pairs:
            if stop:
                break
            family = get_family(fid)
            if not family.applies(p):
                continue
            got = results.get(p)
            if got is None:
                report.cases.append(_marker(family, p, {}, skip_note.get(p, budget_note)))
                continue
            rows = got[fid]
            if fail_fast:
                rows, hit = _truncate_at_failure(rows)
                stop = hit
            report.cases.extend(rows)

    report.elapsed = perf_counter() - t0
    return report
