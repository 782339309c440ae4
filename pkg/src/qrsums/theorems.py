"""Exact residue-sum identity checks, per prime and over prime ranges.

Writing Q/N for the residue/nonresidue sets, A^l/A^u for their lower- and
upper-half parts, sum A for the plain integer element sum, and n for the
number of nonresidues below p/2, the identities checked here are:

  mod4_1   (p = 1 mod 4):  sum Q = sum N
  lemma    (p = 7 mod 8):  sum Q = n*p
           (p = 3 mod 8):  3 sum Q = n*p + p(p-1)/2
  theorem  (p = 7 mod 8):  sum Q^l = sum N^l
           (p = 3 mod 8):  sum Q + sum Q^l = sum N + sum N^l
  eq1      (p = 3 mod 4):  n*p = sum Q + sum N^l - sum Q^l  (= sum Q^u + sum N^l)

All of them are theorems of elementary number theory, so a correct build
verifies them with zero failures on every applicable prime.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Callable, Iterable, Iterator, Sequence

from . import residues
from .modular import PRIME_LIMIT, OddPrime, primes_in_range
from .residues import HALF_CONVENTION, ResiduePartition


class Mod8Class(IntEnum):
    """Congruence class of an odd prime mod 8; selects which identities apply."""

    M1 = 1
    M3 = 3
    M5 = 5
    M7 = 7


class Identity(str, Enum):
    LEMMA = "lemma"
    THEOREM = "theorem"
    EQ1 = "eq1"
    MOD4_1 = "mod4_1"
    CLASS_CROSS = "class_cross"


#: The identities verify_range runs (the class-number cross-check lives in
#: qrsums.classnum and has its own CLI surface).
RANGE_IDENTITIES = (Identity.LEMMA, Identity.THEOREM, Identity.EQ1, Identity.MOD4_1)


@dataclass(frozen=True)
class IdentityReport:
    """Both evaluated sides of one identity at one prime."""

    p: OddPrime
    identity: Identity
    lhs: int
    rhs: int
    mod8: Mod8Class

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class RangeSummary:
    lo: int
    hi: int
    primes_checked: int
    failures: list[IdentityReport] = field(default_factory=list)
    elapsed: float = 0.0
    #: interpretation note: how elements are split at p/2
    half_convention: str = HALF_CONVENTION


def _mod8(part: ResiduePartition) -> Mod8Class:
    return Mod8Class(part.p.value % 8)


def _require_3mod4(part: ResiduePartition, name: str) -> None:
    if part.p.value % 4 != 3:
        raise ValueError(f"{name} applies only to p = 3 (mod 4), got p = {part.p.value}")


def check_lemma(part: ResiduePartition) -> IdentityReport:
    """sum Q = n*p for p = 7 (mod 8); 3 sum Q = n*p + p(p-1)/2 for p = 3 (mod 8)."""
    _require_3mod4(part, "lemma")
    m8 = _mod8(part)
    p = part.p.value
    np_ = part.n_below_half * p
    if m8 is Mod8Class.M7:
        lhs, rhs = part.sum_q, np_
    else:
        lhs, rhs = 3 * part.sum_q, np_ + p * (p - 1) // 2
    return IdentityReport(part.p, Identity.LEMMA, lhs, rhs, m8)


def check_theorem(part: ResiduePartition) -> IdentityReport:
    """sum Q^l = sum N^l for p = 7 (mod 8);
    sum Q + sum Q^l = sum N + sum N^l for p = 3 (mod 8)."""
    _require_3mod4(part, "theorem")
    m8 = _mod8(part)
    if m8 is Mod8Class.M7:
        lhs, rhs = part.sum_q_l, part.sum_n_l
    else:
        lhs, rhs = part.sum_q + part.sum_q_l, part.sum_n + part.sum_n_l
    return IdentityReport(part.p, Identity.THEOREM, lhs, rhs, m8)


def check_eq1(part: ResiduePartition) -> IdentityReport:
    """n*p = sum Q + sum N^l - sum Q^l for p = 3 (mod 4).

    The right side is computed in signed arithmetic (the tail
    sum N^l - sum Q^l can be negative on its own) and coincides
    identically with the short form sum Q^u + sum N^l.
    """
    _require_3mod4(part, "eq1")
    lhs = part.n_below_half * part.p.value
    rhs = part.sum_q + part.sum_n_l - part.sum_q_l
    assert rhs == part.sum_q_u + part.sum_n_l
    return IdentityReport(part.p, Identity.EQ1, lhs, rhs, _mod8(part))


def check_mod4_1(part: ResiduePartition) -> IdentityReport:
    """sum Q = sum N for p = 1 (mod 4)."""
    if part.p.value % 4 != 1:
        raise ValueError(f"mod4_1 applies only to p = 1 (mod 4), got p = {part.p.value}")
    return IdentityReport(part.p, Identity.MOD4_1, part.sum_q, part.sum_n, _mod8(part))


_CHECKERS: dict[Identity, Callable[[ResiduePartition], IdentityReport]] = {
    Identity.LEMMA: check_lemma,
    Identity.THEOREM: check_theorem,
    Identity.EQ1: check_eq1,
    Identity.MOD4_1: check_mod4_1,
}


def applicable_identities(p: OddPrime | int) -> tuple[Identity, ...]:
    """The range identities that apply to this prime's congruence class."""
    p = OddPrime.ensure(p)
    if p.value % 4 == 3:
        return (Identity.LEMMA, Identity.THEOREM, Identity.EQ1)
    return (Identity.MOD4_1,)


def normalize_selection(identities: Iterable[Identity | str] | None) -> tuple[Identity, ...]:
    """Resolve an identity selection to a canonically-ordered tuple."""
    if identities is None:
        return RANGE_IDENTITIES
    chosen = set()
    for ident in identities:
        ident = Identity(ident)
        if ident not in RANGE_IDENTITIES:
            raise ValueError(f"{ident.value} is not a range identity")
        chosen.add(ident)
    if not chosen:
        raise ValueError("empty identity selection")
    return tuple(i for i in RANGE_IDENTITIES if i in chosen)


def run_checks(
    part: ResiduePartition, identities: Iterable[Identity | str] | None = None
) -> list[IdentityReport]:
    """Every selected identity that applies to part's prime, in canonical order."""
    selected = normalize_selection(identities)
    return [_CHECKERS[i](part) for i in applicable_identities(part.p) if i in selected]


PrimeResult = tuple[ResiduePartition, list[IdentityReport]]


def _check_chunk(args: tuple[Sequence[int], tuple[Identity, ...]]) -> list[PrimeResult]:
    primes, idents = args
    out = []
    for p in primes:
        part = residues.partition_by_squares(p)
        out.append((part, run_checks(part, idents)))
    return out


def _iter_results(
    primes: list[int], idents: tuple[Identity, ...], jobs: int
) -> Iterator[PrimeResult]:
    chunk = 256
    chunks = [primes[i : i + chunk] for i in range(0, len(primes), chunk)]
    if jobs > 1 and len(chunks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        # map() preserves submission order, so the merged stream is in
        # prime order no matter how many workers run
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for block in pool.map(_check_chunk, ((c, idents) for c in chunks)):
                yield from block
    else:
        for c in chunks:
            yield from _check_chunk((c, idents))


def verify_range(
    lo: int,
    hi: int,
    identities: Iterable[Identity | str] | None = None,
    jobs: int = 1,
    sink: Callable[[ResiduePartition, list[IdentityReport]], None] | None = None,
) -> RangeSummary:
    """Check every selected identity on every odd prime in [lo, hi].

    Each prime's partition is computed once and shared by its checkers.
    Failures are collected, never raised, so one run reports every broken
    identity. `sink(partition, reports)` is invoked per prime in increasing
    prime order regardless of the worker count.
    """
    if lo < 3:
        raise ValueError(f"range must start at 3 or above, got {lo}")
    if hi < lo:
        raise ValueError(f"empty range: [{lo}, {hi}]")
    if hi >= PRIME_LIMIT:
        raise ValueError(f"range end {hi} exceeds the 2**31 modulus bound")
    idents = normalize_selection(identities)
    t0 = time.perf_counter()
    summary = RangeSummary(lo=lo, hi=hi, primes_checked=0)
    for part, reports in _iter_results(list(primes_in_range(lo, hi)), idents, jobs):
        summary.primes_checked += 1
        summary.failures.extend(r for r in reports if not r.holds)
        if sink is not None:
            sink(part, reports)
    summary.elapsed = time.perf_counter() - t0
    return summary
