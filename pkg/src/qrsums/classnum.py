"""Class numbers h(-p) by exhaustive enumeration of reduced forms.

For a prime p = 3 (mod 4), -p is a fundamental discriminant and h(-p)
counts the reduced primitive positive-definite binary quadratic forms
ax^2 + bxy + cy^2 with b^2 - 4ac = -p. That count ties back to the
residue census through the classical relation

    count_q_l - count_n_l = (2 - (2|p)) * h(-p)      (p > 3),

i.e. the surplus of residues over nonresidues in the lower half is h(-p)
for p = 7 (mod 8) and 3*h(-p) for p = 3 (mod 8). The enumeration here is
deliberately independent of everything in :mod:`qrsums.theorems`, so the
cross-check exercises two unrelated computations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .modular import OddPrime
from .residues import ResiduePartition
from .theorems import Identity, IdentityReport, Mod8Class


@dataclass(frozen=True)
class QuadForm:
    """A reduced primitive positive-definite form ax^2 + bxy + cy^2."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        a, b, c = self.a, self.b, self.c
        if a <= 0:
            raise ValueError(f"form {self} is not positive definite")
        if not (-a < b <= a <= c):
            raise ValueError(f"form {self} is not reduced")
        if b < 0 and (a == c or b == -a):
            raise ValueError(f"form {self} breaks the reduction tie rule")
        if math.gcd(a, b, c) != 1:
            raise ValueError(f"form {self} is not primitive")

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


def _require_discriminant_prime(p: OddPrime | int) -> OddPrime:
    p = OddPrime.ensure(p)
    if p.value % 4 != 3:
        raise ValueError(f"-p is a fundamental discriminant only for p = 3 (mod 4), got {p.value}")
    return p


def reduced_forms(p: OddPrime | int) -> list[QuadForm]:
    """All reduced forms of discriminant -p, sorted by (a, |b|, sign b).

    Reduction theory bounds the leading coefficient by a <= sqrt(p/3); for
    each a, a form exists exactly when b in (-a, a] satisfies
    b^2 = -p (mod 4a) with cofactor c = (b^2+p)/(4a) >= a. Ties (a == c,
    or b == a) keep only the b >= 0 representative so each class is
    counted once.
    """
    p = _require_discriminant_prime(p)
    v = p.value
    forms = []
    for a in range(1, math.isqrt(v // 3) + 1):
        four_a = 4 * a
        for b in range(-a + 1, a + 1):
            num = b * b + v
            if num % four_a:
                continue
            c = num // four_a
            if c < a:
                continue
            if a == c and b < 0:
                continue
            forms.append(QuadForm(a, b, c))
    forms.sort(key=lambda f: (f.a, abs(f.b), f.b))
    return forms


def class_number(p: OddPrime | int) -> int:
    """h(-p): the number of reduced forms of discriminant -p."""
    return len(reduced_forms(p))


def class_cross_check(part: ResiduePartition, h: int | None = None) -> IdentityReport:
    """count_q_l - count_n_l against (2 - (2|p)) * h(-p), for p > 3.

    p = 3 is excluded: the extra units of the discriminant -3 field skew
    the count relation there. Pass a precomputed h to skip re-enumeration.
    """
    p = _require_discriminant_prime(part.p)
    if p.value == 3:
        raise ValueError("the count relation does not apply at p = 3 (extra units)")
    if h is None:
        h = class_number(p)
    lhs = part.count_q_l - part.count_n_l
    m8 = Mod8Class(p.value % 8)
    rhs = h if m8 is Mod8Class.M7 else 3 * h
    return IdentityReport(p, Identity.CLASS_CROSS, lhs, rhs, m8)
