"""Modular arithmetic, deterministic primality, and the quadratic character.

The quadratic character mod an odd prime is computed by two independent
algorithms: :func:`jacobi` (binary reciprocity, the production path) and
:func:`legendre_euler` (Euler's criterion a**((p-1)/2) mod p, kept as a
cross-check oracle). One catching the other's bugs is the point; do not
merge them.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Iterator, Literal

SymbolValue = Literal[-1, 0, 1]

#: Accepted primes are below this bound so that every quantity handled here
#: (squares below p**2, element sums below p*(p-1)/2) fits in 64 bits,
#: including inside the compiled kernels.
PRIME_LIMIT = 2**31

#: Deterministic Miller-Rabin witnesses. The first 12 primes are a correct
#: witness set for every n < 318_665_857_834_031_151_167_461 (well past
#: 2**64); see Sorenson & Webster, "Strong pseudoprimes to the first eight
#: prime bases", Math. Comp. 86 (2015), and the Feitsma/Galway base-2
#: pseudoprime tables it builds on.
MILLER_RABIN_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_IS_PRIME_LIMIT = 2**64

# Trial-division pretest; covers every composite below 61**2 and keeps the
# witnesses above strictly smaller than any n reaching the Miller-Rabin loop.
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)


def mul_mod(a: int, b: int, m: int) -> int:
    """(a*b) mod m for 0 <= a, b < m.

    Python integers are arbitrary precision, so the double-width product
    is exact; no overflow is possible.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if not (0 <= a < m and 0 <= b < m):
        raise ValueError(f"arguments must lie in [0, {m}), got {a} and {b}")
    return a * b % m


def pow_mod(base: int, exp: int, m: int) -> int:
    """base**exp mod m by binary square-and-multiply; pow_mod(b, 0, m) == 1."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if not 0 <= base < m:
        raise ValueError(f"base must lie in [0, {m}), got {base}")
    if exp < 0:
        raise ValueError(f"exponent must be nonnegative, got {exp}")
    result = 1
    b = base
    e = exp
    while e:
        if e & 1:
            result = result * b % m
        b = b * b % m
        e >>= 1
    return result


def is_prime(n: int) -> bool:
    """Deterministic primality for 0 <= n < 2**64.

    Trial division by the primes up to 61, then Miller-Rabin with the fixed
    witness set :data:`MILLER_RABIN_WITNESSES`, which is deterministic on
    the whole supported range.
    """
    if n < 0:
        raise ValueError(f"expected a nonnegative integer, got {n}")
    if n >= _IS_PRIME_LIMIT:
        raise ValueError(f"witness set is only proven below 2**64, got {n}")
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    if n < _SMALL_PRIMES[-1] ** 2:
        return True

    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in MILLER_RABIN_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def jacobi(a: int, n: int) -> SymbolValue:
    """Jacobi symbol (a|n) for odd n >= 1, by the binary algorithm.

    Any integer a is accepted and reduced mod n first. The result is 0
    exactly when gcd(a, n) > 1 (for prime n: when n divides a).
    """
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"modulus must be odd and positive, got {n}")
    a %= n
    sign = 1
    while a:
        while a & 1 == 0:
            a >>= 1
            if n & 7 in (3, 5):
                sign = -sign
        a, n = n, a
        if a & 3 == 3 and n & 3 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


@dataclass(frozen=True)
class OddPrime:
    """A validated odd prime modulus, 3 <= value < 2**31."""

    value: int

    def __post_init__(self) -> None:
        v = self.value
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"expected an int, got {type(v).__name__}")
        if v < 3:
            raise ValueError(f"{v} is not an odd prime >= 3")
        if v >= PRIME_LIMIT:
            raise ValueError(f"{v} exceeds the 2**31 modulus bound")
        if v % 2 == 0 or not is_prime(v):
            raise ValueError(f"{v} is not an odd prime")

    @classmethod
    def ensure(cls, p: "OddPrime | int") -> "OddPrime":
        """Validate an int, or pass an already-validated OddPrime through."""
        if isinstance(p, cls):
            return p
        return cls(operator.index(p))

    @property
    def half(self) -> int:
        """(p-1)//2: the size of the lower half and of each residue class."""
        return (self.value - 1) // 2

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value


def legendre_euler(a: int, p: OddPrime | int) -> SymbolValue:
    """Quadratic character of a mod p by Euler's criterion (test oracle).

    0 for a == 0, +1 when a**((p-1)/2) == 1 mod p, -1 when it equals p-1.
    Any other power value is impossible mod a prime and raises, since it
    means the modulus was not prime after all.
    """
    p = OddPrime.ensure(p)
    v = p.value
    if not 0 <= a < v:
        raise ValueError(f"residue must lie in [0, {v}), got {a}")
    if a == 0:
        return 0
    t = pow_mod(a, p.half, v)
    if t == 1:
        return 1
    if t == v - 1:
        return -1
    raise RuntimeError(
        f"{a}**(({v}-1)/2) mod {v} = {t}, neither 1 nor {v - 1}: "
        "the modulus cannot be prime (broken primality check?)"
    )


def _small_primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    flags = bytearray(b"\x01") * (n + 1)
    flags[0:2] = b"\x00\x00"
    for q in range(2, math.isqrt(n) + 1):
        if flags[q]:
            start = q * q
            flags[start :: q] = b"\x00" * len(range(start, n + 1, q))
    return [i for i, f in enumerate(flags) if f]


def primes_in_range(lo: int, hi: int) -> Iterator[int]:
    """Yield the primes in [lo, hi] in increasing order (segmented sieve)."""
    lo = max(operator.index(lo), 2)
    hi = operator.index(hi)
    if hi < lo:
        return
    base = _small_primes_upto(math.isqrt(hi))
    window = 1 << 20
    w0 = lo
    while w0 <= hi:
        w1 = min(w0 + window - 1, hi)
        flags = bytearray(b"\x01") * (w1 - w0 + 1)
        for q in base:
            # q itself stays unmarked: marking starts at max(q*q, ...)
            start = max(q * q, (w0 + q - 1) // q * q)
            if start > w1:
                continue
            flags[start - w0 :: q] = b"\x00" * len(range(start, w1 + 1, q))
        for i, f in enumerate(flags):
            if f:
                yield w0 + i
        w0 = w1 + 1
