"""Partition of Z_p into lower/upper quadratic residues and nonresidues.

For an odd prime p the nonzero elements of Z_p = {0, 1, ..., p-1} split
into (p-1)/2 residues Q and (p-1)/2 nonresidues N. This module computes
the plain-integer element sums and cardinalities of Q and N over the
lower half {1, ..., (p-1)/2} and upper half {(p+1)/2, ..., p-1}, by two
independent algorithms, plus the structural maps (doubling mod p,
negation) that drive the sum identities checked in :mod:`qrsums.theorems`.

0 is neither a residue nor a nonresidue, so it contributes to no sum and
the four pieces always add up to the full triangle sum p*(p-1)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import _backend
from .modular import OddPrime, jacobi

#: Where element x goes: 1 <= x <= (p-1)/2 is "lower", larger is "upper".
#: Equivalently, lower means x < p/2. The boundary element (p-1)/2 itself
#: belongs to the lower half.
HALF_CONVENTION = "lower half = {1..(p-1)/2}, upper half = {(p+1)/2..p-1}"

# 0x00 <-> 0x01 byte swap, for complementing residue tables.
_SWAP01 = bytes(1 if b == 0 else 0 if b == 1 else b for b in range(256))


class ResidueClass(Enum):
    RESIDUE = "residue"
    NONRESIDUE = "nonresidue"
    ZERO = "zero"


class DoublingImage(Enum):
    """What x -> 2x mod p does to the residue set Q as a whole."""

    PRESERVES_Q = "preserves_q"
    SWAPS_QN = "swaps_qn"


@dataclass(frozen=True)
class ResiduePartition:
    """Census of one prime: sums and counts of Q and N over the two halves.

    Sums are ordinary integer sums (never reduced mod p). n_below_half is
    the number of nonresidues less than p/2, which by the half convention
    equals count_n_l. Instances are not validated on construction so that
    tests can build deliberately broken ones; :meth:`violations` checks the
    structural invariants.
    """

    p: OddPrime
    sum_q_l: int
    sum_q_u: int
    sum_n_l: int
    sum_n_u: int
    count_q_l: int
    count_q_u: int
    count_n_l: int
    count_n_u: int
    n_below_half: int

    @property
    def sum_q(self) -> int:
        return self.sum_q_l + self.sum_q_u

    @property
    def sum_n(self) -> int:
        return self.sum_n_l + self.sum_n_u

    @property
    def count_q(self) -> int:
        return self.count_q_l + self.count_q_u

    @property
    def count_n(self) -> int:
        return self.count_n_l + self.count_n_u

    def violations(self) -> list[str]:
        """Structural invariant violations (empty for a correct census)."""
        v = self.p.value
        half = self.p.half
        out = []
        if self.count_q != half:
            out.append(f"|Q| = {self.count_q}, expected (p-1)/2 = {half}")
        if self.count_n != half:
            out.append(f"|N| = {self.count_n}, expected (p-1)/2 = {half}")
        total = self.sum_q + self.sum_n
        if total != v * (v - 1) // 2:
            out.append(f"sum over Z_p = {total}, expected p(p-1)/2 = {v * (v - 1) // 2}")
        if self.n_below_half != self.count_n_l:
            out.append(f"n_below_half = {self.n_below_half} != count_n_l = {self.count_n_l}")
        if v % 4 == 3:
            # negation q -> p-q swaps the classes, pairing N^l with Q^u
            # and Q^l with N^u
            if self.count_q_u != self.n_below_half:
                out.append(f"count_q_u = {self.count_q_u} != n = {self.n_below_half}")
            if self.count_n_u != self.count_q_l:
                out.append(f"count_n_u = {self.count_n_u} != count_q_l = {self.count_q_l}")
        for name in ("sum_q_l", "sum_q_u", "sum_n_l", "sum_n_u"):
            s = getattr(self, name)
            if not 0 <= s < v * v:
                out.append(f"{name} = {s} outside [0, p**2)")
        return out


def classify(x: int, p: OddPrime | int) -> ResidueClass:
    """Residue class of x in Z_p: ZERO for 0, else by the Jacobi symbol."""
    p = OddPrime.ensure(p)
    if not 0 <= x < p.value:
        raise ValueError(f"element must lie in [0, {p.value}), got {x}")
    if x == 0:
        return ResidueClass.ZERO
    return ResidueClass.RESIDUE if jacobi(x, p.value) == 1 else ResidueClass.NONRESIDUE


def _from_counts(p: OddPrime, counts: tuple[int, ...]) -> ResiduePartition:
    sql, squ, snl, snu, cql, cqu, cnl, cnu = (int(c) for c in counts)
    return ResiduePartition(
        p=p,
        sum_q_l=sql,
        sum_q_u=squ,
        sum_n_l=snl,
        sum_n_u=snu,
        count_q_l=cql,
        count_q_u=cqu,
        count_n_l=cnl,
        count_n_u=cnu,
        n_below_half=cnl,
    )


def partition_by_squares(p: OddPrime | int, backend: str | None = None) -> ResiduePartition:
    """Partition census via the square table {i*i mod p : 1 <= i <= (p-1)/2}.

    O(p) time and O(p) table bytes; the production path.
    """
    p = OddPrime.ensure(p)
    return _from_counts(p, _backend.get(backend).partition_squares(p.value))


def partition_by_symbol(p: OddPrime | int, backend: str | None = None) -> ResiduePartition:
    """Partition census by evaluating the Jacobi symbol of every x in [1, p-1].

    O(p log p) time, no table: the independent cross-check path against
    :func:`partition_by_squares`.
    """
    p = OddPrime.ensure(p)
    return _from_counts(p, _backend.get(backend).partition_symbol(p.value))


def residue_table(p: OddPrime | int, backend: str | None = None) -> bytes:
    """bytes of length p with 1 at residue indices, 0 elsewhere (and at 0)."""
    p = OddPrime.ensure(p)
    return _backend.get(backend).residue_table(p.value)


def double_mod(x: int, p: OddPrime | int) -> int:
    """2x mod p for 0 < x < p, via the half split.

    Lower-half x doubles with no reduction (2x < p); upper-half x reduces
    exactly once to 2x - p, which lands back in [1, p-1].
    """
    p = OddPrime.ensure(p)
    v = p.value
    if not 0 < x < v:
        raise ValueError(f"element must lie in [1, {v}), got {x}")
    y = 2 * x if x <= p.half else 2 * x - v
    assert 0 < y < v
    return y


def doubling_image_class(p: OddPrime | int, backend: str | None = None) -> DoublingImage:
    """Compute the image {2x mod p : x in Q} exhaustively and compare it to
    Q and to N.

    Doubling permutes Q exactly when 2 is itself a residue (p = +-1 mod 8)
    and otherwise maps Q onto N. An image equal to neither is impossible
    for prime p and raises.
    """
    p = OddPrime.ensure(p)
    v = p.value
    half = p.half
    tab = residue_table(p, backend)
    image = bytearray(v)
    for x in range(1, v):
        if tab[x]:
            image[2 * x if x <= half else 2 * x - v] = 1
    if bytes(image) == tab:
        return DoublingImage.PRESERVES_Q
    nontab = b"\x00" + tab[1:].translate(_SWAP01)
    if bytes(image) == nontab:
        return DoublingImage.SWAPS_QN
    raise RuntimeError(f"doubling image mod {v} is neither Q nor N: broken residue table")


def negation_check(p: OddPrime | int, backend: str | None = None) -> bool:
    """For p = 3 (mod 4): does x -> p - x swap residues and nonresidues?

    Verified exhaustively: every element's class must differ from its
    negation's. True means {p - q : q in N} = Q, which is what makes the
    upper residue count equal the number of nonresidues below p/2.
    For p = 1 (mod 4) negation preserves the classes instead, so such
    moduli are rejected.
    """
    p = OddPrime.ensure(p)
    if p.value % 4 != 3:
        raise ValueError(f"negation swaps the classes only for p = 3 (mod 4), got p = {p.value}")
    tab = residue_table(p, backend)
    # fwd[i] is the class of x = i+1; bwd[i] the class of p - x
    fwd = tab[1:]
    bwd = tab[-1:0:-1]
    return fwd == bwd.translate(_SWAP01)
