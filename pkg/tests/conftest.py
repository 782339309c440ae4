import pytest

from qrsums import partition_by_squares
from qrsums.modular import primes_in_range


@pytest.fixture(scope="session")
def primes_100k():
    """All odd primes below 10**5."""
    return list(primes_in_range(3, 99_999))


@pytest.fixture(scope="session")
def partitions_100k(primes_100k):
    """Residue census of every odd prime below 10**5 (production path)."""
    return [partition_by_squares(p) for p in primes_100k]


@pytest.fixture(scope="session")
def partitions_10k(partitions_100k):
    return [part for part in partitions_100k if part.p.value < 10_000]
