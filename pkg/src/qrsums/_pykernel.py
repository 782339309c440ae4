"""NumPy fallback kernels, used when the compiled extension is unavailable.

Same call surface as ``qrsums._ckernel``. Sums stay below p*(p-1)/2 < 2**62
for p < 2**31, so int64 arrays are exact.
"""

import numpy as np

from .modular import jacobi

BACKEND_NAME = "python"

__all__ = ["BACKEND_NAME", "residue_table", "partition_squares", "partition_symbol", "jacobi"]


def _square_marks(p: int) -> np.ndarray:
    i = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    return (i * i) % p


def residue_table(p: int) -> bytes:
    """bytes of length p carrying 1 at every quadratic residue index."""
    tab = np.zeros(p, dtype=np.uint8)
    tab[_square_marks(p)] = 1
    return tab.tobytes()


def partition_squares(p: int) -> tuple[int, ...]:
    """Lower/upper residue and nonresidue sums and counts via a square table.

    Returns (sum_q_l, sum_q_u, sum_n_l, sum_n_u,
             count_q_l, count_q_u, count_n_l, count_n_u).
    """
    half = (p - 1) // 2
    tab = np.zeros(p, dtype=bool)
    tab[_square_marks(p)] = True

    x = np.arange(1, p, dtype=np.int64)
    is_q = tab[1:]
    low_q, up_q = is_q[:half], is_q[half:]
    low_x, up_x = x[:half], x[half:]

    count_q_l = int(low_q.sum())
    count_q_u = int(up_q.sum())
    return (
        int(low_x[low_q].sum()),
        int(up_x[up_q].sum()),
        int(low_x[~low_q].sum()),
        int(up_x[~up_q].sum()),
        count_q_l,
        count_q_u,
        half - count_q_l,
        half - count_q_u,
    )


def partition_symbol(p: int) -> tuple[int, ...]:
    """Same contract as partition_squares, but classifying each x by its
    Jacobi symbol: no membership table, streaming accumulation."""
    half = (p - 1) // 2
    sums = [0, 0, 0, 0]
    counts = [0, 0, 0, 0]
    for x in range(1, p):
        k = (0 if x <= half else 1) + (0 if jacobi(x, p) == 1 else 2)
        sums[k] += x
        counts[k] += 1
    return (sums[0], sums[1], sums[2], sums[3], counts[0], counts[1], counts[2], counts[3])
