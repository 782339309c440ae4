# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the per-prime hot loops.

Same call surface as ``qrsums._pykernel``; ``qrsums._backend`` picks this
module when the extension was built. All arguments are plain ints with
3 <= p < 2**31, so every intermediate (squares below p**2, element sums
below p*(p-1)/2) fits in an unsigned 64-bit accumulator.
"""

BACKEND_NAME = "cython"

ctypedef unsigned long long u64


cdef void _mark_squares(unsigned char[::1] tab, u64 p) noexcept:
    # Q = {i*i mod p : 1 <= i <= (p-1)/2}; each residue is hit exactly once.
    cdef u64 i, half = (p - 1) // 2
    for i in range(1, half + 1):
        tab[<Py_ssize_t>((i * i) % p)] = 1


cdef int _jacobi(u64 a, u64 n) noexcept:
    # Binary Jacobi algorithm; caller guarantees odd n >= 1 and a < n.
    cdef int sign = 1
    cdef u64 t
    while a != 0:
        while (a & 1) == 0:
            a >>= 1
            t = n & 7
            if t == 3 or t == 5:
                sign = -sign
        t = a
        a = n
        n = t
        if (a & 3) == 3 and (n & 3) == 3:
            sign = -sign
        a = a % n
    if n == 1:
        return sign
    return 0


def residue_table(p):
    """bytes of length p carrying 1 at every quadratic residue index."""
    buf = bytearray(<Py_ssize_t>p)
    cdef unsigned char[::1] tab = buf
    _mark_squares(tab, <u64>p)
    return bytes(buf)


def partition_squares(p):
    """Lower/upper residue and nonresidue sums and counts via a square table.

    Returns (sum_q_l, sum_q_u, sum_n_l, sum_n_u,
             count_q_l, count_q_u, count_n_l, count_n_u).
    """
    cdef u64 pp = <u64>p
    buf = bytearray(<Py_ssize_t>p)
    cdef unsigned char[::1] tab = buf
    _mark_squares(tab, pp)

    cdef u64 half = (pp - 1) // 2
    cdef u64 x
    cdef u64 sql = 0, squ = 0, snl = 0, snu = 0
    cdef u64 cql = 0, cqu = 0, cnl = 0, cnu = 0
    for x in range(1, pp):
        if tab[<Py_ssize_t>x]:
            if x <= half:
                sql += x
                cql += 1
            else:
                squ += x
                cqu += 1
        else:
            if x <= half:
                snl += x
                cnl += 1
            else:
                snu += x
                cnu += 1
    return (sql, squ, snl, snu, cql, cqu, cnl, cnu)


def partition_symbol(p):
    """Same contract as partition_squares, but classifying each x by its
    Jacobi symbol: no membership table, streaming accumulation."""
    cdef u64 pp = <u64>p
    cdef u64 half = (pp - 1) // 2
    cdef u64 x
    cdef u64 sql = 0, squ = 0, snl = 0, snu = 0
    cdef u64 cql = 0, cqu = 0, cnl = 0, cnu = 0
    for x in range(1, pp):
        if _jacobi(x, pp) == 1:
            if x <= half:
                sql += x
                cql += 1
            else:
                squ += x
                cqu += 1
        else:
            if x <= half:
                snl += x
                cnl += 1
            else:
                snu += x
                cnu += 1
    return (sql, squ, snl, snu, cql, cqu, cnl, cnu)


def jacobi(a, n):
    """Jacobi symbol (a|n) for 0 <= a < n < 2**63, odd n (test hook)."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("modulus must be odd and positive")
    if not 0 <= a < n:
        raise ValueError("argument must satisfy 0 <= a < n")
    return _jacobi(<u64>a, <u64>n)
