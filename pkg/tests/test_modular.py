import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from qrsums.modular import (
    MILLER_RABIN_WITNESSES,
    PRIME_LIMIT,
    OddPrime,
    is_prime,
    jacobi,
    legendre_euler,
    mul_mod,
    pow_mod,
    primes_in_range,
)

odd_moduli = st.integers(min_value=0, max_value=500_000).map(lambda k: 2 * k + 1)


class TestMulMod:
    def test_examples(self):
        assert mul_mod(0, 5, 7) == 0
        assert mul_mod(3, 3, 7) == 2
        assert mul_mod(6, 6, 7) == 1
        # near the modulus bound: double-width product, single reduction
        assert mul_mod(2**30, 2**30, 2**31 - 1) == 536870912

    def test_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            mul_mod(0, 0, 1)
        with pytest.raises(ValueError):
            mul_mod(0, 0, 0)

    def test_rejects_out_of_range_arguments(self):
        with pytest.raises(ValueError):
            mul_mod(7, 1, 7)
        with pytest.raises(ValueError):
            mul_mod(1, -1, 7)

    @given(st.integers(0, 10**12), st.integers(0, 10**12), st.integers(2, 10**12))
    def test_matches_wide_arithmetic(self, a, b, m):
        assert mul_mod(a % m, b % m, m) == (a % m) * (b % m) % m


class TestPowMod:
    def test_examples(self):
        assert pow_mod(5, 0, 7) == 1
        assert pow_mod(0, 0, 7) == 1
        assert pow_mod(3, 3, 11) == 5
        assert pow_mod(2, 3, 7) == 1

    def test_validation(self):
        with pytest.raises(ValueError):
            pow_mod(1, 1, 1)
        with pytest.raises(ValueError):
            pow_mod(7, 1, 7)
        with pytest.raises(ValueError):
            pow_mod(1, -1, 7)

    @given(st.integers(0, 10**9), st.integers(0, 10**6), st.integers(2, 10**9))
    def test_matches_builtin_pow(self, base, exp, m):
        assert pow_mod(base % m, exp, m) == pow(base % m, exp, m)


class TestIsPrime:
    def test_small_values(self):
        assert not is_prime(0)
        assert not is_prime(1)
        assert is_prime(2)
        assert is_prime(3)
        assert not is_prime(4)
        assert is_prime(61)
        assert not is_prime(61 * 61)

    def test_examples(self):
        assert is_prime(7919)
        assert is_prime(99991)
        assert is_prime(2**31 - 1)

    def test_strong_pseudoprime_to_first_four_bases(self):
        # composite 151 * 751 * 28351; fools witnesses 2, 3, 5, 7
        assert not is_prime(3215031751)

    def test_matches_sieve_below_one_million(self):
        flags = oracles.sieve_flags(10**6 - 1)
        mismatches = [n for n in range(10**6) if is_prime(n) != bool(flags[n])]
        assert mismatches == []

    def test_rejects_out_of_domain(self):
        with pytest.raises(ValueError):
            is_prime(-1)
        with pytest.raises(ValueError):
            is_prime(2**64)
        assert not is_prime(2**64 - 1)

    def test_witness_set_is_first_twelve_primes(self):
        assert MILLER_RABIN_WITNESSES == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class TestJacobi:
    def test_examples(self):
        assert jacobi(2, 7) == 1
        assert jacobi(2, 3) == -1
        assert jacobi(4, 11) == 1
        assert jacobi(3, 7) == -1
        assert jacobi(1, 9) == 1
        assert jacobi(3, 9) == 0
        assert jacobi(0, 7) == 0

    def test_rejects_even_or_nonpositive_modulus(self):
        with pytest.raises(ValueError):
            jacobi(1, 4)
        with pytest.raises(ValueError):
            jacobi(1, 0)
        with pytest.raises(ValueError):
            jacobi(1, -3)

    def test_negative_arguments_reduce_first(self):
        # (-1|p) = -1 exactly for p = 3 (mod 4)
        assert jacobi(-1, 7) == -1
        assert jacobi(-1, 13) == 1
        assert jacobi(-5, 7) == jacobi(2, 7)

    @given(st.integers(-(10**9), 10**9), odd_moduli)
    def test_periodic_in_a(self, a, n):
        assert jacobi(a, n) == jacobi(a % n, n)
        assert jacobi(a + n, n) == jacobi(a, n)

    @given(st.integers(0, 10**6), st.integers(0, 10**6), odd_moduli)
    def test_multiplicative_in_a(self, a, b, n):
        assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)

    @given(odd_moduli.filter(lambda n: n > 1), odd_moduli.filter(lambda n: n > 1))
    def test_multiplicative_in_n(self, m, n):
        for a in (2, 3, 10):
            assert jacobi(a, m * n) == jacobi(a, m) * jacobi(a, n)

    def test_zero_exactly_on_shared_factor(self):
        import math

        for n in range(1, 200, 2):
            for a in range(n):
                assert (jacobi(a, n) == 0) == (math.gcd(a, n) > 1)


class TestOddPrime:
    def test_accepts_odd_primes(self):
        assert OddPrime(3).value == 3
        assert OddPrime(99991).half == 49995
        assert int(OddPrime(7)) == 7
        assert list(range(10))[OddPrime(5)] == 5  # usable as an index

    @pytest.mark.parametrize("bad", [2, 1, 0, -7, 9, 15, 100, PRIME_LIMIT + 11])
    def test_rejects_non_odd_primes(self, bad):
        with pytest.raises(ValueError):
            OddPrime(bad)

    def test_rejects_non_int(self):
        with pytest.raises(ValueError):
            OddPrime(7.0)
        with pytest.raises(ValueError):
            OddPrime(True)

    def test_ensure(self):
        p = OddPrime(11)
        assert OddPrime.ensure(p) is p
        assert OddPrime.ensure(11) == p
        with pytest.raises(TypeError):
            OddPrime.ensure("11")

    def test_half(self):
        assert OddPrime(7).half == 3
        assert OddPrime(3).half == 1


class TestLegendreEuler:
    def test_examples(self):
        assert legendre_euler(0, 7) == 0
        assert legendre_euler(2, 7) == 1
        assert legendre_euler(3, 7) == -1
        assert legendre_euler(4, 11) == 1

    def test_rejects_out_of_range_residue(self):
        with pytest.raises(ValueError):
            legendre_euler(7, 7)
        with pytest.raises(ValueError):
            legendre_euler(-1, 7)

    def test_detects_composite_modulus(self):
        # bypass OddPrime validation to exercise the defensive branch
        fake = OddPrime.__new__(OddPrime)
        object.__setattr__(fake, "value", 15)
        with pytest.raises(RuntimeError):
            legendre_euler(2, fake)

    @settings(max_examples=50)
    @given(st.sampled_from(oracles.odd_primes_upto(500)), st.integers(0, 10**6))
    def test_agrees_with_jacobi(self, p, a):
        assert legendre_euler(a % p, p) == jacobi(a, p)

    def test_agrees_with_jacobi_exhaustively(self):
        for p in oracles.odd_primes_upto(499):
            prime = OddPrime(p)
            for a in range(p):
                assert legendre_euler(a, prime) == jacobi(a, p), (a, p)


class TestPrimesInRange:
    def test_matches_sieve(self):
        flags = oracles.sieve_flags(5000)
        assert list(primes_in_range(0, 5000)) == [n for n in range(5001) if flags[n]]

    def test_counts(self):
        assert len(list(primes_in_range(3, 100))) == 24
        assert len(list(primes_in_range(3, 1000))) == 167

    def test_inclusive_bounds(self):
        assert list(primes_in_range(7, 11)) == [7, 11]
        assert list(primes_in_range(8, 10)) == []
        assert list(primes_in_range(10, 4)) == []

    def test_window_boundary(self):
        # the sieve works in 2**20-wide segments; straddle one boundary
        lo, hi = (1 << 20) - 50, (1 << 20) + 50
        expected = [n for n in range(lo, hi + 1) if oracles.trial_division_prime(n)]
        assert list(primes_in_range(lo, hi)) == expected
