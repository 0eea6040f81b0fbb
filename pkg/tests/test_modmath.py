"""Modular arithmetic helpers against brute-force references."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nht.errors import CompositeModulusError, InvalidModulusError, NHTError, NonInvertibleError
from nht.modmath import (
    factorize,
    is_prime,
    largest_prime_factor,
    mod_inverse,
    sqrt_mod_prime,
)

SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 47, 331, 1987, 3121, 7283, 21851]


def _trial_division_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


class TestIsPrime:
    def test_matches_trial_division_below_ten_thousand(self):
        for n in range(10_000):
            assert is_prime(n) == _trial_division_prime(n), n

    def test_fixture_moduli_are_prime(self):
        for q in (7283, 21851, 3121, 331, 47, 1987):
            assert is_prime(q)

    def test_carmichael_numbers_rejected(self):
        for n in (561, 1105, 1729, 41041, 825265):
            assert not is_prime(n)

    def test_large_prime(self):
        assert is_prime(2**89 - 1)
        assert not is_prime((2**89 - 1) * (2**61 - 1))


class TestModInverse:
    @given(st.integers(1, 10**6), st.sampled_from(SMALL_PRIMES))
    @settings(deadline=None)
    def test_inverse_property(self, a, q):
        if a % q == 0:
            with pytest.raises(NonInvertibleError):
                mod_inverse(a, q)
        else:
            inv = mod_inverse(a, q)
            assert 0 <= inv < q
            assert a * inv % q == 1

    def test_half_of_331(self):
        assert mod_inverse(2, 331) == 166

    def test_non_coprime(self):
        with pytest.raises(NonInvertibleError):
            mod_inverse(6, 9)

    def test_bad_modulus(self):
        with pytest.raises(InvalidModulusError):
            mod_inverse(3, 1)


class TestSqrtModPrime:
    @pytest.mark.parametrize("q", [2, 3, 5, 7, 13, 17, 47, 331, 3121])
    def test_against_square_enumeration(self, q):
        squares = {}
        for x in range(q):
            squares.setdefault(x * x % q, set()).add(x)
        for a in range(q):
            roots = sqrt_mod_prime(a, q)
            if a in squares:
                assert roots is not None
                assert set(roots) == squares[a]
                assert roots[0] <= roots[1]
            else:
                assert roots is None

    def test_known_roots(self):
        assert sqrt_mod_prime(4, 331) == (2, 329)
        assert sqrt_mod_prime(16, 3121) == (4, 3117)
        assert sqrt_mod_prime(24, 47) == (20, 27)
        assert sqrt_mod_prime(576, 1987) == (24, 1963)

    def test_non_residue(self):
        assert sqrt_mod_prime(3, 7) is None

    def test_zero(self):
        assert sqrt_mod_prime(0, 13) == (0, 0)

    def test_composite_modulus_rejected(self):
        with pytest.raises(CompositeModulusError):
            sqrt_mod_prime(4, 15)

    @given(st.sampled_from([13, 17, 331, 1987, 3121]), st.integers(1, 10**9))
    @settings(deadline=None)
    def test_roots_square_back(self, q, x):
        a = x * x % q
        roots = sqrt_mod_prime(a, q)
        assert roots is not None
        assert all(r * r % q == a for r in roots)


class TestFactorize:
    def test_chain_gcds(self):
        assert factorize(43692) == {2: 2, 3: 1, 11: 1, 331: 1}
        assert factorize(43694) == {2: 1, 7: 1, 3121: 1}
        assert factorize(43710) == {2: 1, 3: 1, 5: 1, 31: 1, 47: 1}
        assert factorize(43714) == {2: 1, 11: 1, 1987: 1}
        assert factorize(54) == {2: 1, 3: 3}

    def test_one_is_empty(self):
        assert factorize(1) == {}

    def test_zero_rejected(self):
        with pytest.raises(NHTError):
            factorize(0)

    def test_large_semiprime(self):
        p, q = 1_000_003, 1_000_033
        assert factorize(p * q) == {p: 1, q: 1}

    @given(st.integers(2, 10**9))
    @settings(deadline=None, max_examples=200)
    def test_reconstructs_and_factors_prime(self, x):
        factors = factorize(x)
        product = 1
        for p, e in factors.items():
            assert is_prime(p)
            product *= p**e
        assert product == x

    def test_largest_prime_factor(self):
        assert largest_prime_factor(43692) == 331
        assert largest_prime_factor(144917623782) == 21851
        with pytest.raises(NHTError):
            largest_prime_factor(1)
