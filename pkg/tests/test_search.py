"""Doubling chains, candidate evaluation, seed search."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nht import fixtures
from nht.errors import InvalidGeneratorError, NHTError
from nht.modmath import is_prime
from nht.search import (
    doubling_chain,
    evaluate_candidate,
    random_prime_seeds,
    search_seeds,
)

REFERENCE_ROWS = {2: ("example4", 331), 3: ("example3", 3121),
             11: ("example5", 47), 13: ("example6", 1987)}


class TestDoublingChain:
    def test_default_start(self):
        assert doubling_chain(7, 6).values == (7, 2, 4, 8, 16, 32)

    def test_custom_start(self):
        assert doubling_chain(5, 4, start=3).values == (5, 3, 6, 12)

    def test_length_too_short(self):
        with pytest.raises(InvalidGeneratorError):
            doubling_chain(7, 1)

    def test_seed_too_small(self):
        with pytest.raises(InvalidGeneratorError):
            doubling_chain(1, 4)

    def test_start_too_small(self):
        with pytest.raises(InvalidGeneratorError):
            doubling_chain(7, 4, start=0)


class TestEvaluateCandidate:
    def test_chains_regenerate_bundled_rows(self):
        for seed, (fixture_name, modulus) in REFERENCE_ROWS.items():
            cand = evaluate_candidate(doubling_chain(seed, 16), prime_only=True)
            target = fixtures.fixture(fixture_name)
            assert cand.valid
            assert cand.modulus == modulus
            assert cand.modulus_is_prime
            assert cand.reduced.values == target.values
            assert cand.gcd == 43688 + 2 * seed

    def test_without_prime_only_the_gcd_is_the_modulus(self):
        cand = evaluate_candidate(doubling_chain(2, 16))
        assert cand.valid
        assert cand.modulus == cand.gcd == 43692
        assert not cand.modulus_is_prime
        assert cand.normalizer is None

    def test_integer_orthogonal_input(self):
        cand = evaluate_candidate([1, 0])
        assert not cand.valid
        assert cand.gcd == 0 and cand.modulus == 0
        assert "orthogonal over the integers" in cand.diagnostic
        assert cand.reduced is None

    def test_gcd_one_input(self):
        cand = evaluate_candidate([1, 1, 0])
        assert not cand.valid
        assert cand.gcd == 1 and cand.modulus == 1
        assert "gcd 1" in cand.diagnostic

    def test_twelve_point_walkthrough(self):
        cand = evaluate_candidate(doubling_chain(7, 6))
        assert cand.valid
        assert cand.gcd == 54
        assert cand.diagonal_residue == 9
        assert cand.normalizer is None  # 54 is composite
        narrowed = evaluate_candidate(doubling_chain(7, 6), prime_only=True)
        assert narrowed.modulus == 3
        assert narrowed.reduced.values == (1, 2, 1, 2, 1, 2)
        assert narrowed.diagonal_residue == 0
        assert narrowed.normalizer is None

    def test_generalized_chain_regenerates_example2(self):
        cand = evaluate_candidate(
            doubling_chain(12747, 16, start=3642), prime_only=True
        )
        assert cand.gcd == 144917623782
        assert cand.modulus == 21851
        assert cand.reduced.values == fixtures.fixture("example2").values

    @given(st.lists(st.integers(0, 2**12), min_size=2, max_size=10).filter(any))
    @settings(deadline=None)
    def test_valid_candidates_are_reverified(self, values):
        from nht.core import gram_lag_sums

        cand = evaluate_candidate(values)
        if cand.valid:
            assert cand.modulus >= 2
            lag_sums = gram_lag_sums(values).lag_sums
            assert all(s % cand.modulus == 0 for s in lag_sums)
            assert cand.reduced.modulus == cand.modulus
            assert cand.diagonal_residue == sum(
                v * v for v in values
            ) % cand.modulus
        else:
            assert cand.gcd in (0, 1)
            assert cand.diagnostic

    @given(st.integers(2, 50), st.integers(2, 10), st.integers(1, 20))
    @settings(deadline=None)
    def test_prime_only_yields_prime_modulus(self, seed, n, start):
        cand = evaluate_candidate(doubling_chain(seed, n, start), prime_only=True)
        if cand.valid:
            assert is_prime(cand.modulus)
            assert cand.gcd % cand.modulus == 0


class TestSearchSeeds:
    def test_reference_seed_set(self):
        report = search_seeds([2, 3, 11, 13], 16, prime_only=True)
        assert [c.seed for c in report.candidates] == [2, 3, 11, 13]
        assert [c.modulus for c in report.candidates] == [331, 3121, 47, 1987]
        assert report.rejected == ()

    def test_non_prime_seed_rejected_processing_continues(self):
        report = search_seeds([2, 4, 9, 13], 16)
        assert [c.seed for c in report.candidates] == [2, 13]
        assert [seed for seed, _ in report.rejected] == [4, 9]
        assert all("not prime" in reason for _, reason in report.rejected)

    def test_only_non_prime_seed_gives_empty_result(self):
        report = search_seeds([4], 16)
        assert report.candidates == ()
        assert report.rejected == ((4, "seed 4 is not prime"),)

    def test_input_order_does_not_matter(self):
        a = search_seeds([13, 2, 3, 11], 16, prime_only=True)
        b = search_seeds([2, 3, 11, 13], 16, prime_only=True)
        assert a == b

    def test_valid_only_filter(self):
        full = search_seeds([2, 3], 16)
        filtered = search_seeds([2, 3], 16, include_invalid=False)
        assert filtered.candidates == tuple(
            c for c in full.candidates if c.valid
        )


class TestRandomPrimeSeeds:
    def test_reproducible(self):
        a = random_prime_seeds(5, below=100, rng_seed=42)
        b = random_prime_seeds(5, below=100, rng_seed=42)
        assert a == b
        assert all(is_prime(p) for p in a)
        assert sorted(set(a)) == list(a)

    def test_different_rng_seeds_differ(self):
        assert random_prime_seeds(8, below=1000, rng_seed=1) != \
            random_prime_seeds(8, below=1000, rng_seed=2)

    def test_not_enough_primes(self):
        with pytest.raises(NHTError):
            random_prime_seeds(10, below=10, rng_seed=0)
