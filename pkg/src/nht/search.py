"""Deterministic seed-chain search for self-orthogonal rows.

A doubling chain is the generator [seed, start, 2*start, 4*start, ...]
of length n. Evaluating a chain means discovering its modulus (the gcd
of all lag sums), optionally narrowing to the largest prime factor, and
reducing the chain by it. Every bundled example row is reproduced by
this pipeline; the chain gcds themselves are composite, so prime-only
selection is what recovers the bundled (prime) moduli.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    GeneratorSequence,
    ResidueSequence,
    diagonal_residue,
    discover_modulus,
    gram_lag_sums,
    normalizer,
    reduce_mod,
)
from .errors import InvalidGeneratorError, NHTError
from .modmath import is_prime, largest_prime_factor


@dataclass(frozen=True)
class SearchCandidate:
    """One evaluated generator; valid means a usable modulus was found."""

    seed: int
    n: int
    raw: GeneratorSequence
    gcd: int
    modulus: int
    modulus_is_prime: bool
    diagonal_residue: int | None
    normalizer: int | None
    reduced: ResidueSequence | None
    valid: bool
    diagnostic: str = ""


@dataclass(frozen=True)
class SearchReport:
    """Candidates in ascending seed order plus rejected-seed diagnostics."""

    candidates: tuple[SearchCandidate, ...]
    rejected: tuple[tuple[int, str], ...]


def doubling_chain(seed: int, n: int, start: int = 2) -> GeneratorSequence:
    """[seed, start, 2*start, ..., start * 2^(n-2)]."""
    if n < 2:
        raise InvalidGeneratorError(f"chain length must be >= 2, got {n}")
    if seed < 2:
        raise InvalidGeneratorError(f"chain seed must be >= 2, got {seed}")
    if start < 1:
        raise InvalidGeneratorError(f"chain start must be >= 1, got {start}")
    return GeneratorSequence([seed] + [start << i for i in range(n - 1)])


def evaluate_candidate(
    raw: GeneratorSequence | Sequence[int], prime_only: bool = False
) -> SearchCandidate:
    """Discover, verify, and apply a modulus for one generator.

    A gcd of 0 (orthogonal over the integers as-is) or 1 (no modulus
    exists) yields valid=False with a diagnostic. Otherwise the lag sums
    are re-checked against the selected modulus rather than trusting
    the discovery step.
    """
    if not isinstance(raw, GeneratorSequence):
        raw = GeneratorSequence(raw)
    seed = raw.values[0]
    gram = gram_lag_sums(raw)
    g = discover_modulus(gram)
    if g == 0:
        return SearchCandidate(
            seed=seed, n=raw.n, raw=raw, gcd=0, modulus=0,
            modulus_is_prime=False, diagonal_residue=None, normalizer=None,
            reduced=None, valid=False,
            diagnostic="every lag sum is 0: already orthogonal over the integers",
        )
    if g == 1:
        return SearchCandidate(
            seed=seed, n=raw.n, raw=raw, gcd=1, modulus=1,
            modulus_is_prime=False, diagonal_residue=None, normalizer=None,
            reduced=None, valid=False,
            diagnostic="lag sums have gcd 1: no modulus >= 2 works",
        )
    modulus = largest_prime_factor(g) if prime_only else g
    bad = [k + 1 for k, s in enumerate(gram.lag_sums) if s % modulus]
    if bad:
        return SearchCandidate(
            seed=seed, n=raw.n, raw=raw, gcd=g, modulus=modulus,
            modulus_is_prime=is_prime(modulus), diagonal_residue=None,
            normalizer=None, reduced=None, valid=False,
            diagnostic=f"lag sums {bad} not divisible by {modulus}",
        )
    r = diagonal_residue(raw, modulus)
    w = normalizer(r, modulus) if r != 0 else None
    return SearchCandidate(
        seed=seed, n=raw.n, raw=raw, gcd=g, modulus=modulus,
        modulus_is_prime=is_prime(modulus), diagonal_residue=r,
        normalizer=w, reduced=reduce_mod(raw, modulus), valid=True,
    )


def search_seeds(
    seeds: Iterable[int],
    n: int,
    prime_only: bool = False,
    start: int = 2,
    include_invalid: bool = True,
) -> SearchReport:
    """Evaluate the doubling chain of every prime seed, ascending.

    Non-prime seeds are rejected with a diagnostic and processing
    continues. Results depend only on the argument values, never on
    evaluation order.
    """
    candidates = []
    rejected = []
    for seed in sorted(set(seeds)):
        if not is_prime(seed):
            rejected.append((seed, f"seed {seed} is not prime"))
            continue
        cand = evaluate_candidate(doubling_chain(seed, n, start), prime_only)
        if cand.valid or include_invalid:
            candidates.append(cand)
    return SearchReport(candidates=tuple(candidates), rejected=tuple(rejected))


def random_prime_seeds(count: int, below: int, rng_seed: int) -> tuple[int, ...]:
    """count distinct prime seeds under `below`, reproducible from rng_seed."""
    primes = [p for p in range(2, below) if is_prime(p)]
    if count > len(primes):
        raise NHTError(f"only {len(primes)} primes below {below}, need {count}")
    return tuple(sorted(random.Random(rng_seed).sample(primes, count)))
