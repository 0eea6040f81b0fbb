"""Circulant transform construction and exact orthogonality checks.

A generator sequence g of length n defines a 2n x 2n circulant matrix N
whose first row interleaves the generator with zeros:

    g(0), 0, g(1), 0, ..., g(n-1), 0

and whose row i is the first row rotated right by i. The Gram product
N * N^T collapses to n distinct integers: the diagonal value
sum(g(j)^2) and, for each lag k in 1..n-1, the circular lag sum

    S(k) = sum_j g(j) * g((j + k) mod n).

Whenever a modulus q >= 2 divides every S(k), the matrix satisfies
N * N^T == r * I (mod q) with r = diagonal mod q, which is what makes
the forward/inverse block transforms below exact inverses of each other.

All arithmetic is on plain Python integers (no wraparound), and every
operation here is a pure function on immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import (
    InvalidGeneratorError,
    InvalidModulusError,
    NonInvertibleError,
    ShapeError,
)
from .modmath import is_prime, mod_inverse, sqrt_mod_prime


@dataclass(frozen=True)
class GeneratorSequence:
    """Nonnegative integers, length >= 2, not all zero."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        object.__setattr__(self, "values", tuple(values))
        if len(self.values) < 2:
            raise InvalidGeneratorError(
                f"need at least 2 values, got {len(self.values)}"
            )
        if any(v < 0 for v in self.values):
            raise InvalidGeneratorError("generator values must be nonnegative")
        if not any(self.values):
            raise InvalidGeneratorError("generator must have a nonzero value")

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class ResidueSequence:
    """A generator reduced modulo q: every value lies in [0, q)."""

    values: tuple[int, ...]
    modulus: int

    def __init__(self, values: Iterable[int], modulus: int):
        object.__setattr__(self, "values", tuple(values))
        object.__setattr__(self, "modulus", modulus)
        if modulus < 2:
            raise InvalidModulusError(f"modulus must be >= 2, got {modulus}")
        if len(self.values) < 2:
            raise InvalidGeneratorError(
                f"need at least 2 values, got {len(self.values)}"
            )
        bad = [v for v in self.values if not 0 <= v < modulus]
        if bad:
            raise InvalidGeneratorError(
                f"values {bad} out of range [0, {modulus})"
            )

    @property
    def n(self) -> int:
        return len(self.values)


def _values(seq) -> tuple[int, ...]:
    if isinstance(seq, (GeneratorSequence, ResidueSequence)):
        return seq.values
    return tuple(seq)


@dataclass(frozen=True)
class CirculantNHT:
    """The 2n x 2n circulant built from a generator; rows built on demand."""

    generator: GeneratorSequence

    @property
    def dimension(self) -> int:
        return 2 * self.generator.n

    @property
    def first_row(self) -> tuple[int, ...]:
        row = []
        for v in self.generator.values:
            row.append(v)
            row.append(0)
        return tuple(row)

    def row(self, i: int) -> tuple[int, ...]:
        """Row i: the first row rotated right by i positions."""
        first = self.first_row
        d = self.dimension
        return tuple(first[(j - i) % d] for j in range(d))

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(self.dimension)]


@dataclass(frozen=True)
class GramSummary:
    """The distinct entries of N * N^T: one diagonal, n-1 lag sums."""

    diagonal: int
    lag_sums: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.lag_sums) + 1

    def lag_sum(self, k: int) -> int:
        """S(k) for k in 1..n-1."""
        if not 1 <= k <= len(self.lag_sums):
            raise ShapeError(f"lag {k} outside 1..{len(self.lag_sums)}")
        return self.lag_sums[k - 1]


@dataclass(frozen=True)
class OrthogonalityReport:
    """Result of checking N * N^T == r * I modulo q for one sequence."""

    modulus: int
    diagonal_residue: int
    offdiag_residues: tuple[int, ...]
    normalizer: int | None
    is_exact_identity: bool

    def offending_lags(self) -> list[tuple[int, int]]:
        """(lag, residue) pairs where the off-diagonal residue is nonzero."""
        return [(k + 1, r) for k, r in enumerate(self.offdiag_residues) if r]

    @property
    def is_self_orthogonal(self) -> bool:
        return not any(self.offdiag_residues)


def build_circulant(g: GeneratorSequence | Sequence[int]) -> CirculantNHT:
    """Wrap a generator in its circulant form, validating the generator."""
    if not isinstance(g, GeneratorSequence):
        g = GeneratorSequence(g)
    return CirculantNHT(g)


def gram_lag_sums(g: GeneratorSequence | Sequence[int]) -> GramSummary:
    """Diagonal and circular lag sums of a generator, exactly.

    Equivalent to reading N * N^T off the full matrix product, but in
    O(n^2) integer multiplies instead of O(n^3).
    """
    if not isinstance(g, GeneratorSequence):
        g = GeneratorSequence(_values(g))
    v = g.values
    n = g.n
    diagonal = sum(x * x for x in v)
    lags = tuple(
        sum(v[j] * v[(j + k) % n] for j in range(n)) for k in range(1, n)
    )
    return GramSummary(diagonal=diagonal, lag_sums=lags)


def matrix_gram(g: GeneratorSequence | Sequence[int]) -> list[list[int]]:
    """Full N * N^T as exact integers; the slow cross-check for gram_lag_sums."""
    rows = build_circulant(g).rows()
    d = len(rows)
    return [
        [sum(rows[i][t] * rows[j][t] for t in range(d)) for j in range(d)]
        for i in range(d)
    ]


def discover_modulus(gram: GramSummary) -> int:
    """The gcd of all lag sums: the largest modulus killing every off-diagonal.

    Returns 0 when every lag sum is already 0 (orthogonal over the
    integers, no finite modulus needed) and 1 when no nontrivial modulus
    exists. Any divisor >= 2 of the result is a working modulus.
    """
    return reduce(math.gcd, gram.lag_sums, 0)


def diagonal_residue(seq, q: int) -> int:
    """r = sum of squared values, reduced mod q."""
    if q < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {q}")
    return sum(v * v for v in _values(seq)) % q


def normalizer(r: int, q: int) -> int | None:
    """The scale w with w^2 * r == 1 (mod q), when one exists.

    w is the inverse of the smaller square root of r. Requires prime q;
    composite q returns None (unsupported, reported rather than raised).
    Returns None when r is a quadratic non-residue. r == 0 mod q can
    never be normalized and raises.
    """
    if q < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {q}")
    r %= q
    if r == 0:
        raise NonInvertibleError(f"diagonal residue 0 mod {q} has no normalizer")
    if not is_prime(q):
        return None
    roots = sqrt_mod_prime(r, q)
    if roots is None:
        return None
    return mod_inverse(roots[0], q)


def reduce_mod(seq, q: int) -> ResidueSequence:
    """Reduce each value mod q."""
    if q < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {q}")
    return ResidueSequence((v % q for v in _values(seq)), q)


def orthogonality_report(s: ResidueSequence) -> OrthogonalityReport:
    """Check one residue sequence for self-orthogonality mod its modulus."""
    q = s.modulus
    gram = gram_lag_sums(s.values)
    offdiag = tuple(v % q for v in gram.lag_sums)
    r = gram.diagonal % q
    w: int | None
    if r == 0:
        w = None
    else:
        w = normalizer(r, q)
    return OrthogonalityReport(
        modulus=q,
        diagonal_residue=r,
        offdiag_residues=offdiag,
        normalizer=w,
        is_exact_identity=(r == 1 and not any(offdiag)),
    )


def _check_block(s: ResidueSequence, block: Sequence[int]) -> list[int]:
    d = 2 * s.n
    if len(block) != d:
        raise ShapeError(f"block length {len(block)} != {d}")
    q = s.modulus
    return [b % q for b in block]


def forward_transform(s: ResidueSequence, block: Sequence[int]) -> tuple[int, ...]:
    """G = N * F mod q for a block F of 2n values.

    Row i of N is nonzero only at columns i + 2t (mod 2n), where it
    holds generator value t, so each output needs n products, not 2n.
    """
    f = _check_block(s, block)
    q = s.modulus
    v = s.values
    n = s.n
    d = 2 * n
    return tuple(
        sum(v[t] * f[(i + 2 * t) % d] for t in range(n)) % q for i in range(d)
    )


def inverse_transform(
    s: ResidueSequence, block: Sequence[int], diagonal: int
) -> tuple[int, ...]:
    """F = r^-1 * N^T * G mod q; exact inverse of forward_transform.

    diagonal is the residue r with N * N^T == r * I (mod q); it must be
    invertible mod q or there is nothing to undo.
    """
    g = _check_block(s, block)
    q = s.modulus
    r_inv = mod_inverse(diagonal, q)
    v = s.values
    n = s.n
    d = 2 * n
    return tuple(
        r_inv * sum(v[t] * g[(i - 2 * t) % d] for t in range(n)) % q
        for i in range(d)
    )
