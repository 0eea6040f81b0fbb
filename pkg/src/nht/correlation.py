"""Modular circular correlation and the expectation measure.

The circular cross-correlation of two length-N value lists a, b at lag k
is the exact integer sum

    S(k) = sum_m a(m) * b((m + k) mod N)

with both operands reduced mod q before multiplying. Two residue
conventions exist for reporting S(k) modulo q:

    RAW     residue(k) = S(k) mod q
    SCALED  residue(k) = N^-1 * S(k) mod q   (needs gcd(N, q) = 1)

The reference expectations for the bundled example rows match
RAW, so RAW is the default everywhere; resolve_convention makes that
choice reproducible by measuring both against the targets.

The expectation measure condenses a correlation series to one rational:

    E = sum_k residue(k) / (N * q)

summed over all lags 0..N-1 and kept as an exact Fraction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .core import ResidueSequence, _values
from .errors import ConventionError, InvalidModulusError, NonInvertibleError, ShapeError
from .modmath import mod_inverse

COMPLEMENTARY_BAND = (Fraction(95, 100), Fraction(105, 100))


class Convention(enum.Enum):
    RAW = "raw"
    SCALED = "scaled"


@dataclass(frozen=True)
class CorrelationSeries:
    """Per-lag correlation of two length-N sequences modulo q."""

    length: int
    modulus: int
    convention: Convention
    raw_sums: tuple[int, ...]
    residues: tuple[int, ...]

    @property
    def normalized(self) -> tuple[Fraction, ...]:
        """residue(k) / q for each lag, each in [0, 1)."""
        return tuple(Fraction(r, self.modulus) for r in self.residues)


@dataclass(frozen=True)
class PairTableRow:
    """One ordered pair (i, j), measured with sequence i's modulus."""

    i: int
    j: int
    modulus: int
    expectation: Fraction
    complementary: bool


@dataclass(frozen=True)
class DeviationRow:
    i: int
    j: int
    modulus: int
    expectation: Fraction
    target: Fraction
    deviation: Fraction


@dataclass(frozen=True)
class ConventionProfile:
    convention: Convention
    rows: tuple[DeviationRow, ...]

    @property
    def max_deviation(self) -> Fraction:
        return max(row.deviation for row in self.rows)


@dataclass(frozen=True)
class ConventionReport:
    """Both candidate profiles plus the choice; nothing is thrown away."""

    chosen: Convention
    raw: ConventionProfile
    scaled: ConventionProfile | None
    scaled_error: str | None = None

    def profile(self, convention: Convention) -> ConventionProfile | None:
        return self.raw if convention is Convention.RAW else self.scaled

    def rejected(self) -> ConventionProfile | None:
        other = Convention.SCALED if self.chosen is Convention.RAW else Convention.RAW
        return self.profile(other)


def _residues(raw_sums: Sequence[int], n: int, q: int, convention: Convention):
    if convention is Convention.RAW:
        return tuple(s % q for s in raw_sums)
    try:
        scale = mod_inverse(n, q)
    except NonInvertibleError:
        raise ConventionError(
            f"scaled convention needs gcd({n}, {q}) = 1"
        ) from None
    return tuple(scale * s % q for s in raw_sums)


def circular_crosscorr(
    a, b, q: int, convention: Convention = Convention.RAW
) -> CorrelationSeries:
    """Correlate two equal-length value lists modulo q.

    Operands are reduced mod q before multiplication, so the raw sums
    are already the sums of residue products (still exact integers).
    """
    if q < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {q}")
    av = [v % q for v in _values(a)]
    bv = [v % q for v in _values(b)]
    if len(av) != len(bv):
        raise ShapeError(f"length mismatch: {len(av)} vs {len(bv)}")
    n = len(av)
    if n < 2:
        raise ShapeError(f"need at least 2 values, got {n}")
    raw = tuple(sum(av[m] * bv[(m + k) % n] for m in range(n)) for k in range(n))
    return CorrelationSeries(
        length=n,
        modulus=q,
        convention=convention,
        raw_sums=raw,
        residues=_residues(raw, n, q, convention),
    )


def circular_autocorr(
    s: ResidueSequence, convention: Convention = Convention.RAW
) -> CorrelationSeries:
    """Correlate a residue sequence with itself, mod its own modulus."""
    return circular_crosscorr(s, s, s.modulus, convention)


def expectation_measure(series: CorrelationSeries) -> Fraction:
    """E = sum of residues over all lags, divided by N * q. Exact, in [0, 1)."""
    return Fraction(sum(series.residues), series.length * series.modulus)


def expectation_string(e: Fraction, digits: int = 2) -> str:
    """Decimal form of an expectation, rounded half up."""
    scaled = e * 10**digits
    units = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
    return f"{units // 10**digits}.{units % 10**digits:0{digits}d}"


def pair_table(
    seqs: Sequence[ResidueSequence], convention: Convention = Convention.RAW
) -> list[PairTableRow]:
    """Expectation for every ordered pair (i, j), i != j, 1-based.

    Row (i, j) correlates i against j under sequence i's modulus; the
    asymmetry of the table comes entirely from that modulus choice.
    Pairs whose two expectations sum into COMPLEMENTARY_BAND are
    flagged. Fewer than 2 sequences yields an empty table.
    """
    if len(seqs) < 2:
        return []
    lengths = {s.n for s in seqs}
    if len(lengths) != 1:
        raise ShapeError(f"mixed sequence lengths: {sorted(lengths)}")
    count = len(seqs)
    expectations: dict[tuple[int, int], Fraction] = {}
    for i in range(1, count + 1):
        for j in range(1, count + 1):
            if i == j:
                continue
            q = seqs[i - 1].modulus
            series = circular_crosscorr(seqs[i - 1], seqs[j - 1], q, convention)
            expectations[(i, j)] = expectation_measure(series)
    lo, hi = COMPLEMENTARY_BAND
    return [
        PairTableRow(
            i=i,
            j=j,
            modulus=seqs[i - 1].modulus,
            expectation=e,
            complementary=lo <= e + expectations[(j, i)] <= hi,
        )
        for (i, j), e in sorted(expectations.items())
    ]


def _profile(
    seqs: Sequence[ResidueSequence],
    targets: Mapping[tuple[int, int], Fraction],
    convention: Convention,
) -> ConventionProfile:
    rows = []
    for (i, j), target in sorted(targets.items()):
        q = seqs[i - 1].modulus
        series = circular_crosscorr(seqs[i - 1], seqs[j - 1], q, convention)
        e = expectation_measure(series)
        rows.append(
            DeviationRow(
                i=i,
                j=j,
                modulus=q,
                expectation=e,
                target=Fraction(target),
                deviation=abs(e - Fraction(target)),
            )
        )
    return ConventionProfile(convention=convention, rows=tuple(rows))


def resolve_convention(
    seqs: Sequence[ResidueSequence],
    targets: Mapping[tuple[int, int], Fraction],
) -> ConventionReport:
    """Pick the convention that best reproduces the target expectations.

    Measures every target pair under both conventions and keeps both
    deviation profiles in the report. The winner minimizes the maximum
    absolute deviation; ties go to RAW, as does the case where SCALED
    is not applicable at all.
    """
    if not targets:
        raise ShapeError("no target expectations to resolve against")
    for i, j in targets:
        if not (1 <= i <= len(seqs) and 1 <= j <= len(seqs)) or i == j:
            raise ShapeError(f"target pair ({i}, {j}) out of range")
    raw = _profile(seqs, targets, Convention.RAW)
    try:
        scaled = _profile(seqs, targets, Convention.SCALED)
    except ConventionError as exc:
        return ConventionReport(
            chosen=Convention.RAW, raw=raw, scaled=None, scaled_error=str(exc)
        )
    chosen = (
        Convention.SCALED
        if scaled.max_deviation < raw.max_deviation
        else Convention.RAW
    )
    return ConventionReport(chosen=chosen, raw=raw, scaled=scaled)
