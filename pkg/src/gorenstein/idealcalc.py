"""Degreewise linear algebra for homogeneous ideals over Z/p.

An ideal is presented by finitely many homogeneous generators.  Every
operation here works one degree at a time: the degree-``d`` piece of the
ideal is a :class:`~gorenstein.gfpoly.DegreeSpan`, built incrementally as
``I_d = x1*I_{d-1} + ... + xr*I_{d-1} + (generators of degree d)``, so a
Hilbert function to degree ``D`` costs one row reduction per degree.

Quotient conventions: ``hilbert(I, D)`` tabulates ``dim (R/I)_d`` for
``d <= D`` and certifies artinianness exactly when the last tabulated value
is zero (a standard graded algebra that vanishes in one degree vanishes in
all later ones).  Degreewise results above the truncation are unknown, and
predicates that need them raise :class:`NonArtinianError` rather than guess.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .gfpoly import (
    DegreeSpan,
    FieldMismatchError,
    GradedPoly,
    PolyParseError,
    PrimeField,
    _product_table,
    monomial_index,
    multiply,
    nullspace_mod,
    num_monomials,
    parse_poly,
    poly_text,
    rank_mod,
    reduce_rows_mod,
)

__all__ = [
    "NonArtinianError",
    "IdealPresentation",
    "HilbertProfile",
    "degree_span",
    "span_sequence",
    "hilbert",
    "hilbert_from_spans",
    "colon",
    "colon_ideal",
    "restrict",
    "socle_profile",
    "is_gorenstein",
    "minimal_generators_from_spans",
    "dump_ideal",
    "load_ideal",
]


class NonArtinianError(ValueError):
    """The quotient is not certified artinian by the truncation degree."""


@dataclass(frozen=True)
class IdealPresentation:
    """A homogeneous ideal given by generators (possibly none: the zero ideal)."""

    r: int
    field: PrimeField
    generators: tuple[GradedPoly, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.r != self.r or g.field != self.field:
                raise FieldMismatchError(
                    f"generator over r={g.r}, p={g.field.p} does not fit "
                    f"r={self.r}, p={self.field.p}"
                )
            if g.is_zero:
                raise ValueError("zero polynomial cannot be a generator")

    @classmethod
    def from_polys(cls, polys: Iterable[GradedPoly], r=None, field=None):
        polys = tuple(polys)
        if polys:
            r, field = polys[0].r, polys[0].field
        if r is None or field is None:
            raise ValueError("the zero ideal needs explicit r and field")
        return cls(r, field, polys)

    def with_extra(self, polys: Iterable[GradedPoly]) -> "IdealPresentation":
        return IdealPresentation(self.r, self.field, self.generators + tuple(polys))

    def generator_degrees(self) -> list[int]:
        return [g.degree for g in self.generators]


@dataclass(frozen=True)
class HilbertProfile:
    """``dim (R/I)_d`` for ``0 <= d <= truncation``."""

    values: tuple[int, ...]
    truncation: int
    artinian_certified: bool

    def hvector(self):
        """The h-vector, available only for certified-artinian quotients."""
        from .seqcomb import HVector

        if not self.artinian_certified:
            raise NonArtinianError(
                f"not artinian by degree {self.truncation}; h-vector unknown"
            )
        return HVector(self.values)

    def __str__(self) -> str:
        flag = "artinian" if self.artinian_certified else "inconclusive"
        return f"({', '.join(map(str, self.values))}) [{flag} at D={self.truncation}]"


def span_sequence(ideal: IdealPresentation, upto: int) -> list[DegreeSpan]:
    """Spans ``I_0, I_1, ..., I_upto`` built degree by degree."""
    r, field = ideal.r, ideal.field
    p = field.p
    by_degree: dict[int, list[GradedPoly]] = {}
    for g in ideal.generators:
        by_degree.setdefault(g.degree, []).append(g)
    spans: list[DegreeSpan] = []
    for d in range(upto + 1):
        rows = []
        if d > 0 and spans[d - 1].dim:
            prev = spans[d - 1].matrix
            table = _product_table(r, 1, d - 1)  # (r, N_{d-1}) target indices
            shifted = np.zeros((r * prev.shape[0], num_monomials(r, d)), dtype=np.int64)
            for v in range(r):
                block = shifted[v * prev.shape[0] : (v + 1) * prev.shape[0]]
                block[:, table[v]] = prev
            rows.append(shifted)
        for g in by_degree.get(d, ()):
            rows.append(np.asarray(g.coeffs, dtype=np.int64).reshape(1, -1))
        if rows:
            stacked = np.vstack(rows) % p
        else:
            stacked = np.zeros((0, num_monomials(r, d)), dtype=np.int64)
        spans.append(DegreeSpan.from_rows(stacked, r, d, field))
    return spans


def degree_span(ideal: IdealPresentation, d: int) -> DegreeSpan:
    """The degree-``d`` piece of the ideal as a row-reduced span."""
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    return span_sequence(ideal, d)[d]


def hilbert(ideal: IdealPresentation, upto: int | None = None) -> HilbertProfile:
    """Hilbert function of ``R/I`` through degree ``upto``.

    The default truncation is the sum of the generator degrees, which
    certifies artinianness for complete-intersection-like inputs; pass a
    larger bound when that is not enough.
    """
    if upto is None:
        upto = sum(ideal.generator_degrees())
    spans = span_sequence(ideal, upto)
    values = tuple(num_monomials(ideal.r, d) - spans[d].dim for d in range(upto + 1))
    return HilbertProfile(values, upto, artinian_certified=(values[-1] == 0))


def hilbert_from_spans(
    r: int, spans: Sequence[DegreeSpan]
) -> HilbertProfile:
    """Quotient dimensions from precomputed ideal spans ``I_0..I_D``."""
    values = tuple(num_monomials(r, d) - spans[d].dim for d in range(len(spans)))
    return HilbertProfile(values, len(spans) - 1, artinian_certified=(values[-1] == 0))


def colon(
    ideal: IdealPresentation, f: GradedPoly, upto: int
) -> list[DegreeSpan]:
    """Degreewise spans of the colon ideal ``(I : f)`` for degrees ``0..upto``.

    ``(I : f)_d`` is the kernel of multiplication by ``f`` from the degree-``d``
    piece of the ring into ``(R/I)_{d + deg f}``.
    """
    if f.is_zero:
        raise ValueError("colon by the zero polynomial is the whole ring")
    if f.r != ideal.r or f.field != ideal.field:
        raise FieldMismatchError("colon divisor must live in the same ring")
    r, field, p = ideal.r, ideal.field, ideal.field.p
    a = f.degree
    spans = span_sequence(ideal, upto + a)
    fvec = f.vector()
    out: list[DegreeSpan] = []
    for d in range(upto + 1):
        nd = num_monomials(r, d)
        table = _product_table(r, d, a)  # (N_d, N_a) indices into degree d+a
        mul_rows = np.zeros((nd, num_monomials(r, d + a)), dtype=np.int64)
        mul_rows[np.arange(nd)[:, None], table] = fvec[None, :]
        target = spans[d + a]
        resid = reduce_rows_mod(mul_rows, target.matrix, target.pivots, p)
        kernel = nullspace_mod(resid.T, p)
        out.append(DegreeSpan.from_rows(kernel, r, d, field))
    return out


def minimal_generators_from_spans(
    spans: Sequence[DegreeSpan], r: int, field: PrimeField
) -> list[GradedPoly]:
    """Generators for the ideal whose degreewise pieces are ``spans``.

    Picks, degree by degree, basis elements not already generated by lower
    degrees; for genuinely degreewise-saturated input (ideal pieces) the
    result generates every listed span.
    """
    gens: list[GradedPoly] = []
    prev: DegreeSpan | None = None
    for d, span in enumerate(spans):
        if d == 0:
            grown = span  # nothing below degree 0
            if span.dim:
                gens.extend(span.basis())
            prev = span
            continue
        table = _product_table(r, 1, d - 1)
        rows = np.zeros((r * prev.dim, num_monomials(r, d)), dtype=np.int64)
        if prev.dim:
            for v in range(r):
                rows[v * prev.dim : (v + 1) * prev.dim][:, table[v]] = prev.matrix
        grown = DegreeSpan.from_rows(rows, r, d, field)
        for q in span.basis():
            if not grown.contains(q):
                gens.append(q)
                grown = grown.extended([q])
        prev = grown
    return gens


def colon_ideal(
    ideal: IdealPresentation, f: GradedPoly, upto: int
) -> IdealPresentation:
    """``(I : f)`` as a presentation generated through degree ``upto``."""
    spans = colon(ideal, f, upto)
    gens = minimal_generators_from_spans(spans, ideal.r, ideal.field)
    return IdealPresentation(ideal.r, ideal.field, tuple(gens))


def restrict(ideal: IdealPresentation, linear: GradedPoly) -> IdealPresentation:
    """The ideal's image in the quotient by a linear form, in ``r - 1`` variables.

    Eliminates the variable with the largest index among those with a nonzero
    coefficient in ``linear`` (a deterministic tie-break), substituting the
    exact linear expression for it into every generator.
    """
    if linear.degree != 1 or linear.is_zero:
        raise ValueError("restriction needs a nonzero linear form")
    if linear.r != ideal.r or linear.field != ideal.field:
        raise FieldMismatchError("linear form must live in the same ring")
    r, field, p = ideal.r, ideal.field, ideal.field.p
    if r < 2:
        raise ValueError("cannot restrict below one variable")
    coeffs = linear.coeffs  # degree-1 coefficient j belongs to x_{j+1}
    j = max(i for i, c in enumerate(coeffs) if c)
    inv = field.inv(coeffs[j])
    # x_{j+1} = -(1/c_j) * sum_{i != j} c_i x_{i+1}, written in r-1 variables
    sub_coeffs = [0] * (r - 1)
    for i, c in enumerate(coeffs):
        if i == j or not c:
            continue
        new_i = i if i < j else i - 1
        sub_coeffs[new_i] = (-c * inv) % p
    sub = GradedPoly(r - 1, 1, tuple(sub_coeffs), field)

    new_gens: list[GradedPoly] = []
    for g in ideal.generators:
        d = g.degree
        powers: dict[int, GradedPoly] = {0: GradedPoly.one(r - 1, field)}
        acc = np.zeros(num_monomials(r - 1, d), dtype=np.int64)
        for expts, c in g.terms():
            aj = expts[j]
            if aj not in powers:
                base = max(k for k in powers if k < aj)
                pw = powers[base]
                for _ in range(aj - base):
                    pw = multiply(pw, sub)
                    powers[pw.degree] = pw
                pw = powers[aj]
            else:
                pw = powers[aj]
            if pw.is_zero:
                continue
            rest = tuple(e for i, e in enumerate(expts) if i != j)
            table = _product_table(r - 1, d - aj, aj)
            target = table[monomial_index(rest)]
            acc[target] = (acc[target] + c * pw.vector()) % p
        if acc.any():
            new_gens.append(
                GradedPoly(r - 1, d, tuple(int(x) for x in acc), field)
            )
    return IdealPresentation(r - 1, field, tuple(new_gens))


def socle_profile(ideal: IdealPresentation, upto: int) -> tuple[int, ...]:
    """Degreewise socle dimensions of ``R/I`` (needs artinianness by ``upto``).

    The socle in degree ``d`` is the kernel of multiplication by all the
    variables at once, ``(R/I)_d -> (R/I)_{d+1}^r``.
    """
    r, field, p = ideal.r, ideal.field, ideal.field.p
    spans = span_sequence(ideal, upto)
    values = [num_monomials(r, d) - spans[d].dim for d in range(upto + 1)]
    if values[-1] != 0:
        raise NonArtinianError(
            f"quotient not artinian by degree {upto}: socle is inconclusive"
        )
    socle = [0] * (upto + 1)
    for d in range(upto):
        if values[d] == 0:
            continue
        quot = [c for c in range(num_monomials(r, d)) if c not in set(spans[d].pivots)]
        table = _product_table(r, 1, d)
        blocks = []
        target = spans[d + 1]
        for v in range(r):
            rows = np.zeros((len(quot), num_monomials(r, d + 1)), dtype=np.int64)
            rows[np.arange(len(quot)), table[v, quot]] = 1
            blocks.append(reduce_rows_mod(rows, target.matrix, target.pivots, p))
        stacked = np.hstack(blocks)
        socle[d] = len(quot) - rank_mod(stacked, p)
    return tuple(socle)


def is_gorenstein(ideal: IdealPresentation, upto: int) -> bool:
    """True iff ``R/I`` is artinian by ``upto`` with one-dimensional socle."""
    return sum(socle_profile(ideal, upto)) == 1


# -- ideal files ---------------------------------------------------------------

_HEADER = re.compile(r"^\s*r\s*=\s*(\d+)\s+p\s*=\s*(\d+)\s*$")


def dump_ideal(ideal: IdealPresentation) -> str:
    """Serialize to the ideal file format: a header then one polynomial per line."""
    lines = [f"r={ideal.r} p={ideal.field.p}"]
    lines.extend(poly_text(g) for g in ideal.generators)
    return "\n".join(lines) + "\n"


def load_ideal(text: str) -> IdealPresentation:
    """Parse an ideal file: ``r=<int> p=<prime>`` then one polynomial per line.

    Blank lines and lines starting with ``#`` are skipped.  Parse errors name
    the 1-based line and column.
    """
    lines = text.splitlines()
    header_idx = None
    for i, line in enumerate(lines):
        if line.strip() and not line.lstrip().startswith("#"):
            header_idx = i
            break
    if header_idx is None:
        raise PolyParseError("empty ideal file", line=1, col=1)
    m = _HEADER.match(lines[header_idx])
    if m is None:
        raise PolyParseError(
            "expected header 'r=<int> p=<prime>'", line=header_idx + 1, col=1
        )
    r, p = int(m.group(1)), int(m.group(2))
    if r < 1:
        raise PolyParseError("need r >= 1", line=header_idx + 1, col=1)
    try:
        field = PrimeField(p)
    except ValueError as exc:
        raise PolyParseError(str(exc), line=header_idx + 1, col=1) from None
    gens = []
    for i in range(header_idx + 1, len(lines)):
        line = lines[i]
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        poly = parse_poly(line, r, field, line=i + 1)
        if not poly.is_zero:
            gens.append(poly)
    return IdealPresentation(r, field, tuple(gens))
