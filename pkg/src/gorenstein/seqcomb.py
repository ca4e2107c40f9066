"""Integer combinatorics of Hilbert function growth.

Binomial expansions, the growth/reduction transforms built on them, and the
sequence predicates (O-sequence, unimodality, symmetry, SI-sequence) that the
rest of the package leans on.  Everything here is exact integer arithmetic;
no field, ring or matrix appears.

Conventions
-----------
* ``C(m, q)`` means the binomial coefficient, with ``C(m, q) = 0`` when
  ``m < q``.
* The degree-``i`` expansion of ``n >= 0`` is the unique greedy decomposition
  ``n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)`` with
  ``n_i > n_{i-1} > ... > n_j >= j >= 1``.
* An h-vector is a finite sequence of positive integers ``(h_0, ..., h_e)``;
  the last index ``e`` is the socle degree.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "InvalidDegreeError",
    "NotGorensteinCandidateError",
    "HVector",
    "BinomialExpansion",
    "expansion_terms",
    "expand",
    "evaluate_terms",
    "green_reduce",
    "macaulay_bound",
    "first_difference",
    "is_o_sequence",
    "is_unimodal",
    "is_symmetric",
    "is_si_sequence",
    "guarantees",
]


class InvalidDegreeError(ValueError):
    """An expansion degree outside ``i >= 1`` (or a negative integer)."""


class NotGorensteinCandidateError(ValueError):
    """A certificate query on a vector that is not symmetric with h_0 = 1."""


SequenceLike = Union["HVector", Sequence[int], Iterable[int]]


@dataclass(frozen=True, init=False)
class HVector:
    """A finite sequence of positive integers indexed by degree.

    Trailing zeros are trimmed on construction, after which every entry must
    be strictly positive; an all-zero input is rejected.  Instances are
    immutable and hashable, so they can be collected into sets.
    """

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        ent = [int(x) for x in entries]
        while ent and ent[-1] == 0:
            ent.pop()
        if not ent:
            raise ValueError("h-vector needs at least one nonzero entry")
        if any(x <= 0 for x in ent):
            raise ValueError(f"h-vector entries must be positive, got {tuple(ent)}")
        object.__setattr__(self, "entries", tuple(ent))

    @classmethod
    def parse(cls, text: str) -> "HVector":
        """Parse a comma-separated literal such as ``1,4,4,1``."""
        parts = [p.strip() for p in text.strip().split(",")]
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"not an h-vector literal: {text!r}") from None
        return cls(values)

    @property
    def socle_degree(self) -> int:
        return len(self.entries) - 1

    def get(self, i: int, default: int = 0) -> int:
        """Entry at degree ``i``, or ``default`` outside the index range."""
        if 0 <= i < len(self.entries):
            return self.entries[i]
        return default

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.entries)


# Cached binomial columns: _COLUMNS[b][k] = C(b + k, b).  Grown on demand and
# shared by every expansion, which keeps the greedy step to one bisect.
_COLUMNS: dict[int, list[int]] = {}


def _column(bottom: int, need: int) -> list[int]:
    col = _COLUMNS.get(bottom)
    if col is None:
        col = _COLUMNS[bottom] = [1]
    while col[-1] <= need:
        col.append(comb(bottom + len(col), bottom))
    return col


def expansion_terms(n: int, i: int) -> list[tuple[int, int]]:
    """Greedy degree-``i`` expansion of ``n`` as a list of (top, bottom) pairs.

    The result satisfies ``sum(C(top, bottom)) == n`` with strictly decreasing
    tops, bottoms descending consecutively from ``i``, and ``top >= bottom``
    in every term.  ``n == 0`` yields the empty list.
    """
    if i < 1:
        raise InvalidDegreeError(f"expansion degree must be >= 1, got {i}")
    if n < 0:
        raise InvalidDegreeError(f"cannot expand a negative integer: {n}")
    terms: list[tuple[int, int]] = []
    rem = n
    bottom = i
    while rem > 0:
        col = _column(bottom, rem)
        pos = bisect_right(col, rem) - 1
        terms.append((bottom + pos, bottom))
        rem -= col[pos]
        bottom -= 1
    return terms


@dataclass(frozen=True)
class BinomialExpansion:
    """The degree-``i`` expansion of ``n``, kept with its inputs."""

    n: int
    degree: int
    terms: tuple[tuple[int, int], ...]

    def evaluate(self) -> int:
        """Sum the binomial terms back up; equals ``n`` by construction."""
        return sum(comb(t, b) for t, b in self.terms)


def expand(n: int, i: int) -> BinomialExpansion:
    """The unique greedy degree-``i`` binomial expansion of ``n >= 0``."""
    return BinomialExpansion(n, i, tuple(expansion_terms(n, i)))


def evaluate_terms(terms: Iterable[tuple[int, int]]) -> int:
    """Sum ``C(top, bottom)`` over a term list."""
    return sum(comb(t, b) for t, b in terms)


def green_reduce(n: int, i: int) -> int:
    """Top-down reduction ``n_<i>``: each C(top, bottom) becomes C(top-1, bottom).

    Terms with ``top - 1 < bottom`` vanish.  This is the degree-``i`` bound on
    the Hilbert function of a general hyperplane restriction.
    """
    return sum(comb(t - 1, b) for t, b in expansion_terms(n, i))


def macaulay_bound(n: int, i: int) -> int:
    """Growth bound ``n^<i>``: each C(top, bottom) becomes C(top+1, bottom+1).

    The largest value an O-sequence can take in degree ``i + 1`` given value
    ``n`` in degree ``i``.
    """
    return sum(comb(t + 1, b + 1) for t, b in expansion_terms(n, i))


def _as_list(h: SequenceLike) -> list[int]:
    if isinstance(h, HVector):
        return list(h.entries)
    return [int(x) for x in h]


def first_difference(h: SequenceLike, upto: int | None = None) -> list[int]:
    """The difference sequence ``(h_0, h_1 - h_0, ..., h_j - h_{j-1})``.

    ``upto`` bounds the last index ``j``; by default the whole sequence is
    differenced.  Entries may be negative; callers decide what that means.
    """
    seq = _as_list(h)
    j = len(seq) - 1 if upto is None else min(upto, len(seq) - 1)
    return [seq[0]] + [seq[k] - seq[k - 1] for k in range(1, j + 1)]


def is_o_sequence(h: SequenceLike) -> bool:
    """True iff ``h`` is the Hilbert function of some standard graded algebra.

    Concretely: ``h_0 = 1``, every entry is nonnegative, and
    ``h_{i+1} <= macaulay_bound(h_i, i)`` for all ``i >= 1``.  Because
    ``macaulay_bound(0, i) == 0``, a zero entry forces all later entries to
    be zero.
    """
    seq = _as_list(h)
    if not seq or seq[0] != 1:
        return False
    if any(x < 0 for x in seq):
        return False
    for i in range(1, len(seq) - 1):
        if seq[i + 1] > macaulay_bound(seq[i], i):
            return False
    return True


def is_unimodal(h: SequenceLike) -> bool:
    """True iff ``h`` never strictly increases after a strict decrease."""
    seq = _as_list(h)
    decreased = False
    for k in range(len(seq) - 1):
        if seq[k] > seq[k + 1]:
            decreased = True
        elif seq[k] < seq[k + 1] and decreased:
            return False
    return True


def is_symmetric(h: SequenceLike) -> bool:
    """True iff ``h_i == h_{e-i}`` for all ``i``."""
    seq = _as_list(h)
    return seq == seq[::-1]


def is_si_sequence(h: SequenceLike) -> bool:
    """True iff ``h`` is symmetric and its first half is differentiable.

    "Differentiable" means the difference sequence
    ``(h_0, h_1 - h_0, ..., h_m - h_{m-1})`` with ``m = floor(e / 2)`` is an
    O-sequence (in particular entrywise nonnegative).  These are exactly the
    symmetric vectors realizable with the stanley-iarrobino growth pattern.
    """
    seq = _as_list(h)
    if not seq or seq[0] != 1 or any(x <= 0 for x in seq):
        return False
    if seq != seq[::-1]:
        return False
    m = (len(seq) - 1) // 2
    return is_o_sequence(first_difference(seq, m))


#: Certificate tags, named by what they guarantee and under which hypothesis.
TAG_SI_CODIM_LE_3 = "SI_CODIM_LE_3"
TAG_UNIMODAL_H4_LE_33 = "UNIMODAL_H4_LE_33"
TAG_SI_H4_LE_33 = "SI_H4_LE_33"
TAG_UNIMODAL_MIDDLE_CAP = "UNIMODAL_MIDDLE_CAP({s})"


def guarantees(h: SequenceLike) -> set[str]:
    """Certificate tags whose hypotheses ``h`` satisfies.

    The input must be symmetric with ``h_0 = 1`` (the shape every artinian
    Gorenstein h-vector has); anything else raises
    :class:`NotGorensteinCandidateError`.  Tags assert conclusions for
    Gorenstein algebras with this h-vector:

    * ``SI_CODIM_LE_3``        -- ``h_1 <= 3``: the vector is an SI-sequence.
    * ``UNIMODAL_H4_LE_33``    -- ``h_1 <= 4`` and ``h_4 <= 33`` (vacuous if
      ``h_4`` is absent): the vector is unimodal.
    * ``SI_H4_LE_33``          -- same hypothesis: the vector is an
      SI-sequence.
    * ``UNIMODAL_MIDDLE_CAP(s)`` -- some ``s >= 1`` with ``s + 1 < e/2`` and
      ``h_s <= 2*s**2 + 1``: the vector is unimodal.  One tag per witness
      ``s``.

    Only hypotheses are checked here; the conclusions are theorems, and the
    verification suites test them empirically.
    """
    seq = _as_list(h)
    if not seq or seq[0] != 1 or seq != seq[::-1]:
        raise NotGorensteinCandidateError(
            f"certificates need a symmetric vector with h_0 = 1, got {tuple(seq)}"
        )
    e = len(seq) - 1
    h1 = seq[1] if e >= 1 else 0
    h4 = seq[4] if e >= 4 else None
    tags: set[str] = set()
    if h1 <= 3:
        tags.add(TAG_SI_CODIM_LE_3)
    if h1 <= 4 and (h4 is None or h4 <= 33):
        tags.add(TAG_UNIMODAL_H4_LE_33)
        tags.add(TAG_SI_H4_LE_33)
    for s in range(1, e + 1):
        if 2 * (s + 1) < e and seq[s] <= 2 * s * s + 1:
            tags.add(TAG_UNIMODAL_MIDDLE_CAP.format(s=s))
    return tags
