"""Streaming enumeration of SI-sequences by codimension and socle degree.

An SI-sequence with ``h_1 = c`` and socle degree ``e`` is determined by its
first half ``(h_0, ..., h_m)``, ``m = floor(e / 2)``, and the half is valid
exactly when the difference sequence ``(1, h_1 - 1, ..., h_m - h_{m-1})`` is
an O-sequence.  So we walk difference sequences ``delta`` with ``delta_0 = 1``
and ``delta_1 = c - 1``, bounding each next entry by
``macaulay_bound(delta_k, k)``, and mirror the accumulated sums into a
symmetric vector.  The walk is depth-first with entries tried in increasing
order, which makes the output stream lexicographic on ``(h_2, h_3, ...)``.
"""

from __future__ import annotations

from typing import Iterator

from .seqcomb import HVector, macaulay_bound

__all__ = [
    "si_sequences",
    "count_si",
    "gorenstein_codim4",
    "classify_codim4",
    "QUARTIC_CAP",
    "LABEL_GORENSTEIN",
    "LABEL_UNDETERMINED",
]

#: Largest ``h_4`` for which the codimension-4 classification is settled.
QUARTIC_CAP = 33

LABEL_GORENSTEIN = "GORENSTEIN"
LABEL_UNDETERMINED = "UNDETERMINED"


def _check_args(codim: int, e: int) -> None:
    if codim < 1:
        raise ValueError(f"codimension must be >= 1, got {codim}")
    if e < 1:
        raise ValueError(f"socle degree must be >= 1, got {e}")


def _mirror(half: list[int], e: int) -> HVector:
    """Symmetric length-(e+1) vector whose first half is ``half``."""
    m = e // 2
    if e % 2 == 0:
        return HVector(half + half[m - 1 :: -1])
    return HVector(half + half[m::-1])


def _walk_halves(half: list[int], delta: int, k: int, m: int) -> Iterator[list[int]]:
    """Extend a partial first half depth-first, smallest next entry first.

    ``half`` holds ``h_0..h_{k}``; ``delta`` is ``h_k - h_{k-1}``.
    """
    if k == m:
        yield half
        return
    for step in range(macaulay_bound(delta, k) + 1):
        yield from _walk_halves(half + [half[-1] + step], step, k + 1, m)


def si_sequences(codim: int, e: int) -> Iterator[HVector]:
    """All SI-sequences with ``h_1 = codim`` and socle degree ``e``.

    Streamed lexicographically on ``(h_2, h_3, ...)``.  The stream is empty
    only when the constraints are contradictory (symmetry forces ``h_e = 1``,
    so ``e = 1`` admits only ``codim = 1``).
    """
    _check_args(codim, e)
    m = e // 2
    if m == 0:
        # First half is just (1); the mirrored vector is (1, 1).
        if codim == 1:
            yield HVector([1, 1])
        return
    for half in _walk_halves([1, codim], codim - 1, 1, m):
        yield _mirror(half, e)


def count_si(codim: int, e: int) -> int:
    """Number of SI-sequences with ``h_1 = codim`` and socle degree ``e``.

    Counts the same difference-sequence walk without materializing vectors,
    so it always equals the length of :func:`si_sequences`'s stream.
    """
    _check_args(codim, e)
    m = e // 2
    if m == 0:
        return 1 if codim == 1 else 0

    def leaves(delta: int, k: int) -> int:
        if k == m:
            return 1
        return sum(leaves(step, k + 1) for step in range(macaulay_bound(delta, k) + 1))

    return leaves(codim - 1, 1)


def classify_codim4(h: HVector) -> str:
    """Classification label for a codimension-4 SI-sequence.

    ``GORENSTEIN`` when ``h_4 <= 33`` (such SI-sequences are exactly the
    Gorenstein h-vectors in that range, and vectors without a degree-4 entry
    are always realizable); ``UNDETERMINED`` for ``h_4 in {34, 35}``, where
    realizability is an open question and we refuse to guess.
    """
    h4 = h.get(4)
    if h4 <= QUARTIC_CAP:
        return LABEL_GORENSTEIN
    return LABEL_UNDETERMINED


def gorenstein_codim4(e: int, quartic_filter: bool = True) -> Iterator[HVector]:
    """Codimension-4 Gorenstein h-vectors with socle degree ``e``.

    With ``quartic_filter`` set (the default) only SI-sequences with
    ``h_4 <= 33`` are emitted -- the range where SI characterizes Gorenstein.
    With the filter off, every codimension-4 SI-sequence streams through and
    :func:`classify_codim4` tells the two regimes apart.
    """
    for h in si_sequences(4, e):
        if quartic_filter and h.get(4) > QUARTIC_CAP:
            continue
        yield h
