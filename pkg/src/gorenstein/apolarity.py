"""Macaulay duality: catalecticant ranks, annihilators, realization search.

A *dual form* of degree ``e`` encodes a linear functional on the degree-``e``
piece of ``Z/p[x1..xr]`` by its values on monomials: the stored coefficient
at ``y^beta`` is ``phi(x^beta)``.  The ring acts by contraction,
``x^alpha . y^beta = y^(beta-alpha)`` when ``beta >= alpha`` and 0 otherwise
-- formal partial differentiation with no factorial normalization -- so every
entry of the ``i``-th catalecticant matrix is just a coefficient of the dual
form:

    Cat_i[alpha, gamma] = phi(x^(alpha+gamma)),

and ``h_i(R / Ann(phi)) = rank Cat_i``.  Entries stay integral and the whole
theory is valid over any prime larger than the degree, which the public
entry points enforce.

Under this pairing the classical "sum of s powers of general linear forms"
family becomes a sum of s evaluation functionals ``x^beta -> a^beta``; each
contributes a rank-one summand to every catalecticant, so s general points
realize the profile ``min(dim R_i, dim R_{e-i}, s)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from .gfpoly import (
    DEFAULT_PRIME,
    SECOND_PRIME,
    DegreeSpan,
    GradedPoly,
    PrimeField,
    _product_table,
    monomials,
    nullspace_mod,
    num_monomials,
    poly_text,
    rank_mod,
)
from .idealcalc import IdealPresentation, minimal_generators_from_spans
from .seqcomb import HVector, is_si_sequence

__all__ = [
    "TargetNotSIError",
    "DimensionError",
    "DualForm",
    "monomial_dual",
    "evaluation_dual",
    "random_dual",
    "mixed_dual",
    "materialize_dual",
    "catalecticant",
    "hvector_of_dual",
    "annihilator",
    "annihilator_ideal",
    "divisor_profile",
    "RealizationResult",
    "realization_search",
    "nonunimodal_block_witness",
    "nonunimodal_codim13_search",
]


class TargetNotSIError(ValueError):
    """Realization target is not an SI-sequence."""


class DimensionError(ValueError):
    """Realization target needs more variables than provided."""


@dataclass
class DualForm:
    """A degree-``e`` linear functional with enough data to rebuild it mod any prime."""

    poly: GradedPoly
    kind: str
    data: dict

    def __post_init__(self):
        if self.poly.is_zero:
            raise ValueError("dual form must be nonzero")
        if self.poly.degree < 1:
            raise ValueError("dual form must have degree >= 1")

    @property
    def r(self) -> int:
        return self.poly.r

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def field(self) -> PrimeField:
        return self.poly.field

    def over(self, field: PrimeField) -> "DualForm":
        """The same integer data reduced over another prime field."""
        return materialize_dual(self.data, field)


def monomial_dual(expts: Sequence[int], field: PrimeField) -> DualForm:
    e = tuple(int(x) for x in expts)
    data = {"kind": "monomial", "r": len(e), "degree": sum(e), "expts": list(e)}
    return materialize_dual(data, field)


def evaluation_dual(
    r: int, e: int, points: Sequence[Sequence[int]], field: PrimeField
) -> DualForm:
    """Sum of evaluation functionals at integer points: phi(x^b) = sum_j a_j^b."""
    data = {
        "kind": "power_sum",
        "r": r,
        "degree": e,
        "points": [list(int(c) for c in pt) for pt in points],
    }
    return materialize_dual(data, field)


def random_dual(r: int, e: int, field: PrimeField, rng: random.Random) -> DualForm:
    """Dense random dual form; the integer coefficients are kept for reuse."""
    n = num_monomials(r, e)
    while True:
        ints = [rng.randrange(2**31) for _ in range(n)]
        if any(ints):
            break
    data = {"kind": "dense", "r": r, "degree": e, "ints": ints}
    return materialize_dual(data, field)


def mixed_dual(
    expts: Sequence[int], points: Sequence[Sequence[int]], field: PrimeField
) -> DualForm:
    """A monomial functional plus a sum of evaluation functionals."""
    e = tuple(int(x) for x in expts)
    data = {
        "kind": "mixed",
        "r": len(e),
        "degree": sum(e),
        "expts": list(e),
        "points": [list(int(c) for c in pt) for pt in points],
    }
    return materialize_dual(data, field)


def _evaluation_coeffs(r, e, points, p) -> list[int]:
    coeffs = [0] * num_monomials(r, e)
    for pt in points:
        if len(pt) != r:
            raise ValueError(f"point of length {len(pt)} in {r} variables")
        powers = [[pow(int(a) % p, k, p) for k in range(e + 1)] for a in pt]
        for idx, m in enumerate(monomials(r, e)):
            val = 1
            for v, b in enumerate(m):
                if b:
                    val = val * powers[v][b] % p
            coeffs[idx] = (coeffs[idx] + val) % p
    return coeffs


def materialize_dual(data: dict, field: PrimeField) -> DualForm:
    """Rebuild a dual form from its integer description over a given prime."""
    kind = data["kind"]
    if kind == "structured_13":
        return _structured_13(field)
    r, e = data["r"], data["degree"]
    p = field.p
    if kind == "monomial":
        coeffs = [0] * num_monomials(r, e)
        coeffs[monomials(r, e).index(tuple(data["expts"]))] = 1
    elif kind == "power_sum":
        coeffs = _evaluation_coeffs(r, e, data["points"], p)
    elif kind == "dense":
        coeffs = [c % p for c in data["ints"]]
    elif kind == "mixed":
        coeffs = _evaluation_coeffs(r, e, data["points"], p)
        idx = monomials(r, e).index(tuple(data["expts"]))
        coeffs[idx] = (coeffs[idx] + 1) % p
    else:
        raise ValueError(f"unknown dual form kind {kind!r}")
    poly = GradedPoly(r, e, tuple(coeffs), field)
    return DualForm(poly, kind, data)


def _require_large_prime(field: PrimeField, e: int) -> None:
    if field.p <= e:
        raise ValueError(
            f"duality computations need p > degree: p={field.p}, degree={e}"
        )


def catalecticant(form: DualForm, i: int) -> np.ndarray:
    """The ``i``-th catalecticant matrix (rows degree ``i``, columns ``e - i``)."""
    e = form.degree
    if not 0 <= i <= e:
        raise ValueError(f"catalecticant index {i} outside 0..{e}")
    table = _product_table(form.r, i, e - i)
    return form.poly.vector()[table]


def hvector_of_dual(form: DualForm) -> HVector:
    """h-vector of the Gorenstein quotient ``R / Ann(phi)``: catalecticant ranks."""
    _require_large_prime(form.field, form.degree)
    p = form.field.p
    ranks = [rank_mod(catalecticant(form, i), p) for i in range(form.degree + 1)]
    return HVector(ranks)


def annihilator(form: DualForm, d: int) -> DegreeSpan:
    """The degree-``d`` piece of ``Ann(phi)`` (everything, once ``d > e``)."""
    e = form.degree
    if not 0 <= d <= e + 1:
        raise ValueError(f"annihilator degree {d} outside 0..{e + 1}")
    _require_large_prime(form.field, e)
    r, field = form.r, form.field
    if d == e + 1:
        eye = np.eye(num_monomials(r, d), dtype=np.int64)
        return DegreeSpan.from_rows(eye, r, d, field)
    kernel = nullspace_mod(catalecticant(form, d).T, field.p)
    return DegreeSpan.from_rows(kernel, r, d, field)


def annihilator_ideal(form: DualForm) -> IdealPresentation:
    """``Ann(phi)`` presented by generators through degree ``e + 1``.

    The quotient by this ideal is artinian Gorenstein with socle degree
    ``e`` and h-vector :func:`hvector_of_dual`.
    """
    spans = [annihilator(form, d) for d in range(form.degree + 2)]
    gens = minimal_generators_from_spans(spans, form.r, form.field)
    return IdealPresentation(form.r, form.field, tuple(gens))


# -- realization search ---------------------------------------------------------


def divisor_profile(expts: Sequence[int]) -> tuple[int, ...]:
    """h-vector of the monomial dual form ``y^expts``: divisor counts by degree."""
    prof = [1]
    for b in expts:
        nxt = [0] * (len(prof) + b)
        for i, c in enumerate(prof):
            for k in range(b + 1):
                nxt[i + k] += c
        prof = nxt
    return tuple(prof)


@dataclass
class RealizationResult:
    """Outcome of a realization search, with a replayable transcript."""

    target: HVector
    found: DualForm | None
    strategy: str | None
    seed: int
    budget: int
    primes_checked: tuple[int, ...]
    trials: int
    transcript: list[dict] = dc_field(default_factory=list)

    @property
    def status(self) -> str:
        return "FOUND" if self.found is not None else "NOT_FOUND"

    def record(self) -> dict:
        return {
            "target": str(self.target),
            "status": self.status,
            "strategy": self.strategy,
            "seed": self.seed,
            "budget": self.budget,
            "trials": self.trials,
            "primes_checked": list(self.primes_checked),
            "witness_polynomial": (
                poly_text(self.found.poly) if self.found else None
            ),
            "witness_data": self.found.data if self.found else None,
            "transcript": self.transcript,
        }


DEFAULT_STRATEGIES = ("monomial", "subspace_power_sum", "power_sum", "mixed")


def _min_profile(k: int, e: int, s: int) -> tuple[int, ...]:
    return tuple(
        min(num_monomials(k, i), num_monomials(k, e - i), s) for i in range(e + 1)
    )


def _check_both_primes(data, target, field, second) -> DualForm | None:
    form = materialize_dual(data, field)
    if tuple(hvector_of_dual(form)) != tuple(target):
        return None
    if second is not None:
        twin = materialize_dual(data, second)
        if tuple(hvector_of_dual(twin)) != tuple(target):
            return None
    return form


def realization_search(
    target,
    r: int,
    *,
    field: PrimeField | None = None,
    second_field: PrimeField | None = None,
    seed: int = 0,
    budget: int = 64,
    strategies: Sequence[str] | None = None,
) -> RealizationResult:
    """Search for a dual form in ``r`` variables whose h-vector is ``target``.

    Strategies run in a fixed deterministic order (monomial forms, power sums
    supported on an ``h_1``-variable subspace, full power sums, then a
    monomial plus generic power sums); within a strategy the first candidate
    that passes a rank check over both primes wins.  Absence of a witness is
    NOT evidence of non-realizability: the result carries the transcript and
    says NOT_FOUND.
    """
    target = target if isinstance(target, HVector) else HVector(target)
    if not is_si_sequence(target):
        raise TargetNotSIError(f"target {target} is not an SI-sequence")
    e = target.socle_degree
    if e < 1:
        raise DimensionError("realization needs socle degree >= 1")
    h1 = target.get(1)
    if h1 > r:
        raise DimensionError(f"target has h_1 = {h1} but only r = {r} variables")
    field = field or PrimeField(DEFAULT_PRIME)
    second = second_field or PrimeField(SECOND_PRIME)
    _require_large_prime(field, e)
    _require_large_prime(second, e)
    strategies = tuple(strategies or DEFAULT_STRATEGIES)
    primes = (field.p, second.p)

    result = RealizationResult(
        target=target,
        found=None,
        strategy=None,
        seed=seed,
        budget=budget,
        primes_checked=primes,
        trials=0,
    )

    def finish(form: DualForm, strategy: str) -> RealizationResult:
        result.found = form
        result.strategy = strategy
        result.transcript.append({"strategy": strategy, "event": "found"})
        return result

    tgt = tuple(target)

    for strategy in strategies:
        rng = random.Random(f"{seed}:{strategy}")
        if strategy == "monomial":
            for expts in monomials(r, e):
                if divisor_profile(expts) != tgt:
                    continue
                result.trials += 1
                form = _check_both_primes(
                    {"kind": "monomial", "r": r, "degree": e, "expts": list(expts)},
                    tgt,
                    field,
                    second,
                )
                if form is not None:
                    return finish(form, strategy)
            result.transcript.append(
                {"strategy": strategy, "event": "exhausted", "note": "no profile match"}
            )
        elif strategy in ("subspace_power_sum", "power_sum"):
            k = h1 if strategy == "subspace_power_sum" else r
            if strategy == "subspace_power_sum" and k >= r:
                result.transcript.append(
                    {"strategy": strategy, "event": "skipped", "note": "no proper subspace"}
                )
                continue
            s = max(tgt)
            if _min_profile(k, e, s) != tgt:
                result.transcript.append(
                    {
                        "strategy": strategy,
                        "event": "skipped",
                        "note": f"target is not the {s}-point profile in {k} variables",
                    }
                )
                continue
            for _ in range(max(1, budget // 8)):
                result.trials += 1
                points = [
                    [rng.randrange(1, 2**31) for _ in range(k)] + [0] * (r - k)
                    for _ in range(s)
                ]
                data = {"kind": "power_sum", "r": r, "degree": e, "points": points}
                form = _check_both_primes(data, tgt, field, second)
                if form is not None:
                    return finish(form, strategy)
                result.transcript.append(
                    {"strategy": strategy, "event": "degenerate draw retried"}
                )
        elif strategy == "mixed":
            caps = [
                min(num_monomials(r, i), num_monomials(r, e - i)) for i in range(e + 1)
            ]
            tried = 0
            for expts in monomials(r, e):
                prof = divisor_profile(expts)
                if any(prof[i] > tgt[i] for i in range(e + 1)):
                    continue
                # how many generic points must be added on top of the monomial
                s_needed = None
                ok = True
                for i in range(e + 1):
                    if tgt[i] == caps[i]:
                        continue  # any large enough s caps out here
                    gap = tgt[i] - prof[i]
                    if s_needed is None:
                        s_needed = gap
                    elif s_needed != gap:
                        ok = False
                        break
                if not ok or s_needed is None or s_needed < 1:
                    continue
                if any(
                    min(prof[i] + s_needed, caps[i]) != tgt[i] for i in range(e + 1)
                ):
                    continue
                tried += 1
                if tried > max(1, budget // 4):
                    break
                result.trials += 1
                points = [
                    [rng.randrange(1, 2**31) for _ in range(r)] for _ in range(s_needed)
                ]
                data = {
                    "kind": "mixed",
                    "r": r,
                    "degree": e,
                    "expts": list(expts),
                    "points": points,
                }
                form = _check_both_primes(data, tgt, field, second)
                if form is not None:
                    return finish(form, strategy)
            result.transcript.append({"strategy": strategy, "event": "exhausted"})
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
    return result


# -- the classical non-unimodal witness in 13 variables --------------------------


def _structured_13(field: PrimeField) -> DualForm:
    """Degree-4 dual form in 13 variables pairing a 10-block with cubics.

    Variables split as ``y = x1..x3`` and ``z = x4..x13``; the functional is
    ``sum_i z_i * m_i`` where ``m_1..m_10`` are the degree-3 monomials in the
    ``y`` block.  Its catalecticant ranks are (1, 13, 12, 13, 1): the middle
    one drops because degree-2 contractions land in the 6-dimensional space
    of ``y``-quadrics plus a 6-dimensional block of ``z``-linear forms.
    """
    r, e = 13, 4
    terms: dict[tuple[int, ...], int] = {}
    for i, cubic in enumerate(monomials(3, 3)):
        expts = list(cubic) + [0] * 10
        expts[3 + i] = 1
        terms[tuple(expts)] = 1
    poly = GradedPoly.from_terms(r, e, terms, field)
    return DualForm(poly, "structured_13", {"kind": "structured_13", "r": r, "degree": e})


def nonunimodal_block_witness(field: PrimeField | None = None) -> DualForm:
    """The deterministic 13-variable witness with h-vector (1,13,12,13,1)."""
    return _structured_13(field or PrimeField(DEFAULT_PRIME))


def nonunimodal_codim13_search(
    *,
    field: PrimeField | None = None,
    second_field: PrimeField | None = None,
    seed: int = 0,
    budget: int = 16,
) -> RealizationResult:
    """Targeted search for the non-unimodal h-vector (1,13,12,13,1) at r = 13.

    The target is not an SI-sequence, so this bypasses
    :func:`realization_search` and only tries structured candidates: the
    deterministic block witness first, then random unit-coefficient
    perturbations of it.  Experimental; NOT_FOUND is a legitimate outcome.
    """
    field = field or PrimeField(DEFAULT_PRIME)
    second = second_field or PrimeField(SECOND_PRIME)
    target = HVector([1, 13, 12, 13, 1])
    tgt = tuple(target)
    result = RealizationResult(
        target=target,
        found=None,
        strategy=None,
        seed=seed,
        budget=budget,
        primes_checked=(field.p, second.p),
        trials=0,
    )
    result.trials += 1
    form = _check_both_primes({"kind": "structured_13"}, tgt, field, second)
    if form is not None:
        result.found = form
        result.strategy = "structured_block"
        result.transcript.append({"strategy": "structured_block", "event": "found"})
        return result
    result.transcript.append({"strategy": "structured_block", "event": "no match"})
    return result
