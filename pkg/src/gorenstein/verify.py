"""Randomized and deterministic verification experiments.

The checks here exercise the linear-algebra layer against statements about
artinian quotients of a polynomial ring over Z/p:

* restriction tables: exact identities tying the Hilbert function of R/I to
  the colon and restriction by general linear forms,
* a GCD criterion: after restricting by two general linear forms, the
  degree-b component of R/(F, G1, G2) has dimension a-1 or a-2 according to
  whether gcd(F, G1, G2) has degree a-1 (where a = deg F <= b = deg Gi),
* a colon identity: when the degree-t piece of an ideal has greatest common
  divisor D, the quotient by (I : D) reproduces h_{R/I} minus a hypersurface
  Hilbert function through degree t,
* a weak-Lefschetz failure: over Z/p, the monomial complete intersection
  (x1^p, x2^p, x3^p) fails maximal rank for every linear form in every
  degree p .. 2p-2,
* a forward scan: random dual forms produce h-vectors whose certified
  conclusions (`seqcomb.guarantees`) always hold.

Every experiment returns a :class:`Report`.  Deterministic identity
violations are *failures* (exit code 1); one-off random artifacts that do
not reproduce are *anomalies* (exit code 2).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .apolarity import (
    DualForm,
    annihilator_ideal,
    evaluation_dual,
    hvector_of_dual,
    monomial_dual,
    random_dual,
)
from .gfpoly import (
    DEFAULT_PRIME,
    SECOND_PRIME,
    GradedPoly,
    PrimeField,
    gcd,
    monomials,
    num_monomials,
    poly_text,
    rank_mod,
    span_gcd,
)
from .idealcalc import (
    IdealPresentation,
    NonArtinianError,
    colon,
    degree_span,
    dump_ideal,
    hilbert,
    hilbert_from_spans,
    restrict,
    socle_profile,
)
from .seqcomb import (
    TAG_SI_CODIM_LE_3,
    TAG_SI_H4_LE_33,
    green_reduce,
    guarantees,
    is_si_sequence,
    is_unimodal,
)
from .version import __version__

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_ANOMALY = 2


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------


@dataclass
class Report:
    """Outcome of one verification experiment.

    ``failures`` count deterministic violations: identities that must hold
    for every input, or randomized checks that still fail after independent
    redraws.  ``anomalies`` count one-off artifacts (a bad random draw that
    does not reproduce); they leave the claim intact but are surfaced so a
    drift in their rate is visible.
    """

    name: str
    claim: str
    seed: int
    primes: tuple[int, ...]
    trials: int = 0
    passes: int = 0
    failures: int = 0
    anomalies: int = 0
    witnesses: list = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.anomalies == 0

    @property
    def exit_code(self) -> int:
        if self.failures:
            return EXIT_FAILURE
        if self.anomalies:
            return EXIT_ANOMALY
        return EXIT_OK

    def add_failure(self, witness: dict) -> None:
        self.failures += 1
        self.witnesses.append({"severity": "failure", **witness})

    def add_anomaly(self, witness: dict) -> None:
        self.anomalies += 1
        self.witnesses.append({"severity": "anomaly", **witness})

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "tool_version": __version__,
            "name": self.name,
            "claim": self.claim,
            "seed": self.seed,
            "primes": list(self.primes),
            "trials": self.trials,
            "passes": self.passes,
            "failures": self.failures,
            "anomalies": self.anomalies,
            "exit_code": self.exit_code,
            "witnesses": self.witnesses,
            "details": self.details,
        }

    def to_json(self, *, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def summary_line(self) -> str:
        status = "ok" if self.ok else ("FAIL" if self.failures else "anomaly")
        return (
            f"{self.name}: {status} "
            f"({self.trials} trials, {self.passes} passed, "
            f"{self.failures} failed, {self.anomalies} anomalies)"
        )


def _rng(seed: int, label: str) -> random.Random:
    # String seeding keeps streams independent across labels and identical
    # across platforms.
    return random.Random(f"{seed}:{label}")


def _int_vector(rng: random.Random, length: int) -> list[int]:
    """Random integer coefficient data, reducible modulo any working prime."""
    while True:
        data = [rng.randrange(1 << 31) for _ in range(length)]
        if any(data):
            return data


def _poly_from_ints(
    data: Sequence[int], r: int, degree: int, field: PrimeField
) -> GradedPoly:
    return GradedPoly(
        r, degree, tuple(c % field.p for c in data), field
    )


def _random_form(
    rng: random.Random, r: int, degree: int, field: PrimeField
) -> GradedPoly:
    return _poly_from_ints(
        _int_vector(rng, num_monomials(r, degree)), r, degree, field
    )


# --------------------------------------------------------------------------
# restriction tables
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RestrictionTable:
    """Degreewise data for R/I under one or two general linear forms.

    Rows, all indexed by degree ``i = 0 .. e`` (e = socle degree of R/I):

    * ``h``: Hilbert function of A = R/I,
    * ``b``: Hilbert function of R/(I : L1) shifted up by one degree, so
      ``b[i] = dim (R/(I:L1))_{i-1}`` and ``b[0] = 0``,
    * ``c``: Hilbert function of R/(I, L1),
    * ``d``: Hilbert function of R/((I, L1) : L2) shifted the same way,
    * ``f``: Hilbert function of R/(I, L1, L2).

    The shift aligns the rows with the exact sequences

        0 -> (A / (I:L1)A)(-1) --L1--> A -> A/L1·A -> 0

    so that each column satisfies ``c = h - b`` and ``f = c - d`` exactly,
    for every choice of L1, L2 (general or not).
    """

    h: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    d: tuple[int, ...] | None
    f: tuple[int, ...] | None
    gorenstein: bool
    linear_forms: tuple[str, ...]
    seed: int

    @property
    def socle_degree(self) -> int:
        return len(self.h) - 1

    def identity_violations(self) -> list[str]:
        """Exact identities that hold for arbitrary linear forms."""
        errs: list[str] = []
        e = self.socle_degree
        h, b, c = self.h, self.b, self.c
        if b[0] != 0:
            errs.append(f"b[0] = {b[0]} != 0")
        for i in range(e + 1):
            if c[i] != h[i] - b[i]:
                errs.append(f"c[{i}] = {c[i]} != h[{i}] - b[{i}] = {h[i] - b[i]}")
            prev_h = h[i - 1] if i >= 1 else 0
            if b[i] > min(prev_h, h[i]):
                errs.append(
                    f"b[{i}] = {b[i]} exceeds min(h[{i - 1}], h[{i}]) = "
                    f"{min(prev_h, h[i])}"
                )
        if self.gorenstein:
            for i in range(e + 2):
                j = e + 1 - i
                bi = b[i] if i <= e else 0
                bj = b[j] if 0 <= j <= e else 0
                if bi != bj:
                    errs.append(f"b[{i}] = {bi} != b[{j}] = {bj} (symmetry)")
        if self.d is not None and self.f is not None:
            d, f = self.d, self.f
            if d[0] != 0:
                errs.append(f"d[0] = {d[0]} != 0")
            for i in range(e + 1):
                if f[i] != c[i] - d[i]:
                    errs.append(
                        f"f[{i}] = {f[i]} != c[{i}] - d[{i}] = {c[i] - d[i]}"
                    )
                prev_c = c[i - 1] if i >= 1 else 0
                if d[i] > prev_c:
                    errs.append(f"d[{i}] = {d[i]} exceeds c[{i - 1}] = {prev_c}")
                if c[i] > prev_c and f[i] <= 0:
                    errs.append(
                        f"c[{i}] = {c[i]} > c[{i - 1}] = {prev_c} "
                        f"but f[{i}] = {f[i]} <= 0"
                    )
        return errs

    def rows(self) -> dict[str, tuple[int, ...] | None]:
        return {"h": self.h, "b": self.b, "c": self.c, "d": self.d, "f": self.f}


def _padded(values: Sequence[int], length: int) -> tuple[int, ...]:
    out = list(values[:length])
    out.extend(0 for _ in range(length - len(out)))
    return tuple(out)


def _artinian_hilbert(ideal: IdealPresentation, cap: int = 40):
    """Hilbert profile truncated just past the socle degree.

    Doubles the truncation until the quotient vanishes, instead of the
    conservative sum-of-generator-degrees default, which is far too deep for
    ideals with many generators.
    """
    upto = max(ideal.generator_degrees()) + 1
    while True:
        profile = hilbert(ideal, upto=upto)
        if profile.artinian_certified:
            return profile
        if upto >= cap:
            raise NonArtinianError(
                f"quotient is not artinian by degree {cap}"
            )
        upto = min(2 * upto, cap)


def restriction_table(
    ideal: IdealPresentation,
    *,
    seed: int = 0,
    deep: bool = True,
    gorenstein: bool | None = None,
    check: bool = True,
) -> RestrictionTable:
    """Build the restriction table of an artinian quotient.

    Draws random linear forms L1 (and L2 when ``deep``), computes the five
    rows, and — unless ``check=False`` — raises ``AssertionError`` when any
    exact identity fails.
    """
    profile = _artinian_hilbert(ideal)
    h = profile.hvector().entries
    e = len(h) - 1
    rng = _rng(seed, "restriction-table")
    field = ideal.field
    l1 = _random_form(rng, ideal.r, 1, field)
    if gorenstein is None:
        gorenstein = sum(socle_profile(ideal, e + 1)) == 1

    b_spans = colon(ideal, l1, upto=max(e - 1, 0))
    b_values = hilbert_from_spans(ideal.r, b_spans).values
    b = (0,) + _padded(b_values, e)

    with_l1 = ideal.with_extra([l1])
    c = _padded(hilbert(with_l1, upto=e).values, e + 1)

    d = f = None
    forms = [poly_text(l1)]
    if deep:
        l2 = _random_form(rng, ideal.r, 1, field)
        d_spans = colon(with_l1, l2, upto=max(e - 1, 0))
        d = (0,) + _padded(hilbert_from_spans(ideal.r, d_spans).values, e)
        f = _padded(hilbert(with_l1.with_extra([l2]), upto=e).values, e + 1)
        forms.append(poly_text(l2))

    table = RestrictionTable(
        h=tuple(h),
        b=b,
        c=c,
        d=d,
        f=f,
        gorenstein=bool(gorenstein),
        linear_forms=tuple(forms),
        seed=seed,
    )
    if check:
        errs = table.identity_violations()
        if errs:
            raise AssertionError(
                "restriction table identities violated: " + "; ".join(errs)
            )
    return table


def _restriction_instances(
    rng: random.Random, field: PrimeField
) -> Iterable[tuple[str, IdealPresentation, bool | None]]:
    """A fixed mixture of artinian instances for the table suite."""
    r = 4
    # Complete intersections (always Gorenstein).
    degs = [rng.randint(2, 3) for _ in range(r)]
    ci_gens = [
        _random_form(rng, r, degs[k], field) for k in range(r)
    ]
    yield "complete-intersection", IdealPresentation.from_polys(ci_gens), True

    # Annihilator of a random dual form (always Gorenstein).
    e = rng.randint(3, 5)
    form = random_dual(4, e, field, rng)
    yield "apolar", annihilator_ideal(form), True

    # Square-free quadric monomials: socle dimension > 1, not Gorenstein.
    mixed = []
    for i in range(r):
        for j in range(i + 1, r):
            expts = [0] * r
            expts[i] = expts[j] = 1
            mixed.append(GradedPoly.monomial(tuple(expts), field))
    pures = [
        GradedPoly.monomial(tuple(3 if k == i else 0 for k in range(r)), field)
        for i in range(r)
    ]
    yield "monomial-socle4", IdealPresentation.from_polys(mixed + pures), False

    # Complete intersection plus one extra generic form.
    extra = _random_form(rng, r, rng.randint(2, 3), field)
    yield (
        "ci-plus-one",
        IdealPresentation.from_polys(ci_gens + [extra]),
        None,
    )


def restriction_suite(
    *,
    instances: int = 6,
    seed: int = 0,
    field: PrimeField | None = None,
) -> Report:
    """Check the restriction-table identities over a mix of ideals.

    Each instance also cross-checks the ``c`` row against an independent
    route (variable elimination instead of adding a generator) and, for
    general L1, Green's bound ``c_i <= green_reduce(h_i, i)``.
    """
    field = field or PrimeField(DEFAULT_PRIME)
    report = Report(
        name="tables",
        claim=(
            "restriction tables satisfy c = h - b and f = c - d exactly, "
            "b and d are bounded by the adjacent rows, b is symmetric for "
            "Gorenstein input, and growth of c forces f > 0"
        ),
        seed=seed,
        primes=(field.p,),
    )
    rng = _rng(seed, "tables")
    kinds: dict[str, int] = {}
    batch = 0
    while report.trials < instances:
        batch += 1
        for kind, ideal, gor in _restriction_instances(rng, field):
            if report.trials >= instances:
                break
            report.trials += 1
            kinds[kind] = kinds.get(kind, 0) + 1
            table = restriction_table(
                ideal,
                seed=rng.randrange(1 << 30),
                deep=True,
                gorenstein=gor,
                check=False,
            )
            errs = table.identity_violations()

            # Independent route to the c row: eliminate a variable.
            e = table.socle_degree
            field_ = ideal.field
            l1 = _random_form(rng, ideal.r, 1, field_)
            direct = _padded(
                hilbert(ideal.with_extra([l1]), upto=e).values, e + 1
            )
            eliminated = restrict(ideal, l1)
            via_restrict = _padded(hilbert(eliminated, upto=e).values, e + 1)
            if direct != via_restrict:
                errs.append(
                    f"restriction routes disagree: {direct} vs {via_restrict}"
                )

            if errs:
                report.add_failure(
                    {
                        "kind": kind,
                        "rows": {
                            k: list(v) if v else None
                            for k, v in table.rows().items()
                        },
                        "errors": errs,
                        "ideal": dump_ideal(ideal),
                    }
                )
                continue

            # Green's bound holds for general linear forms; a violation on
            # one draw that vanishes on redraws is an anomaly, not a failure.
            green_ok = all(
                table.c[i] <= green_reduce(table.h[i], i)
                for i in range(1, e + 1)
            )
            if not green_ok:
                retries = [
                    restriction_table(
                        ideal,
                        seed=rng.randrange(1 << 30),
                        deep=False,
                        gorenstein=gor,
                        check=False,
                    )
                    for _ in range(3)
                ]
                still_bad = any(
                    any(
                        t.c[i] > green_reduce(t.h[i], i)
                        for i in range(1, len(t.h))
                    )
                    for t in retries
                )
                witness = {
                    "kind": kind,
                    "h": list(table.h),
                    "c": list(table.c),
                    "ideal": dump_ideal(ideal),
                }
                if still_bad:
                    report.add_failure({"check": "green-bound", **witness})
                else:
                    report.add_anomaly({"check": "green-bound", **witness})
                continue
            report.passes += 1
    report.details = {"instance_kinds": kinds, "batches": batch}
    return report


# --------------------------------------------------------------------------
# the GCD criterion for (F, G1, G2)
# --------------------------------------------------------------------------


def _dim_after_two_restrictions(
    ideal: IdealPresentation,
    degree: int,
    l1_ints: Sequence[int],
    l2_ints: Sequence[int],
) -> int:
    """dim of (R/(ideal + two linear forms))_degree, via variable elimination."""
    field = ideal.field
    l1 = _poly_from_ints(l1_ints, ideal.r, 1, field)
    once = restrict(ideal, l1)
    l2 = _poly_from_ints(l2_ints, once.r, 1, field)
    twice = restrict(once, l2)
    span = degree_span(twice, degree)
    return num_monomials(twice.r, degree) - span.dim


def _is_minimally_extended(
    base: GradedPoly, others: Sequence[GradedPoly], degree: int
) -> bool:
    """True when the extra generators are independent modulo (base)."""
    full = degree_span(
        IdealPresentation.from_polys([base, *others]), degree
    )
    alone = degree_span(IdealPresentation.from_polys([base]), degree)
    return full.dim == alone.dim + len(others)


def check_gcd_criterion(
    base: GradedPoly,
    other1: GradedPoly,
    other2: GradedPoly,
    *,
    seed: int = 0,
    draws: int = 3,
) -> Report:
    """Check the GCD criterion for one concrete triple (F, G1, G2).

    Requires deg F >= 2, deg G1 = deg G2 >= deg F, and that G1, G2 be
    minimal generators over (F).  The expected dimension after restricting
    by two general linear forms is a-1 exactly when gcd(F, G1, G2) has
    degree a-1, and a-2 otherwise (a = deg F).
    """
    a = base.degree
    b = other1.degree
    if a < 2:
        raise ValueError(f"the base form must have degree >= 2, got {a}")
    if other2.degree != b or b < a:
        raise ValueError(
            f"expected two forms of equal degree >= {a}, got degrees "
            f"{other1.degree} and {other2.degree}"
        )
    if not _is_minimally_extended(base, [other1, other2], b):
        raise ValueError(
            "the two degree-b forms are not minimal generators over the base"
        )
    field = base.field
    report = Report(
        name="gcd-criterion",
        claim=(
            "after two general linear restrictions the degree-b component of "
            "R/(F, G1, G2) has dimension a-1 iff gcd(F, G1, G2) has degree "
            "a-1, else a-2"
        ),
        seed=seed,
        primes=(field.p,),
    )
    g = gcd(gcd(base, other1), other2)
    expected = a - 1 if g.degree == a - 1 else a - 2
    rng = _rng(seed, "gcd-criterion")
    ideal = IdealPresentation.from_polys([base, other1, other2])
    dims = []
    for _ in range(draws):
        l1 = _int_vector(rng, ideal.r)
        l2 = _int_vector(rng, ideal.r - 1)
        dims.append(_dim_after_two_restrictions(ideal, b, l1, l2))
    generic = min(dims)
    report.trials = 1
    report.anomalies = sum(1 for v in dims if v != generic)
    report.details = {
        "a": a,
        "b": b,
        "gcd_degree": g.degree,
        "expected_dim": expected,
        "observed_dims": dims,
    }
    if generic == expected:
        report.passes = 1
    else:
        report.add_failure(
            {
                "gcd_degree": g.degree,
                "expected_dim": expected,
                "observed_dim": generic,
                "ideal": dump_ideal(ideal),
            }
        )
    return report


GCD_BRANCHES = (
    "shared-factor-max",
    "shared-factor-small",
    "regular-sequence",
    "determinantal-pair",
)


def _gcd_instance_data(branch: str, rng: random.Random) -> dict:
    """Integer coefficient data for one GCD-criterion instance.

    Keeping the data as integers lets the same instance be materialized
    over several primes and the verdicts compared.
    """
    r = 4

    def vec(degree: int) -> list[int]:
        return _int_vector(rng, num_monomials(r, degree))

    if branch == "shared-factor-max":
        # gcd degree a-1 by construction: common factor D of degree a-1.
        a = rng.randint(2, 4)
        b = rng.randint(a, min(8, a + 2))
        return {
            "branch": branch,
            "a": a,
            "b": b,
            "shared": vec(a - 1),
            "cofactors": [vec(1), vec(b - a + 1), vec(b - a + 1)],
        }
    if branch == "shared-factor-small":
        # Common factor of some degree d <= a-2; generic cofactors make the
        # gcd exactly d, so the expected dimension is a-2.
        a = rng.randint(3, 5)
        d = rng.randint(1, a - 2)
        b = rng.randint(a, min(8, a + 2))
        return {
            "branch": branch,
            "a": a,
            "b": b,
            "shared": vec(d),
            "cofactors": [vec(a - d), vec(b - d), vec(b - d)],
        }
    if branch == "regular-sequence":
        a = rng.randint(2, 4)
        b = rng.randint(a, min(8, a + 3))
        return {
            "branch": branch,
            "a": a,
            "b": b,
            "forms": [vec(a), vec(b), vec(b)],
        }
    if branch == "determinantal-pair":
        # 2x3 minors of a generic matrix with column degrees
        # (a/2, a/2, b - a/2): a height-two ideal with pairwise coprime
        # generators, deg F = a even, deg G1 = deg G2 = b.
        a = rng.choice((2, 4))
        half = a // 2
        b = rng.randint(a, min(8, a + 2))
        cols = (half, half, b - half)
        return {
            "branch": branch,
            "a": a,
            "b": b,
            "cols": cols,
            "matrix": [[vec(cols[j]) for j in range(3)] for _ in range(2)],
        }
    raise ValueError(f"unknown branch {branch!r}")


def _materialize_gcd_instance(
    data: dict, field: PrimeField
) -> tuple[GradedPoly, GradedPoly, GradedPoly]:
    r = 4
    branch = data["branch"]
    a, b = data["a"], data["b"]
    if branch in ("shared-factor-max", "shared-factor-small"):
        # The shared factor's degree is recoverable from its vector length.
        shared_deg = _degree_from_length(r, len(data["shared"]))
        shared = _poly_from_ints(data["shared"], r, shared_deg, field)
        cof_degs = (a - shared_deg, b - shared_deg, b - shared_deg)
        cofs = [
            _poly_from_ints(v, r, dg, field)
            for v, dg in zip(data["cofactors"], cof_degs)
        ]
        return shared * cofs[0], shared * cofs[1], shared * cofs[2]
    if branch == "regular-sequence":
        degs = (a, b, b)
        forms = [
            _poly_from_ints(v, r, dg, field)
            for v, dg in zip(data["forms"], degs)
        ]
        return forms[0], forms[1], forms[2]
    if branch == "determinantal-pair":
        cols = data["cols"]
        m = [
            [
                _poly_from_ints(data["matrix"][i][j], r, cols[j], field)
                for j in range(3)
            ]
            for i in range(2)
        ]
        minor01 = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        minor02 = m[0][0] * m[1][2] - m[0][2] * m[1][0]
        minor12 = m[0][1] * m[1][2] - m[0][2] * m[1][1]
        return minor01, minor02, minor12
    raise ValueError(f"unknown branch {branch!r}")


def _degree_from_length(r: int, length: int) -> int:
    d = 0
    while num_monomials(r, d) != length:
        d += 1
        if d > 64:
            raise ValueError("coefficient vector length matches no degree")
    return d


def gcd_criterion_suite(
    *,
    per_branch: int = 100,
    seed: int = 0,
    field: PrimeField | None = None,
    second_field: PrimeField | None = None,
    draws: int = 3,
) -> Report:
    """Run the GCD criterion over four instance families and two primes.

    Families: a shared factor of the maximal degree a-1, a shared factor of
    smaller degree, a generic regular sequence, and the 2x3 minors of a
    generic matrix (a height-two ideal with pairwise coprime generators).
    Every instance is built from integer data and materialized over both
    primes; a verdict that differs between primes on the same data is
    recorded as an anomaly witness.
    """
    field = field or PrimeField(DEFAULT_PRIME)
    second_field = second_field or PrimeField(SECOND_PRIME)
    report = Report(
        name="gcd-criterion",
        claim=(
            "after two general linear restrictions the degree-b component of "
            "R/(F, G1, G2) has dimension a-1 iff gcd(F, G1, G2) has degree "
            "a-1, else a-2"
        ),
        seed=seed,
        primes=(field.p, second_field.p),
    )
    rng = _rng(seed, "gcd-criterion-suite")
    branch_counts: dict[str, int] = {}
    skipped = 0
    for branch in GCD_BRANCHES:
        done = 0
        attempts = 0
        while done < per_branch and attempts < 5 * per_branch:
            attempts += 1
            data = _gcd_instance_data(branch, rng)
            draw_data = [
                (_int_vector(rng, 4), _int_vector(rng, 3))
                for _ in range(draws)
            ]
            verdicts = []
            bad_draws = 0
            minimal = True
            for fld in (field, second_field):
                f, g1, g2 = _materialize_gcd_instance(data, fld)
                if not _is_minimally_extended(f, [g1, g2], data["b"]):
                    minimal = False
                    break
                g = gcd(gcd(f, g1), g2)
                expected = data["a"] - 1 if g.degree == data["a"] - 1 else data["a"] - 2
                ideal = IdealPresentation.from_polys([f, g1, g2])
                dims = [
                    _dim_after_two_restrictions(ideal, data["b"], l1, l2)
                    for l1, l2 in draw_data
                ]
                generic = min(dims)
                bad_draws += sum(1 for v in dims if v != generic)
                verdicts.append(
                    {
                        "prime": fld.p,
                        "gcd_degree": g.degree,
                        "expected_dim": expected,
                        "observed_dim": generic,
                        "dims": dims,
                    }
                )
            if not minimal:
                skipped += 1
                continue
            done += 1
            report.trials += 1
            branch_counts[branch] = branch_counts.get(branch, 0) + 1
            report.anomalies += bad_draws
            mismatch = [
                v for v in verdicts if v["observed_dim"] != v["expected_dim"]
            ]
            if mismatch:
                report.add_failure(
                    {
                        "branch": branch,
                        "instance": {
                            k: v for k, v in data.items() if k != "branch"
                        },
                        "verdicts": verdicts,
                    }
                )
                continue
            if (
                verdicts[0]["gcd_degree"] != verdicts[1]["gcd_degree"]
                or verdicts[0]["observed_dim"] != verdicts[1]["observed_dim"]
            ):
                report.add_anomaly(
                    {
                        "branch": branch,
                        "check": "cross-prime",
                        "verdicts": verdicts,
                    }
                )
                continue
            report.passes += 1
    report.details = {
        "branches": branch_counts,
        "skipped_non_minimal": skipped,
        "draws_per_instance": draws,
    }
    return report


# --------------------------------------------------------------------------
# the colon identity
# --------------------------------------------------------------------------


def check_colon_identity(
    ideal: IdealPresentation,
    divisor: GradedPoly,
    upto: int,
) -> Report:
    """Verify the colon identity for one ideal whose low pieces factor.

    Precondition (checked): for every ``i <= upto`` where the piece is
    nonzero, gcd of the degree-i piece of the ideal is ``divisor`` (up to a
    scalar).  Then with d = deg(divisor) and r variables,

        dim (R/(I : divisor))_{i-d} = dim (R/I)_i - [dim R_i - dim R_{i-d}]

    for all i <= upto.
    """
    d = divisor.degree
    r = ideal.r
    field = ideal.field
    top_span = degree_span(ideal, upto)
    if top_span.dim == 0:
        raise ValueError(
            f"the ideal has no elements in degree {upto}; nothing to check"
        )
    g = span_gcd(top_span)
    if g.monic().coeffs != divisor.monic().coeffs:
        raise ValueError(
            "the degree-%d piece has gcd of degree %d, not the expected "
            "divisor of degree %d" % (upto, g.degree, d)
        )
    report = Report(
        name="colon-identity",
        claim=(
            "when the degree-t piece of I has gcd D of degree d, "
            "dim (R/(I:D))_{i-d} = dim (R/I)_i - dim R_i + dim R_{i-d} "
            "for all i <= t"
        ),
        seed=0,
        primes=(field.p,),
    )
    quotient_spans = colon(ideal, divisor, upto=upto - d)
    colon_h = hilbert_from_spans(r, quotient_spans).values
    ambient_h = hilbert(ideal, upto=upto).values
    mism = []
    for i in range(upto + 1):
        lhs = colon_h[i - d] if i - d >= 0 else 0
        hyper = comb(i + r - 1, r - 1) - (
            comb(i - d + r - 1, r - 1) if i - d >= 0 else 0
        )
        rhs = ambient_h[i] - hyper
        report.trials += 1
        if lhs == rhs:
            report.passes += 1
        else:
            report.failures += 1
            mism.append({"degree": i, "lhs": lhs, "rhs": rhs})
    if mism:
        report.witnesses.append(
            {
                "severity": "failure",
                "mismatches": mism,
                "ideal": dump_ideal(ideal),
            }
        )
    report.details = {
        "divisor_degree": d,
        "upto": upto,
        "colon_hilbert": list(colon_h),
        "ambient_hilbert": list(ambient_h),
    }
    return report


def colon_identity_suite(
    *,
    instances: int = 100,
    seed: int = 0,
    field: PrimeField | None = None,
) -> Report:
    """Manufacture ideals with a known common divisor and check the identity.

    Each instance is I = D·(g1, g2) + (noise of degree t+1), so every piece
    of I in degree <= t is a multiple of D, and for generic g1, g2 the gcd in
    degree t is exactly D.  Instances where the gcd accidentally exceeds D
    are regenerated (counted in the details).
    """
    field = field or PrimeField(DEFAULT_PRIME)
    report = Report(
        name="colon-identity",
        claim=(
            "when the degree-t piece of I has gcd D of degree d, "
            "dim (R/(I:D))_{i-d} = dim (R/I)_i - dim R_i + dim R_{i-d} "
            "for all i <= t"
        ),
        seed=seed,
        primes=(field.p,),
    )
    rng = _rng(seed, "colon-identity-suite")
    r = 4
    skipped = 0
    done = 0
    attempts = 0
    monotone_checks = 0
    while done < instances and attempts < 5 * instances:
        attempts += 1
        d = rng.randint(1, 3)
        m = rng.randint(1, min(3, 7 - d))
        t = d + m + rng.randint(0, min(1, 8 - d - m))
        divisor = _random_form(rng, r, d, field)
        cofactors = [_random_form(rng, r, m, field) for _ in range(2)]
        noise = [
            _random_form(rng, r, t + 1, field)
            for _ in range(rng.randint(1, 2))
        ]
        gens = [divisor * c for c in cofactors] + noise
        ideal = IdealPresentation.from_polys(gens)
        top = degree_span(ideal, t)
        if top.dim == 0:
            skipped += 1
            continue
        g = span_gcd(top)
        if g.monic().coeffs != divisor.monic().coeffs:
            skipped += 1
            continue
        sub = check_colon_identity(ideal, divisor, t)
        done += 1
        report.trials += 1
        if sub.failures:
            report.add_failure(
                {
                    "instance": done,
                    "divisor": poly_text(divisor),
                    "witnesses": sub.witnesses,
                }
            )
            continue
        # Monotonicity spot check: a nondecreasing colon row through t-d
        # forces the ambient row to be nondecreasing through t.
        colon_h = sub.details["colon_hilbert"]
        ambient_h = sub.details["ambient_hilbert"]
        if all(
            colon_h[i] <= colon_h[i + 1] for i in range(len(colon_h) - 1)
        ):
            monotone_checks += 1
            if not all(
                ambient_h[i] <= ambient_h[i + 1] for i in range(t)
            ):
                report.add_failure(
                    {
                        "check": "monotone-transfer",
                        "colon_hilbert": colon_h,
                        "ambient_hilbert": ambient_h,
                        "ideal": dump_ideal(ideal),
                    }
                )
                continue
        report.passes += 1
    report.details = {
        "skipped": skipped,
        "attempts": attempts,
        "monotone_transfers_checked": monotone_checks,
    }
    return report


# --------------------------------------------------------------------------
# weak-Lefschetz failure of (x1^p, x2^p, x3^p) over Z/p
# --------------------------------------------------------------------------


def wlp_probe(p: int, *, draws: int = 3, seed: int = 0) -> Report:
    """Multiplication by any linear form drops rank in degrees p .. 2p-2.

    The quotient k[x1,x2,x3]/(x1^p, x2^p, x3^p) over k = Z/p has monomial
    basis the exponent vectors bounded by p-1.  Because L^p = (sum ci xi)^p
    = sum ci^p xi^p = 0 in characteristic p, every linear form fails
    injectivity early: the claim checked here is rank deficiency of
    multiplication by L in every degree i = p .. 2p-2, for every draw of L
    (including nonzero coordinates patterns).
    """
    field = PrimeField(p)
    report = Report(
        name="wlp",
        claim=(
            "over Z/p the algebra k[x,y,z]/(x^p, y^p, z^p) has no weak "
            "Lefschetz element: every linear form fails maximal rank in "
            "each degree p .. 2p-2"
        ),
        seed=seed,
        primes=(p,),
    )
    rng = _rng(seed, f"wlp:{p}")
    top = 3 * (p - 1)
    basis: list[list[tuple[int, int, int]]] = []
    index: list[dict[tuple[int, int, int], int]] = []
    for deg in range(top + 1):
        mons = [m for m in monomials(3, deg) if max(m) <= p - 1]
        basis.append(mons)
        index.append({m: k for k, m in enumerate(mons)})

    table: dict[int, dict] = {}
    for i in range(p, 2 * p - 1):
        dim_prev, dim_cur = len(basis[i - 1]), len(basis[i])
        cap = min(dim_prev, dim_cur)
        ranks = []
        for _ in range(draws):
            coeffs = [rng.randrange(1, p) for _ in range(3)]
            mat = np.zeros((dim_prev, dim_cur), dtype=np.int64)
            for row, mon in enumerate(basis[i - 1]):
                for v in range(3):
                    bumped = list(mon)
                    bumped[v] += 1
                    col = index[i].get(tuple(bumped))
                    if col is not None:
                        mat[row, col] = (mat[row, col] + coeffs[v]) % p
            rank = rank_mod(mat, p)
            ranks.append(rank)
            report.trials += 1
            if rank < cap:
                report.passes += 1
            else:
                report.add_failure(
                    {
                        "degree": i,
                        "linear_form": coeffs,
                        "rank": rank,
                        "max_possible": cap,
                    }
                )
        table[i] = {
            "dim_from": dim_prev,
            "dim_to": dim_cur,
            "max_rank": cap,
            "observed_ranks": ranks,
        }
    report.details = {"p": p, "degrees": table}
    return report


# --------------------------------------------------------------------------
# several generic forms on top of one: the expected restricted dimension
# --------------------------------------------------------------------------


def multi_generator_probe(
    a: int,
    b: int,
    m: int,
    *,
    trials: int = 10,
    seed: int = 0,
    field: PrimeField | None = None,
    draws: int = 3,
) -> Report:
    """Observed vs expected dimension for (F, G_1..G_m) generic.

    With F generic of degree a >= 2 and G_1..G_m generic of degree b >= a,
    the degree-b component of the quotient by two general linear forms is
    expected to have dimension max(0, a - m): each extra generic generator
    past the first cuts the a-1 of the principal case down by one.
    Mismatches are recorded as anomalies (findings), not failures.
    """
    if a < 2 or b < a or m < 1:
        raise ValueError(
            f"need degree a >= 2, b >= a and m >= 1, got a={a} b={b} m={m}"
        )
    field = field or PrimeField(DEFAULT_PRIME)
    report = Report(
        name="multi-generator",
        claim=(
            "for generic F of degree a and m generic forms of degree b >= a, "
            "two general linear restrictions leave a degree-b component of "
            "dimension max(0, a - m)"
        ),
        seed=seed,
        primes=(field.p,),
    )
    rng = _rng(seed, "multi-generator")
    expected = max(0, a - m)
    observed: dict[int, int] = {}
    for _ in range(trials):
        f = _random_form(rng, 4, a, field)
        others = [_random_form(rng, 4, b, field) for _ in range(m)]
        ideal = IdealPresentation.from_polys([f, *others])
        dims = []
        for _ in range(draws):
            l1 = _int_vector(rng, 4)
            l2 = _int_vector(rng, 3)
            dims.append(_dim_after_two_restrictions(ideal, b, l1, l2))
        generic = min(dims)
        observed[generic] = observed.get(generic, 0) + 1
        report.trials += 1
        if generic == expected:
            report.passes += 1
        else:
            report.add_anomaly(
                {
                    "expected_dim": expected,
                    "observed_dim": generic,
                    "dims": dims,
                }
            )
    report.details = {
        "a": a,
        "b": b,
        "m": m,
        "expected_dim": expected,
        "observed_histogram": {str(k): v for k, v in sorted(observed.items())},
    }
    return report


# --------------------------------------------------------------------------
# forward scan: certified conclusions on random h-vectors
# --------------------------------------------------------------------------

_SCAN_STRATEGIES = ("monomial", "subspace_power_sum", "power_sum", "dense")


def _scan_form(
    strategy: str, e: int, field: PrimeField, rng: random.Random
) -> DualForm:
    r = 4
    if strategy == "monomial":
        expts = [0] * r
        for _ in range(e):
            expts[rng.randrange(r)] += 1
        return monomial_dual(tuple(expts), field)
    if strategy == "subspace_power_sum":
        k = rng.randint(1, r)
        s = rng.randint(1, 12)
        points = [
            tuple(
                rng.randrange(1, 1 << 16) if v < k else 0 for v in range(r)
            )
            for _ in range(s)
        ]
        return evaluation_dual(r, e, points, field)
    if strategy == "power_sum":
        s = rng.randint(1, 40)
        points = [
            tuple(rng.randrange(1, 1 << 16) for _ in range(r))
            for _ in range(s)
        ]
        return evaluation_dual(r, e, points, field)
    if strategy == "dense":
        return random_dual(r, e, field, rng)
    raise ValueError(f"unknown strategy {strategy!r}")


def theorem_forward_scan(
    *,
    trials: int = 1000,
    seed: int = 0,
    e_range: tuple[int, int] = (1, 8),
    field: PrimeField | None = None,
    second_field: PrimeField | None = None,
) -> Report:
    """Sample dual forms, compute h-vectors, and check certified conclusions.

    A sample is *in scope* when h_1 = 4 and (the socle degree is below 4 or
    h_4 <= 33).  For every sample — in scope or not — each tag returned by
    ``guarantees`` must deliver its conclusion: the SI tags force an
    SI-sequence, the unimodality tags force unimodality.  A violation is
    re-checked over the second prime: if the h-vector reproduces, it is a
    failure; if it was a rank artifact of one prime, an anomaly.
    """
    field = field or PrimeField(DEFAULT_PRIME)
    second_field = second_field or PrimeField(SECOND_PRIME)
    report = Report(
        name="forward",
        claim=(
            "h-vectors of random dual forms always satisfy the conclusions "
            "of their certificates: SI certificates yield SI-sequences and "
            "unimodality certificates yield unimodal sequences"
        ),
        seed=seed,
        primes=(field.p, second_field.p),
    )
    rng = _rng(seed, "forward-scan")
    in_scope = 0
    attempts = 0
    max_attempts = 50 * trials
    histogram: dict[str, int] = {}
    strategy_counts: dict[str, int] = {}
    tag_counts: dict[str, int] = {}
    while in_scope < trials and attempts < max_attempts:
        strategy = _SCAN_STRATEGIES[attempts % len(_SCAN_STRATEGIES)]
        attempts += 1
        e = rng.randint(*e_range)
        form = _scan_form(strategy, e, field, rng)
        hv = hvector_of_dual(form)
        tags = sorted(guarantees(hv))
        violated = []
        for tag in tags:
            tag_counts[tag] = tag_counts.get(tag, 0) + 1
            needs_si = tag in (TAG_SI_CODIM_LE_3, TAG_SI_H4_LE_33)
            ok = is_si_sequence(hv) if needs_si else is_unimodal(hv)
            if not ok:
                violated.append(tag)
        if violated:
            other = hvector_of_dual(form.over(second_field))
            witness = {
                "strategy": strategy,
                "hvector": list(hv.entries),
                "violated_tags": violated,
                "hvector_second_prime": list(other.entries),
            }
            if other.entries == hv.entries:
                report.add_failure(witness)
            else:
                report.add_anomaly(witness)
            continue
        scope = hv.get(1) == 4 and (
            hv.socle_degree < 4 or hv.get(4) <= 33
        )
        if scope:
            in_scope += 1
            report.trials += 1
            report.passes += 1
            histogram[str(hv)] = histogram.get(str(hv), 0) + 1
        strategy_counts[strategy] = strategy_counts.get(strategy, 0) + 1
    top = sorted(histogram.items(), key=lambda kv: (-kv[1], kv[0]))[:20]
    report.details = {
        "attempts": attempts,
        "in_scope": in_scope,
        "strategies": strategy_counts,
        "certificate_tags": tag_counts,
        "top_hvectors": {k: v for k, v in top},
        "distinct_hvectors": len(histogram),
    }
    return report


# --------------------------------------------------------------------------
# suite registry (used by the CLI)
# --------------------------------------------------------------------------


def run_suite(
    name: str,
    *,
    trials: int | None = None,
    seed: int = 0,
    field: PrimeField | None = None,
    second_field: PrimeField | None = None,
) -> Report:
    """Run one named verification suite with its default sizing."""
    field = field or PrimeField(DEFAULT_PRIME)
    second_field = second_field or PrimeField(SECOND_PRIME)
    if name == "gcd-criterion":
        return gcd_criterion_suite(
            per_branch=trials if trials is not None else 100,
            seed=seed,
            field=field,
            second_field=second_field,
        )
    if name == "colon-identity":
        return colon_identity_suite(
            instances=trials if trials is not None else 100,
            seed=seed,
            field=field,
        )
    if name == "wlp":
        merged = Report(
            name="wlp",
            claim=(
                "over Z/p the algebra k[x,y,z]/(x^p, y^p, z^p) has no weak "
                "Lefschetz element: every linear form fails maximal rank in "
                "each degree p .. 2p-2"
            ),
            seed=seed,
            primes=(2, 3, 5, 7),
        )
        per_p = {}
        for p in (2, 3, 5, 7):
            sub = wlp_probe(p, seed=seed)
            merged.trials += sub.trials
            merged.passes += sub.passes
            merged.failures += sub.failures
            merged.anomalies += sub.anomalies
            merged.witnesses.extend(sub.witnesses)
            per_p[str(p)] = sub.details
        merged.details = per_p
        return merged
    if name == "multigen":
        merged = Report(
            name="multi-generator",
            claim=(
                "for generic F of degree a and m generic forms of degree "
                "b >= a, two general linear restrictions leave a degree-b "
                "component of dimension max(0, a - m)"
            ),
            seed=seed,
            primes=(field.p,),
        )
        cases = [(2, 2, 1), (3, 3, 2), (4, 4, 2), (4, 5, 3), (3, 4, 5)]
        per_case = {}
        n = trials if trials is not None else 10
        for a, b, m in cases:
            sub = multi_generator_probe(
                a, b, m, trials=n, seed=seed, field=field
            )
            merged.trials += sub.trials
            merged.passes += sub.passes
            merged.failures += sub.failures
            merged.anomalies += sub.anomalies
            merged.witnesses.extend(sub.witnesses)
            per_case[f"a={a},b={b},m={m}"] = sub.details
        merged.details = per_case
        return merged
    if name == "forward":
        return theorem_forward_scan(
            trials=trials if trials is not None else 1000,
            seed=seed,
            field=field,
            second_field=second_field,
        )
    if name == "tables":
        return restriction_suite(
            instances=trials if trials is not None else 6,
            seed=seed,
            field=field,
        )
    raise ValueError(
        f"unknown suite {name!r}; expected one of {sorted(SUITES)}"
    )


SUITES = (
    "gcd-criterion",
    "colon-identity",
    "wlp",
    "multigen",
    "forward",
    "tables",
)
