"""Dense homogeneous polynomials over a prime field Z/p.

Conventions fixed here and used everywhere else:

* Variables are ``x1 .. xr``, all of degree 1.
* Within a fixed degree, monomials are ordered graded-lexicographically with
  ``x1 > x2 > ... > xr``; index 0 is ``x1^d`` and the last index is ``xr^d``.
  A homogeneous polynomial is a dense coefficient tuple in that order.
* Coefficients are residues in ``0 .. p-1``.  The default modulus is a fixed
  31-bit prime, which keeps every pairwise product inside ``int64`` so the
  numpy row-reduction kernels stay exact.

The text grammar (whitespace-insensitive, bit-exact round trip):
``3*x1^2*x2 - x3*x4^2`` -- signed integer coefficients, ``^`` exponents,
``*`` products, ``+``/``-`` term separators.  Inhomogeneous input is rejected
with an error naming both degrees.

The multivariate GCD uses a recursive dense representation and the primitive
Euclidean algorithm in the last variable with content recursion: simple,
exact, and fast enough at the degrees this package works in.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

__all__ = [
    "DEFAULT_PRIME",
    "SECOND_PRIME",
    "is_prime",
    "PrimeField",
    "FieldMismatchError",
    "GcdUndefinedError",
    "PolyParseError",
    "DegreeMismatchError",
    "monomials",
    "monomial_index",
    "num_monomials",
    "GradedPoly",
    "multiply",
    "gcd",
    "try_divide",
    "span_gcd",
    "poly_text",
    "parse_poly",
    "rref_mod",
    "rank_mod",
    "nullspace_mod",
    "reduce_rows_mod",
    "DegreeSpan",
]

#: Default working prime: the Mersenne prime 2^31 - 1.
DEFAULT_PRIME = 2**31 - 1
#: Independent second prime used for cross-checking randomized results.
SECOND_PRIME = 2_147_483_629


class FieldMismatchError(ValueError):
    """Operands live over different moduli or variable counts."""


class GcdUndefinedError(ValueError):
    """GCD request with no nonzero input (for example a zero span)."""


class PolyParseError(ValueError):
    """Malformed polynomial text; carries 1-based line and column."""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class DegreeMismatchError(PolyParseError):
    """Inhomogeneous polynomial text; the message names both degrees."""


# -- primality -------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field Z/p for a prime p, carried alongside coefficient data."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"modulus must be prime, got {self.p}")

    def inv(self, a: int) -> int:
        return pow(a % self.p, -1, self.p)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


# -- monomial order ---------------------------------------------------------


@lru_cache(maxsize=None)
def monomials(r: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All degree-``d`` exponent tuples in ``r`` variables, graded-lex order."""
    if r < 1:
        raise ValueError(f"need at least one variable, got r={r}")
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    if r == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        for rest in monomials(r - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _index_map(r: int, d: int) -> dict[tuple[int, ...], int]:
    return {m: i for i, m in enumerate(monomials(r, d))}


def monomial_index(expts: Sequence[int]) -> int:
    """Position of an exponent tuple within its degree block."""
    e = tuple(expts)
    return _index_map(len(e), sum(e))[e]


def num_monomials(r: int, d: int) -> int:
    """Dimension of the degree-``d`` graded piece of ``Z/p[x1..xr]``."""
    return comb(d + r - 1, r - 1)


@lru_cache(maxsize=None)
def _product_table(r: int, a: int, b: int) -> np.ndarray:
    """Index table: entry (i, j) is the index of monomial_i * monomial_j."""
    idx = _index_map(r, a + b)
    ma, mb = monomials(r, a), monomials(r, b)
    table = np.empty((len(ma), len(mb)), dtype=np.int64)
    for i, u in enumerate(ma):
        for j, v in enumerate(mb):
            table[i, j] = idx[tuple(x + y for x, y in zip(u, v))]
    return table


# -- dense homogeneous polynomials -------------------------------------------


@dataclass(frozen=True, repr=False)
class GradedPoly:
    """A dense homogeneous polynomial: coefficient tuple in graded-lex order."""

    r: int
    degree: int
    coeffs: tuple[int, ...]
    field: PrimeField

    def __post_init__(self):
        n = num_monomials(self.r, self.degree)
        if len(self.coeffs) != n:
            raise ValueError(
                f"degree {self.degree} in {self.r} variables needs {n} "
                f"coefficients, got {len(self.coeffs)}"
            )
        p = self.field.p
        if any(not (0 <= c < p) for c in self.coeffs):
            object.__setattr__(
                self, "coeffs", tuple(int(c) % p for c in self.coeffs)
            )

    # construction helpers

    @classmethod
    def zero(cls, r: int, degree: int, field: PrimeField) -> "GradedPoly":
        return cls(r, degree, (0,) * num_monomials(r, degree), field)

    @classmethod
    def one(cls, r: int, field: PrimeField) -> "GradedPoly":
        return cls(r, 0, (1,), field)

    @classmethod
    def variable(cls, r: int, j: int, field: PrimeField) -> "GradedPoly":
        """The variable ``x{j}`` (1-based) as a degree-1 polynomial."""
        if not 1 <= j <= r:
            raise ValueError(f"variable index {j} outside 1..{r}")
        coeffs = [0] * r
        coeffs[j - 1] = 1
        return cls(r, 1, tuple(coeffs), field)

    @classmethod
    def monomial(
        cls, expts: Sequence[int], field: PrimeField, coeff: int = 1
    ) -> "GradedPoly":
        e = tuple(int(x) for x in expts)
        r, d = len(e), sum(e)
        coeffs = [0] * num_monomials(r, d)
        coeffs[monomial_index(e)] = coeff % field.p
        return cls(r, d, tuple(coeffs), field)

    @classmethod
    def from_terms(
        cls,
        r: int,
        degree: int,
        terms: Mapping[tuple[int, ...], int],
        field: PrimeField,
    ) -> "GradedPoly":
        coeffs = [0] * num_monomials(r, degree)
        idx = _index_map(r, degree)
        for e, c in terms.items():
            coeffs[idx[tuple(e)]] = (coeffs[idx[tuple(e)]] + c) % field.p
        return cls(r, degree, tuple(coeffs), field)

    @classmethod
    def random(cls, r, degree, field, rng, nonzero: bool = True) -> "GradedPoly":
        n = num_monomials(r, degree)
        while True:
            coeffs = tuple(rng.randrange(field.p) for _ in range(n))
            if not nonzero or any(coeffs):
                return cls(r, degree, coeffs, field)

    # queries

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def terms(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Nonzero (exponent tuple, coefficient) pairs in graded-lex order."""
        monos = monomials(self.r, self.degree)
        for i, c in enumerate(self.coeffs):
            if c:
                yield monos[i], c

    def leading_index(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("zero polynomial has no leading term")

    def coeff(self, expts: Sequence[int]) -> int:
        return self.coeffs[monomial_index(expts)]

    def vector(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    # arithmetic

    def _check_mate(self, other: "GradedPoly", same_degree: bool) -> None:
        if self.r != other.r or self.field != other.field:
            raise FieldMismatchError(
                f"operands disagree: r={self.r} mod {self.field.p} vs "
                f"r={other.r} mod {other.field.p}"
            )
        if same_degree and self.degree != other.degree:
            raise FieldMismatchError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        self._check_mate(other, same_degree=True)
        p = self.field.p
        return GradedPoly(
            self.r,
            self.degree,
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
            self.field,
        )

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        self._check_mate(other, same_degree=True)
        p = self.field.p
        return GradedPoly(
            self.r,
            self.degree,
            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)),
            self.field,
        )

    def scale(self, c: int) -> "GradedPoly":
        p = self.field.p
        c %= p
        return GradedPoly(
            self.r, self.degree, tuple(a * c % p for a in self.coeffs), self.field
        )

    def __neg__(self) -> "GradedPoly":
        return self.scale(-1)

    def __mul__(self, other: "GradedPoly") -> "GradedPoly":
        return multiply(self, other)

    def monic(self) -> "GradedPoly":
        """Scale so the graded-lex leading coefficient is 1."""
        lead = self.coeffs[self.leading_index()]
        if lead == 1:
            return self
        return self.scale(self.field.inv(lead))

    def __repr__(self) -> str:
        return f"GradedPoly(r={self.r}, deg={self.degree}, {poly_text(self)})"

    def __str__(self) -> str:
        return poly_text(self)


def multiply(f: GradedPoly, g: GradedPoly) -> GradedPoly:
    """Exact product; degrees add."""
    f._check_mate(g, same_degree=False)
    p = f.field.p
    out = np.zeros(num_monomials(f.r, f.degree + g.degree), dtype=np.int64)
    fi = np.nonzero(f.vector())[0]
    gi = np.nonzero(g.vector())[0]
    if fi.size and gi.size:
        table = _product_table(f.r, f.degree, g.degree)
        prods = (f.vector()[fi, None] * g.vector()[None, gi]) % p
        np.add.at(out, table[np.ix_(fi, gi)].ravel(), prods.ravel())
        out %= p
    return GradedPoly(f.r, f.degree + g.degree, tuple(int(c) for c in out), f.field)


# -- text grammar -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|(\^)|(\*)|(\+)|(-))")


def poly_text(f: GradedPoly) -> str:
    """Canonical text form: terms in graded-lex order joined by ' + '."""
    parts = []
    for expts, c in f.terms():
        factors = [
            f"x{v + 1}" + (f"^{e}" if e > 1 else "")
            for v, e in enumerate(expts)
            if e > 0
        ]
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append("*".join([str(c)] + factors))
    return " + ".join(parts) if parts else "0"


def parse_poly(
    text: str, r: int, field: PrimeField, line: int = 1
) -> GradedPoly:
    """Parse the polynomial grammar into a :class:`GradedPoly`.

    Raises :class:`PolyParseError` on malformed input and
    :class:`DegreeMismatchError` (naming both degrees) when terms have
    different total degrees.
    """
    src = text.replace("−", "-")
    pos = 0
    n = len(src)

    def err(msg: str, at: int) -> PolyParseError:
        return PolyParseError(msg, line=line, col=at + 1)

    def next_token(expected: str | None = None):
        nonlocal pos
        while pos < n and src[pos].isspace():
            pos += 1
        if pos >= n:
            return None, pos
        m = _TOKEN.match(src, pos)
        if m is None:
            raise err(f"unexpected character {src[pos]!r}", pos)
        start = m.start(m.lastindex)
        pos = m.end()
        kind = {1: "int", 2: "var", 3: "^", 4: "*", 5: "+", 6: "-"}[m.lastindex]
        value = m.group(m.lastindex)
        if expected and kind != expected:
            raise err(f"expected {expected}, found {value!r}", start)
        return (kind, value, start), pos

    terms: list[tuple[int, dict[int, int], int, int]] = []  # coeff, exps, deg, col
    sign = 1
    tok, _ = next_token()
    if tok is None:
        raise err("empty polynomial", 0)
    while True:
        # optional leading sign for the term
        term_start = tok[2]
        while tok and tok[0] in ("+", "-"):
            if tok[0] == "-":
                sign = -sign
            tok, _ = next_token()
            if tok is None:
                raise err("dangling sign", n - 1)
            term_start = tok[2]
        coeff = 1
        exps: dict[int, int] = {}
        have_factor = False
        if tok[0] == "int":
            coeff = int(tok[1])
            have_factor = True
        elif tok[0] == "var":
            pass  # handled below
        else:
            raise err(f"expected a term, found {tok[1]!r}", tok[2])

        def read_var(vtok):
            nonlocal pos
            vi = int(vtok[1])
            if not 1 <= vi <= r:
                raise err(f"variable x{vi} outside x1..x{r}", vtok[2])
            e = 1
            save = pos
            nxt, _ = next_token()
            if nxt and nxt[0] == "^":
                etok, _ = next_token("int")
                e = int(etok[1])
            else:
                pos = save
            exps[vi] = exps.get(vi, 0) + e

        if tok[0] == "var":
            read_var(tok)
            have_factor = True
        # subsequent '*'-joined factors
        while True:
            nxt, _ = next_token()
            if nxt is None:
                tok = None
                break
            if nxt[0] == "*":
                ftok, _ = next_token()
                if ftok is None:
                    raise err("dangling '*'", n - 1)
                if ftok[0] == "int":
                    coeff *= int(ftok[1])
                elif ftok[0] == "var":
                    read_var(ftok)
                else:
                    raise err(f"expected a factor, found {ftok[1]!r}", ftok[2])
            elif nxt[0] in ("+", "-"):
                tok = nxt
                break
            else:
                raise err(f"expected '*', '+' or '-', found {nxt[1]!r}", nxt[2])
        if not have_factor and not exps:
            raise err("empty term", term_start)
        deg = sum(exps.values())
        terms.append((sign * coeff, exps, deg, term_start))
        sign = 1
        if tok is None:
            break
        if tok[0] == "-":
            sign = -1
        tok, _ = next_token()
        if tok is None:
            raise err("dangling sign", n - 1)

    # degree reconciliation: literal zero constants fit any degree
    live = [(c, e, d, col) for (c, e, d, col) in terms if c % field.p or e or d]
    degrees = {d for (_, _, d, _) in live}
    if len(degrees) > 1:
        lo, hi = min(degrees), max(degrees)
        bad = next(col for (_, _, d, col) in live if d == hi)
        raise DegreeMismatchError(
            f"inhomogeneous polynomial: term of degree {hi} next to degree {lo}",
            line=line,
            col=bad + 1,
        )
    degree = degrees.pop() if degrees else 0
    acc: dict[tuple[int, ...], int] = {}
    for c, exps, _, _ in live:
        key = tuple(exps.get(v, 0) for v in range(1, r + 1))
        acc[key] = acc.get(key, 0) + c
    return GradedPoly.from_terms(r, degree, acc, field)


# -- exact linear algebra mod p ----------------------------------------------


def _as_matrix(rows, width: int | None = None) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else a.reshape(0, width or 0)
    if a.size == 0 and width is not None:
        a = a.reshape(0, width)
    return a


def rref_mod(rows: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form over Z/p.

    Returns (matrix of nonzero rows, pivot columns).  Entries stay in
    ``0..p-1``; every intermediate product of two entries fits in int64
    because ``p`` is at most 31 bits.
    """
    a = _as_matrix(rows).copy() % p
    nrows, ncols = a.shape
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        a[rank] = a[rank] * pow(int(a[rank, col]), -1, p) % p
        factors = a[:, col].copy()
        factors[rank] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            a[hit] = (a[hit] - factors[hit, None] * a[rank]) % p
        pivots.append(col)
        rank += 1
    return a[:rank], tuple(pivots)


def rank_mod(rows: np.ndarray, p: int) -> int:
    return rref_mod(rows, p)[0].shape[0]


def reduce_rows_mod(
    rows: np.ndarray, rref: np.ndarray, pivots: Sequence[int], p: int
) -> np.ndarray:
    """Residuals of ``rows`` modulo the span of an RREF basis."""
    a = _as_matrix(rows, width=rref.shape[1] if rref.size else None).copy() % p
    for i, col in enumerate(pivots):
        factors = a[:, col]
        hit = np.nonzero(factors)[0]
        if hit.size:
            a[hit] = (a[hit] - factors[hit, None] * rref[i]) % p
    return a


def nullspace_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : a @ x = 0 mod p}``."""
    a = _as_matrix(a)
    ncols = a.shape[1]
    rref, pivots = rref_mod(a, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-int(rref[i, fc])) % p
    return basis


@dataclass
class DegreeSpan:
    """A subspace of the degree-``d`` graded piece, held in RREF."""

    r: int
    degree: int
    field: PrimeField
    matrix: np.ndarray
    pivots: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows, r: int, degree: int, field: PrimeField) -> "DegreeSpan":
        width = num_monomials(r, degree)
        a = _as_matrix(rows, width=width)
        if a.shape[1] != width:
            raise ValueError(
                f"rows of width {a.shape[1]} cannot span degree {degree} "
                f"in {r} variables (need {width})"
            )
        rref, pivots = rref_mod(a, field.p)
        return cls(r, degree, field, rref, pivots)

    @classmethod
    def from_polys(
        cls,
        polys: Iterable[GradedPoly],
        r: int | None = None,
        degree: int | None = None,
        field: PrimeField | None = None,
    ) -> "DegreeSpan":
        polys = list(polys)
        if polys:
            first = polys[0]
            r, degree, field = first.r, first.degree, first.field
            for q in polys:
                first._check_mate(q, same_degree=True)
            rows = np.array([q.coeffs for q in polys], dtype=np.int64)
        else:
            if r is None or degree is None or field is None:
                raise ValueError("an empty span needs explicit r, degree, field")
            rows = np.zeros((0, num_monomials(r, degree)), dtype=np.int64)
        return cls.from_rows(rows, r, degree, field)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def ambient_dim(self) -> int:
        return num_monomials(self.r, self.degree)

    def reduce(self, vec) -> np.ndarray:
        res = reduce_rows_mod(
            np.asarray(vec, dtype=np.int64).reshape(1, -1),
            self.matrix,
            self.pivots,
            self.field.p,
        )
        return res[0]

    def contains(self, f: GradedPoly) -> bool:
        if f.r != self.r or f.degree != self.degree or f.field != self.field:
            raise FieldMismatchError(
                f"membership test needs degree {self.degree} over p={self.field.p}"
            )
        return not self.reduce(f.vector()).any()

    def basis(self) -> list[GradedPoly]:
        return [
            GradedPoly(self.r, self.degree, tuple(int(c) for c in row), self.field)
            for row in self.matrix
        ]

    def extended(self, polys: Iterable[GradedPoly]) -> "DegreeSpan":
        rows = [self.matrix] + [
            np.asarray(q.coeffs, dtype=np.int64).reshape(1, -1) for q in polys
        ]
        stacked = np.vstack(rows) if rows else self.matrix
        return DegreeSpan.from_rows(stacked, self.r, self.degree, self.field)


# -- multivariate gcd ---------------------------------------------------------
#
# Recursive dense representation for (not necessarily homogeneous) polynomials
# in k variables: level 0 is a residue; level k is a list indexed by the
# exponent of the k-th variable whose entries are level-(k-1) polynomials.
# The zero polynomial is [] at level >= 1 and 0 at level 0.


def _rd_is_zero(f, k: int) -> bool:
    return f == 0 if k == 0 else len(f) == 0


def _rd_trim(f: list, k: int) -> list:
    while f and _rd_is_zero(f[-1], k - 1):
        f.pop()
    return f


def _rd_zero(k: int):
    return 0 if k == 0 else []


def _rd_add(f, g, k: int, p: int):
    if k == 0:
        return (f + g) % p
    out = []
    for i in range(max(len(f), len(g))):
        a = f[i] if i < len(f) else _rd_zero(k - 1)
        b = g[i] if i < len(g) else _rd_zero(k - 1)
        out.append(_rd_add(a, b, k - 1, p))
    return _rd_trim(out, k)


def _rd_neg(f, k: int, p: int):
    if k == 0:
        return (-f) % p
    return [_rd_neg(a, k - 1, p) for a in f]


def _rd_sub(f, g, k: int, p: int):
    return _rd_add(f, _rd_neg(g, k, p), k, p)


def _rd_mul(f, g, k: int, p: int):
    if k == 0:
        return f * g % p
    if not f or not g:
        return []
    out = [_rd_zero(k - 1) for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        if _rd_is_zero(a, k - 1):
            continue
        for j, b in enumerate(g):
            if _rd_is_zero(b, k - 1):
                continue
            out[i + j] = _rd_add(out[i + j], _rd_mul(a, b, k - 1, p), k - 1, p)
    return _rd_trim(out, k)


def _rd_divexact(f, d, k: int, p: int):
    """Exact quotient ``f / d`` or None when division is not exact."""
    if k == 0:
        if d == 0:
            return None
        return f * pow(d, -1, p) % p
    if _rd_is_zero(f, k):
        return []
    if _rd_is_zero(d, k):
        return None
    rem = list(f)
    _rd_trim(rem, k)
    dd = len(d) - 1
    ld = d[-1]
    if len(rem) - 1 < dd:
        return None
    q = [_rd_zero(k - 1) for _ in range(len(rem) - dd)]
    while rem:
        dr = len(rem) - 1
        if dr < dd:
            return None
        c = _rd_divexact(rem[-1], ld, k - 1, p)
        if c is None:
            return None
        shift = dr - dd
        q[shift] = c
        for j, dj in enumerate(d):
            if _rd_is_zero(dj, k - 1):
                continue
            t = _rd_mul(c, dj, k - 1, p)
            rem[j + shift] = _rd_sub(rem[j + shift], t, k - 1, p)
        _rd_trim(rem, k)
    return _rd_trim(q, k)


def _uni_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _uni_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of dense univariate division (coefficients ascending)."""
    a = _uni_trim(list(a))
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    while a and len(a) - 1 >= db:
        coef = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            if c:
                a[shift + i] = (a[shift + i] - coef * c) % p
        _uni_trim(a)
    return a


def _uni_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic univariate GCD over Z/p (dense ascending coefficients)."""
    a = _uni_trim(list(a))
    b = _uni_trim(list(b))
    while b:
        a, b = b, _uni_rem(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _convolve(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    return out


def _plane_image(
    f: GradedPoly, a_pt: Sequence[int], b_pt: Sequence[int]
) -> list[int]:
    """The binary form ``f(a*u + b*v)`` as ascending u-coefficients.

    The list has length ``deg f + 1``; its last entry is ``f(a)``, so a
    nonzero last entry certifies the restriction kept full degree.
    """
    p, d = f.field.p, f.degree
    powers: list[list[list[int]]] = []
    for i in range(f.r):
        base = [b_pt[i] % p, a_pt[i] % p]  # b*v + a*u, ascending in u
        var_pows = [[1]]
        for _ in range(d):
            var_pows.append(_convolve(var_pows[-1], base, p))
        powers.append(var_pows)
    acc = [0] * (d + 1)
    for expts, c in f.terms():
        cur = [c]
        for i, e in enumerate(expts):
            if e:
                cur = _convolve(cur, powers[i][e], p)
        for j, c2 in enumerate(cur):
            acc[j] = (acc[j] + c2) % p
    return acc


def _plane_gcd_degree(f: GradedPoly, g: GradedPoly) -> int:
    """Estimated gcd degree via restriction to random planes.

    Restriction to a plane through the origin sends the gcd to a common
    binary factor of full degree, so each plane gives an upper bound for
    the gcd degree, exact for all but finitely many planes.  The minimum
    over a few valid planes is therefore an upper bound that is almost
    surely exact; the caller certifies it independently.
    """
    p = f.field.p
    best = min(f.degree, g.degree)
    rng = random.Random(f"gcd-plane:{f.r}:{f.degree}:{g.degree}")
    valid = 0
    for _ in range(12):
        if valid >= 3 or best == 0:
            break
        a_pt = [rng.randrange(1, 1 << 16) for _ in range(f.r)]
        b_pt = [rng.randrange(1, 1 << 16) for _ in range(f.r)]
        fu = _plane_image(f, a_pt, b_pt)
        gu = _plane_image(g, a_pt, b_pt)
        if fu[-1] == 0 or gu[-1] == 0:
            continue  # degenerate plane: the image dropped degree
        valid += 1
        h = _uni_gcd(fu, gu, p)
        best = min(best, len(h) - 1)
    return best


def _cofactor_kernel(
    f: GradedPoly, g: GradedPoly, dh: int
) -> tuple[int, GradedPoly | None]:
    """Solve ``u f = v g`` with deg u = deg g - dh, deg v = deg f - dh.

    When ``dh`` equals the gcd degree the solution space is exactly
    one-dimensional, spanned by the two cofactors, and the gcd follows by
    exact division; kernel dimension 0 means ``dh`` is too large and
    dimension > 1 means it is too small.
    """
    r, field, p = f.r, f.field, f.field.p
    du, dv = g.degree - dh, f.degree - dh
    nu, nv = num_monomials(r, du), num_monomials(r, dv)
    nout = num_monomials(r, f.degree + g.degree - dh)
    rows = np.zeros((nu + nv, nout), dtype=np.int64)
    fu = _product_table(r, du, f.degree)
    rows[:nu][np.arange(nu)[:, None], fu] = np.array(f.coeffs, dtype=np.int64)[None, :]
    gv = _product_table(r, dv, g.degree)
    neg_g = np.array([(p - c) % p for c in g.coeffs], dtype=np.int64)
    rows[nu:][np.arange(nv)[:, None], gv] = neg_g[None, :]
    kernel = nullspace_mod(rows.T, p)
    if kernel.shape[0] != 1:
        return kernel.shape[0], None
    vpart = tuple(int(c) % p for c in kernel[0][nu:])
    cofactor = GradedPoly(r, dv, vpart, field)
    return 1, try_divide(f, cofactor)


def _kernel_gcd(f: GradedPoly, g: GradedPoly) -> GradedPoly:
    """GCD by certified kernel dimension, seeded with the plane estimate."""
    lo, hi = 0, min(f.degree, g.degree)
    dh = min(_plane_gcd_degree(f, g), hi)
    for _ in range(hi.bit_length() + 8):
        dim, h = _cofactor_kernel(f, g, dh)
        if dim == 1 and h is not None:
            return h
        if dim == 0:
            hi = dh - 1
        else:
            lo = dh + 1
            # The kernel dimension reveals the exact shortfall when it is
            # the dimension of a graded piece.
            jumped = False
            for diff in range(1, hi - dh + 1):
                if num_monomials(f.r, diff) == dim:
                    lo = max(lo, dh + diff)
                    dh = lo
                    jumped = True
                    break
            if jumped:
                continue
        dh = (lo + hi + 1) // 2
    raise ArithmeticError("gcd kernel search failed to converge")


# Conversions between homogeneous polynomials and the recursive
# representation of their dehomogenization (last variable set to 1).  For a
# homogeneous f the first r-1 exponents determine the last, so setting
# xr = 1 loses nothing.


def _rd_from_dict(d: dict[tuple[int, ...], int], k: int):
    if k == 0:
        return d.get((), 0)
    if not d:
        return []
    top = max(key[-1] for key in d)
    out = []
    for e in range(top + 1):
        sub = {key[:-1]: c for key, c in d.items() if key[-1] == e}
        out.append(_rd_from_dict(sub, k - 1))
    return _rd_trim(out, k)


def _rd_to_dict(f, k: int) -> dict[tuple[int, ...], int]:
    if k == 0:
        return {(): f} if f else {}
    out: dict[tuple[int, ...], int] = {}
    for e, a in enumerate(f):
        for key, c in _rd_to_dict(a, k - 1).items():
            out[key + (e,)] = c
    return out


def _dehomogenize(f: GradedPoly):
    """Set the last variable to 1 (as a k = r-1 recursive dense poly)."""
    d = {expts[:-1]: c for expts, c in f.terms()}
    return _rd_from_dict(d, f.r - 1)


def _xr_valuation(f: GradedPoly) -> int:
    return min(expts[-1] for expts, _ in f.terms())


def _homogenize(
    rd, k: int, r: int, degree: int, field: PrimeField, xr_power: int
) -> GradedPoly:
    """Rebuild a homogeneous polynomial from a dehomogenized one."""
    terms: dict[tuple[int, ...], int] = {}
    for key, c in _rd_to_dict(rd, k).items():
        fill = degree - sum(key)
        terms[key + (fill,)] = c
    out_degree = degree + xr_power
    if xr_power:
        shifted = {
            key[:-1] + (key[-1] + xr_power,): c for key, c in terms.items()
        }
        terms = shifted
    return GradedPoly.from_terms(r, out_degree, terms, field)


def gcd(f: GradedPoly, g: GradedPoly) -> GradedPoly:
    """Monic GCD of two homogeneous polynomials (not both zero).

    One variable reduces to a power of it, two to a univariate Euclid on
    the dehomogenization, and three or more use the certified kernel
    method (:func:`_kernel_gcd`), whose answer is verified by the kernel
    dimension and an exact division rather than trusted from a random
    projection.
    """
    f._check_mate(g, same_degree=False)
    if f.is_zero and g.is_zero:
        raise GcdUndefinedError("gcd(0, 0) is undefined")
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    if f.r == 1:
        d = min(f.degree, g.degree)
        return GradedPoly.monomial((d,), f.field)
    if f.degree == 0 or g.degree == 0:
        return GradedPoly.one(f.r, f.field)
    if f.r == 2:
        vf, vg = _xr_valuation(f), _xr_valuation(g)
        rd = _uni_gcd(_dehomogenize(f), _dehomogenize(g), f.field.p)
        total = len(rd) - 1
        return _homogenize(rd, 1, 2, total, f.field, min(vf, vg)).monic()
    return _kernel_gcd(f, g).monic()


def try_divide(f: GradedPoly, d: GradedPoly) -> GradedPoly | None:
    """Exact homogeneous quotient ``f / d``, or None when ``d`` ∤ ``f``."""
    f._check_mate(d, same_degree=False)
    if d.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero:
        if f.degree < d.degree:
            return None
        return GradedPoly.zero(f.r, f.degree - d.degree, f.field)
    if f.degree < d.degree:
        return None
    if f.r == 1:
        if d.degree > f.degree:
            return None
        c = f.coeffs[0] * f.field.inv(d.coeffs[0]) % f.field.p
        return GradedPoly.monomial((f.degree - d.degree,), f.field, coeff=c)
    vf, vd = _xr_valuation(f), _xr_valuation(d)
    if vd > vf:
        return None
    k = f.r - 1
    q = _rd_divexact(_dehomogenize(f), _dehomogenize(d), k, f.field.p)
    if q is None:
        return None
    total = (f.degree - vf) - (d.degree - vd)
    return _homogenize(q, k, f.r, total, f.field, vf - vd)


def span_gcd(span: DegreeSpan) -> GradedPoly:
    """Monic GCD of every polynomial in a degree span.

    Equivalently the GCD of any basis.  A zero span has no GCD and raises
    :class:`GcdUndefinedError`.
    """
    basis = span.basis()
    if not basis:
        raise GcdUndefinedError(
            f"zero subspace in degree {span.degree} has no gcd"
        )
    out = basis[0]
    for q in basis[1:]:
        if out.degree == 0:
            break
        out = gcd(out, q)
    return out.monic()
