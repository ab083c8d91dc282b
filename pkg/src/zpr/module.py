"""Vectors, generator matrices and standard forms over Z/p^r.

Vectors are tuples of canonical residues.  A submodule is stored through its
standard-form generator matrix: after a column permutation the rows fall into
blocks ``0..r-1``; block ``i`` has ``k_i`` rows whose pivot columns carry
``p**i * I`` and whose entries are all divisible by ``p**i``, with zeros to the
left of and below every pivot.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .arith import RingParams, unit_inverse, valuation
from .errors import DimensionMismatch

Vector = tuple  # tuple[int, ...] of canonical residues


def vector(ring: RingParams, coords: Iterable[int]) -> Vector:
    q = ring.modulus
    return tuple(int(x) % q for x in coords)


def zero_vector(n: int) -> Vector:
    return (0,) * n


def vec_add(ring, u, v):
    q = ring.modulus
    return tuple((a + b) % q for a, b in zip(u, v))


def vec_sub(ring, u, v):
    q = ring.modulus
    return tuple((a - b) % q for a, b in zip(u, v))


def vec_scale(ring, c, v):
    q = ring.modulus
    return tuple((c * a) % q for a in v)


def linear_combination(ring, coeffs, vectors, n):
    q = ring.modulus
    acc = [0] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for j, a in enumerate(v):
                acc[j] = (acc[j] + c * a) % q
    return tuple(acc)


def _check_length(n, v):
    if len(v) != n:
        raise DimensionMismatch(f"expected a vector of length {n}, got {len(v)}")


@dataclass(frozen=True)
class GeneratorSet:
    """A possibly redundant list of generators of a submodule of (Z/p^r)^n."""

    ring: RingParams
    n: int
    rows: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise DimensionMismatch("ambient length must be at least 1")
        rows = []
        for row in self.rows:
            _check_length(self.n, row)
            rows.append(vector(self.ring, row))
        object.__setattr__(self, "rows", tuple(rows))


@dataclass(frozen=True)
class StandardForm:
    """A generator matrix in standard form.

    ``rows`` are expressed in permuted coordinates: standard-form column ``j``
    is original column ``permutation[j]``.  Row ``t`` therefore has its pivot
    in column ``t``.
    """

    ring: RingParams
    n: int
    rows: tuple
    permutation: tuple
    k: tuple

    @property
    def levels(self) -> tuple:
        """Block index of every row, in row order."""
        return tuple(i for i, ki in enumerate(self.k) for _ in range(ki))

    def original_rows(self) -> tuple:
        """The rows with the column permutation undone."""
        out = []
        for row in self.rows:
            orig = [0] * self.n
            for j, a in enumerate(row):
                orig[self.permutation[j]] = a
            out.append(tuple(orig))
        return tuple(out)


def _reduce(ring: RingParams, n: int, rows: Sequence[Vector], track: bool = False):
    """Row-reduce ``rows`` into standard form, in original column order.

    Returns ``(pivots, work, transform)``.  ``pivots`` lists
    ``(row_index, column, level)`` in standard-form row order; ``work[i]`` is
    the reduced row ``i``.  With ``track=True``, ``transform[i]`` holds ring
    coefficients expressing ``work[i]`` in terms of the input rows.
    """
    p, q, r = ring.p, ring.modulus, ring.r
    m = len(rows)
    work = [list(row) for row in rows]
    transform = [[int(i == j) for j in range(m)] for i in range(m)] if track else None

    def axpy(dst, t, src):
        # work[dst] -= t * work[src]
        wd, ws = work[dst], work[src]
        for j in range(n):
            if ws[j]:
                wd[j] = (wd[j] - t * ws[j]) % q
        if track:
            td, ts = transform[dst], transform[src]
            for j in range(m):
                if ts[j]:
                    td[j] = (td[j] - t * ts[j]) % q

    remaining = list(range(m))
    pivots = []
    used = set()
    for level in range(r):
        pl = p**level
        for col in range(n):
            if col in used or not remaining:
                continue
            best, best_val = None, r
            for i in remaining:
                v = valuation(work[i][col], ring)
                if v < best_val:
                    best, best_val = i, v
            if best is None or best_val > level:
                continue
            # all remaining entries have valuation >= level here
            u = unit_inverse(work[best][col] // pl, ring)
            work[best] = [(u * a) % q for a in work[best]]
            if track:
                transform[best] = [(u * a) % q for a in transform[best]]
            remaining.remove(best)
            for i in remaining:
                e = work[i][col]
                if e:
                    axpy(i, e // pl, best)
            for j, _, _ in pivots:
                t = work[j][col] // pl
                if t:
                    axpy(j, t, best)
            pivots.append((best, col, level))
            used.add(col)
    return pivots, work, transform


def standard_form(gens: GeneratorSet) -> StandardForm:
    """Reduce a generator set to its standard form.

    Columns are scanned left to right once per level; the pivot is the
    remaining row of least valuation (lowest index on ties).  Pivot rows are
    scaled so the pivot equals ``p**i`` and entries above a level-``i`` pivot
    are reduced modulo ``p**i``.
    """
    ring, n = gens.ring, gens.n
    pivots, work, _ = _reduce(ring, n, gens.rows)
    pivot_cols = [c for _, c, _ in pivots]
    taken = set(pivot_cols)
    perm = tuple(pivot_cols + [c for c in range(n) if c not in taken])
    rows = tuple(tuple(work[i][c] for c in perm) for i, _, _ in pivots)
    k = [0] * ring.r
    for _, _, level in pivots:
        k[level] += 1
    return StandardForm(ring, n, rows, perm, tuple(k))


def parameters(sf: StandardForm) -> tuple:
    """``(k_0, ..., k_{r-1}, k(M))``."""
    return tuple(sf.k) + (sum(sf.k),)


def _back_substitute(ring, pivot_rows, v):
    """Coefficients ``c`` with ``sum c_t * row_t == v`` or ``None``.

    ``pivot_rows`` is a list of ``(row, column, level)`` in standard-form order.
    ``c_t`` for a level-``i`` row is returned modulo ``p**(r-i)``.
    """
    p, q, r = ring.p, ring.modulus, ring.r
    rest = list(v)
    coeffs = []
    for row, col, level in pivot_rows:
        e = rest[col]
        pl = p**level
        if e % pl:
            return None
        t = (e // pl) % p ** (r - level)
        if t:
            for j, a in enumerate(row):
                if a:
                    rest[j] = (rest[j] - t * a) % q
        coeffs.append(t)
    if any(rest):
        return None
    return tuple(coeffs)


def solve(ring: RingParams, rows: Sequence[Vector], v: Vector) -> Optional[tuple]:
    """Ring coefficients ``c`` with ``sum c_j * rows[j] == v``, or ``None``."""
    n = len(v)
    pivots, work, transform = _reduce(ring, n, rows, track=True)
    coeffs = _back_substitute(ring, [(work[i], c, lv) for i, c, lv in pivots], v)
    if coeffs is None:
        return None
    q = ring.modulus
    out = [0] * len(rows)
    for t, (i, _, _) in zip(coeffs, pivots):
        if t:
            for j, a in enumerate(transform[i]):
                out[j] = (out[j] + t * a) % q
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Submodule:
    """A submodule of (Z/p^r)^n represented by its standard form.

    Equality is equality of the underlying sets.
    """

    ring: RingParams
    n: int
    sf: StandardForm

    @classmethod
    def span(cls, ring: RingParams, n: int, rows: Iterable[Sequence[int]] = ()) -> "Submodule":
        return cls(ring, n, standard_form(GeneratorSet(ring, n, tuple(rows))))

    @classmethod
    def zero(cls, ring, n):
        return cls.span(ring, n)

    @classmethod
    def full(cls, ring, n):
        return cls.span(ring, n, [[int(i == j) for j in range(n)] for i in range(n)])

    @cached_property
    def generators(self) -> tuple:
        """Standard-form rows in original coordinates."""
        return self.sf.original_rows()

    @property
    def k(self) -> tuple:
        return self.sf.k

    @cached_property
    def p_dimension(self) -> int:
        r = self.ring.r
        return sum((r - i) * ki for i, ki in enumerate(self.sf.k))

    @property
    def cardinality(self) -> int:
        return self.ring.p**self.p_dimension

    def pivot_rows(self):
        """``(row, column, level)`` triples in original coordinates."""
        perm = self.sf.permutation
        return [(row, perm[t], lv) for t, (row, lv) in enumerate(zip(self.generators, self.sf.levels))]

    def __contains__(self, v) -> bool:
        return span_membership(self, v) is not None

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        return submodules_equal(self, other)

    def __hash__(self):
        return hash((self.ring, self.n, self.sf.k))

    def __repr__(self):
        return f"Submodule({self.ring}, n={self.n}, k={self.sf.k})"


def cardinality(m: Submodule) -> int:
    """``p ** sum((r - i) * k_i)``."""
    return m.cardinality


def span_membership(m: Submodule, v: Sequence[int]) -> Optional[tuple]:
    """Coefficients of ``v`` over the standard-form rows, or ``None`` if ``v`` is not in ``m``.

    A coefficient attached to a block-``i`` row is only defined modulo
    ``p**(r-i)`` and is returned in ``[0, p**(r-i))``.
    """
    _check_length(m.n, v)
    return _back_substitute(m.ring, m.pivot_rows(), vector(m.ring, v))


def _check_ambient(a: Submodule, b: Submodule):
    if a.ring != b.ring or a.n != b.n:
        raise DimensionMismatch(f"{a!r} and {b!r} live in different ambient spaces")


def is_submodule_of(a: Submodule, b: Submodule) -> bool:
    _check_ambient(a, b)
    return all(g in b for g in a.generators)


def submodules_equal(a: Submodule, b: Submodule) -> bool:
    _check_ambient(a, b)
    return a.cardinality == b.cardinality and is_submodule_of(a, b) and is_submodule_of(b, a)
