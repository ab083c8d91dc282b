"""p-bases of submodules of (Z/p^r)^n.

A p-linear combination uses digit coefficients from ``{0, ..., p-1}``.  A
p-generator sequence ``(v_1, ..., v_k)`` has ``p*v_k == 0`` and every
``p*v_i`` a p-linear combination of the later vectors; a p-linearly
independent one is a p-basis and every element of its span has exactly one
digit expansion over it.

Any ring combination over a p-generator sequence can be rewritten with digit
coefficients by carrying: ``c*v_i = (c mod p)*v_i + (c div p)*(p*v_i)`` and
``p*v_i`` is itself a digit combination of ``v_{i+1}, ...``.  Coordinates and
independence witnesses are computed with this carry rewrite.  Digit tuples
are only enumerated as a guarded fallback for sequences that are not
p-generator sequences.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .arith import RingParams
from .errors import DimensionMismatch, NotAPBasis, NotASubmoduleOf, TooLarge
from .module import (
    StandardForm,
    Submodule,
    _check_length,
    linear_combination,
    solve,
    vec_scale,
    vector,
)

DEFAULT_MAX_STATES = 2**16


@dataclass(frozen=True)
class PBasis:
    """An ordered p-basis.  Use :func:`make_pbasis` for a validated one."""

    ring: RingParams
    n: int
    vectors: tuple

    @property
    def pdim(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    @cached_property
    def carries(self) -> tuple:
        return _carry_table(self.ring, self.vectors)

    def span(self) -> Submodule:
        return Submodule.span(self.ring, self.n, self.vectors)


def _carry_table(ring: RingParams, vectors) -> tuple:
    """``table[i]`` lists ``(offset, digit)`` with ``p*v_i == sum digit * v_{i+offset}``.

    Raises :class:`NotAPBasis` if the sequence is not a p-generator sequence.
    """
    k = len(vectors)
    table = [()] * k
    for i in range(k - 1, -1, -1):
        c = solve(ring, vectors[i + 1:], vec_scale(ring, ring.p, vectors[i]))
        if c is None:
            raise NotAPBasis(f"p * vector {i} is not a p-linear combination of the later vectors")
        digits = carry_normalize(ring, table[i + 1:], c)
        table[i] = tuple((j + 1, d) for j, d in enumerate(digits) if d)
    return tuple(table)


def carry_normalize(ring: RingParams, carries: Sequence, coeffs: Sequence[int]) -> tuple:
    """Turn ring coefficients over a p-generator sequence into digit coefficients.

    Both combinations give the same vector.  ``carries`` is the carry table of
    the sequence (see :attr:`PBasis.carries`).
    """
    p, q = ring.p, ring.modulus
    c = [x % q for x in coeffs]
    for i in range(len(c)):
        carry, c[i] = divmod(c[i], p)
        if carry:
            for off, d in carries[i]:
                c[i + off] = (c[i + off] + carry * d) % q
    return tuple(c)


def _extend_p_span(ring, elems, v, max_states):
    """The p-span of ``(v, ...)`` given the p-span ``elems`` of ``(...)``."""
    q = ring.modulus
    multiples = [vec_scale(ring, a, v) for a in range(1, ring.p)]
    new = set(elems)
    for s in elems:
        for mv in multiples:
            new.add(tuple((x + y) % q for x, y in zip(s, mv)))
    if len(new) > max_states:
        raise TooLarge(len(new), max_states)
    return new


def _check_vectors(ring, seq, n=None):
    seq = [vector(ring, v) for v in seq]
    if n is None and seq:
        n = len(seq[0])
    for v in seq:
        _check_length(n, v)
    return seq, n


def is_p_generator_sequence(ring: RingParams, seq: Sequence, max_states: int = DEFAULT_MAX_STATES):
    """Return ``(ok, index)``; ``index`` is the smallest 0-based violating position or ``None``.

    Position ``i`` violates when ``p*seq[i]`` is not a p-linear combination of
    ``seq[i+1:]``.  While the tail checked so far is a p-generator sequence
    its p-span is its span and membership is exact linear algebra; once a
    violation is found, earlier positions are checked against the enumerated
    p-span of the tail, bounded by ``max_states``.
    """
    seq, n = _check_vectors(ring, seq)
    bad = None
    tail = None
    for i in range(len(seq) - 1, -1, -1):
        pv = vec_scale(ring, ring.p, seq[i])
        if bad is None:
            ok = solve(ring, seq[i + 1:], pv) is not None
        else:
            if tail is None:
                tail = {(0,) * n}
                for v in reversed(seq[i + 1:]):
                    tail = _extend_p_span(ring, tail, v, max_states)
            ok = pv in tail
            tail = _extend_p_span(ring, tail, seq[i], max_states)
        if not ok:
            bad = i
    return bad is None, bad


def is_p_independent(ring: RingParams, vectors: Sequence, max_states: int = DEFAULT_MAX_STATES):
    """Return ``(True, None)`` or ``(False, witness)``.

    The witness is a nonzero digit tuple combining ``vectors`` to zero.  For
    p-generator sequences the check is exact linear algebra: the sequence is
    independent iff its span has ``p**k`` elements, and a witness comes from
    the last vector lying in the span of its successors.  Other sequences are
    checked by enumerating ``p**k`` digit tuples, which raises
    :class:`TooLarge` beyond ``max_states``.
    """
    seq, n = _check_vectors(ring, vectors)
    k = len(seq)
    if not k:
        return True, None
    if is_p_generator_sequence(ring, seq, max_states)[0]:
        if Submodule.span(ring, n, seq).p_dimension == k:
            return True, None
        for i in range(k - 1, -1, -1):
            c = solve(ring, seq[i + 1:], seq[i])
            if c is not None:
                coeffs = [0] * i + [1] + [-x for x in c]
                return False, carry_normalize(ring, _carry_table(ring, seq), coeffs)
        raise AssertionError("dependent sequence without a dependent position")
    if ring.p**k > max_states:
        raise TooLarge(ring.p**k, max_states)
    zero = (0,) * n
    for digits in itertools.product(range(ring.p), repeat=k):
        if any(digits) and linear_combination(ring, digits, seq, n) == zero:
            return False, digits
    return True, None


def make_pbasis(ring: RingParams, vectors: Sequence, n: Optional[int] = None) -> PBasis:
    """Validate ``vectors`` as a p-basis.  ``n`` is needed only for an empty basis."""
    seq, n = _check_vectors(ring, vectors, n)
    if n is None:
        raise DimensionMismatch("ambient length of an empty basis must be given")
    ok, i = is_p_generator_sequence(ring, seq)
    if not ok:
        raise NotAPBasis(f"not a p-generator sequence (position {i})")
    ok, witness = is_p_independent(ring, seq)
    if not ok:
        raise NotAPBasis(f"not p-linearly independent, witness {witness}")
    return PBasis(ring, n, tuple(seq))


def p_coordinates(basis: PBasis, v: Sequence[int]) -> Optional[tuple]:
    """The unique digit tuple expressing ``v`` over ``basis``, or ``None`` if ``v`` is outside its span."""
    _check_length(basis.n, v)
    ring = basis.ring
    c = solve(ring, basis.vectors, vector(ring, v))
    if c is None:
        return None
    return carry_normalize(ring, basis.carries, c)


def p_basis_from_standard_form(sf: StandardForm) -> PBasis:
    """Chain p-basis: every level-``i`` row ``g`` contributes ``g, p*g, ..., p**(r-i-1)*g``."""
    ring = sf.ring
    out = []
    for g, level in zip(sf.original_rows(), sf.levels):
        for e in range(ring.r - level):
            out.append(vec_scale(ring, ring.p**e, g))
    return PBasis(ring, sf.n, tuple(out))


def p_basis(m: Submodule) -> PBasis:
    return p_basis_from_standard_form(m.sf)


def p_dimension(m: Submodule) -> int:
    """``sum((r - i) * k_i)``, the base-p logarithm of ``|m|``."""
    return m.p_dimension


def socle(m: Submodule) -> Submodule:
    """All ``v`` in ``m`` with ``p*v == 0``."""
    ring = m.ring
    rows = [vec_scale(ring, ring.p ** (ring.r - level - 1), g)
            for g, level in zip(m.generators, m.sf.levels)]
    return Submodule.span(ring, m.n, rows)


def extend_p_basis(sub_basis: PBasis, m: Submodule) -> PBasis:
    """Extend a p-basis of a submodule of ``m`` to a p-basis of ``m``.

    While the current basis falls short of ``m``, take the first vector ``v``
    of the chain basis of ``m`` outside its span, find the least ``e >= 1``
    with ``p**e * v`` inside, and prepend ``p**(e-1) * v``.
    """
    ring, n = m.ring, m.n
    if sub_basis.ring != ring or sub_basis.n != n:
        raise DimensionMismatch("basis and module live in different ambient spaces")
    for v in sub_basis.vectors:
        if v not in m:
            raise NotASubmoduleOf(f"{v} is not in the target module")
    current = list(sub_basis.vectors)
    candidates = p_basis(m).vectors
    while len(current) < m.p_dimension:
        here = Submodule.span(ring, n, current)
        v = next(c for c in candidates if c not in here)
        e = next(e for e in range(1, ring.r + 1) if vec_scale(ring, ring.p**e, v) in here)
        current.insert(0, vec_scale(ring, ring.p ** (e - 1), v))
    return PBasis(ring, n, tuple(current))
