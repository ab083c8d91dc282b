"""Exhaustive reference computations for small instances.

Nothing here uses the reduction machinery of the other modules; everything is
plain enumeration, so results can serve as ground truth.  Every function
takes an :class:`EnumerationGuard` and raises :class:`TooLarge` rather than
enumerating more than ``guard.max_states`` states.  Returned element
collections are tuples sorted lexicographically.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import TooLarge


@dataclass(frozen=True)
class EnumerationGuard:
    max_states: int = 2**16

    def check(self, needed: int):
        if needed > self.max_states:
            raise TooLarge(needed, self.max_states)


DEFAULT_GUARD = EnumerationGuard()


def _combine(q, coeffs, vectors, n):
    acc = [0] * n
    for c, v in zip(coeffs, vectors):
        for j in range(n):
            acc[j] += c * v[j]
    return tuple(a % q for a in acc)


def enumerate_span(gens, guard: EnumerationGuard = DEFAULT_GUARD) -> tuple:
    """All ring combinations of ``gens.rows`` by closure under adding generators."""
    q, n = gens.ring.modulus, gens.n
    rows = [tuple(x % q for x in row) for row in gens.rows]
    zero = (0,) * n
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for s in frontier:
            for g in rows:
                t = tuple((a + b) % q for a, b in zip(s, g))
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        guard.check(len(seen))
        frontier = nxt
    return tuple(sorted(seen))


def enumerate_p_span(ring, n, seq, guard: EnumerationGuard = DEFAULT_GUARD):
    """Return ``(elements, collision)`` over all digit tuples in ``{0..p-1}^k``.

    ``collision`` is true iff two digit tuples give the same vector.
    """
    seq = list(seq)
    guard.check(ring.p ** len(seq))
    seen = set()
    collision = False
    for digits in itertools.product(range(ring.p), repeat=len(seq)):
        v = _combine(ring.modulus, digits, seq, n)
        if v in seen:
            collision = True
        seen.add(v)
    return tuple(sorted(seen)), collision


def ambient(ring, n, guard: EnumerationGuard = DEFAULT_GUARD):
    guard.check(ring.modulus**n)
    return itertools.product(range(ring.modulus), repeat=n)


def brute_dual(m_elements, ring, n, guard: EnumerationGuard = DEFAULT_GUARD) -> tuple:
    """Every vector of the ambient space orthogonal to all of ``m_elements``."""
    q = ring.modulus
    elems = list(m_elements)
    out = []
    for v in ambient(ring, n, guard):
        if all(sum(x * y for x, y in zip(u, v)) % q == 0 for u in elems):
            out.append(v)
    return tuple(out)


def brute_p_independent(ring, vectors, guard: EnumerationGuard = DEFAULT_GUARD):
    """``(True, None)`` or ``(False, witness)`` with the lexicographically first nonzero witness."""
    vectors = list(vectors)
    guard.check(ring.p ** len(vectors))
    if not vectors:
        return True, None
    n = len(vectors[0])
    zero = (0,) * n
    for digits in itertools.product(range(ring.p), repeat=len(vectors)):
        if any(digits) and _combine(ring.modulus, digits, vectors, n) == zero:
            return False, digits
    return True, None


def brute_representations(ring, vectors, v, coeffs=None, guard: EnumerationGuard = DEFAULT_GUARD) -> tuple:
    """All coefficient tuples (from ``coeffs``, default the whole ring) combining ``vectors`` to ``v``."""
    vectors = list(vectors)
    coeffs = range(ring.modulus) if coeffs is None else list(coeffs)
    guard.check(len(coeffs) ** len(vectors))
    n = len(v)
    target = tuple(x % ring.modulus for x in v)
    return tuple(c for c in itertools.product(coeffs, repeat=len(vectors))
                 if _combine(ring.modulus, c, vectors, n) == target)


def brute_sum(a_elements, b_elements, ring, guard: EnumerationGuard = DEFAULT_GUARD) -> tuple:
    guard.check(len(a_elements) * len(b_elements))
    q = ring.modulus
    return tuple(sorted({tuple((x + y) % q for x, y in zip(u, v)) for u in a_elements for v in b_elements}))


def brute_socle(m_elements, ring) -> tuple:
    return tuple(sorted(v for v in m_elements if all(ring.p * x % ring.modulus == 0 for x in v)))
