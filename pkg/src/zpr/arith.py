"""Scalar arithmetic in the residue ring Z/p^r.

Scalars are plain Python ints kept in the canonical range ``[0, p**r)``;
digits are ints in ``[0, p)``.  A :class:`RingParams` value carries the
prime, the exponent and the derived constants.
"""
from __future__ import annotations

from dataclasses import dataclass

import gmpy2

from .errors import BadExponent, NotAUnit, NotPrime, RingOverflow

MAX_MODULUS = 2**63


@dataclass(frozen=True)
class RingParams:
    """The ring Z/p^r.  Build instances with :func:`make_ring`."""

    p: int
    r: int

    @property
    def modulus(self) -> int:
        return self.p**self.r

    @property
    def gamma(self) -> int:
        # the uniformizer of the chain ring: its maximal ideal is (p)
        return self.p

    @property
    def residual_field_size(self) -> int:
        return self.p

    def reduce(self, a: int) -> int:
        return a % self.modulus

    def __str__(self):
        return f"Z/{self.p}^{self.r}"


def make_ring(p: int, r: int) -> RingParams:
    """Validate ``(p, r)`` and return the ring Z/p^r.

    >>> make_ring(2, 3).modulus
    8
    """
    p, r = int(p), int(r)
    if p < 2 or not gmpy2.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if r < 1:
        raise BadExponent(f"exponent must be >= 1, got {r}")
    if p**r >= MAX_MODULUS:
        raise RingOverflow(f"{p}^{r} does not fit below 2^63")
    return RingParams(p, r)


def p_adic_digits(a: int, ring: RingParams) -> tuple[int, ...]:
    """Base-p digits ``(d_0, ..., d_{r-1})`` of the residue ``a``, least significant first."""
    a = ring.reduce(a)
    digits = []
    for _ in range(ring.r):
        a, d = divmod(a, ring.p)
        digits.append(d)
    return tuple(digits)


def recompose(digits, ring: RingParams) -> int:
    """Inverse of :func:`p_adic_digits`."""
    value = 0
    for d in reversed(digits):
        value = value * ring.p + d
    return ring.reduce(value)


def valuation(a: int, ring: RingParams) -> int:
    """Largest ``i <= r`` with ``p**i`` dividing ``a``; zero has valuation ``r``."""
    a = ring.reduce(a)
    if a == 0:
        return ring.r
    v = 0
    while a % ring.p == 0:
        a //= ring.p
        v += 1
    return v


def unit_inverse(a: int, ring: RingParams) -> int:
    a = ring.reduce(a)
    if a % ring.p == 0:
        raise NotAUnit(f"{a} is not a unit in {ring}")
    return pow(a, -1, ring.modulus)
