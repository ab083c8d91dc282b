"""Dual submodules, sums, intersections and the dimension identities."""
from __future__ import annotations

from dataclasses import dataclass, field

from .module import Submodule, _check_ambient, _check_length


def inner_product(ring, u, v) -> int:
    """``sum(x_i * y_i) mod p**r``."""
    if len(u) != len(v):
        _check_length(len(u), v)
    return sum(x * y for x, y in zip(u, v)) % ring.modulus


def _dual_generators(m: Submodule):
    """Generators of the orthogonal complement, in original coordinates.

    In permuted coordinates a level-``i`` row is ``p**i * h`` where ``h`` is
    ``1`` in its own pivot column and ``0`` in every other pivot column of
    level ``<= i``.  ``x`` is orthogonal to it iff ``x[pivot] == -sum(h_j x_j)
    + p**(r-i) * y`` for a free ``y``.  Every non-pivot coordinate and every
    ``y`` of level ``>= 1`` is a free parameter; setting one parameter to 1
    and back-substituting from the last row up gives one generator.
    """
    ring, n, sf = m.ring, m.n, m.sf
    p, q, r = ring.p, ring.modulus, ring.r
    levels = sf.levels
    npiv = len(sf.rows)
    quotients = [[a // p**lv for a in row] for row, lv in zip(sf.rows, levels)]

    def solution(seed):
        x = list(seed)
        for t in range(npiv - 1, -1, -1):
            h = quotients[t]
            s = sum(h[j] * x[j] for j in range(t + 1, n))
            x[t] = (x[t] - s) % q
        return x

    seeds = []
    for j in range(npiv, n):
        seed = [0] * n
        seed[j] = 1
        seeds.append(seed)
    for t, lv in enumerate(levels):
        if lv >= 1:
            seed = [0] * n
            seed[t] = p ** (r - lv)
            seeds.append(seed)

    out = []
    for seed in seeds:
        x = solution(seed)
        orig = [0] * n
        for j, a in enumerate(x):
            orig[sf.permutation[j]] = a
        out.append(orig)
    return out


def dual(m: Submodule) -> Submodule:
    """The submodule of all vectors orthogonal to every element of ``m``."""
    return Submodule.span(m.ring, m.n, _dual_generators(m))


def sum_modules(a: Submodule, b: Submodule) -> Submodule:
    _check_ambient(a, b)
    return Submodule.span(a.ring, a.n, a.generators + b.generators)


def intersect(a: Submodule, b: Submodule) -> Submodule:
    """``a ∩ b`` computed as the dual of ``dual(a) + dual(b)``."""
    _check_ambient(a, b)
    return dual(sum_modules(dual(a), dual(b)))


@dataclass
class IdentityReport:
    """Outcome of :func:`verify_dimension_identities`; ``checks`` maps a label to ``(lhs, rhs, ok)``."""

    module: Submodule
    dual: Submodule
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(ok for _, _, ok in self.checks.values())

    def lines(self):
        for label, (lhs, rhs, ok) in self.checks.items():
            yield f"{'ok  ' if ok else 'FAIL'} {label}: {lhs} == {rhs}"


def verify_dimension_identities(m: Submodule) -> IdentityReport:
    """Check cardinality, p-dimension and parameter relations between ``m`` and its dual."""
    ring, n = m.ring, m.n
    r = ring.r
    d = dual(m)
    rep = IdentityReport(m, d)

    def check(label, lhs, rhs):
        rep.checks[label] = (lhs, rhs, lhs == rhs)

    check("|M| * |M^perp| = p^(rn)", m.cardinality * d.cardinality, ring.p ** (r * n))
    check("pdim(M) + pdim(M^perp) = rn", m.p_dimension + d.p_dimension, r * n)
    k, kd = m.k, d.k
    check("k(M^perp) = n - k_0(M)", sum(kd), n - k[0])
    check("k_0(M^perp) = n - k(M)", kd[0], n - sum(k))
    for i in range(1, r):
        check(f"k_{i}(M^perp) = k_{r - i}(M)", kd[i], k[r - i])
    check("(M^perp)^perp = M", dual(d) == m, True)
    return rep
