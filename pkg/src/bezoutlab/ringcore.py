"""Bezout-ring operations written against the element interface.

Every routine here works for all four shipped rings. Results that carry
identities (gcd certificates) are plain dataclasses with a ``verify`` method
that replays the identities by ring multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ConstructionFailed, NoSolution, NotAUnit, RingMismatch
from .rings import Element


def same_ring(*elements: Element):
    ring = elements[0].ring
    for e in elements[1:]:
        if e.ring != ring:
            raise RingMismatch(f"{ring} vs {e.ring}")
    return ring


def is_unit(a: Element) -> bool:
    return a.ring.backend.is_unit(a.payload)


def unit_inverse(a: Element) -> Element:
    if not is_unit(a):
        raise NotAUnit(f"{a} is not a unit in {a.ring}")
    return Element(a.ring, a.ring.backend.inverse(a.payload))


def normalize_associate(a: Element) -> tuple[Element, Element]:
    """Return ``(canonical, unit)`` with ``canonical == unit * a``."""
    canon, unit = a.ring.backend.normalize(a.payload)
    return Element(a.ring, canon), Element(a.ring, unit)


def canonical(a: Element) -> Element:
    return normalize_associate(a)[0]


def solve_linear(c: Element, r: Element) -> Element:
    """Least ``x`` (canonical order) with ``c * x == r``; raises NoSolution."""
    ring = same_ring(c, r)
    x = ring.backend.divide(r.payload, c.payload)
    if x is None:
        raise NoSolution(f"{c} * x = {r} has no solution in {ring}")
    return Element(ring, x)


def exact_divide(a: Element, d: Element) -> Element:
    """Some ``q`` with ``d * q == a`` (the least one); raises NoSolution."""
    return solve_linear(d, a)


def divides(d: Element, a: Element) -> bool:
    same_ring(d, a)
    return a.ring.backend.divide(a.payload, d.payload) is not None


def all_solutions(c: Element, r: Element) -> list[Element]:
    """Every solution of ``c * x == r`` in a finite ring, least first.

    For an infinite ring this is only defined when ``c != 0`` (unique solution).
    """
    x0 = solve_linear(c, r)
    ring = c.ring
    if not c:
        if ring.is_finite:
            from .rings import enumerate_elements
            return enumerate_elements(ring)
        return [x0]
    sols = {ring.backend.add(x0.payload, z) for z in ring.backend.annihilator(c.payload)}
    return sorted((Element(ring, s) for s in sols), key=Element.sort_key)


def ideal_generator(elements: Sequence[Element]) -> Element:
    """A (not normalized) generator of the ideal spanned by ``elements``."""
    ring = same_ring(*elements)
    back = ring.backend
    g = back.zero
    for e in elements:
        g = back.xgcd(g, e.payload)[0]
    return Element(ring, g)


def is_unimodular(*elements: Element) -> bool:
    """True iff the elements generate the unit ideal."""
    return is_unit(ideal_generator(elements))


def coprime(a: Element, b: Element) -> bool:
    return is_unimodular(a, b)


def divide_out(elements: Sequence[Element], d: Element) -> list[Element]:
    """Quotients ``y_i`` with ``d * y_i == x_i`` that generate the unit ideal.

    ``d`` must be a gcd of ``elements``. Quotients are not unique in rings with
    zero divisors; the first one is shifted by annihilators of ``d`` until the
    tuple is unimodular. When ``d`` is zero every quotient is zero.
    """
    ring = same_ring(d, *elements)
    if not d:
        if any(elements):
            raise ConstructionFailed(f"0 is not a gcd of {list(map(str, elements))}")
        return [ring.zero() for _ in elements]
    ys = [exact_divide(x, d) for x in elements]
    if is_unimodular(*ys):
        return ys
    for z in ring.backend.annihilator(d.payload):
        head = ys[0] + Element(ring, z)
        if is_unimodular(head, *ys[1:]):
            return [head] + ys[1:]
    raise ConstructionFailed(f"no unimodular quotients of {list(map(str, elements))} by {d}")


@dataclass(frozen=True)
class BezoutCertificate:
    """``p*a + q*b == d``, ``a == d*a0``, ``b == d*b0`` and ``p*a0 + q*b0 == 1``.

    The last identity witnesses ``a0 R + b0 R = R``; it is waived for
    ``a == b == 0`` where everything is zero.
    """

    a: Element
    b: Element
    d: Element
    p: Element
    q: Element
    a0: Element
    b0: Element

    def problems(self) -> list[str]:
        out = []
        if self.p * self.a + self.q * self.b != self.d:
            out.append("p*a + q*b != d")
        if self.d * self.a0 != self.a:
            out.append("d*a0 != a")
        if self.d * self.b0 != self.b:
            out.append("d*b0 != b")
        if canonical(self.d) != self.d:
            out.append("d is not the canonical associate")
        if self.d:
            if self.p * self.a0 + self.q * self.b0 != 1:
                out.append("p*a0 + q*b0 != 1")
        elif any((self.a, self.b, self.p, self.q, self.a0, self.b0)):
            out.append("gcd(0, 0) certificate must be all zero")
        return out

    def verify(self) -> bool:
        return not self.problems()

    @property
    def is_unit_gcd(self) -> bool:
        return self.d == 1


def bezout_certificate(a: Element, b: Element) -> BezoutCertificate:
    ring = same_ring(a, b)
    zero = ring.zero()
    if not a and not b:
        return BezoutCertificate(a, b, zero, zero, zero, zero, zero)
    if is_unit(a):
        return BezoutCertificate(a, b, ring.one(), unit_inverse(a), zero, a, b)
    back = ring.backend
    g, s, t = back.xgcd(a.payload, b.payload)
    d, w = normalize_associate(Element(ring, g))
    p, q = w * Element(ring, s), w * Element(ring, t)
    a0, b0 = divide_out([a, b], d)
    if p * a0 + q * b0 != 1:
        # only with zero divisors: take the cofactors of the coprime quotients
        inner = bezout_certificate(a0, b0)
        p, q = inner.p, inner.q
    cert = BezoutCertificate(a, b, d, p, q, a0, b0)
    problems = cert.problems()
    if problems:
        raise ConstructionFailed(f"bezout({a}, {b}): {problems}")
    return cert


def gcd(*elements: Element) -> Element:
    """Canonical gcd of any number of elements."""
    d = elements[0].ring.zero()
    for e in elements:
        d = bezout_certificate(d, e).d
    return d


def associates(a: Element, b: Element) -> bool:
    return canonical(a) == canonical(b)


def product(elements: Iterable[Element], ring) -> Element:
    out = ring.one()
    for e in elements:
        out = out * e
    return out
