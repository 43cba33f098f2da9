"""Neat factorizations, neat-range shifts, clean decompositions of Z/c and the
two constructions linking ``(p, q)`` pairs with factorizations ``b + lam*c = v*u``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .edr import PQWitness
from .errors import (
    ConstructionFailed, NoSolution, NotCoprime, NotNeat, PreconditionViolated,
    WitnessNotFound,
)
from .rings import Element, Kind, RingDescriptor, enumerate_elements
from .ringcore import (
    all_solutions, bezout_certificate, coprime, exact_divide, is_unimodular, is_unit,
    same_ring,
)
from .search import describe_bound, scan


@dataclass(frozen=True)
class NeatWitness:
    a: Element
    b: Element
    c: Element
    r: Element
    s: Element

    def problems(self) -> list[str]:
        out = []
        if self.r * self.s != self.a:
            out.append("r*s != a")
        if not coprime(self.r, self.b):
            out.append("r, b not coprime")
        if not coprime(self.s, self.c):
            out.append("s, c not coprime")
        if not coprime(self.r, self.s):
            out.append("r, s not coprime")
        return out

    def verify(self) -> bool:
        return not self.problems()


def _split_off(a: Element, b: Element) -> tuple[Element, Element]:
    """Split ``a = r*s`` in a UFD: ``s`` collects the primes of ``a`` that divide ``b``.

    Equivalent to assigning each prime power of ``a`` to ``s`` when the prime
    divides ``b`` and to ``r`` otherwise, without factoring.
    """
    r, s = a, a.ring.one()
    while True:
        g = bezout_certificate(r, b).d
        if is_unit(g):
            return r, s
        r, s = exact_divide(r, g), s * g


def neat_witness(a: Element, b: Element, c: Element) -> NeatWitness:
    """``a = r*s`` with ``r`` coprime to ``b``, ``s`` coprime to ``c`` and ``r`` to ``s``."""
    ring = same_ring(a, b, c)
    if not coprime(b, c):
        raise NotCoprime(f"({b}, {c}) is not unimodular")
    if not a:
        raise NotNeat("0 is never neat")
    if ring.is_finite:
        for r in enumerate_elements(ring):
            if not coprime(r, b):
                continue
            for s in enumerate_elements(ring):
                if r * s == a and coprime(s, c) and coprime(r, s):
                    return NeatWitness(a, b, c, r, s)
        raise NotNeat(f"{a} has no factorization fitting ({b}, {c})")
    r, s = _split_off(a, b)
    w = NeatWitness(a, b, c, r, s)
    if w.problems():
        raise ConstructionFailed(f"prime splitting of {a}: {w.problems()}")
    return w


@lru_cache(maxsize=None)
def _neat_modular(ring: RingDescriptor, a: int) -> bool:
    n = ring.param
    # factor pairs of a, each pair (r, s) with gcd(r, s, n) = 1
    pairs = [(r, s) for r in range(n) for s in range(n)
             if r * s % n == a and math.gcd(math.gcd(r, s), n) == 1]
    for b in range(n):
        for c in range(n):
            if math.gcd(math.gcd(b, c), n) != 1:
                continue
            if not any(math.gcd(math.gcd(r, b), n) == 1 and math.gcd(math.gcd(s, c), n) == 1
                       for r, s in pairs):
                return False
    return True


def is_neat(a: Element) -> bool:
    """Neatness of a nonzero element; zero is never neat.

    Exhaustive over all coprime ``(b, c)`` in Z/n. In Z, GF(p)[x] and Z_(p)
    unique factorization makes every nonzero element neat (see ``_split_off``).
    """
    if not a:
        return False
    if a.ring.is_finite:
        return _neat_modular(a.ring, a.payload)
    return True


def neat_range1_shift(a: Element, b: Element, bound: int | None = None) -> Element:
    """Least ``t`` in scan order with ``a + b*t`` neat."""
    ring = same_ring(a, b)
    if not coprime(a, b):
        raise NotCoprime(f"({a}, {b}) is not unimodular")
    for t in scan(ring, bound):
        if is_neat(a + b * t):
            return t
    raise WitnessNotFound(f"no neat shift within {describe_bound(ring, bound)}")


# --------------------------------------------------------------------------
# clean quotients


@dataclass(frozen=True)
class CleanDecomposition:
    """In ``Z/modulus``: ``x == e + u`` with ``e`` idempotent and ``u`` a unit.

    ``e_proof`` is the idempotent ``s*v`` built from ``r*u' + s*v = 1``.
    """

    modulus: int
    c: Element
    x: int
    e: int
    u: int
    e_proof: int
    a: int
    notes: dict = field(default_factory=dict, compare=False)

    def problems(self) -> list[str]:
        m = self.modulus
        out = []
        if (self.e * self.e - self.e) % m:
            out.append("e is not idempotent")
        if math.gcd(self.u, m) != 1:
            out.append("u is not a unit")
        if (self.e + self.u - self.x) % m:
            out.append("x != e + u")
        ep = self.e_proof
        if (ep * ep - ep) % m:
            out.append("proof idempotent is not idempotent")
        if not _in_ideal(ep, self.a, m):
            out.append("proof idempotent not in a(R/cR)")
        if not _in_ideal(1 - ep, 1 - self.a, m):
            out.append("1 - proof idempotent not in (1-a)(R/cR)")
        return out

    def verify(self) -> bool:
        return not self.problems()


def _in_ideal(y: int, g: int, m: int) -> bool:
    return y % math.gcd(g, m) == 0


def idempotents(m: int) -> list[int]:
    return [e for e in range(m) if (e * e - e) % m == 0]


def clean_split(x: int, m: int) -> tuple[int, int] | None:
    """Least idempotent ``e`` of Z/m with ``x - e`` a unit."""
    for e in idempotents(m):
        if math.gcd((x - e) % m, m) == 1:
            return e, (x - e) % m
    return None


def quotient_modulus(c: Element) -> int:
    """``R/cR`` is ``Z/m``; returns m for R = Z or Z/n."""
    ring = c.ring
    if ring.kind is Kind.INTEGERS:
        return abs(c.payload)
    if ring.kind is Kind.MODULAR:
        return math.gcd(c.payload, ring.param)
    raise PreconditionViolated(f"clean quotients are implemented for Z and Z/n, not {ring}")


def clean_decompose(r: Element, s: Element, a: Element, x: Element) -> CleanDecomposition:
    """Clean decomposition of ``x`` in ``R/cR`` with ``c = r*s`` a neat factorization.

    Requires ``r R + a R = R``, ``s R + (1-a) R = R`` and ``r R + s R = R``.
    """
    ring = same_ring(r, s, a, x)
    if ring.kind not in (Kind.INTEGERS, Kind.MODULAR):
        raise PreconditionViolated(f"clean quotients are implemented for Z and Z/n, not {ring}")
    one = ring.one()
    if not (coprime(r, a) and coprime(s, one - a) and coprime(r, s)):
        raise PreconditionViolated("need rR + aR = R, sR + (1-a)R = R and rR + sR = R")
    c = r * s
    m = quotient_modulus(c)
    if m < 2:
        raise PreconditionViolated(f"R/({c}) is the zero ring or infinite")
    cert = bezout_certificate(r, s)  # r*u + s*v == 1
    v = cert.q
    e_proof = (s * v).payload % m
    xm = x.payload % m
    split = clean_split(xm, m)
    if split is None:
        raise ConstructionFailed(f"{xm} in Z/{m} is not idempotent + unit")
    e, u = split
    out = CleanDecomposition(m, c, xm, e, u, e_proof, a.payload % m,
                             {"u": str(cert.p), "v": str(v)})
    if out.problems():
        raise ConstructionFailed(f"clean decomposition failed: {out.problems()}")
    return out


# --------------------------------------------------------------------------
# (p, q) pairs <-> factorizations b + lam*c = v*u


@dataclass(frozen=True)
class FactorShift:
    """``b + lam*c == v*u`` with ``u`` coprime to ``a`` and ``v`` coprime to ``c``.

    ``uv_coprime`` reports whether the construction also gave ``uR + vR = R``;
    a ``False`` is surfaced in ``diagnostics`` as ``RemarkViolation``.
    """

    lam: Element
    u: Element
    v: Element
    uv_coprime: bool
    diagnostics: tuple[str, ...] = ()


def factor_shift_problems(a, b, c, lam, u, v) -> list[str]:
    out = []
    if b + lam * c != v * u:
        out.append("b + lam*c != v*u")
    if not coprime(u, a):
        out.append("u, a not coprime")
    if not coprime(v, c):
        out.append("v, c not coprime")
    return out


def prop5_forward(a: Element, b: Element, c: Element, p: Element, q: Element) -> FactorShift:
    """From ``(p*a) R + (p*b + q*c) R = R`` build ``b + lam*c = v*u``.

    ``u = p*b + q*c``; ``p`` is coprime to ``c``, so ``v*p + j*c = 1`` for some
    ``v, j``, and then ``v*u - b`` is a multiple of ``c``.
    """
    ring = same_ring(a, b, c, p, q)
    if not is_unimodular(a, b, c):
        raise PreconditionViolated(f"({a}, {b}, {c}) is not unimodular")
    if not PQWitness(p, q).certifies(a, b, c):
        raise PreconditionViolated(f"({p}, {q}) is not a (p, q) pair for ({a}, {b}, {c})")
    u = p * b + q * c
    cert = bezout_certificate(p, c)
    if not cert.is_unit_gcd:
        raise ConstructionFailed(f"{p} and {c} are not coprime")
    v, j = cert.p, cert.q
    try:
        candidates = all_solutions(c, v * u - b)
    except NoSolution:
        raise ConstructionFailed(f"{c} does not divide {v * u - b}") from None
    # domains: unique solution, which equals v*q - j*b
    lam = next((x for x in candidates if not factor_shift_problems(a, b, c, x, u, v)), None)
    if lam is None:
        raise ConstructionFailed("no solution of c*lam = v*u - b meets the postconditions")
    uv = coprime(u, v)
    diags = () if uv else (f"RemarkViolation: u={u} and v={v} are not coprime",)
    return FactorShift(lam, u, v, uv, diags)


def prop5_backward(a: Element, b: Element, c: Element, lam: Element, u: Element, v: Element
                   ) -> PQWitness:
    """From ``b + lam*c = v*u`` build ``(p, q)`` with ``(p*a) R + (p*b + q*c) R = R``.

    ``p*v + j*c = 1`` gives ``u = p*b + (p*lam + j*u)*c``. The pair
    ``(p, p*lam + j*u)`` is then divided by its gcd.
    """
    same_ring(a, b, c, lam, u, v)
    problems = factor_shift_problems(a, b, c, lam, u, v)
    if problems:
        raise PreconditionViolated("; ".join(problems))
    cert = bezout_certificate(v, c)
    p, j = cert.p, cert.q
    q = p * lam + j * u
    pq = bezout_certificate(p, q)
    w = PQWitness(pq.a0, pq.b0)
    if not pq.d or not w.certifies(a, b, c):
        raise ConstructionFailed(f"construction from (p, j) = ({p}, {j}) did not certify")
    return w
