"""Witness searches for stable range 1, square stable range 1 and stable range 2."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NoSolution, NotCoprime, WitnessNotFound
from .rings import Element, Kind, RingDescriptor
from .ringcore import is_unimodular, is_unit, same_ring, solve_linear
from .search import describe_bound, describe_tuple_bound, scan, scan_tuples


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of a bounded (or, in finite rings, exhaustive) witness search.

    ``exhaustive`` is true when a negative answer is a proof: the whole ring
    was scanned, or ``nonexistence`` lists, for every unit ``u``, that the
    defining linear equation has no solution.
    """

    found: bool
    witness: Element | None
    searched_bound: str
    exhaustive: bool = False
    nonexistence: tuple[tuple[Element, str], ...] = field(default=())


def require_unimodular(*elements: Element):
    if not is_unimodular(*elements):
        names = ", ".join(map(str, elements))
        raise NotCoprime(f"({names}) do not generate the unit ideal")


def finite_units(ring: RingDescriptor) -> list[Element] | None:
    """The unit group when it is finite and cheap to list, else None."""
    if ring.kind is Kind.INTEGERS:
        return [ring.of(1), ring.of(-1)]
    if ring.kind is Kind.POLY_OVER_PRIME_FIELD:
        return [ring.of(k) for k in range(1, ring.param)]
    if ring.is_finite:
        return [ring.of(k) for k in range(ring.param) if is_unit(ring.of(k))]
    return None


def _search(ring, predicate, bound) -> tuple[Element | None, str]:
    for x in scan(ring, bound):
        if predicate(x):
            return x, describe_bound(ring, bound)
    return None, describe_bound(ring, bound)


def sr1_witness(a: Element, b: Element, bound: int | None = None) -> WitnessReport:
    """Least ``y`` in scan order with ``a + b*y`` a unit."""
    ring = same_ring(a, b)
    require_unimodular(a, b)
    y, desc = _search(ring, lambda y: is_unit(a + b * y), bound)
    if y is not None:
        return WitnessReport(True, y, desc, True)
    proof = _nonexistence(ring, lambda u: solve_linear(b, u - a))
    return WitnessReport(False, None, desc, ring.is_finite or proof is not None, proof or ())


def ssr1_witness(a: Element, b: Element, bound: int | None = None) -> WitnessReport:
    """Least ``x`` in scan order with ``a^2 + b*x`` a unit."""
    ring = same_ring(a, b)
    require_unimodular(a, b)
    a2 = a * a
    x, desc = _search(ring, lambda x: is_unit(a2 + b * x), bound)
    if x is not None:
        return WitnessReport(True, x, desc, True)
    proof = _nonexistence(ring, lambda u: solve_linear(b, u - a2))
    return WitnessReport(False, None, desc, ring.is_finite or proof is not None, proof or ())


def _nonexistence(ring, solve) -> tuple[tuple[Element, str], ...] | None:
    """For rings with a finite unit group: show ``b*x = u - a^2`` is unsolvable for every unit u."""
    units = finite_units(ring)
    if units is None:
        return None
    lines = []
    for u in units:
        try:
            solve(u)
        except NoSolution:
            lines.append((u, "NoSolution"))
        else:
            return None
    return tuple(lines)


def ssr1_nonexistence_proof(a: Element, b: Element) -> tuple[tuple[Element, str], ...] | None:
    """Exact proof that no ``x`` makes ``a^2 + b*x`` a unit, or None if one exists
    (or the unit group is infinite)."""
    ring = same_ring(a, b)
    a2 = a * a
    return _nonexistence(ring, lambda u: solve_linear(b, u - a2))


def sr2_reduce(*elements: Element, bound: int | None = None) -> tuple[Element, ...]:
    """Find ``b_1..b_{r-1}`` with ``(a_1 + a_r b_1, ..., a_{r-1} + a_r b_{r-1})`` unimodular."""
    if len(elements) < 3:
        raise ValueError("sr2_reduce needs at least three elements")
    ring = same_ring(*elements)
    require_unimodular(*elements)
    head, last = elements[:-1], elements[-1]
    if is_unimodular(*head):
        return tuple(ring.zero() for _ in head)
    for bs in scan_tuples(ring, len(head), bound):
        if is_unimodular(*(x + last * y for x, y in zip(head, bs))):
            return bs
    raise WitnessNotFound(
        f"no sr2 reduction within {describe_tuple_bound(ring, len(head), bound)}; "
        "internal bound too small")


def sr2_check(elements, bs) -> bool:
    head, last = elements[:-1], elements[-1]
    return len(bs) == len(head) and is_unimodular(*(x + last * y for x, y in zip(head, bs)))
