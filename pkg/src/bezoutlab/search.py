"""Deterministic scan orders and search bounds shared by the witness searches."""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .rings import Element, Kind, RingDescriptor, candidates

INTEGER_BOUND = 10_000
POLY_DEGREE_BOUND = 6
# Tuple searches over infinite rings stop once the summed scan index exceeds this.
TUPLE_INDEX_BOUND = 200
POLY_TUPLE_DEGREE_BOUND = 2


def default_bound(ring: RingDescriptor) -> int:
    if ring.kind is Kind.POLY_OVER_PRIME_FIELD:
        return POLY_DEGREE_BOUND
    return INTEGER_BOUND


def describe_bound(ring: RingDescriptor, bound: int | None = None) -> str:
    if ring.is_finite:
        return f"all {ring.param} elements of {ring}"
    if bound is None:
        bound = default_bound(ring)
    if ring.kind is Kind.POLY_OVER_PRIME_FIELD:
        return f"all polynomials of degree <= {bound}"
    return f"integers with |x| <= {bound}"


def scan(ring: RingDescriptor, bound: int | None = None) -> Iterator[Element]:
    return candidates(ring, bound)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` nonnegative ints summing to ``total``, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def scan_tuples(ring: RingDescriptor, k: int, bound: int | None = None
                ) -> Iterator[tuple[Element, ...]]:
    """All k-tuples in scan order.

    Finite rings: lexicographic product of the element order. Infinite rings:
    diagonal order (by the sum of the per-coordinate scan indices) so that no
    coordinate is starved.
    """
    if ring.is_finite:
        elems = list(candidates(ring))
        yield from itertools.product(elems, repeat=k)
        return
    if ring.kind is Kind.POLY_OVER_PRIME_FIELD:
        pool: Sequence[Element] = list(candidates(ring, POLY_TUPLE_DEGREE_BOUND if bound is None else bound))
        max_index = len(pool) - 1
    else:
        max_index = TUPLE_INDEX_BOUND if bound is None else bound
        pool = list(candidates(ring, (max_index + 1) // 2 + 1))
    for total in range(max_index + 1):
        for idx in _compositions(total, k):
            if max(idx) < len(pool):
                yield tuple(pool[i] for i in idx)


def describe_tuple_bound(ring: RingDescriptor, k: int, bound: int | None = None) -> str:
    if ring.is_finite:
        return f"all {ring.param}^{k} tuples over {ring}"
    if ring.kind is Kind.POLY_OVER_PRIME_FIELD:
        d = POLY_TUPLE_DEGREE_BOUND if bound is None else bound
        return f"{k}-tuples of polynomials of degree <= {d} (diagonal order)"
    b = TUPLE_INDEX_BOUND if bound is None else bound
    return f"{k}-tuples with scan-index sum <= {b} (diagonal order)"
