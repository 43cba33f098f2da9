"""Random elements for the property tests (fixed seeds at call sites)."""

from __future__ import annotations

import random

from bezoutlab.rings import Element, Kind, RingDescriptor


def random_element(ring: RingDescriptor, rng: random.Random) -> Element:
    if ring.kind is Kind.INTEGERS:
        return ring.of(rng.randint(-60, 60))
    if ring.kind is Kind.MODULAR:
        return ring.of(rng.randrange(ring.param))
    if ring.kind is Kind.POLY_OVER_PRIME_FIELD:
        x = ring.of("x")
        out = ring.zero()
        for k in range(rng.randint(0, 3) + 1):
            out = out + ring.of(rng.randrange(ring.param)) * x**k
        return out
    p = ring.param
    den = rng.choice([d for d in range(1, 12) if d % p])
    return ring.of(f"{rng.randint(-40, 40)}/{den}")


def random_elements(ring, rng, k):
    return [random_element(ring, rng) for _ in range(k)]
