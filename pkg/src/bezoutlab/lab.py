"""Exhaustive sweeps over Z/n.

The existence checks here work on plain residues with ``math.gcd`` and never
call the constructive modules, so they serve as ground truth for them. The
theorem sweeps additionally run the constructive routines on every instance
and replay their certificates.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BezoutLabError, BoundExceeded, InfiniteRing
from .rings import RingDescriptor

CLASSIFY_BOUND = 30
THEOREM_BOUNDS = {
    "THM9_2": 30,
    "THM10": 30,
    "THM8": 30,
    "PROP5": 12,
    "PROP6": 12,
    "THM13": 12,
}
THEOREMS = tuple(THEOREM_BOUNDS)


def _modulus(ring: RingDescriptor, bound: int) -> int:
    if not ring.is_finite:
        raise InfiniteRing(f"{ring} is infinite; the lab only sweeps Z/n")
    if ring.param > bound:
        raise BoundExceeded(f"n = {ring.param} exceeds the sweep bound {bound}")
    return ring.param


class _Tables:
    """Unit and coprimality tables for Z/n."""

    def __init__(self, n: int):
        self.n = n
        self.unit = [math.gcd(x, n) == 1 for x in range(n)]
        self.cop = [[math.gcd(math.gcd(a, b), n) == 1 for b in range(n)] for a in range(n)]

    def cop3(self, a, b, c) -> bool:
        return math.gcd(math.gcd(math.gcd(a, b), c), self.n) == 1

    def pairs(self):
        n = self.n
        return [(a, b) for a in range(n) for b in range(n) if self.cop[a][b]]


@lru_cache(maxsize=None)
def tables(n: int) -> _Tables:
    return _Tables(n)


@lru_cache(maxsize=None)
def neat_table(n: int) -> tuple[bool, ...]:
    """Neatness of each residue of Z/n by brute force over (b, c) and r*s = a."""
    T = tables(n)
    out = [False]
    for a in range(1, n):
        facts = [(r, s) for r in range(n) for s in range(n)
                 if r * s % n == a and T.cop[r][s]]
        ok = all(any(T.cop[r][b] and T.cop[s][c] for r, s in facts)
                 for b, c in T.pairs())
        out.append(ok)
    return tuple(out)


def sr1_exists(T: _Tables, a: int, b: int) -> bool:
    return any(T.unit[(a + b * y) % T.n] for y in range(T.n))


def ssr1_exists(T: _Tables, a: int, b: int) -> bool:
    return any(T.unit[(a * a + b * x) % T.n] for x in range(T.n))


@lru_cache(maxsize=None)
def _toeplitz_tops(n: int) -> tuple[tuple[int, int], ...]:
    """First rows (x, y) of invertible Toeplitz matrices [[x, y], [z, x]]."""
    T = tables(n)
    return tuple((x, y) for x in range(n) for y in range(n)
                 if any(T.unit[(x * x - y * z) % n] for z in range(n)))


def toeplitz_reducible(n: int, a: int, b: int) -> bool:
    """Some invertible Toeplitz T has (a, b) @ T = (d, 0)."""
    return any((a * y + b * x) % n == 0 for x, y in _toeplitz_tops(n))


def neat_shift_exists(n: int, a: int, b: int) -> bool:
    neat = neat_table(n)
    return any(neat[(a + b * t) % n] for t in range(n))


@dataclass
class RingClassification:
    ring: RingDescriptor
    sr1: bool
    ssr1: bool
    toeplitz_ring: bool
    neat_range_1: bool
    witness_counterexamples: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "sr1": self.sr1,
            "ssr1": self.ssr1,
            "toeplitz_ring": self.toeplitz_ring,
            "neat_range_1": self.neat_range_1,
            "witness_counterexamples": self.witness_counterexamples,
        }


def classify(ring: RingDescriptor, bound: int = CLASSIFY_BOUND) -> RingClassification:
    n = _modulus(ring, bound)
    T = tables(n)
    bad = []
    flags = {"sr1": True, "ssr1": True, "toeplitz_ring": True, "neat_range_1": True}
    for a, b in T.pairs():
        for name, test in (("sr1", sr1_exists), ("ssr1", ssr1_exists)):
            if not test(T, a, b):
                flags[name] = False
                bad.append({"property": name, "input": [str(a), str(b)],
                            "reason": "no witness in the whole ring"})
        if not neat_shift_exists(n, a, b):
            flags["neat_range_1"] = False
            bad.append({"property": "neat_range_1", "input": [str(a), str(b)],
                        "reason": "no t makes a + b*t neat"})
    for a, b in itertools.product(range(n), repeat=2):
        if not toeplitz_reducible(n, a, b):
            flags["toeplitz_ring"] = False
            bad.append({"property": "toeplitz_ring", "input": [str(a), str(b)],
                        "reason": "no invertible Toeplitz T with (a, b) T = (d, 0)"})
    return RingClassification(ring, witness_counterexamples=bad, **flags)


# --------------------------------------------------------------------------
# theorem sweeps


@dataclass
class TheoremReport:
    ring: RingDescriptor
    theorem: str
    instances_checked: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, instance, reason: str) -> None:
        self.failures.append({"instance": [str(x) for x in instance], "reason": reason})

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "theorem": self.theorem,
            "instances_checked": self.instances_checked,
            "failures": self.failures,
            "passed": self.passed,
            "notes": self.notes,
        }


def verify_theorem(ring: RingDescriptor, theorem_id: str, bound: int | None = None,
                   samples: int | None = None, seed: int = 0) -> TheoremReport:
    """Sweep one theorem over Z/n.

    ``samples`` (THM13 only) replaces the exhaustive sweep over all 2x2
    matrices by that many seeded-random matrices.
    """
    if theorem_id not in THEOREM_BOUNDS:
        raise ValueError(f"unknown theorem {theorem_id!r}; choose from {', '.join(THEOREMS)}")
    n = _modulus(ring, THEOREM_BOUNDS[theorem_id] if bound is None else bound)
    report = TheoremReport(ring, theorem_id)
    sweep = _SWEEPS[theorem_id]
    if theorem_id == "THM13":
        sweep(ring, n, report, samples, seed)
    else:
        sweep(ring, n, report)
    return report


def _sweep_thm9_2(ring, n, report):
    from .toeplitz import toeplitz_row_reduce

    cls = classify(ring, bound=n)
    report.notes = {"ssr1": cls.ssr1, "toeplitz_ring": cls.toeplitz_ring}
    if cls.ssr1 != cls.toeplitz_ring:
        report.fail([ring], f"ssr1={cls.ssr1} but toeplitz_ring={cls.toeplitz_ring}")
    for a, b in itertools.product(range(n), repeat=2):
        report.instances_checked += 1
        x, y = ring.of(a), ring.of(b)
        try:
            t, d = toeplitz_row_reduce(x, y)
        except BezoutLabError as exc:
            report.fail([a, b], f"{exc.code}: {exc}")
            continue
        m = t.matrix()
        if not t.is_invertible() or x * m[0, 0] + y * m[1, 0] != d or x * m[0, 1] + y * m[1, 1]:
            report.fail([a, b], "(a, b) T != (d, 0) or T not invertible")


def _sweep_thm10(ring, n, report):
    from .toeplitz import toeplitz_complete

    T = tables(n)
    for a, b in T.pairs():
        report.instances_checked += 1
        if not ssr1_exists(T, a, (-b) % n):
            report.fail([a, b], "no completion exists")
            continue
        try:
            tm = toeplitz_complete(ring.of(a), ring.of(b))
        except BezoutLabError as exc:
            report.fail([a, b], f"{exc.code}: {exc}")
            continue
        if (tm.a.payload, tm.b.payload) != (a, b) or not T.unit[tm.det.payload]:
            report.fail([a, b], "first row changed or determinant not a unit")


def _clean_quotient(m: int) -> bool:
    idem = [e for e in range(m) if (e * e - e) % m == 0]
    return all(any(math.gcd((x - e) % m, m) == 1 for e in idem) for x in range(m))


def _sweep_thm8(ring, n, report):
    from .neat_clean import clean_decompose

    T = tables(n)
    neat = neat_table(n)
    for c in range(1, n):
        if not neat[c]:
            continue
        m = math.gcd(c, n)
        if m == 1:
            report.instances_checked += 1  # zero quotient ring: trivially clean
            continue
        if not _clean_quotient(m):
            report.fail([c], f"Z/{m} is not clean")
        for a in range(n):
            report.instances_checked += 1
            b2 = (1 - a) % n
            fact = next(((r, s) for r in range(n) for s in range(n)
                         if r * s % n == c and T.cop[r][a] and T.cop[s][b2] and T.cop[r][s]),
                        None)
            if fact is None:
                report.fail([c, a], "neat element without a factorization for (a, 1-a)")
                continue
            r, s = fact
            try:
                dec = clean_decompose(ring.of(r), ring.of(s), ring.of(a), ring.of(a))
            except BezoutLabError as exc:
                report.fail([c, a], f"{exc.code}: {exc}")
                continue
            if dec.modulus != m or not dec.verify():
                report.fail([c, a], f"bad decomposition: {dec.problems()}")


def _prop5_products(n: int) -> list[list[frozenset]]:
    """prods[a][c] = {v*u : u coprime to a, v coprime to c}."""
    T = tables(n)
    out = []
    for a in range(n):
        us = [u for u in range(n) if T.cop[u][a]]
        row = []
        for c in range(n):
            vs = [v for v in range(n) if T.cop[v][c]]
            row.append(frozenset(v * u % n for v in vs for u in us))
        out.append(row)
    return out


def _sweep_prop5(ring, n, report):
    from .edr import find_pq
    from .neat_clean import factor_shift_problems, prop5_backward, prop5_forward

    T = tables(n)
    prods = _prop5_products(n)
    remark = 0
    for a, b, c in itertools.product(range(n), repeat=3):
        if not T.cop3(a, b, c):
            continue
        report.instances_checked += 1
        cond1 = any(T.cop[p * a % n][(p * b + q * c) % n]
                    for q in range(n) for p in range(n))
        cond2 = any((b + lam * c) % n in prods[a][c] for lam in range(n))
        if cond1 != cond2:
            report.fail([a, b, c], f"condition 1) {cond1} but condition 2) {cond2}")
            continue
        if not cond1:
            continue
        A, B, C = ring.of(a), ring.of(b), ring.of(c)
        try:
            pq = find_pq(A, B, C)
            fwd = prop5_forward(A, B, C, pq.p, pq.q)
            probs = factor_shift_problems(A, B, C, fwd.lam, fwd.u, fwd.v)
            if probs:
                report.fail([a, b, c], "; ".join(probs))
                continue
            remark += not fwd.uv_coprime
            back = prop5_backward(A, B, C, fwd.lam, fwd.u, fwd.v)
            if not back.certifies(A, B, C):
                report.fail([a, b, c], "round trip (p, q) does not certify")
        except BezoutLabError as exc:
            report.fail([a, b, c], f"{exc.code}: {exc}")
    report.notes = {"remark_uv_not_coprime": remark}


def _sweep_prop6(ring, n, report):
    T = tables(n)
    prods = _prop5_products(n)  # prods[t][z]: v coprime to z, u coprime to t
    pairs = T.pairs()
    for (x, y), (z, t) in itertools.product(pairs, repeat=2):
        report.instances_checked += 1
        if not any((x + lam * y) % n in prods[t][z] for lam in range(n)):
            report.fail([x, y, z, t], "no lam with x + lam*y = v*u, vR+zR=R, uR+tR=R")


def _sweep_thm13(ring, n, report, samples=None, seed=0):
    from .matrix import Matrix
    from .toeplitz import toeplitz_certificate_problems, toeplitz_diag_2x2

    if samples is None:
        entries = itertools.product(range(n), repeat=4)
    else:
        rng = random.Random(seed)
        entries = (tuple(rng.randrange(n) for _ in range(4)) for _ in range(samples))
    for e in entries:
        report.instances_checked += 1
        A = Matrix(ring, [e[:2], e[2:]])
        try:
            cert = toeplitz_diag_2x2(A)
        except BezoutLabError as exc:
            report.fail(e, f"{exc.code}: {exc}")
            continue
        probs = toeplitz_certificate_problems(cert)
        e1, e2 = (x.payload for x in cert.diagonal)
        if e1 != math.gcd(math.gcd(math.gcd(e[0], e[1]), math.gcd(e[2], e[3])), n) % n:
            probs.append(f"e1={e1} is not the gcd of the entries")
        det = (e[0] * e[3] - e[1] * e[2]) % n
        if math.gcd(det, n) != math.gcd(e1 * e2 % n, n):
            probs.append("det A and e1*e2 are not associates")
        if probs:
            report.fail(e, "; ".join(probs))


_SWEEPS = {
    "THM9_2": _sweep_thm9_2,
    "THM10": _sweep_thm10,
    "THM8": _sweep_thm8,
    "PROP5": _sweep_prop5,
    "PROP6": _sweep_prop6,
    "THM13": _sweep_thm13,
}
