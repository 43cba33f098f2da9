"""Independent reference computations on plain Python ints.

Nothing here imports bezoutlab; the tests compare the library against these.
"""

from __future__ import annotations

import itertools
import math


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Iterative extended Euclid: (g, s, t) with s*a + t*b == g >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def det(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free Bareiss elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def determinant_divisors(rows: list[list[int]]) -> list[int]:
    """d_k = gcd of all k x k minors, for k = 1..min(shape)."""
    nr, nc = len(rows), len(rows[0])
    out = []
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for ri in itertools.combinations(range(nr), k):
            for ci in itertools.combinations(range(nc), k):
                g = math.gcd(g, det([[rows[i][j] for j in ci] for i in ri]))
                if g == 1:
                    break
            if g == 1:
                break
        out.append(g)
    return out


def smith_diagonal(rows: list[list[int]]) -> list[int]:
    """Invariant factors over Z from determinant divisors (zeros past the rank)."""
    ds = determinant_divisors(rows)
    out, prev = [], 1
    for d in ds:
        out.append(d // prev if prev else 0)
        prev = d
    return out


def units_mod(n: int) -> list[int]:
    return [u for u in range(n) if math.gcd(u, n) == 1]


def coprime_pairs_mod(n: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(n) for b in range(n) if math.gcd(math.gcd(a, b), n) == 1]


def has_ssr1_mod(n: int, a: int, b: int) -> bool:
    return any(math.gcd((a * a + b * x) % n, n) == 1 for x in range(n))
