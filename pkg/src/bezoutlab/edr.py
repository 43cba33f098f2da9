"""Elementary-divisor machinery that does not rely on Toeplitz shape."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotCoprime, NotSupported, WitnessNotFound
from .matrix import Matrix, ReductionCertificate, Transform
from .rings import Element, Kind
from .ringcore import (
    bezout_certificate, divides, is_unimodular, is_unit, normalize_associate, same_ring,
)
from .search import describe_tuple_bound, scan_tuples


@dataclass(frozen=True)
class PQWitness:
    p: Element
    q: Element

    def certifies(self, a: Element, b: Element, c: Element) -> bool:
        """``(p*a) R + (p*b + q*c) R = R``, checked through a gcd certificate."""
        cert = bezout_certificate(self.p * a, self.p * b + self.q * c)
        return cert.verify() and cert.is_unit_gcd


def hermite_row(a: Element, b: Element) -> tuple[Matrix, Element]:
    """Invertible ``Q`` with ``(a, b) @ Q == (d, 0)``, ``d`` the canonical gcd."""
    ring = same_ring(a, b)
    cert = bezout_certificate(a, b)
    if not cert.d:
        return Matrix.identity(ring, 2), cert.d
    # det = p*a0 + q*b0 = 1
    Q = Matrix(ring, [[cert.p, -cert.b0], [cert.q, cert.a0]])
    return Q, cert.d


def find_pq(a: Element, b: Element, c: Element, bound: int | None = None) -> PQWitness:
    """First ``(p, q)`` in scan order with ``(p*a) R + (p*b + q*c) R = R``.

    Pairs are scanned with ``q`` as the major coordinate in finite rings and
    in diagonal order in infinite ones.
    """
    ring = same_ring(a, b, c)
    if not is_unimodular(a, b, c):
        raise NotCoprime(f"({a}, {b}, {c}) is not unimodular")
    if is_unit(a):
        return PQWitness(ring.one(), ring.zero())
    for q, p in scan_tuples(ring, 2, bound):
        if is_unimodular(p * a, p * b + q * c):
            return PQWitness(p, q)
    raise WitnessNotFound(f"no (p, q) within {describe_tuple_bound(ring, 2, bound)}")


def _prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def find_pq_integers(a: Element, b: Element, c: Element) -> PQWitness:
    """Constructive ``(p, q)`` over Z by the Chinese remainder theorem.

    With ``a != 0`` take ``p = 1`` and choose ``q`` modulo each prime ``l | a``
    not dividing ``c`` so that ``l`` does not divide ``b + q*c``. With ``a == 0``
    use Bezout cofactors of ``(b, c)``.
    """
    ring = same_ring(a, b, c)
    if ring.kind is not Kind.INTEGERS:
        raise NotSupported("the CRT construction is for Z only")
    if not is_unimodular(a, b, c):
        raise NotCoprime(f"({a}, {b}, {c}) is not unimodular")
    A, B, C = a.payload, b.payload, c.payload
    if A == 0:
        cert = bezout_certificate(b, c)
        return PQWitness(cert.p, cert.q)
    q, mod = 0, 1
    for ell in _prime_factors(A):
        if C % ell == 0:
            continue
        target = 0 if B % ell else 1
        # q = target (mod ell), q = q (mod mod)
        k = (target - q) * pow(mod, -1, ell) % ell
        q, mod = q + mod * k, mod * ell
    return PQWitness(ring.one(), ring.of(q))


# --------------------------------------------------------------------------
# Smith reduction by elementary operations


class _Reducer:
    """Applies elementary row/column operations to a working copy and records them."""

    def __init__(self, A: Matrix):
        self.ring = A.ring
        self.n, self.m = A.shape
        self.D = [list(row) for row in A.rows]
        self.left: list[Transform] = []
        self.right: list[Transform] = []

    def _eye(self, size):
        one, zero = self.ring.one(), self.ring.zero()
        return [[one if i == j else zero for j in range(size)] for i in range(size)]

    def row_add(self, i, j, k):
        """row_i += k * row_j"""
        D = self.D
        D[i] = [x + k * y for x, y in zip(D[i], D[j])]
        E = self._eye(self.n)
        E[i][j] = k
        self.left.append(Transform(f"add r{i}+=({k})r{j}", Matrix(self.ring, E)))

    def col_add(self, i, j, k):
        """col_i += k * col_j"""
        for row in self.D:
            row[i] = row[i] + k * row[j]
        E = self._eye(self.m)
        E[j][i] = k
        self.right.append(Transform(f"add c{i}+=({k})c{j}", Matrix(self.ring, E)))

    def row_swap(self, i, j):
        """(row_i, row_j) <- (row_j, -row_i)"""
        D = self.D
        D[i], D[j] = D[j], [-x for x in D[i]]
        E = self._eye(self.n)
        E[i][i] = E[j][j] = self.ring.zero()
        E[i][j], E[j][i] = self.ring.one(), -self.ring.one()
        self.left.append(Transform(f"swap r{i},r{j}", Matrix(self.ring, E)))

    def col_swap(self, i, j):
        """(col_i, col_j) <- (col_j, -col_i)"""
        for row in self.D:
            row[i], row[j] = row[j], -row[i]
        E = self._eye(self.m)
        E[i][i] = E[j][j] = self.ring.zero()
        E[j][i], E[i][j] = self.ring.one(), -self.ring.one()
        self.right.append(Transform(f"swap c{i},c{j}", Matrix(self.ring, E)))

    def row_scale(self, i, u):
        self.D[i] = [u * x for x in self.D[i]]
        E = self._eye(self.n)
        E[i][i] = u
        self.left.append(Transform(f"scale r{i}*=({u})", Matrix(self.ring, E)))

    def quotient(self, x, pivot):
        back = self.ring.backend
        q, _ = back.divmod_euclid(x.payload, pivot.payload)
        return Element(self.ring, q)


def _clear_pivot(red: _Reducer, t: int) -> None:
    D, n, m = red.D, red.n, red.m
    while True:
        for i in range(t + 1, n):
            while D[i][t]:
                q = red.quotient(D[i][t], D[t][t])
                if q:
                    red.row_add(i, t, -q)
                if D[i][t]:
                    red.row_swap(t, i)
        for j in range(t + 1, m):
            while D[t][j]:
                q = red.quotient(D[t][j], D[t][t])
                if q:
                    red.col_add(j, t, -q)
                if D[t][j]:
                    red.col_swap(t, j)
        if any(D[i][t] for i in range(t + 1, n)):
            continue
        bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, m)
                    if not divides(D[t][t], D[i][j])), None)
        if bad is None:
            return
        red.row_add(t, bad[0], red.ring.one())


def smith_nxm(A: Matrix) -> ReductionCertificate:
    """Diagonal form ``diag(e_1, ..., e_s, 0, ...)`` with ``e_i | e_{i+1}``.

    Every recorded factor is elementary: a transvection, a signed swap
    ``[[0, 1], [-1, 0]]`` or a unit scaling. ``meta['cut']`` records how many
    factors were applied when the trailing block first had a side of length
    at most 2; replaying those prefixes gives the partial form in which only
    a ``2 x k`` or ``k x 2`` block is left.
    """
    red = _Reducer(A)
    n, m = A.shape
    cut_index = max(min(n, m) - 2, 0)
    cut = None
    for t in range(min(n, m)):
        if t == cut_index:
            cut = {"index": t, "left": len(red.left), "right": len(red.right)}
        cells = [(i, j) for i in range(t, n) for j in range(t, m) if red.D[i][j]]
        if not cells:
            break
        i, j = min(cells, key=lambda ij: (red.D[ij[0]][ij[1]].sort_key(), ij))
        if i != t:
            red.row_swap(t, i)
        if j != t:
            red.col_swap(t, j)
        _clear_pivot(red, t)
        _, unit = normalize_associate(red.D[t][t])
        if unit != 1:
            red.row_scale(t, unit)
    if cut is None:
        cut = {"index": cut_index, "left": len(red.left), "right": len(red.right)}
    result = Matrix(A.ring, red.D)
    return ReductionCertificate(A, tuple(red.left), tuple(red.right), result, {"cut": cut})


def smith_2x2(A: Matrix) -> ReductionCertificate:
    if A.shape != (2, 2):
        raise ValueError("smith_2x2 expects a 2x2 matrix")
    return smith_nxm(A)


def is_elementary(t: Transform) -> bool:
    """Transvection, signed swap or unit scaling (identity counts as a transvection)."""
    M = t.matrix
    size = M.shape[0]
    off = [(i, j) for i in range(size) for j in range(size) if i != j and M[i, j]]
    diag = [M[i, i] for i in range(size)]
    if not off:
        return sum(1 for d in diag if d != 1) <= 1 and all(is_unit(d) for d in diag)
    if len(off) == 1:
        return all(d == 1 for d in diag)
    if len(off) == 2:
        (i, j), (k, l) = off
        if (k, l) != (j, i):
            return False
        pair = {M[i, j], M[j, i]}
        rest_ok = all(diag[x] == 1 for x in range(size) if x not in (i, j))
        return rest_ok and not diag[i] and not diag[j] and pair == {M.ring.one(), -M.ring.one()}
    return False
