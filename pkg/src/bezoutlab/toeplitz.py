"""Toeplitz row reduction, completion and 2x2 diagonalization.

A 2x2 Toeplitz matrix is ``[[a, b], [c, a]]``. Over a ring where every
coprime pair ``(a, b)`` has some ``x`` making ``a^2 + b*x`` a unit, rows can be
reduced and 2x2 matrices diagonalized using only such matrices (plus a final
optional unit rescaling of the second diagonal entry, flagged as non-Toeplitz).
"""

from __future__ import annotations

from .edr import find_pq
from .errors import NotCoprime, NotInvertible, NotSupported, WitnessNotFound
from .matrix import Matrix, ReductionCertificate, ToeplitzMatrix, Transform
from .rings import Element
from .ringcore import (
    bezout_certificate, canonical, divide_out, gcd, is_unimodular, normalize_associate,
    same_ring, unit_inverse,
)
from .stable_range import ssr1_witness


def toeplitz_invert(t: ToeplitzMatrix) -> ToeplitzMatrix:
    if not t.is_invertible():
        raise NotInvertible(f"det {t.det} is not a unit in {t.ring}")
    return t.inverse()


def toeplitz_row_reduce(a: Element, b: Element, bound: int | None = None
                        ) -> tuple[ToeplitzMatrix, Element]:
    """Invertible Toeplitz ``T`` and canonical ``d`` with ``(a, b) @ T == (d, 0)``.

    Write ``a = d*a0, b = d*b0`` with ``a0, b0`` coprime and pick ``t`` with
    ``u = a0^2 + b0*t`` a unit. Then ``S = [[a0, -b0], [t, a0]]`` sends
    ``(a0, b0)`` to ``(u, 0)`` and ``T = S * u^-1``.
    """
    ring = same_ring(a, b)
    cert = bezout_certificate(a, b)
    if not cert.d:
        return ToeplitzMatrix(ring.one(), ring.zero(), ring.zero()), cert.d
    a0, b0 = cert.a0, cert.b0
    report = ssr1_witness(a0, b0, bound)
    if not report.found:
        raise WitnessNotFound(
            f"no x with ({a0})^2 + ({b0})*x a unit within {report.searched_bound}")
    t = report.witness
    u = a0 * a0 + b0 * t
    w = unit_inverse(u)
    return ToeplitzMatrix(a0 * w, -(b0 * w), t * w), cert.d


def toeplitz_complete(a: Element, b: Element, bound: int | None = None) -> ToeplitzMatrix:
    """``[[a, b], [x, a]]`` with unit determinant ``a^2 - b*x``."""
    same_ring(a, b)
    if not is_unimodular(a, b):
        raise NotCoprime(f"({a}, {b}) is not a unimodular row")
    report = ssr1_witness(a, -b, bound)
    if not report.found:
        raise WitnessNotFound(f"no x with {a}^2 - ({b})*x a unit within {report.searched_bound}")
    return ToeplitzMatrix(a, b, report.witness)


def _elementary_toeplitz(ring, lower=None, upper=None) -> Matrix:
    one, zero = ring.one(), ring.zero()
    return Matrix(ring, [[one, upper if upper is not None else zero],
                         [lower if lower is not None else zero, one]])


def toeplitz_diag_2x2(A: Matrix, bound: int | None = None) -> ReductionCertificate:
    """Diagonalize a 2x2 matrix with invertible Toeplitz transforms.

    Factors, in the order applied:

    * ``L`` (left): transposed Toeplitz row reduction of the first column,
      making the matrix upper triangular ``g * [[a, b], [0, c]]`` with
      ``a, b, c`` coprime.
    * ``P = [[p, q], [*, p]]`` (left) and ``Q = [[r, *], [s, r]]`` (right) from a
      pair with ``(p*a) R + (p*b + q*c) R = R`` and ``p*a*r + (p*b + q*c)*s = 1``;
      they make the top-left entry of the reduced matrix 1.
    * ``S = [[1, 0], [-y, 1]]`` (left) and ``T = [[1, -x], [0, 1]]`` (right)
      clear the off-diagonal entries.
    * ``N = diag(1, unit)`` (left, not Toeplitz) rescales ``e2`` to its
      canonical associate; identity when no rescaling is needed.
    """
    if A.shape != (2, 2):
        raise ValueError("toeplitz_diag_2x2 expects a 2x2 matrix")
    ring = A.ring
    ident = Matrix.identity(ring, 2)
    meta: dict = {}

    # triangularize: (A11, A21) @ T0 = (d, 0)  =>  T0^t @ A has a zero below d
    t0, _ = toeplitz_row_reduce(A[0, 0], A[1, 0], bound)
    L = t0.transpose().matrix()
    tri = L @ A
    a, b, c = tri[0, 0], tri[0, 1], tri[1, 1]

    g = gcd(a, b, c)
    meta["e1"] = str(g)
    if not g:
        left = (Transform("L", L), Transform("P", ident), Transform("S", ident),
                Transform("N", ident))
        right = (Transform("Q", ident), Transform("T", ident))
        return _finish(A, left, right, meta)

    a1, b1, c1 = divide_out([a, b, c], g)
    try:
        pq = find_pq(a1, b1, c1, bound=bound)
    except WitnessNotFound as exc:
        raise NotSupported(f"(p, q) search failed: {exc}") from exc
    p, q = pq.p, pq.q
    cert = bezout_certificate(p * a1, p * b1 + q * c1)
    r, s = cert.p, cert.q  # p*a1*r + (p*b1 + q*c1)*s == 1
    meta.update(p=str(p), q=str(q), r=str(r), s=str(s))

    P = toeplitz_complete(p, q, bound).matrix()
    Q = toeplitz_complete(r, s, bound).transpose().matrix()
    reduced = Matrix(ring, [[a1, b1], [ring.zero(), c1]])
    A1 = P @ reduced @ Q
    x, y = A1[0, 1], A1[1, 0]
    S = _elementary_toeplitz(ring, lower=-y)
    T = _elementary_toeplitz(ring, upper=-x)

    e2 = g * (A1[1, 1] - y * x)
    _, unit = normalize_associate(e2)
    N = Matrix(ring, [[1, 0], [0, unit]])
    left = (Transform("L", L), Transform("P", P), Transform("S", S), Transform("N", N))
    right = (Transform("Q", Q), Transform("T", T))
    return _finish(A, left, right, meta)


def _finish(A, left, right, meta) -> ReductionCertificate:
    ring = A.ring
    cert = ReductionCertificate(A, left, right, Matrix.identity(ring, 2), meta)
    result = cert.left_total @ A @ cert.right_total
    cert = ReductionCertificate(A, left, right, result, meta)
    meta["left_total_toeplitz"] = cert.left_total.is_toeplitz()
    meta["right_total_toeplitz"] = cert.right_total.is_toeplitz()
    return cert


TOEPLITZ_FACTORS = ("L", "P", "Q", "S", "T")


def toeplitz_certificate_problems(cert: ReductionCertificate) -> list[str]:
    """Replay problems plus the Toeplitz-specific claims."""
    out = cert.problems()
    for t in cert.left + cert.right:
        if t.name in TOEPLITZ_FACTORS and not t.toeplitz:
            out.append(f"factor {t.name} is not Toeplitz")
    diag = cert.diagonal
    if diag and diag[0] != canonical(diag[0]):
        out.append("e1 is not canonical")
    return out
