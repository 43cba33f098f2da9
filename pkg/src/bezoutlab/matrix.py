"""Dense matrices over a shipped ring, 2x2 Toeplitz matrices and reduction certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotInvertible, RingMismatch
from .rings import Element, RingDescriptor
from .ringcore import divides, is_unit, unit_inverse


class Matrix:
    """Immutable rectangular matrix; all entries share ``ring``."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: RingDescriptor, rows: Sequence[Sequence]):
        built = tuple(tuple(ring.of(x) for x in row) for row in rows)
        if not built or not built[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(built[0])
        if any(len(r) != width for r in built):
            raise ValueError("ragged rows")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", built)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, ring: RingDescriptor, n: int) -> "Matrix":
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: RingDescriptor, n: int, m: int) -> "Matrix":
        return cls(ring, [[0] * m for _ in range(n)])

    @classmethod
    def diag(cls, ring: RingDescriptor, entries: Sequence, n: int, m: int) -> "Matrix":
        rows = [[0] * m for _ in range(n)]
        for i, e in enumerate(entries):
            rows[i][i] = e
        return cls(ring, rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        back = self.ring.backend
        zero = back.zero
        cols = list(zip(*(tuple(e.payload for e in row) for row in other.rows)))
        out = []
        for row in self.rows:
            pr = [e.payload for e in row]
            new = []
            for col in cols:
                acc = zero
                for x, y in zip(pr, col):
                    if x != zero and y != zero:
                        acc = back.add(acc, back.mul(x, y))
                new.append(Element(self.ring, acc))
            out.append(new)
        return Matrix(self.ring, out)

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, list(zip(*self.rows)))

    def det(self) -> Element:
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        return _det([list(r) for r in self.rows], self.ring)

    def is_diagonal(self) -> bool:
        return all(not e for i, row in enumerate(self.rows)
                   for j, e in enumerate(row) if i != j)

    def diagonal(self) -> list[Element]:
        n, m = self.shape
        return [self.rows[i][i] for i in range(min(n, m))]

    def is_toeplitz(self) -> bool:
        return self.shape == (2, 2) and self.rows[0][0] == self.rows[1][1]

    def is_zero(self) -> bool:
        return not any(e for row in self.rows for e in row)

    def to_strings(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self.rows]

    def __repr__(self):
        return f"Matrix({self.ring}, {self.to_strings()})"


def _det(rows: list[list[Element]], ring: RingDescriptor) -> Element:
    """Laplace expansion along the row with the most zeros (cheap for sparse factors)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    i = max(range(n), key=lambda r: sum(1 for e in rows[r] if not e))
    total = ring.zero()
    rest = rows[:i] + rows[i + 1:]
    for j, e in enumerate(rows[i]):
        if not e:
            continue
        minor = [r[:j] + r[j + 1:] for r in rest]
        term = e * _det(minor, ring)
        total = total + term if (i + j) % 2 == 0 else total - term
    return total


def matrix_product(factors: Sequence[Matrix], ring: RingDescriptor, n: int) -> Matrix:
    out = Matrix.identity(ring, n)
    for f in factors:
        out = out @ f
    return out


@dataclass(frozen=True)
class ToeplitzMatrix:
    """``[[a, b], [c, a]]``."""

    a: Element
    b: Element
    c: Element

    @classmethod
    def from_matrix(cls, m: Matrix) -> "ToeplitzMatrix":
        if not m.is_toeplitz():
            raise ValueError(f"{m} is not Toeplitz")
        return cls(m[0, 0], m[0, 1], m[1, 0])

    @property
    def ring(self) -> RingDescriptor:
        return self.a.ring

    @property
    def det(self) -> Element:
        return self.a * self.a - self.b * self.c

    def is_invertible(self) -> bool:
        return is_unit(self.det)

    def matrix(self) -> Matrix:
        return Matrix(self.ring, [[self.a, self.b], [self.c, self.a]])

    def transpose(self) -> "ToeplitzMatrix":
        return ToeplitzMatrix(self.a, self.c, self.b)

    def inverse(self) -> "ToeplitzMatrix":
        """Adjugate over the (unit) determinant; again Toeplitz."""
        if not self.is_invertible():
            raise NotInvertible(f"det {self.det} is not a unit")
        w = unit_inverse(self.det)
        return ToeplitzMatrix(w * self.a, -(w * self.b), -(w * self.c))


@dataclass(frozen=True)
class Transform:
    """One recorded factor of a reduction."""

    name: str
    matrix: Matrix

    @property
    def toeplitz(self) -> bool:
        return self.matrix.is_toeplitz()


@dataclass(frozen=True)
class ReductionCertificate:
    """``L_k ... L_1 @ input @ R_1 ... R_k == result``.

    ``left`` is listed innermost first, i.e. ``left[0]`` is applied to the
    input first. ``meta`` holds operation-specific notes (cut points,
    intermediate values); it never takes part in verification.
    """

    input: Matrix
    left: tuple[Transform, ...]
    right: tuple[Transform, ...]
    result: Matrix
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def ring(self) -> RingDescriptor:
        return self.input.ring

    @property
    def toeplitz_flags(self) -> dict[str, list[bool]]:
        return {"left": [t.toeplitz for t in self.left],
                "right": [t.toeplitz for t in self.right]}

    @property
    def left_total(self) -> Matrix:
        n = self.input.shape[0]
        return matrix_product([t.matrix for t in reversed(self.left)], self.ring, n)

    @property
    def right_total(self) -> Matrix:
        m = self.input.shape[1]
        return matrix_product([t.matrix for t in self.right], self.ring, m)

    @property
    def diagonal(self) -> list[Element]:
        return self.result.diagonal()

    def problems(self) -> list[str]:
        out = []
        n, m = self.input.shape
        if self.result.shape != (n, m):
            out.append("result shape differs from input shape")
        for side, ts, size in (("left", self.left, n), ("right", self.right, m)):
            for t in ts:
                if t.matrix.shape != (size, size):
                    out.append(f"{side} factor {t.name} has shape {t.matrix.shape}")
                elif not is_unit(t.matrix.det()):
                    out.append(f"{side} factor {t.name} is not invertible")
        if out:
            return out
        if self.left_total @ self.input @ self.right_total != self.result:
            out.append("replay: left @ input @ right != result")
        if not self.result.is_diagonal():
            out.append("result is not diagonal")
        diag = self.diagonal
        for e1, e2 in zip(diag, diag[1:]):
            if not divides(e1, e2):
                out.append(f"{e1} does not divide {e2}")
        return out

    def verify(self) -> bool:
        return not self.problems()
