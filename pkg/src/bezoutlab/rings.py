"""Concrete commutative Bezout rings: Z, Z/n, GF(p)[x] and Z localized at p.

Elements are immutable values holding a canonical payload:

* ``Z``       -- a Python int
* ``Z/n``     -- an int in ``[0, n)``
* ``GF(p)[x]``-- a tuple of coefficients in ``[0, p)``, least degree first,
                 no trailing zeros (the zero polynomial is ``()``)
* ``Z_(p)``   -- a reduced ``Fraction`` whose denominator is coprime to p

Arithmetic on payloads is delegated to one backend object per descriptor.
"""

from __future__ import annotations

import enum
import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import InfiniteRing, NotPrime, ParseError, RingMismatch


def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Kind(enum.Enum):
    INTEGERS = "INTEGERS"
    MODULAR = "MODULAR"
    POLY_OVER_PRIME_FIELD = "POLY_OVER_PRIME_FIELD"
    INTEGERS_LOCALIZED_AT = "INTEGERS_LOCALIZED_AT"


@dataclass(frozen=True)
class RingDescriptor:
    kind: Kind
    param: int | None = None

    def __post_init__(self):
        if self.kind is Kind.INTEGERS:
            if self.param is not None:
                raise ParseError("Z takes no parameter")
        elif self.kind is Kind.MODULAR:
            if not isinstance(self.param, int) or self.param < 2:
                raise ParseError(f"modulus must be an integer >= 2, got {self.param!r}")
        else:
            if not isinstance(self.param, int) or not is_prime(self.param):
                raise NotPrime(f"{self.param!r} is not prime")

    @property
    def is_finite(self) -> bool:
        return self.kind is Kind.MODULAR

    @property
    def backend(self) -> "_Backend":
        return _backend(self)

    def __str__(self) -> str:
        return render_ring(self)

    # Element constructors
    def zero(self) -> "Element":
        return Element(self, self.backend.zero)

    def one(self) -> "Element":
        return Element(self, self.backend.one)

    def of(self, value) -> "Element":
        """Build an element from an int (or a literal string)."""
        if isinstance(value, Element):
            if value.ring != self:
                raise RingMismatch(f"{value} is in {value.ring}, not {self}")
            return value
        if isinstance(value, str):
            return parse_element(self, value)
        if isinstance(value, int):
            return Element(self, self.backend.from_int(value))
        raise TypeError(f"cannot build an element of {self} from {value!r}")


INTEGERS = RingDescriptor(Kind.INTEGERS)


def Zmod(n: int) -> RingDescriptor:
    return RingDescriptor(Kind.MODULAR, n)


def GFx(p: int) -> RingDescriptor:
    return RingDescriptor(Kind.POLY_OVER_PRIME_FIELD, p)


def Zloc(p: int) -> RingDescriptor:
    return RingDescriptor(Kind.INTEGERS_LOCALIZED_AT, p)


class Element:
    """A ring element with value semantics."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring: RingDescriptor, payload):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    def _other(self, other) -> "Element":
        if isinstance(other, Element):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.of(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring.backend.add(self.payload, other.payload))

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ring, self.ring.backend.neg(self.payload))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring.backend.mul(self.payload, other.payload))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.payload == self.ring.backend.from_int(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.ring == other.ring and self.payload == other.payload

    def __hash__(self):
        return hash((self.ring, self.payload))

    def __bool__(self):
        return self.payload != self.ring.backend.zero

    def is_zero(self) -> bool:
        return not self

    def sort_key(self):
        return self.ring.backend.sort_key(self.payload)

    def __lt__(self, other: "Element") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return self.ring.backend.render(self.payload)

    def __repr__(self):
        return f"Element({self.ring}, {self})"


# --------------------------------------------------------------------------
# backends


class _Backend:
    zero: object
    one: object

    def __init__(self, ring: RingDescriptor):
        self.ring = ring

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def annihilator(self, d):
        """Solutions z of d*z = 0, least first. Only the zero element in a domain."""
        if d == self.zero:
            raise ValueError("annihilator of zero is the whole ring")
        return [self.zero]

    def enumerate(self):
        raise InfiniteRing(f"{self.ring} is infinite")


class _IntegerBackend(_Backend):
    zero, one = 0, 1

    def from_int(self, k):
        return k

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_unit(self, a):
        return a in (1, -1)

    def inverse(self, a):
        return a

    def xgcd(self, a, b):
        old_r, r = a, b
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        return old_r, old_s, old_t

    def normalize(self, a):
        return (-a, -1) if a < 0 else (a, 1)

    def divide(self, a, d):
        if d == 0:
            return 0 if a == 0 else None
        q, r = divmod(a, d)
        return q if r == 0 else None

    def divmod_euclid(self, a, b):
        return divmod(a, b)

    def sort_key(self, a):
        return (abs(a), a < 0)

    def candidates(self, bound):
        yield 0
        for k in range(1, bound + 1):
            yield k
            yield -k

    def render(self, a):
        return str(a)

    def parse(self, text):
        if "/" in text:
            raise RingMismatch(f"fraction literal {text!r} in Z")
        try:
            return int(text)
        except ValueError:
            raise ParseError(f"not an integer: {text!r}") from None


class _ModularBackend(_Backend):
    def __init__(self, ring):
        super().__init__(ring)
        self.n = ring.param
        self.zero = 0
        self.one = 1 % self.n

    def from_int(self, k):
        return k % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return -a % self.n

    def mul(self, a, b):
        return a * b % self.n

    def is_unit(self, a):
        return math.gcd(a, self.n) == 1

    def inverse(self, a):
        return pow(a, -1, self.n)

    def xgcd(self, a, b):
        # Euclid on the representatives; the result generates the ideal (a, b).
        g, s, t = _IntegerBackend.xgcd(self, a, b)
        return g % self.n, s % self.n, t % self.n

    def normalize(self, a):
        if a == 0:
            return 0, 1
        g = math.gcd(a, self.n)
        m = self.n // g
        u = pow(a // g, -1, m) if m > 1 else 0
        # least unit congruent to u modulo n/g
        for k in range(g):
            cand = u + k * m
            if math.gcd(cand, self.n) == 1:
                return g, cand
        raise AssertionError("no unit lift")  # unreachable: CRT guarantees one

    def divide(self, a, d):
        g = math.gcd(d, self.n)
        if a % g:
            return None
        m = self.n // g
        if m == 1:
            return 0
        return (a // g) * pow(d // g, -1, m) % m

    def annihilator(self, d):
        if d == 0:
            raise ValueError("annihilator of zero is the whole ring")
        g = math.gcd(d, self.n)
        m = self.n // g
        return [k * m for k in range(g)]

    def divmod_euclid(self, a, b):
        return divmod(a, b)

    def sort_key(self, a):
        return a

    def candidates(self, bound):
        return range(self.n)

    def enumerate(self):
        return range(self.n)

    def render(self, a):
        return str(a)

    def parse(self, text):
        if "/" in text:
            raise RingMismatch(f"fraction literal {text!r} in {self.ring}")
        try:
            return int(text) % self.n
        except ValueError:
            raise ParseError(f"not an integer: {text!r}") from None


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


_TERM = re.compile(r"([+-]?)([^+-]+)")
_MONO = re.compile(r"^(\d*)\*?(x(?:\^(\d+))?)?$")


class _PolyBackend(_Backend):
    zero: tuple = ()

    def __init__(self, ring):
        super().__init__(ring)
        self.p = ring.param
        self.one = (1,)

    def from_int(self, k):
        return _trim([k % self.p])

    def add(self, a, b):
        p = self.p
        out = [0] * max(len(a), len(b))
        for i, c in enumerate(a):
            out[i] = c
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return _trim(out)

    def neg(self, a):
        return tuple(-c % self.p for c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        p = self.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % p
        return _trim(out)

    def is_unit(self, a):
        return len(a) == 1

    def inverse(self, a):
        return (pow(a[0], -1, self.p),)

    def divmod_euclid(self, a, b):
        p = self.p
        rem = list(a)
        inv = pow(b[-1], -1, p)
        q = [0] * max(len(a) - len(b) + 1, 0)
        while len(rem) >= len(b) and rem:
            shift = len(rem) - len(b)
            c = rem[-1] * inv % p
            q[shift] = c
            for i, y in enumerate(b):
                rem[i + shift] = (rem[i + shift] - c * y) % p
            rem = list(_trim(rem))
        return _trim(q), tuple(rem)

    def xgcd(self, a, b):
        old_r, r = a, b
        old_s, s = self.one, ()
        old_t, t = (), self.one
        while r:
            q, rem = self.divmod_euclid(old_r, r)
            old_r, r = r, rem
            old_s, s = s, self.sub(old_s, self.mul(q, s))
            old_t, t = t, self.sub(old_t, self.mul(q, t))
        return old_r, old_s, old_t

    def normalize(self, a):
        if not a:
            return (), self.one
        u = (pow(a[-1], -1, self.p),)
        return self.mul(u, a), u

    def divide(self, a, d):
        if not d:
            return () if not a else None
        q, r = self.divmod_euclid(a, d)
        return q if not r else None

    def sort_key(self, a):
        return (len(a), tuple(reversed(a)))

    def candidates(self, degree_bound):
        yield ()
        p = self.p
        for deg in range(degree_bound + 1):
            for lead in range(1, p):
                for lower in itertools.product(range(p), repeat=deg):
                    yield tuple(reversed(lower)) + (lead,)

    def render(self, a):
        if not a:
            return "0"
        terms = []
        for deg in range(len(a) - 1, -1, -1):
            c = a[deg]
            if not c:
                continue
            if deg == 0:
                terms.append(str(c))
                continue
            mono = "x" if deg == 1 else f"x^{deg}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms)

    def parse(self, text):
        if "/" in text:
            raise RingMismatch(f"fraction literal {text!r} in {self.ring}")
        s = text.replace(" ", "")
        if not s:
            raise ParseError("empty polynomial literal")
        pos = 0
        out: dict[int, int] = {}
        for m in _TERM.finditer(s):
            if m.start() != pos:
                raise ParseError(f"bad polynomial literal {text!r}")
            pos = m.end()
            sign = -1 if m.group(1) == "-" else 1
            mono = _MONO.match(m.group(2))
            if not mono or (not mono.group(1) and not mono.group(2)):
                raise ParseError(f"bad term {m.group(2)!r} in {text!r}")
            coef = int(mono.group(1)) if mono.group(1) else 1
            if mono.group(2):
                deg = int(mono.group(3)) if mono.group(3) else 1
            else:
                deg = 0
            out[deg] = out.get(deg, 0) + sign * coef
        if pos != len(s):
            raise ParseError(f"bad polynomial literal {text!r}")
        coeffs = [0] * (max(out) + 1)
        for deg, c in out.items():
            coeffs[deg] = c % self.p
        return _trim(coeffs)


def _valuation(k: int, p: int) -> int:
    v = 0
    while k % p == 0:
        k //= p
        v += 1
    return v


class _LocalizedBackend(_Backend):
    zero = Fraction(0)
    one = Fraction(1)

    def __init__(self, ring):
        super().__init__(ring)
        self.p = ring.param

    def _check(self, x: Fraction) -> Fraction:
        if x.denominator % self.p == 0:
            raise ParseError(f"{x} is not in {self.ring}")
        return x

    def from_int(self, k):
        return Fraction(k)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_unit(self, a):
        return a.numerator % self.p != 0

    def inverse(self, a):
        return 1 / a

    def valuation(self, a) -> int:
        return _valuation(a.numerator, self.p)

    def xgcd(self, a, b):
        # every nonzero element is unit * p^k, so the generator is the one of least valuation
        if a == 0 and b == 0:
            return self.zero, self.one, self.zero
        if b == 0 or (a != 0 and self.valuation(a) <= self.valuation(b)):
            return a, self.one, self.zero
        return b, self.zero, self.one

    def normalize(self, a):
        if a == 0:
            return self.zero, self.one
        canon = Fraction(self.p ** self.valuation(a))
        return canon, canon / a

    def divide(self, a, d):
        if d == 0:
            return self.zero if a == 0 else None
        q = a / d
        return q if q.denominator % self.p else None

    def divmod_euclid(self, a, b):
        q = self.divide(a, b)
        if q is None:
            return self.zero, a
        return q, self.zero

    def sort_key(self, a):
        return (abs(a), a < 0)

    def candidates(self, bound):
        yield self.zero
        for k in range(1, bound + 1):
            yield Fraction(k)
            yield Fraction(-k)

    def render(self, a):
        return str(a)

    def parse(self, text):
        s = text.replace(" ", "")
        try:
            if "/" in s:
                num, den = s.split("/")
                if int(den) == 0:
                    raise ParseError(f"zero denominator in {text!r}")
                x = Fraction(int(num), int(den))
            else:
                x = Fraction(int(s))
        except ValueError:
            raise ParseError(f"not a fraction: {text!r}") from None
        return self._check(x)


_BACKENDS = {
    Kind.INTEGERS: _IntegerBackend,
    Kind.MODULAR: _ModularBackend,
    Kind.POLY_OVER_PRIME_FIELD: _PolyBackend,
    Kind.INTEGERS_LOCALIZED_AT: _LocalizedBackend,
}


@lru_cache(maxsize=None)
def _backend(ring: RingDescriptor) -> _Backend:
    return _BACKENDS[ring.kind](ring)


# --------------------------------------------------------------------------
# parsing / rendering / enumeration

_RING_PATTERNS = [
    (re.compile(r"^Z$"), lambda m: INTEGERS),
    (re.compile(r"^Z/(\d+)$"), lambda m: Zmod(int(m.group(1)))),
    (re.compile(r"^GF\((\d+)\)\[x\]$"), lambda m: GFx(int(m.group(1)))),
    (re.compile(r"^Z_\((\d+)\)$"), lambda m: Zloc(int(m.group(1)))),
]


def parse_ring(spec: str) -> RingDescriptor:
    """Parse ``Z``, ``Z/<n>``, ``GF(<p>)[x]`` or ``Z_(<p>)``."""
    s = spec.strip()
    for pattern, build in _RING_PATTERNS:
        m = pattern.match(s)
        if m:
            return build(m)
    raise ParseError(f"unknown ring spec {spec!r}")


def render_ring(ring: RingDescriptor) -> str:
    if ring.kind is Kind.INTEGERS:
        return "Z"
    if ring.kind is Kind.MODULAR:
        return f"Z/{ring.param}"
    if ring.kind is Kind.POLY_OVER_PRIME_FIELD:
        return f"GF({ring.param})[x]"
    return f"Z_({ring.param})"


def parse_element(ring: RingDescriptor, text: str) -> Element:
    if not isinstance(text, str):
        text = str(text)
    return Element(ring, ring.backend.parse(text.strip()))


def render_element(a: Element) -> str:
    return str(a)


def enumerate_elements(ring: RingDescriptor) -> list[Element]:
    """All elements of a finite ring in canonical order."""
    return [Element(ring, x) for x in ring.backend.enumerate()]


def candidates(ring: RingDescriptor, bound: int | None = None) -> Iterator[Element]:
    """Deterministic scan order used by every witness search.

    Finite rings: all elements. Z and Z_(p): 0, 1, -1, 2, -2, ... up to
    ``bound``. GF(p)[x]: by degree then coefficients, up to degree ``bound``.
    """
    from .search import default_bound

    if bound is None:
        bound = default_bound(ring)
    for x in ring.backend.candidates(bound):
        yield Element(ring, x)
