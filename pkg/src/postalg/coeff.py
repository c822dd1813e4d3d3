"""Exact coefficient rings.

Every ring exposes ``zero``, ``one``, ``coerce``, ``parse``, ``format`` and a
``characteristic``.  Elements themselves support ``+ - *`` and ``==`` so that
algorithms can be written once against plain operators.

* ``QQ`` -- rationals backed by :class:`fractions.Fraction`.
* ``GF(p)`` -- the prime field of odd order ``p``.
* ``TruncatedPolyRing(N)`` -- ``QQ[x] / (x^{N+1})``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence


class RingError(ArithmeticError):
    pass


def is_prime(n: int) -> bool:
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


class Ring:
    """Abstract commutative ring with unit."""

    name = "ring"
    characteristic = 0
    is_field = False

    def zero(self) -> Any:
        raise NotImplementedError

    def one(self) -> Any:
        raise NotImplementedError

    def coerce(self, x) -> Any:
        raise NotImplementedError

    def parse(self, text: str) -> Any:
        raise NotImplementedError

    def format(self, x) -> str:
        return str(x)

    # Functional aliases; the operator forms are what the algorithms use.
    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        raise RingError(f"{self.name} has no general inverse")

    def eq(self, a, b) -> bool:
        return a == b

    def __repr__(self) -> str:
        return self.name


class RationalField(Ring):
    name = "Q"
    characteristic = 0
    is_field = True

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} to a rational")

    def parse(self, text: str) -> Fraction:
        text = text.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational {text!r}") from exc

    def format(self, x) -> str:
        return format_rational(x)

    def inv(self, a):
        if a == 0:
            raise RingError("inverse of zero")
        return 1 / Fraction(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


QQ = RationalField()


def format_rational(x: Fraction | int) -> str:
    """``p/q`` or ``p``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class PrimeFieldElem:
    value: int
    p: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            object.__setattr__(self, "value", self.value % self.p)

    def _other(self, other) -> int:
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise RingError(f"mixing F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElem((self.value + o) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElem((self.value - o) % self.p, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElem((o - self.value) % self.p, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElem((self.value * o) % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElem((-self.value) % self.p, self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def inverse(self) -> PrimeFieldElem:
        if self.value == 0:
            raise RingError("inverse of zero")
        return PrimeFieldElem(pow(self.value, -1, self.p), self.p)

    def __str__(self):
        return f"{self.value} mod {self.p}"


class PrimeField(Ring):
    is_field = True

    def __init__(self, p: int):
        if p == 2 or not is_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        self.p = p
        self.characteristic = p
        self.name = f"Fp:{p}"

    def zero(self):
        return PrimeFieldElem(0, self.p)

    def one(self):
        return PrimeFieldElem(1, self.p)

    def coerce(self, x):
        if isinstance(x, PrimeFieldElem):
            if x.p != self.p:
                raise RingError(f"element of F_{x.p} given to F_{self.p}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise RingError(f"{x} has no image in F_{self.p}")
            return PrimeFieldElem(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return PrimeFieldElem(int(x), self.p)

    def parse(self, text: str):
        """Accepts ``k mod p`` or a bare integer."""
        parts = text.split()
        if len(parts) == 3 and parts[1] == "mod":
            if int(parts[2]) != self.p:
                raise ValueError(f"modulus {parts[2]} does not match {self.p}")
            return PrimeFieldElem(int(parts[0]), self.p)
        if len(parts) == 1:
            return PrimeFieldElem(int(parts[0]), self.p)
        raise ValueError(f"bad F_{self.p} element {text!r}")

    def format(self, x) -> str:
        return str(x.value)

    def inv(self, a):
        return self.coerce(a).inverse()

    def elements(self) -> list[PrimeFieldElem]:
        return [PrimeFieldElem(v, self.p) for v in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


def GF(p: int) -> PrimeField:
    return PrimeField(p)


@dataclass(frozen=True)
class TruncatedPoly:
    """Polynomial over QQ modulo ``x^(order+1)``."""

    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        c = tuple(Fraction(v) for v in self.coeffs[: self.order + 1])
        c = c + (Fraction(0),) * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", c)

    def _other(self, other) -> TruncatedPoly:
        if isinstance(other, TruncatedPoly):
            if other.order != self.order:
                raise RingError("truncation orders differ")
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedPoly((Fraction(other),), self.order)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return TruncatedPoly(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)), self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedPoly(tuple(-a for a in self.coeffs), self.order)

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * o.coeffs[j]
        return TruncatedPoly(tuple(out), n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedPoly((Fraction(other),), self.order)
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __bool__(self):
        return any(self.coeffs)

    def inverse(self) -> TruncatedPoly:
        """Series inverse; needs a nonzero constant term."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise RingError("truncated polynomial with zero constant term is not invertible")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / c0
        for k in range(1, n + 1):
            s = sum((self.coeffs[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
            out[k] = -s / c0
        return TruncatedPoly(tuple(out), n)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i == 0:
                terms.append(format_rational(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{format_rational(c)}{mono}")
        return " + ".join(terms) if terms else "0"


class TruncatedPolyRing(Ring):
    characteristic = 0

    def __init__(self, order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        self.name = f"Q[x]/x^{order + 1}"

    def zero(self):
        return TruncatedPoly((), self.order)

    def one(self):
        return TruncatedPoly((Fraction(1),), self.order)

    def x(self):
        return TruncatedPoly((Fraction(0), Fraction(1)), self.order)

    def coerce(self, x):
        if isinstance(x, TruncatedPoly):
            if x.order != self.order:
                raise RingError("truncation orders differ")
            return x
        if isinstance(x, Sequence) and not isinstance(x, str):
            return TruncatedPoly(tuple(Fraction(v) for v in x), self.order)
        return TruncatedPoly((Fraction(x),), self.order)

    def parse(self, text: str):
        """Whitespace-separated coefficient list ``c0 c1 ... cN``."""
        return TruncatedPoly(tuple(Fraction(t) for t in text.split()), self.order)

    def format(self, x) -> str:
        return " ".join(format_rational(c) for c in x.coeffs)

    def inv(self, a):
        return self.coerce(a).inverse()

    def __eq__(self, other):
        return isinstance(other, TruncatedPolyRing) and other.order == self.order

    def __hash__(self):
        return hash(("Qx", self.order))


def ring_from_name(name: str) -> Ring:
    """``Q`` or ``Fp:<p>``."""
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        return PrimeField(int(name[3:]))
    raise ValueError(f"unknown ring {name!r}")


def ring_add(a, b):
    return a + b


def ring_mul(a, b):
    return a * b


def ring_neg(a):
    return -a


def ring_inv(a):
    if isinstance(a, PrimeFieldElem):
        return a.inverse()
    if isinstance(a, TruncatedPoly):
        return a.inverse()
    if a == 0:
        raise RingError("inverse of zero")
    return 1 / Fraction(a)
