"""Pre-groups from operads, truncated by arity.

An element of the operad group is ``(Id, a_2, a_3, ...)`` with ``a_n`` in the
coinvariant space of arity ``n``.  For the commutative operad every space is
one-dimensional and the group is the set of series ``1 + k_1 x + k_2 x^2 + ...``
with ``k_m`` sitting in arity ``m + 1``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Sequence

from .coeff import format_rational
from .postgroup import Report


class OperadError(ValueError):
    pass


@lru_cache(maxsize=None)
def compositions(total: int, parts: int, minimum: int = 0) -> tuple[tuple[int, ...], ...]:
    """Ordered tuples of ``parts`` integers ``>= minimum`` summing to ``total``."""
    if parts == 0:
        return ((),) if total == 0 else ()
    out = []
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in compositions(total - first, parts - 1, minimum):
            out.append((first,) + rest)
    return tuple(out)


# --------------------------------------------------------------------------
# the commutative operad, as series


@dataclass(frozen=True)
class SeriesGroupElem:
    """``1 + Σ_{n=1}^{N} coeffs[n-1] x^n``."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_coerce(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def k(self, m: int):
        """Coefficient of ``x^m`` with ``k_0 = 1``."""
        return Fraction(1) if m == 0 else self.coeffs[m - 1]

    @classmethod
    def identity(cls, order: int) -> SeriesGroupElem:
        return cls((0,) * order)

    @classmethod
    def parse(cls, text: str, order: int | None = None) -> SeriesGroupElem:
        coeffs = parse_series(text)
        if order is not None:
            coeffs = (list(coeffs) + [Fraction(0)] * order)[:order]
        return cls(tuple(coeffs))

    def __str__(self) -> str:
        return format_series(self)


def _coerce(c):
    if isinstance(c, (int, str)):
        return Fraction(c)
    return c


def _same_order(a: SeriesGroupElem, b: SeriesGroupElem) -> None:
    if a.order != b.order:
        raise OperadError(f"order mismatch: {a.order} vs {b.order}")


def _weighted_sum(a: SeriesGroupElem, b: SeriesGroupElem, n: int, first: int):
    """``Σ_{s=first}^{n+1} Σ_{t_1+..+t_s = n+1-s} l_{s-1} k_{t_1} ... k_{t_s}``."""
    total = Fraction(0)
    for s in range(first, n + 2):
        weight = b.k(s - 1)
        if weight == 0:
            continue
        inner = Fraction(0)
        for ts in compositions(n + 1 - s, s):
            term = Fraction(1)
            for t in ts:
                term = term * a.k(t)
            inner = inner + term
        total = total + weight * inner
    return total


def com_dot(a: SeriesGroupElem, b: SeriesGroupElem) -> SeriesGroupElem:
    _same_order(a, b)
    return SeriesGroupElem(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def com_rhd(a: SeriesGroupElem, b: SeriesGroupElem) -> SeriesGroupElem:
    _same_order(a, b)
    return SeriesGroupElem(tuple(_weighted_sum(a, b, n, 2) for n in range(1, a.order + 1)))


def com_circ(a: SeriesGroupElem, b: SeriesGroupElem) -> SeriesGroupElem:
    _same_order(a, b)
    return SeriesGroupElem(tuple(_weighted_sum(a, b, n, 1) for n in range(1, a.order + 1)))


def com_inverse_dot(a: SeriesGroupElem) -> SeriesGroupElem:
    return SeriesGroupElem(tuple(-c for c in a.coeffs))


# --------------------------------------------------------------------------
# generic truncated operads on coinvariants

Vector = tuple  # coefficients in a chosen basis of one coinvariant space
Gamma = Callable[[int, tuple[int, ...], tuple[int, ...]], dict]


class TruncatedOperad:
    """Coinvariant spaces of arity ``1 .. max_arity`` with induced composition.

    ``dims[n]`` is the dimension in arity ``n``; arity 1 must be spanned by the
    identity (basis index 0).  ``gamma(i, arities, js)`` composes basis vector
    ``i`` of arity ``len(arities)`` with basis vectors ``js[r]`` of arity
    ``arities[r]`` and returns ``{basis index: coefficient}`` in arity
    ``sum(arities)``.
    """

    def __init__(self, max_arity: int, dims: dict[int, int], gamma: Gamma, name: str = "operad"):
        if dims.get(1) != 1:
            raise OperadError("arity 1 must be one-dimensional, spanned by Id")
        self.max_arity = max_arity
        self.dims = {n: dims[n] for n in range(1, max_arity + 1)}
        self.gamma = gamma
        self.name = name
        self._report: Report | None = None

    def zero(self, n: int) -> Vector:
        return (Fraction(0),) * self.dims[n]

    def identity(self) -> Vector:
        return (Fraction(1),)

    def compose(self, b: Vector, parts: Sequence[tuple[int, Vector]]) -> Vector:
        """Multilinear ``γ̄(b; a_1, ..., a_k)``; ``parts`` pairs arities with vectors."""
        arities = tuple(t for t, _ in parts)
        out = [Fraction(0)] * self.dims[sum(arities)]
        supports = [[(j, c) for j, c in enumerate(v) if c != 0] for _, v in parts]
        for i, bc in enumerate(b):
            if bc == 0:
                continue
            for choice in product(*supports):
                coef = bc
                for _, c in choice:
                    coef = coef * c
                js = tuple(j for j, _ in choice)
                for idx, g in self.gamma(i, arities, js).items():
                    out[idx] += coef * g
        return tuple(out)

    def _basis(self, n: int):
        return [tuple(Fraction(int(i == j)) for j in range(self.dims[n])) for i in range(self.dims[n])]

    def verify(self) -> Report:
        """Unitality and associativity on every in-range basis composition."""
        if self._report is not None:
            return self._report
        rep = Report(f"{self.name} axioms")
        N = self.max_arity
        ident = self.identity()
        for n in range(1, N + 1):
            for v in self._basis(n):
                rep.checked += 2
                if self.compose(ident, [(n, v)]) != v:
                    rep.fail("left unit", (n, v))
                if self.compose(v, [(1, ident)] * n) != v:
                    rep.fail("right unit", (n, v))
        for s in range(1, N + 1):
            for ls in (c for k in range(s, N + 1) for c in compositions(k, s, 1)):
                k = sum(ls)
                for ts in (c for n in range(k, N + 1) for c in compositions(n, k, 1)):
                    for c in self._basis(s):
                        for bs in product(*(self._basis(l) for l in ls)):
                            for as_ in product(*(self._basis(t) for t in ts)):
                                rep.checked += 1
                                inner = self.compose(c, list(zip(ls, bs)))
                                lhs = self.compose(inner, list(zip(ts, as_)))
                                groups, pos = [], 0
                                for l, b in zip(ls, bs):
                                    chunk = list(zip(ts[pos:pos + l], as_[pos:pos + l]))
                                    groups.append((sum(ts[pos:pos + l]), self.compose(b, chunk)))
                                    pos += l
                                if self.compose(c, groups) != lhs:
                                    rep.fail("associativity", (c, ls, ts))
        self._report = rep
        return rep


def com_operad(max_arity: int) -> TruncatedOperad:
    return TruncatedOperad(max_arity, {n: 1 for n in range(1, max_arity + 1)},
                           lambda i, arities, js: {0: Fraction(1)}, name="Com")


def _require_valid(op: TruncatedOperad) -> None:
    rep = op.verify()
    if not rep.ok:
        raise OperadError(f"operad axiom violated: {rep.violations[0][0]}")


def operad_dot(op: TruncatedOperad, a: Sequence[Vector], b: Sequence[Vector]) -> tuple:
    """Componentwise sum in arities ``>= 2``; arity 1 stays ``Id``."""
    return (op.identity(),) + tuple(
        tuple(x + y for x, y in zip(a[n - 1], b[n - 1])) for n in range(2, op.max_arity + 1)
    )


def _operad_sum(op: TruncatedOperad, a, b, first: int) -> tuple:
    out = [op.identity()]
    for n in range(2, op.max_arity + 1):
        acc = [Fraction(0)] * op.dims[n]
        for k in range(first, n + 1):
            for ts in compositions(n, k, 1):
                term = op.compose(b[k - 1], [(t, a[t - 1]) for t in ts])
                acc = [x + y for x, y in zip(acc, term)]
        out.append(tuple(acc))
    return tuple(out)


def generic_operad_pregroup(op: TruncatedOperad, a: Sequence[Vector], b: Sequence[Vector]) -> tuple:
    """``(ā▷b̄)_n = Σ_{k=2}^{n} Σ_{t_1+..+t_k=n} γ̄(b_k; a_{t_1}, ..., a_{t_k})``."""
    _require_valid(op)
    return _operad_sum(op, a, b, 2)


def operad_circ(op: TruncatedOperad, a, b) -> tuple:
    """The operad-group product: the same sum taken from ``k = 1``."""
    _require_valid(op)
    return _operad_sum(op, a, b, 1)


def series_to_tuple(a: SeriesGroupElem) -> tuple:
    """Com series as arity-indexed tuple: ``k_m`` lands in arity ``m + 1``."""
    return ((Fraction(1),),) + tuple((c,) for c in a.coeffs)


def tuple_to_series(v: Sequence[Vector]) -> SeriesGroupElem:
    return SeriesGroupElem(tuple(x[0] for x in v[1:]))


# --------------------------------------------------------------------------
# text form

_TERM = re.compile(r"^([+-]?)\s*([0-9/]*)\s*\*?\s*(x(?:\^(\d+))?)?$")


def parse_series(text: str) -> list[Fraction]:
    """``1 + c1 x + c2 x^2 + ...`` or a coefficient list ``c1, c2, ...``."""
    text = text.strip()
    if text.startswith("["):
        text = text.strip("[]")
    if "x" not in text:
        parts = [p for p in re.split(r"[,\s]+", text) if p]
        try:
            return [Fraction(p) for p in parts]
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad coefficient list {text!r}") from None
    coeffs: dict[int, Fraction] = {}
    terms = re.findall(r"[+-]?[^+-]+", text.replace(" ", ""))
    for term in terms:
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"bad series term {term!r}")
        sign, num, var, power = m.groups()
        if not num and not var:
            raise ValueError(f"bad series term {term!r}")
        c = Fraction(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        deg = 0 if not var else int(power) if power else 1
        coeffs[deg] = coeffs.get(deg, Fraction(0)) + c
    if coeffs.pop(0, Fraction(0)) != 1:
        raise ValueError("constant term must be 1")
    top = max(coeffs, default=0)
    return [coeffs.get(d, Fraction(0)) for d in range(1, top + 1)]


def format_series(a: SeriesGroupElem) -> str:
    out = "1"
    for n, c in enumerate(a.coeffs, 1):
        if c == 0:
            continue
        mono = "x" if n == 1 else f"x^{n}"
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        out += f" {sign} {mono}" if mag == 1 else f" {sign} {format_rational(mag)} {mono}"
    return out
