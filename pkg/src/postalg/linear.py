"""Sparse linear combinations with exact coefficients.

A :class:`LinComb` is a ``dict`` from basis keys to coefficients in which zero
coefficients never survive.  Tensors are ordinary ``LinComb`` objects keyed by
tuples of basis elements.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable


class LinComb(dict):
    def __init__(self, data=(), zero=Fraction(0)):
        super().__init__()
        self.zero = zero
        if isinstance(data, dict):
            data = data.items()
        for k, v in data:
            self.add_term(k, v)

    def add_term(self, key: Hashable, coef) -> None:
        if coef == 0:
            return
        v = self.get(key, self.zero) + coef
        if v == 0:
            self.pop(key, None)
        else:
            self[key] = v

    def iadd_scaled(self, other: dict, coef=1) -> LinComb:
        if coef == 0:
            return self
        for k, v in other.items():
            self.add_term(k, v * coef)
        return self

    def coeff(self, key):
        return self.get(key, self.zero)

    def copy(self) -> LinComb:
        out = LinComb(zero=self.zero)
        dict.update(out, self)
        return out

    def __add__(self, other: dict) -> LinComb:
        return self.copy().iadd_scaled(other)

    def __sub__(self, other: dict) -> LinComb:
        return self.copy().iadd_scaled(other, -1)

    def __neg__(self) -> LinComb:
        return self.scale(-1)

    def scale(self, c) -> LinComb:
        out = LinComb(zero=self.zero)
        if c == 0:
            return out
        for k, v in self.items():
            out.add_term(k, v * c)
        return out

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def map_keys(self, fn: Callable) -> LinComb:
        out = LinComb(zero=self.zero)
        for k, v in self.items():
            out.add_term(fn(k), v)
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, dict):
            return dict.__eq__(self, other)
        if other == 0:
            return len(self) == 0
        return NotImplemented

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None  # type: ignore[assignment]


def bilinear(
    x: dict, y: dict, on_basis: Callable[[Hashable, Hashable], dict], zero=Fraction(0)
) -> LinComb:
    """Extend ``on_basis(u, v) -> LinComb`` bilinearly."""
    out = LinComb(zero=zero)
    for u, a in x.items():
        for v, b in y.items():
            out.iadd_scaled(on_basis(u, v), a * b)
    return out


def linear(x: dict, on_basis: Callable[[Hashable], dict], zero=Fraction(0)) -> LinComb:
    out = LinComb(zero=zero)
    for u, a in x.items():
        out.iadd_scaled(on_basis(u), a)
    return out


def tensor(*factors: dict) -> LinComb:
    """Tensor product of linear combinations; keys become tuples."""
    out = LinComb([((), Fraction(1))])
    for f in factors:
        nxt = LinComb()
        for k, a in out.items():
            for u, b in f.items():
                nxt.add_term(k + (u,), a * b)
        out = nxt
    return out


def sum_lincombs(parts: Iterable[dict]) -> LinComb:
    out = LinComb()
    for p in parts:
        out.iadd_scaled(p)
    return out
