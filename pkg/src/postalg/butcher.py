"""Butcher pre-group: truncated characters on rooted trees.

A character of order ``N`` assigns a ring element to every rooted tree with at
most ``N`` vertices; the empty tree always maps to one.  Characters are
extended multiplicatively to forests.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from . import bck
from .coeff import QQ, PrimeField, Ring, ring_from_name
from .trees import Forest, Tree, admissible_cuts, trees_up_to


class CharacterError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Character:
    ring: Ring
    order: int
    values: Mapping[Tree, object] = field(repr=False)

    def __post_init__(self):
        full = {t: self.ring.zero() for t in trees_up_to(self.order)}
        for t, v in self.values.items():
            if isinstance(t, str):
                t = Tree.parse(t)
            if t.nodes > self.order:
                raise CharacterError(f"tree {t} exceeds order {self.order}")
            full[t] = self.ring.coerce(v)
        object.__setattr__(self, "values", full)

    @classmethod
    def identity(cls, ring: Ring = QQ, order: int = 4) -> Character:
        return cls(ring, order, {})

    @classmethod
    def random(cls, ring: Ring = QQ, order: int = 4, rng: random.Random | None = None,
               span: int = 5) -> Character:
        rng = rng or random.Random()
        vals = {}
        for t in trees_up_to(order):
            if isinstance(ring, PrimeField):
                vals[t] = rng.randrange(ring.p)
            else:
                vals[t] = Fraction(rng.randint(-span, span), rng.randint(1, 3))
        return cls(ring, order, vals)

    def __call__(self, x):
        """Value on a tree, or the product of values over a forest."""
        if isinstance(x, str):
            x = Forest.parse(x)
        if isinstance(x, Tree):
            return self.values[x]
        out = self.ring.one()
        for t in x.trees:
            out = out * self.values[t]
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Character)
            and self.ring == other.ring
            and self.order == other.order
            and all(self.values[t] == other.values[t] for t in self.values)
        )

    def __hash__(self):
        return hash((self.order, tuple(self.values[t] for t in trees_up_to(self.order))))

    def key(self) -> tuple:
        return tuple(self.values[t] for t in trees_up_to(self.order))

    def __repr__(self) -> str:
        body = ", ".join(f"{t}: {self.ring.format(v)}" for t, v in self.values.items() if v != 0)
        return f"Character(order={self.order}, ring={self.ring.name}, {{{body}}})"


def _check(a: Character, b: Character) -> None:
    if a.ring != b.ring:
        raise CharacterError(f"ring mismatch: {a.ring} vs {b.ring}")
    if a.order != b.order:
        raise CharacterError(f"order mismatch: {a.order} vs {b.order}")


def char_dot(a: Character, b: Character) -> Character:
    """Abelian product: pointwise sum on trees."""
    _check(a, b)
    return Character(a.ring, a.order, {t: a.values[t] + b.values[t] for t in a.values})


def char_inverse_dot(a: Character) -> Character:
    return Character(a.ring, a.order, {t: -v for t, v in a.values.items()})


def char_rhd(a: Character, b: Character) -> Character:
    """``(a▷b)(ω) = Σ_{admissible c} a(P^c ω) b(R^c ω)``."""
    _check(a, b)
    out = {}
    for t in a.values:
        s = a.ring.zero()
        for _cut, pruned, root in admissible_cuts(t):
            s = s + a(pruned) * b.values[root]
        out[t] = s
    return Character(a.ring, a.order, out)


def char_compose(a: Character, b: Character) -> Character:
    """Sub-adjacent (Butcher) product ``a∘b = a·(a▷b)``."""
    return char_dot(a, char_rhd(a, b))


def char_inverse_circ(a: Character) -> Character:
    """``∘``-inverse by a triangular solve over node count.

    In ``(a∘x)(ω) = 0`` the empty cut contributes ``x(ω)`` and every other
    term involves ``x`` only on strictly smaller trees.
    """
    x: dict[Tree, object] = {}
    for t in trees_up_to(a.order):
        s = a.values[t]
        for cut, pruned, root in admissible_cuts(t):
            if len(cut) == 0:
                continue
            s = s + a(pruned) * x[root]
        x[t] = -s
    return Character(a.ring, a.order, x)


def evaluate(a: Character, x: dict):
    """Extend ``a`` linearly to an element of H_BCK (integer coefficients)."""
    out = a.ring.zero()
    for f, c in x.items():
        out = out + a.ring.coerce(c) * a(f)
    return out


def convolution(a: Character, b: Character) -> Character:
    """``(a ⊗ b) ∘ Δ_BCK`` on every tree up to the order."""
    _check(a, b)
    out = {}
    for t in a.values:
        s = a.ring.zero()
        for (f, g), c in bck.coproduct(bck.element(t)).items():
            s = s + a.ring.coerce(c) * a(f) * b(g)
        out[t] = s
    return Character(a.ring, a.order, out)


def char_inverse_antipode(a: Character) -> Character:
    """Character-group inverse ``a ∘ S`` (composition with the antipode)."""
    return Character(a.ring, a.order, {t: evaluate(a, bck.antipode(bck.element(t))) for t in a.values})


# --------------------------------------------------------------------------
# finite truncations over F_p


class FinitePregroup:
    """All order-``n`` characters over ``F_p``; element 0 is the identity."""

    def __init__(self, p: int, n: int):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.ring = PrimeField(p)
        self.p = p
        self.n = n
        self.trees = trees_up_to(n)
        self.size = p ** len(self.trees)

    def __len__(self) -> int:
        return self.size

    def element(self, i: int) -> Character:
        if not 0 <= i < self.size:
            raise IndexError(i)
        digits = []
        for _ in self.trees:
            i, d = divmod(i, self.p)
            digits.append(d)
        return Character(self.ring, self.n, dict(zip(self.trees, digits)))

    def index(self, a: Character) -> int:
        i = 0
        for t in reversed(self.trees):
            i = i * self.p + a.values[t].value
        return i

    def __iter__(self):
        for i in range(self.size):
            yield self.element(i)

    def elements(self) -> list[Character]:
        return list(self)

    def dot(self, a: Character, b: Character) -> Character:
        return char_dot(a, b)

    def rhd(self, a: Character, b: Character) -> Character:
        return char_rhd(a, b)

    def circ(self, a: Character, b: Character) -> Character:
        return char_compose(a, b)

    def to_table(self):
        """Export as a :class:`~postalg.postgroup.PostGroupTable`."""
        from .postgroup import GroupTable, PostGroupTable

        elems = self.elements()
        dot = [[self.index(char_dot(a, b)) for b in elems] for a in elems]
        rhd = [[self.index(char_rhd(a, b)) for b in elems] for a in elems]
        return PostGroupTable(GroupTable(dot), rhd)


def finite_pregroup(p: int, n: int) -> FinitePregroup:
    return FinitePregroup(p, n)


# --------------------------------------------------------------------------
# text form


def format_character(a: Character) -> str:
    lines = [f"order {a.order} ring {a.ring.name}"]
    for t in trees_up_to(a.order):
        v = a.values[t]
        if v != 0:
            lines.append(f"{t} {a.ring.format(v)}")
    return "\n".join(lines) + "\n"


def parse_character(text: str) -> Character:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("line 1: empty character file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "order" or parts[2] != "ring":
        raise ValueError(f"line {lineno}: expected 'order N ring Q|Fp:<p>'")
    try:
        order = int(parts[1])
        ring = ring_from_name(parts[3])
    except ValueError as exc:
        raise ValueError(f"line {lineno}: {exc}") from exc
    vals = {}
    for lineno, ln in lines[1:]:
        bits = ln.split(None, 1)
        if len(bits) != 2:
            raise ValueError(f"line {lineno}: expected '<tree> <value>'")
        try:
            t = Tree.parse(bits[0])
            if t.nodes > order:
                raise ValueError(f"tree {t} exceeds order {order}")
            vals[t] = ring.parse(bits[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    return Character(ring, order, vals)
