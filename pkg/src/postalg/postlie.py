"""Free post-Lie algebra on planar rooted trees and its enveloping algebra.

The enveloping algebra is the tensor algebra on planar trees: linear
combinations of words of planar trees (:class:`OrderedForest`), graded by
total node count and truncated at a fixed grade ``N``.  Trees are primitive
for the deshuffle coproduct, left grafting is the post-Lie product, and its
extension to words gives the Grossman-Larson product.
"""
from __future__ import annotations

import os
import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial

from .coeff import QQ, Ring, RingError, format_rational
from .linear import LinComb
from .trees import EMPTY_WORD, OrderedForest, PlanarTree, forest_key, trees_up_to

DEFAULT_GRADE = 4


def max_grade() -> int:
    return int(os.environ.get("POSTALG_MAX_GRADE", "6"))


class GradedElement:
    """Truncated element of the planar-forest algebra."""

    __slots__ = ("terms", "N", "ring")

    def __init__(self, terms=(), N: int = DEFAULT_GRADE, ring: Ring = QQ):
        cap = max_grade()
        if not 0 <= N <= cap:
            raise ValueError(f"grade {N} outside 0..{cap} (POSTALG_MAX_GRADE)")
        self.N = N
        self.ring = ring
        self.terms = LinComb(zero=ring.zero())
        items = terms.items() if isinstance(terms, dict) else terms
        for w, c in items:
            w = _as_word(w)
            if w.nodes <= N:
                self.terms.add_term(w, ring.coerce(c))

    @classmethod
    def _raw(cls, lc: LinComb, N: int, ring: Ring) -> GradedElement:
        out = cls.__new__(cls)
        out.N, out.ring = N, ring
        out.terms = LinComb(zero=ring.zero())
        for w, c in lc.items():
            if w.nodes <= N:
                out.terms.add_term(w, c)
        return out

    @classmethod
    def one(cls, N: int = DEFAULT_GRADE, ring: Ring = QQ) -> GradedElement:
        return cls({EMPTY_WORD: 1}, N, ring)

    @classmethod
    def zero(cls, N: int = DEFAULT_GRADE, ring: Ring = QQ) -> GradedElement:
        return cls({}, N, ring)

    @classmethod
    def of(cls, text: str, N: int = DEFAULT_GRADE, coef=1, ring: Ring = QQ) -> GradedElement:
        return cls({text: coef}, N, ring)

    def _like(self, lc: LinComb) -> GradedElement:
        return GradedElement._raw(lc, self.N, self.ring)

    def _check(self, other: GradedElement) -> None:
        if self.N != other.N:
            raise ValueError(f"grade mismatch: {self.N} vs {other.N}")
        if self.ring != other.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other: GradedElement) -> GradedElement:
        self._check(other)
        return self._like(self.terms + other.terms)

    def __sub__(self, other: GradedElement) -> GradedElement:
        self._check(other)
        return self._like(self.terms - other.terms)

    def __neg__(self) -> GradedElement:
        return self._like(self.terms.scale(-1))

    def scale(self, c) -> GradedElement:
        return self._like(self.terms.scale(self.ring.coerce(c)))

    def __mul__(self, c) -> GradedElement:
        if isinstance(c, GradedElement):
            return concat(self, c)
        return self.scale(c)

    def __rmul__(self, c) -> GradedElement:
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedElement):
            return self.N == other.N and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def coeff(self, w):
        return self.terms.coeff(_as_word(w))

    def constant(self):
        return self.terms.coeff(EMPTY_WORD)

    def homogeneous(self, k: int) -> GradedElement:
        return self._like(LinComb((w, c) for w, c in self.terms.items() if w.nodes == k))

    def truncate(self, k: int) -> GradedElement:
        """Drop every term of grade above ``k`` (the grade cap stays ``N``)."""
        return self._like(LinComb((w, c) for w, c in self.terms.items() if w.nodes <= k))

    def min_grade(self) -> int | None:
        return min((w.nodes for w in self.terms), default=None)

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: forest_key(kv[0])))

    def __repr__(self) -> str:
        body = " + ".join(f"{self.ring.format(c)}*{w}" for w, c in self) or "0"
        return f"GradedElement({body}; N={self.N})"


def _as_word(w) -> OrderedForest:
    if isinstance(w, OrderedForest):
        return w
    if isinstance(w, PlanarTree):
        return OrderedForest((w,))
    return OrderedForest.parse(w)


def _bilinear(x: GradedElement, y: GradedElement, on_basis) -> GradedElement:
    """Extend a basis-level map, skipping pairs whose grades exceed ``N``."""
    x._check(y)
    out = LinComb(zero=x.ring.zero())
    for u, a in x.terms.items():
        for v, b in y.terms.items():
            if u.nodes + v.nodes > x.N:
                continue
            for w, c in on_basis(u, v).items():
                out.add_term(w, a * b * c)
    return x._like(out)


# --------------------------------------------------------------------------
# concatenation and deshuffle


def concat(x: GradedElement, y: GradedElement) -> GradedElement:
    return _bilinear(x, y, lambda u, v: {u * v: 1})


def bracket(x: GradedElement, y: GradedElement) -> GradedElement:
    """Commutator ``xy - yx``."""
    return concat(x, y) - concat(y, x)


@lru_cache(maxsize=None)
def _deshuffle_word(w: OrderedForest) -> tuple[tuple[tuple[OrderedForest, OrderedForest], int], ...]:
    out = LinComb(zero=0)
    m = len(w)
    for k in range(m + 1):
        for left in combinations(range(m), k):
            chosen = set(left)
            out.add_term(
                (OrderedForest(tuple(w[i] for i in left)),
                 OrderedForest(tuple(w[i] for i in range(m) if i not in chosen))),
                1,
            )
    return tuple(out.items())


def deshuffle(x: GradedElement) -> LinComb:
    """Coproduct with every tree primitive; keys are pairs of words."""
    out = LinComb(zero=x.ring.zero())
    for w, a in x.terms.items():
        for pair, c in _deshuffle_word(w):
            out.add_term(pair, a * c)
    return out


def is_primitive(x: GradedElement) -> bool:
    expect = LinComb(zero=x.ring.zero())
    for w, a in x.terms.items():
        expect.add_term((w, EMPTY_WORD), a)
        expect.add_term((EMPTY_WORD, w), a)
    return deshuffle(x) == expect


def counit(x: GradedElement):
    return x.constant()


# --------------------------------------------------------------------------
# grafting and its extension


@lru_cache(maxsize=None)
def _graft_tree(t: PlanarTree, s: PlanarTree) -> tuple[PlanarTree, ...]:
    """``t`` attached as leftmost child of each node of ``s``; may repeat."""
    out = [PlanarTree((t,) + s.children)]
    for i, child in enumerate(s.children):
        for g in _graft_tree(t, child):
            out.append(PlanarTree(s.children[:i] + (g,) + s.children[i + 1 :]))
    return tuple(out)


def graft(x: GradedElement, y: GradedElement) -> GradedElement:
    """Left grafting on linear combinations of single trees."""
    for z in (x, y):
        if any(len(w) != 1 for w in z.terms):
            raise ValueError("graft takes linear combinations of single trees")

    def on_basis(u, v):
        out = LinComb(zero=0)
        for g in _graft_tree(u[0], v[0]):
            out.add_term(OrderedForest((g,)), 1)
        return out

    return _bilinear(x, y, on_basis)


@lru_cache(maxsize=None)
def _derive(t: PlanarTree, w: OrderedForest) -> tuple:
    """``t ▷ w`` for a word ``w``: ``t`` acts as a derivation across letters."""
    out = LinComb(zero=0)
    for i, letter in enumerate(w):
        for g in _graft_tree(t, letter):
            out.add_term(OrderedForest(w.trees[:i] + (g,) + w.trees[i + 1 :]), 1)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _rhd_words(u: OrderedForest, v: OrderedForest) -> tuple:
    """Extension of grafting to words on both sides, on basis words."""
    out = LinComb(zero=0)
    if len(u) == 0:
        out.add_term(v, 1)
    elif len(v) == 0:
        pass
    elif len(v) > 1:
        # split across the coproduct of the left word
        head, tail = OrderedForest(v.trees[:1]), OrderedForest(v.trees[1:])
        for (u1, u2), c in _deshuffle_word(u):
            for w1, a in _rhd_words(u1, head):
                for w2, b in _rhd_words(u2, tail):
                    out.add_term(w1 * w2, c * a * b)
    elif len(u) == 1:
        for w, c in _derive(u[0], v):
            out.add_term(w, c)
    else:
        # (x·U)▷v = x▷(U▷v) - (x▷U)▷v
        x, rest = u[0], OrderedForest(u.trees[1:])
        for w, c in _rhd_words(rest, v):
            for w2, c2 in _derive(x, w):
                out.add_term(w2, c * c2)
        for w, c in _derive(x, rest):
            for w2, c2 in _rhd_words(w, v):
                out.add_term(w2, -c * c2)
    return tuple(out.items())


def extend_rhd(x: GradedElement, y: GradedElement) -> GradedElement:
    return _bilinear(x, y, lambda u, v: dict(_rhd_words(u, v)))


def gl_product(x: GradedElement, y: GradedElement) -> GradedElement:
    """``x ∗ y = Σ x(1) · (x(2) ▷ y)``."""
    x._check(y)
    out = LinComb(zero=x.ring.zero())
    for u, a in x.terms.items():
        for (u1, u2), c in _deshuffle_word(u):
            for v, b in y.terms.items():
                if u.nodes + v.nodes > x.N:
                    continue
                for w, d in _rhd_words(u2, v):
                    out.add_term(u1 * w, a * b * c * d)
    return x._like(out)


# --------------------------------------------------------------------------
# exponentials and logarithms


def _require_char0(x: GradedElement) -> None:
    if x.ring.characteristic != 0:
        raise RingError("exp/log need a ring of characteristic zero")


def _series(z: GradedElement, mul, coeffs) -> GradedElement:
    """``Σ_{k>=0} coeffs(k) z^k`` for ``z`` without constant term."""
    out = GradedElement.one(z.N, z.ring).scale(coeffs(0))
    power = GradedElement.one(z.N, z.ring)
    for k in range(1, z.N + 1):
        power = mul(power, z)
        if power.is_zero():
            break
        out = out + power.scale(coeffs(k))
    return out


def _exp(x: GradedElement, mul) -> GradedElement:
    _require_char0(x)
    if x.constant() != 0:
        raise ValueError("exp needs an element with zero constant term")
    return _series(x, mul, lambda k: Fraction(1, factorial(k)))


def _log(y: GradedElement, mul) -> GradedElement:
    _require_char0(y)
    if y.constant() != 1:
        raise ValueError("log needs an element with constant term 1")
    z = y - GradedElement.one(y.N, y.ring)
    return _series(z, mul, lambda k: Fraction(0) if k == 0 else Fraction((-1) ** (k + 1), k))


def exp_dot(x: GradedElement) -> GradedElement:
    return _exp(x, concat)


def log_dot(y: GradedElement) -> GradedElement:
    return _log(y, concat)


def exp_gl(x: GradedElement) -> GradedElement:
    return _exp(x, gl_product)


def log_gl(y: GradedElement) -> GradedElement:
    return _log(y, gl_product)


def _require_primitive(*xs: GradedElement) -> None:
    for x in xs:
        if not is_primitive(x):
            raise ValueError("expected a Lie (primitive) element")


def bch(x: GradedElement, y: GradedElement) -> GradedElement:
    """``log(exp(x)·exp(y))``."""
    _require_primitive(x, y)
    return log_dot(concat(exp_dot(x), exp_dot(y)))


def magnus(x: GradedElement) -> GradedElement:
    """``Ω(x) = log_∗(exp(x))``."""
    _require_primitive(x)
    return log_gl(exp_dot(x))


def inverse_magnus(x: GradedElement) -> GradedElement:
    _require_primitive(x)
    return log_dot(exp_gl(x))


def exp_action(w: GradedElement, y: GradedElement) -> GradedElement:
    """``Σ_k (w▷)^k y / k!`` for ``w`` without constant term."""
    out = y
    term = y
    for k in range(1, y.N + 1):
        term = extend_rhd(w, term).scale(Fraction(1, k))
        if term.is_zero():
            break
        out = out + term
    return out


def formal_rhd(x: GradedElement, y: GradedElement) -> GradedElement:
    """Integrated action: exponential of left grafting by ``Ω(x)``."""
    return exp_action(magnus(x), y)


def formal_integration_ops(x: GradedElement, y: GradedElement) -> tuple[GradedElement, GradedElement]:
    """The group operations ``(x·y, x▷y)`` on Lie elements."""
    return bch(x, y), formal_rhd(x, y)


def lie_butcher_product(x: GradedElement, y: GradedElement) -> GradedElement:
    """``BCH(x, x▷y)``; its exponential is ``exp(x) ∗ exp(y)``."""
    return bch(x, formal_rhd(x, y))


# --------------------------------------------------------------------------
# helpers


def tree_element(t, N: int = DEFAULT_GRADE) -> GradedElement:
    return GradedElement({_as_word(t): 1}, N)


def planar_trees(max_nodes: int) -> list[PlanarTree]:
    return trees_up_to(max_nodes, planar=True)


def random_lie_element(rng: random.Random, N: int = DEFAULT_GRADE, terms: int = 4,
                       brackets: int = 2, span: int = 3) -> GradedElement:
    """Random primitive element: trees plus commutators of trees."""
    pool = planar_trees(N)
    x = GradedElement.zero(N)
    for _ in range(terms):
        t = rng.choice(pool)
        x = x + tree_element(t, N).scale(Fraction(rng.randint(-span, span), rng.randint(1, 3)))
    small = planar_trees(max(1, N - 1))
    for _ in range(brackets):
        a, b = rng.choice(small), rng.choice(small)
        c = Fraction(rng.randint(-span, span), rng.randint(1, 2))
        x = x + bracket(tree_element(a, N), tree_element(b, N)).scale(c)
    return x


def multigraft(u: OrderedForest, v: OrderedForest) -> LinComb:
    """Direct combinatorial form of word-on-word grafting: each letter of
    ``u`` is attached to some node of ``v``; letters landing on the same node
    become its leftmost children, keeping their order in ``u``."""
    nodes: list[tuple[int, tuple[int, ...]]] = []

    def walk(t: PlanarTree, tree_idx: int, path: tuple[int, ...]):
        nodes.append((tree_idx, path))
        for i, c in enumerate(t.children):
            walk(c, tree_idx, path + (i,))

    for k, t in enumerate(v):
        walk(t, k, ())

    def build(t: PlanarTree, key: tuple, where: dict) -> PlanarTree:
        kids = tuple(build(c, key + (i,), where) for i, c in enumerate(t.children))
        return PlanarTree(tuple(where.get(key, ())) + kids)

    out = LinComb(zero=0)
    if len(v) == 0:
        if len(u) == 0:
            out.add_term(EMPTY_WORD, 1)
        return out
    for choice in product(range(len(nodes)), repeat=len(u)):
        per_tree: list[dict] = [dict() for _ in v]
        for letter, idx in zip(u, choice):
            k, path = nodes[idx]
            per_tree[k].setdefault(path, []).append(letter)
        word = OrderedForest(tuple(build(t, (), per_tree[k]) for k, t in enumerate(v)))
        out.add_term(word, 1)
    return out


# --------------------------------------------------------------------------
# text form


def format_graded(x: GradedElement) -> str:
    return "\n".join(f"{format_rational(c) if x.ring is QQ else x.ring.format(c)} {w}" for w, c in x)


def parse_graded(text: str, N: int = DEFAULT_GRADE) -> GradedElement:
    terms = LinComb()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 1)
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected '<rational> <ordered-forest>'")
        try:
            w = OrderedForest.parse(parts[1])
            c = Fraction(parts[0])
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
        if w.nodes > N:
            raise ValueError(f"line {lineno}: grade {w.nodes} exceeds {N}")
        terms.add_term(w, c)
    return GradedElement(terms, N)

