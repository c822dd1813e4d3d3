"""The Butcher-Connes-Kreimer Hopf algebra on non-planar rooted forests.

Elements are :class:`~postalg.linear.LinComb` maps ``Forest -> coefficient``;
tensors are maps keyed by tuples of forests.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .coeff import format_rational
from .linear import LinComb, linear
from .trees import EMPTY_FOREST, Forest, Tree, admissible_cuts, all_cuts, forest_key, remove_cut


def element(*terms) -> LinComb:
    """``element("[[]]", (2, "[][]"))``: strings or ``(coef, forest)`` pairs."""
    out = LinComb()
    for t in terms:
        if isinstance(t, tuple):
            c, f = t
        else:
            c, f = 1, t
        out.add_term(_as_forest(f), Fraction(c))
    return out


def _as_forest(f) -> Forest:
    if isinstance(f, Forest):
        return f
    if isinstance(f, Tree):
        return Forest.of(f)
    return Forest.parse(f)


ONE = element("1")


def product(x: dict, y: dict) -> LinComb:
    out = LinComb()
    for f, a in x.items():
        for g, b in y.items():
            out.add_term(f * g, a * b)
    return out


def tensor_product(x: dict, y: dict) -> LinComb:
    """Factorwise product in ``H^{⊗m}``."""
    out = LinComb()
    for k1, a in x.items():
        for k2, b in y.items():
            out.add_term(tuple(u * v for u, v in zip(k1, k2)), a * b)
    return out


@lru_cache(maxsize=None)
def _tree_coproduct(t: Tree) -> LinComb:
    out = LinComb([((Forest.of(t), EMPTY_FOREST), Fraction(1))])
    for _cut, pruned, root in admissible_cuts(t):
        out.add_term((pruned, Forest.of(root)), Fraction(1))
    return out


def _forest_coproduct(f: Forest) -> LinComb:
    out = LinComb([((EMPTY_FOREST, EMPTY_FOREST), Fraction(1))])
    for t in f.trees:
        out = tensor_product(out, _tree_coproduct(t))
    return out


def coproduct(x: dict) -> LinComb:
    return linear(x, _forest_coproduct)


def counit(x: dict):
    return x.get(EMPTY_FOREST, Fraction(0))


@lru_cache(maxsize=None)
def _tree_antipode(t: Tree) -> LinComb:
    out = LinComb()
    for c in all_cuts(t):
        out.add_term(remove_cut(t, c), Fraction((-1) ** (len(c) + 1)))
    return out


def _forest_antipode(f: Forest) -> LinComb:
    out = LinComb([(EMPTY_FOREST, Fraction(1))])
    for t in f.trees:
        out = product(out, _tree_antipode(t))
    return out


def antipode(x: dict) -> LinComb:
    return linear(x, _forest_antipode)


def reduced_coproduct(x: dict) -> LinComb:
    """``Δ(x) - x ⊗ 1``."""
    out = coproduct(x)
    for f, a in x.items():
        out.add_term((f, EMPTY_FOREST), -a)
    return out


def apply_on_factor(t: dict, i: int, fn) -> LinComb:
    """Apply a linear map ``H -> H^{⊗k}`` to factor ``i`` of a tensor.

    ``fn`` returns a tensor keyed by tuples which are spliced in place.
    """
    out = LinComb()
    for key, a in t.items():
        for sub, b in fn(LinComb([(key[i], Fraction(1))])).items():
            if not isinstance(sub, tuple):
                sub = (sub,)
            out.add_term(key[:i] + sub + key[i + 1 :], a * b)
    return out


def iterated_coproduct(x: dict, m: int) -> LinComb:
    """The ``m``-fold coproduct ``Δ^(m-1)``, built left-associated."""
    if m < 1:
        raise ValueError("m must be >= 1")
    out = LinComb()
    for f, a in x.items():
        out.add_term((f,), a)
    for _ in range(m - 1):
        out = apply_on_factor(out, 0, coproduct)
    return out


def multiply(t: dict) -> LinComb:
    """``m : H^{⊗k} -> H``."""
    out = LinComb()
    for key, a in t.items():
        f = EMPTY_FOREST
        for g in key:
            f = f * g
        out.add_term(f, a)
    return out


def counit_on_factor(t: dict, i: int) -> LinComb:
    out = LinComb()
    for key, a in t.items():
        if key[i] == EMPTY_FOREST:
            rest = key[:i] + key[i + 1 :]
            out.add_term(rest if len(rest) != 1 else rest[0], a)
    return out


# --------------------------------------------------------------------------
# text form


def _sort_key(key):
    if isinstance(key, tuple):
        return tuple(forest_key(f) for f in key)
    return forest_key(key)


def format_element(x: dict) -> str:
    """One ``<rational> <forest>`` line per term, basis order."""
    lines = [f"{format_rational(x[k])} {k}" for k in sorted(x, key=_sort_key)]
    return "\n".join(lines)


def format_tensor(t: dict) -> str:
    lines = []
    for k in sorted(t, key=_sort_key):
        lines.append(f"{format_rational(t[k])} " + " | ".join(str(f) for f in k))
    return "\n".join(lines)


def parse_element(text: str) -> LinComb:
    out = LinComb()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 1)
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected '<rational> <forest>'")
        try:
            out.add_term(Forest.parse(parts[1]), Fraction(parts[0]))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    return out


def parse_tensor(text: str) -> LinComb:
    out = LinComb()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        coef, rest = line.split(None, 1)
        try:
            key = tuple(Forest.parse(p) for p in rest.split("|"))
            out.add_term(key, Fraction(coef))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    return out
