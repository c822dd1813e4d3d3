"""Rooted trees, planar rooted trees, forests and cuts.

Text grammar, shared by both tree kinds::

    tree := "[" tree* "]"

so the single vertex is ``[]``, the ladder with two vertices ``[[]]`` and the
cherry ``[[][]]``.  A forest is its trees written one after another, the empty
forest is ``1``.

A non-planar :class:`Tree` keeps its children sorted by their serialized
strings (plain ``str`` ordering), which makes the string a complete
isomorphism invariant.  A :class:`PlanarTree` keeps the children in the order
given.

Edges of a tree are numbered ``0 .. n-2``: edge ``i`` joins vertex ``i+1`` (in
pre-order of the canonical form) to its parent.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence


class TreeSyntaxError(ValueError):
    pass


def _parse_nested(text: str, pos: int = 0) -> tuple[list, int]:
    if pos >= len(text) or text[pos] != "[":
        raise TreeSyntaxError(f"expected '[' at position {pos} in {text!r}")
    pos += 1
    kids = []
    while pos < len(text) and text[pos] == "[":
        kid, pos = _parse_nested(text, pos)
        kids.append(kid)
    if pos >= len(text) or text[pos] != "]":
        raise TreeSyntaxError(f"expected ']' at position {pos} in {text!r}")
    return kids, pos + 1


def _parse_many(text: str) -> list[list]:
    text = "".join(text.split())
    if text in ("", "1"):
        return []
    out = []
    pos = 0
    while pos < len(text):
        kid, pos = _parse_nested(text, pos)
        out.append(kid)
    return out


class Tree:
    """Isomorphism class of a rooted tree."""

    __slots__ = ("children", "_str", "_nodes")

    def __init__(self, children: Iterable[Tree] = ()):
        kids = tuple(sorted(children, key=str))
        self.children = kids
        self._str = "[" + "".join(c._str for c in kids) + "]"
        self._nodes = 1 + sum(c._nodes for c in kids)

    @classmethod
    def parse(cls, text: str) -> Tree:
        trees = _parse_many(text)
        if len(trees) != 1:
            raise TreeSyntaxError(f"expected exactly one tree in {text!r}")
        return cls._from_nested(trees[0])

    @classmethod
    def _from_nested(cls, nested: list) -> Tree:
        return cls(cls._from_nested(k) for k in nested)

    def canonical(self) -> Tree:
        return Tree.parse(self._str)

    @property
    def nodes(self) -> int:
        return self._nodes

    @property
    def num_edges(self) -> int:
        return self._nodes - 1

    def depth(self) -> int:
        return 0 if not self.children else 1 + max(c.depth() for c in self.children)

    def __str__(self) -> str:
        return self._str

    def __repr__(self) -> str:
        return f"Tree({self._str!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Tree) and other._str == self._str

    def __hash__(self) -> int:
        return hash(("T", self._str))

    def __lt__(self, other: Tree) -> bool:
        return self._str < other._str


class PlanarTree:
    """Planar rooted tree; children keep their left-to-right order."""

    __slots__ = ("children", "_str", "_nodes")

    def __init__(self, children: Iterable[PlanarTree] = ()):
        kids = tuple(children)
        self.children = kids
        self._str = "[" + "".join(c._str for c in kids) + "]"
        self._nodes = 1 + sum(c._nodes for c in kids)

    @classmethod
    def parse(cls, text: str) -> PlanarTree:
        trees = _parse_many(text)
        if len(trees) != 1:
            raise TreeSyntaxError(f"expected exactly one tree in {text!r}")
        return cls._from_nested(trees[0])

    @classmethod
    def _from_nested(cls, nested: list) -> PlanarTree:
        return cls(cls._from_nested(k) for k in nested)

    @property
    def nodes(self) -> int:
        return self._nodes

    def to_tree(self) -> Tree:
        return Tree(c.to_tree() for c in self.children)

    def __str__(self) -> str:
        return self._str

    def __repr__(self) -> str:
        return f"PlanarTree({self._str!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PlanarTree) and other._str == self._str

    def __hash__(self) -> int:
        return hash(("P", self._str))

    def __lt__(self, other: PlanarTree) -> bool:
        return self._str < other._str


BULLET = Tree()
PLANAR_BULLET = PlanarTree()


def ladder(n: int, planar: bool = False):
    cls = PlanarTree if planar else Tree
    t = cls()
    for _ in range(n - 1):
        t = cls((t,))
    return t


@dataclass(frozen=True)
class Forest:
    """Commutative monomial in trees; the empty forest is the unit ``1``."""

    trees: tuple[Tree, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "trees", tuple(sorted(self.trees, key=str)))

    @classmethod
    def of(cls, *trees: Tree) -> Forest:
        return cls(tuple(trees))

    @classmethod
    def parse(cls, text: str) -> Forest:
        return cls(tuple(Tree._from_nested(t) for t in _parse_many(text)))

    def __mul__(self, other: Forest) -> Forest:
        return Forest(self.trees + other.trees)

    @property
    def nodes(self) -> int:
        return sum(t.nodes for t in self.trees)

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self) -> Iterator[Tree]:
        return iter(self.trees)

    def __str__(self) -> str:
        return "".join(str(t) for t in self.trees) if self.trees else "1"

    def __lt__(self, other: Forest) -> bool:
        return forest_key(self) < forest_key(other)


EMPTY_FOREST = Forest()


@dataclass(frozen=True)
class OrderedForest:
    """Word in planar trees; the empty word is the unit ``1``."""

    trees: tuple[PlanarTree, ...] = ()

    @classmethod
    def of(cls, *trees: PlanarTree) -> OrderedForest:
        return cls(tuple(trees))

    @classmethod
    def parse(cls, text: str) -> OrderedForest:
        return cls(tuple(PlanarTree._from_nested(t) for t in _parse_many(text)))

    def __mul__(self, other: OrderedForest) -> OrderedForest:
        return OrderedForest(self.trees + other.trees)

    @property
    def nodes(self) -> int:
        return sum(t.nodes for t in self.trees)

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self) -> Iterator[PlanarTree]:
        return iter(self.trees)

    def __getitem__(self, i):
        return self.trees[i]

    def __str__(self) -> str:
        return "".join(str(t) for t in self.trees) if self.trees else "1"

    def __lt__(self, other: OrderedForest) -> bool:
        return forest_key(self) < forest_key(other)


EMPTY_WORD = OrderedForest()


def forest_key(f) -> tuple:
    """Basis order: by node count, then number of trees, then string."""
    return (f.nodes, len(f), str(f))


# --------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def _nonplanar(n: int) -> tuple[Tree, ...]:
    if n < 1:
        return ()
    pool = [t for k in range(1, n) for t in _nonplanar(k)]
    out = [Tree(kids) for kids in _multisets(tuple(pool), 0, n - 1)]
    return tuple(sorted(out, key=str))


def _multisets(pool: tuple[Tree, ...], start: int, total: int) -> Iterator[tuple[Tree, ...]]:
    """Multisets from ``pool[start:]`` with node sum ``total`` (non-decreasing indices)."""
    if total == 0:
        yield ()
        return
    for i in range(start, len(pool)):
        t = pool[i]
        if t.nodes <= total:
            for rest in _multisets(pool, i, total - t.nodes):
                yield (t,) + rest


@lru_cache(maxsize=None)
def _planar(n: int) -> tuple[PlanarTree, ...]:
    if n < 1:
        return ()
    if n == 1:
        return (PlanarTree(),)
    out = [PlanarTree(seq) for seq in _planar_words(n - 1)]
    return tuple(sorted(out, key=str))


@lru_cache(maxsize=None)
def _planar_words(total: int) -> tuple[tuple[PlanarTree, ...], ...]:
    if total == 0:
        return ((),)
    out = []
    for first in range(1, total + 1):
        for t in _planar(first):
            for rest in _planar_words(total - first):
                out.append((t,) + rest)
    return tuple(out)


def enumerate_trees(n: int, planar: bool = False) -> list:
    """All trees with exactly ``n`` vertices, each once, sorted by string."""
    if n < 1:
        return []
    return list(_planar(n) if planar else _nonplanar(n))


def trees_up_to(n: int, planar: bool = False) -> list:
    out = []
    for k in range(1, n + 1):
        out.extend(enumerate_trees(k, planar))
    return out


def ordered_forests(grade: int) -> list[OrderedForest]:
    """All words of planar trees with total node count ``grade``."""
    return [OrderedForest(w) for w in _planar_words(grade)]


# --------------------------------------------------------------------------
# cuts


@lru_cache(maxsize=None)
def _flatten(t: Tree) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Pre-order parent array and child lists of ``t``."""
    parent: list[int] = []
    kids: list[list[int]] = []

    def visit(node: Tree, par: int) -> None:
        me = len(parent)
        parent.append(par)
        kids.append([])
        if par >= 0:
            kids[par].append(me)
        for c in node.children:
            visit(c, me)

    visit(t, -1)
    return tuple(parent), tuple(tuple(k) for k in kids)


def _subtree(kids, v: int, cut_nodes: frozenset[int]) -> Tree:
    return Tree(_subtree(kids, c, cut_nodes) for c in kids[v] if c not in cut_nodes)


@dataclass(frozen=True)
class Cut:
    tree: Tree
    edges: frozenset[int]

    def __post_init__(self):
        bad = [e for e in self.edges if not 0 <= e < self.tree.num_edges]
        if bad:
            raise IndexError(f"edge index {bad[0]} out of range for {self.tree}")
        object.__setattr__(self, "edges", frozenset(self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in sorted(self.edges)) + "}"


def all_cuts(t: Tree) -> list[Cut]:
    """Every subset of edges, the empty cut first."""
    m = t.num_edges
    out = []
    for k in range(m + 1):
        for es in combinations(range(m), k):
            out.append(Cut(t, frozenset(es)))
    return out


def _components(t: Tree, edges: frozenset[int]) -> tuple[Tree, list[Tree]]:
    parent, kids = _flatten(t)
    cut_nodes = frozenset(e + 1 for e in edges)
    root = _subtree(kids, 0, cut_nodes)
    pruned = [_subtree(kids, v, cut_nodes) for v in sorted(cut_nodes)]
    return root, pruned


def remove_cut(t: Tree, c: Cut | Iterable[int]) -> Forest:
    """The forest left after deleting the cut edges, root component included."""
    if not isinstance(c, Cut):
        c = Cut(t, frozenset(c))
    elif c.tree != t:
        raise ValueError("cut belongs to a different tree")
    root, pruned = _components(t, c.edges)
    return Forest(tuple(pruned) + (root,))


def is_admissible(t: Tree, edges: Iterable[int]) -> bool:
    parent, _ = _flatten(t)
    cut_nodes = {e + 1 for e in edges}
    for v in cut_nodes:
        u = parent[v]
        while u > 0:
            if u in cut_nodes:
                return False
            u = parent[u]
    return True


@lru_cache(maxsize=None)
def _admissible(t: Tree) -> tuple[tuple[Cut, Forest, Tree], ...]:
    out = []
    for c in all_cuts(t):
        if is_admissible(t, c.edges):
            root, pruned = _components(t, c.edges)
            out.append((c, Forest(tuple(pruned)), root))
    return tuple(out)


def admissible_cuts(t: Tree) -> list[tuple[Cut, Forest, Tree]]:
    """``(cut, pruned forest P, root tree R)`` for every admissible cut,
    the empty cut ``(∅, 1, t)`` first."""
    return list(_admissible(t))


def forest_cuts(f: Forest) -> Iterator[tuple[tuple[Cut, ...], Forest, Forest]]:
    """Admissible cuts of a forest: one admissible cut per tree.

    Yields ``(cuts, P, R)`` with ``P`` all pruned trees and ``R`` all root
    components.
    """
    per_tree = [_admissible(t) for t in f.trees]
    for choice in product(*per_tree):
        cuts = tuple(c for c, _, _ in choice)
        pruned: tuple[Tree, ...] = ()
        roots: list[Tree] = []
        for _, p, r in choice:
            pruned += p.trees
            roots.append(r)
        yield cuts, Forest(pruned), Forest(tuple(roots))


def forest_from_trees(trees: Sequence[Tree]) -> Forest:
    return Forest(tuple(trees))
