"""Skew-left braces, conversion to and from post-groups, and enumeration of
small braces up to isomorphism."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Sequence

from .postgroup import (
    GroupError,
    GroupTable,
    PostGroupTable,
    Report,
    TableFormatError,
    is_group_hom,
    parse_sections,
    subadjacent,
)

MAX_ENUM = 8


@dataclass(frozen=True)
class BraceTable:
    """Two group laws on ``0 .. n-1``: ``circ`` and ``dot``."""

    circ: GroupTable
    dot: GroupTable

    def __post_init__(self):
        if self.circ.n != self.dot.n:
            raise GroupError("circ and dot live on carriers of different size")

    @property
    def n(self) -> int:
        return self.dot.n


def verify_brace(b: BraceTable) -> Report:
    """``a∘(b·c) = (a∘b)·a⁻¹·(a∘c)`` on every triple."""
    rep = Report("brace")
    c, d = b.circ.mul, b.dot.mul
    inv = b.dot.inv
    for x, y, z in product(range(b.n), repeat=3):
        rep.checked += 1
        if c[x][d[y][z]] != d[d[c[x][y]][inv[x]]][c[x][z]]:
            rep.fail("brace", (x, y, z))
    return rep


def postgroup_to_brace(t: PostGroupTable) -> BraceTable:
    return BraceTable(subadjacent(t), t.dot)


def brace_to_postgroup(b: BraceTable) -> PostGroupTable:
    """``a▷b = a⁻¹·(a∘b)``."""
    rep = verify_brace(b)
    if not rep.ok:
        raise GroupError(f"brace axiom violated at {rep.violations[0][1]}")
    d, c, inv = b.dot.mul, b.circ.mul, b.dot.inv
    return PostGroupTable(b.dot, [[d[inv[x]][c[x][y]] for y in range(b.n)] for x in range(b.n)])


def is_brace_hom(f: Sequence[int], b1: BraceTable, b2: BraceTable) -> bool:
    return is_group_hom(f, b1.circ, b2.circ) and is_group_hom(f, b1.dot, b2.dot)


# --------------------------------------------------------------------------
# small groups


def _closure_table(gens: Sequence, mul: Callable, ident) -> GroupTable:
    elems = [ident]
    seen = {ident}
    i = 0
    while i < len(elems):
        for g in gens:
            y = mul(elems[i], g)
            if y not in seen:
                seen.add(y)
                elems.append(y)
        i += 1
    elems = [ident] + sorted(elems[1:])
    idx = {e: k for k, e in enumerate(elems)}
    return GroupTable([[idx[mul(x, y)] for y in elems] for x in elems])


def _quaternion_mul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quaternion_group() -> GroupTable:
    return _closure_table([(0, 1, 0, 0), (0, 0, 1, 0)], _quaternion_mul, (1, 0, 0, 0))


def dihedral_group(k: int) -> GroupTable:
    """Symmetries of a ``k``-gon, order ``2k``."""
    rot = tuple((i + 1) % k for i in range(k))
    ref = tuple((-i) % k for i in range(k))
    return GroupTable.from_permutations([rot, ref])


def abelian_group(*orders: int) -> GroupTable:
    g = GroupTable.cyclic(orders[0])
    for m in orders[1:]:
        g = GroupTable.direct_product(g, GroupTable.cyclic(m))
    return g


@lru_cache(maxsize=None)
def small_groups(n: int) -> tuple[tuple[str, GroupTable], ...]:
    """One representative of each isomorphism class of groups of order ``n <= 8``."""
    if not 1 <= n <= MAX_ENUM:
        raise ValueError(f"group catalog covers orders 1..{MAX_ENUM}")
    catalog = {
        1: [("C1", abelian_group(1))],
        2: [("C2", abelian_group(2))],
        3: [("C3", abelian_group(3))],
        4: [("C4", abelian_group(4)), ("C2xC2", abelian_group(2, 2))],
        5: [("C5", abelian_group(5))],
        6: [("C6", abelian_group(6)), ("S3", GroupTable.symmetric(3))],
        7: [("C7", abelian_group(7))],
        8: [
            ("C8", abelian_group(8)),
            ("C4xC2", abelian_group(4, 2)),
            ("C2xC2xC2", abelian_group(2, 2, 2)),
            ("D4", dihedral_group(4)),
            ("Q8", quaternion_group()),
        ],
    }
    return tuple(catalog[n])


# --------------------------------------------------------------------------
# enumeration through regular subgroups of the holomorph


def _regular_subgroups(a: GroupTable, auts: list[tuple[int, ...]]):
    """Maps ``λ : A -> Aut(A)`` (as indices into ``auts``) whose graph
    ``{(x, λ_x)}`` is a subgroup of ``A ⋊ Aut(A)``."""
    n = a.n
    index = {p: i for i, p in enumerate(auts)}
    comp = [[index[tuple(p[q[x]] for x in range(n))] for q in auts] for p in auts]
    ident = index[tuple(range(n))]
    m = a.mul

    def hol(x, y):
        return m[x[0]][auts[x[1]][y[0]]], comp[x[1]][y[1]]

    def close(lam: list, new: tuple[int, int]):
        lam = lam[:]
        gens = [(x, lam[x]) for x in range(n) if lam[x] is not None and x != a.unit] + [new]
        if lam[new[0]] is not None and lam[new[0]] != new[1]:
            return None
        lam[new[0]] = new[1]
        frontier = [(x, lam[x]) for x in range(n) if lam[x] is not None]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = hol(x, g)
                if lam[y[0]] is None:
                    lam[y[0]] = y[1]
                    frontier.append(y)
                elif lam[y[0]] != y[1]:
                    return None
        return lam

    out = []

    def search(lam):
        try:
            x = lam.index(None)
        except ValueError:
            out.append(tuple(lam))
            return
        for k in range(len(auts)):
            nxt = close(lam, (x, k))
            if nxt is not None:
                search(nxt)

    start = [None] * n
    start[a.unit] = ident
    search(start)
    return out


def _canonical_circ(circ: list[list[int]], auts) -> tuple[tuple[int, ...], ...]:
    n = len(circ)
    best = None
    for p in auts:
        inv = [0] * n
        for x, px in enumerate(p):
            inv[px] = x
        t = tuple(tuple(p[circ[inv[x]][inv[y]]] for y in range(n)) for x in range(n))
        if best is None or t < best:
            best = t
    return best


def enumerate_braces(n: int) -> list[BraceTable]:
    """All skew-left braces of order ``n`` up to isomorphism.

    The additive group runs over the catalog of groups of order ``n``; for
    each one the braces correspond to ``Aut``-conjugacy classes of regular
    subgroups of the holomorph.  Each brace is returned in the labelling
    with the lexicographically smallest ``circ`` table.
    """
    if not 1 <= n <= MAX_ENUM:
        raise ValueError(f"brace enumeration supports 1 <= n <= {MAX_ENUM}, got {n}")
    out = []
    for _name, a in small_groups(n):
        auts = a.automorphisms()
        seen = set()
        for lam in _regular_subgroups(a, auts):
            circ = [[a.mul[x][auts[lam[x]][y]] for y in range(n)] for x in range(n)]
            key = _canonical_circ(circ, auts)
            if key not in seen:
                seen.add(key)
        for key in sorted(seen):
            out.append(BraceTable(GroupTable(key), a))
    return out


# --------------------------------------------------------------------------
# brace files


def format_brace(b: BraceTable) -> str:
    rows = lambda t: [" ".join(map(str, r)) for r in t]  # noqa: E731
    return "\n".join([f"n={b.n}", "circ:", *rows(b.circ.mul), "dot:", *rows(b.dot.mul)]) + "\n"


def parse_brace(text: str) -> BraceTable:
    _n, blocks = parse_sections(text, ("circ", "dot"))
    groups = {}
    for name in ("circ", "dot"):
        try:
            groups[name] = GroupTable(blocks[name])
        except GroupError as exc:
            raise TableFormatError(1, f"{name} is not a group: {exc}") from None
        if groups[name].unit != 0:
            raise TableFormatError(1, f"element 0 must be the unit of {name}")
    return BraceTable(groups["circ"], groups["dot"])
