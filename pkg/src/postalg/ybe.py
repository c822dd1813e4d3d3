"""Set-theoretic Yang-Baxter solutions from post-groups and back."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import bck
from .butcher import Character, char_compose, char_inverse_circ, char_rhd
from .postgroup import (
    GroupError,
    GroupTable,
    MatchedPairData,
    PostGroupTable,
    Report,
    TableFormatError,
    _content_lines,
    subadjacent,
    verify_matched_pair,
)
from .trees import Forest, all_cuts, forest_cuts, remove_cut


@dataclass(frozen=True)
class RMap:
    """``R(x, y) = table[x*n + y]`` on the carrier ``0 .. n-1``."""

    n: int
    table: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(p) for p in self.table))
        if len(self.table) != self.n * self.n:
            raise ValueError(f"R needs {self.n * self.n} entries, got {len(self.table)}")

    def __call__(self, x: int, y: int) -> tuple[int, int]:
        return self.table[x * self.n + y]

    def phi(self, x: int, y: int) -> int:
        return self.table[x * self.n + y][0]

    def psi(self, y: int, x: int) -> int:
        return self.table[x * self.n + y][1]

    @classmethod
    def from_function(cls, n: int, fn) -> RMap:
        return cls(n, tuple(fn(x, y) for x in range(n) for y in range(n)))

    @classmethod
    def flip(cls, n: int) -> RMap:
        return cls.from_function(n, lambda x, y: (y, x))

    def swap_outputs(self, i: int, j: int) -> RMap:
        """Exchange two output pairs: a bijection-preserving perturbation."""
        t = list(self.table)
        t[i], t[j] = t[j], t[i]
        return RMap(self.n, tuple(t))

    def is_bijective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def squared_is_identity(self) -> bool:
        return all(self(*self(x, y)) == (x, y) for x in range(self.n) for y in range(self.n))


def verify_braid(r: RMap) -> Report:
    """``R12 R23 R12 = R23 R12 R23`` on every triple; a non-bijective ``R``
    is recorded as a violation as well."""
    rep = Report("braid")
    for x, y, z in product(range(r.n), repeat=3):
        rep.checked += 1
        u, v = r(x, y)
        v, w = r(v, z)
        u, v = r(u, v)
        lhs = (u, v, w)
        b, c = r(y, z)
        a, b = r(x, b)
        b, c = r(b, c)
        if lhs != (a, b, c):
            rep.fail("braid", (x, y, z))
    if not r.is_bijective():
        rep.fail("bijective", ())
    return rep


def verify_nondegenerate(r: RMap) -> bool:
    n = r.n
    for x in range(n):
        if len({r.phi(x, y) for y in range(n)}) != n:
            return False
        if len({r.psi(x, y) for y in range(n)}) != n:
            return False
    return True


@dataclass(frozen=True)
class BraidedGroupTable:
    group: GroupTable
    rmap: RMap

    def matched_pair(self) -> MatchedPairData:
        n = self.group.n
        lact = tuple(tuple(self.rmap.phi(a, b) for b in range(n)) for a in range(n))
        ract = tuple(tuple(self.rmap(a, b)[1] for b in range(n)) for a in range(n))
        return MatchedPairData(self.group, self.group, lact, ract)


def verify_braided_group(b: BraidedGroupTable) -> Report:
    """Matched-pair axioms for ``(G, G, R)`` plus ``(a⇀b)(a↼b) = ab``."""
    rep = verify_matched_pair(b.matched_pair())
    rep.name = "braided group"
    g = b.group
    for x, y in product(range(g.n), repeat=2):
        rep.checked += 1
        u, v = b.rmap(x, y)
        if g.mul[u][v] != g.mul[x][y]:
            rep.fail("compatibility", (x, y))
    return rep


def postgroup_to_rmap(t: PostGroupTable) -> BraidedGroupTable:
    """``R(a, b) = (a▷b, (a▷b)†∘a∘b)`` over the sub-adjacent group."""
    circ = subadjacent(t)
    m = circ.mul

    def r(a, b):
        u = t.rhd[a][b]
        return u, m[m[circ.inv[u]][a]][b]

    return BraidedGroupTable(circ, RMap.from_function(t.n, r))


def braided_to_postgroup(b: BraidedGroupTable) -> PostGroupTable:
    """``a▷b = a⇀b`` and ``a·b = a∘(a†⇀b)``."""
    rep = verify_braided_group(b)
    if not rep.ok:
        raise GroupError(f"not a braided group: {rep.violations[0]}")
    g, r = b.group, b.rmap
    n = g.n
    dot = [[g.mul[a][r.phi(g.inv[a], x)] for x in range(n)] for a in range(n)]
    rhd = [[r.phi(a, x) for x in range(n)] for a in range(n)]
    return PostGroupTable(GroupTable(dot), rhd)


# --------------------------------------------------------------------------
# Butcher characters


def butcher_rmap(a: Character, b: Character) -> tuple[Character, Character]:
    u = char_rhd(a, b)
    return u, char_compose(char_compose(char_inverse_circ(u), a), b)


def _forest_all_cuts(f: Forest):
    """Every choice of one cut per tree: ``(total edges cut, remaining forest)``."""
    for choice in product(*(all_cuts(t) for t in f.trees)):
        rest = Forest()
        for t, c in zip(f.trees, choice):
            rest = rest * remove_cut(t, c)
        yield sum(len(c) for c in choice), rest


def butcher_rmap_expanded(a: Character, b: Character) -> Character:
    """Second component of the Butcher R-map from the expanded sum over
    ``Δ^(2)`` terms, cuts of the first factor and admissible cuts of what
    remains, with sign ``(-1)^(|c| + number of trees)``."""
    ring = a.ring
    out = {}
    for t in a.values:
        s = ring.zero()
        for (f1, f2, f3), coef in bck.iterated_coproduct(bck.element(t), 3).items():
            tail = a(f2) * b(f3)
            inner = ring.zero()
            for ncut, rest in _forest_all_cuts(f1):
                sign = -1 if (ncut + len(f1)) % 2 else 1
                for _cuts, pruned, roots in forest_cuts(rest):
                    term = a(pruned) * b(roots)
                    inner = inner + term if sign > 0 else inner - term
            s = s + ring.coerce(coef) * inner * tail
        out[t] = s
    return Character(ring, a.order, out)


def character_braid_sides(a: Character, b: Character, c: Character):
    """Both sides of the braid relation on the triple ``(a, b, c)``."""
    x, y = butcher_rmap(a, b)
    y, z = butcher_rmap(y, c)
    x, y = butcher_rmap(x, y)
    lhs = (x, y, z)
    q, r = butcher_rmap(b, c)
    p, q = butcher_rmap(a, q)
    q, r = butcher_rmap(q, r)
    return lhs, (p, q, r)


# --------------------------------------------------------------------------
# RMap files


def format_rmap(r: RMap) -> str:
    lines = [f"n={r.n}"]
    for x, y in product(range(r.n), repeat=2):
        u, v = r(x, y)
        lines.append(f"{x} {y} -> {u} {v}")
    return "\n".join(lines) + "\n"


def parse_rmap(text: str) -> RMap:
    lines = _content_lines(text)
    if not lines or not lines[0][1].startswith("n="):
        raise TableFormatError(lines[0][0] if lines else 1, "expected 'n=<size>'")
    try:
        n = int(lines[0][1][2:])
    except ValueError:
        raise TableFormatError(lines[0][0], "bad size") from None
    entries: dict[tuple[int, int], tuple[int, int]] = {}
    for lineno, ln in lines[1:]:
        lhs, sep, rhs = ln.partition("->")
        try:
            if not sep:
                raise ValueError
            x, y = (int(v) for v in lhs.split())
            u, v = (int(w) for w in rhs.split())
        except ValueError:
            raise TableFormatError(lineno, "expected 'x y -> u v'") from None
        if not all(0 <= w < n for w in (x, y, u, v)):
            raise TableFormatError(lineno, f"index out of range [0, {n})")
        if (x, y) in entries:
            raise TableFormatError(lineno, f"duplicate entry for ({x}, {y})")
        entries[(x, y)] = (u, v)
    if len(entries) != n * n:
        raise TableFormatError(lines[-1][0], f"expected {n * n} entries, got {len(entries)}")
    return RMap(n, tuple(entries[(x, y)] for x in range(n) for y in range(n)))

