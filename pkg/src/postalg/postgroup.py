"""Finite post-groups as explicit operation tables.

Elements of a carrier of size ``n`` are the integers ``0 .. n-1``.  Checks are
exhaustive and report every violation instead of stopping at the first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence


class GroupError(ValueError):
    pass


class RBError(ValueError):
    pass


class TableFormatError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass
class Report:
    """Outcome of an exhaustive check."""

    name: str
    checked: int = 0
    violations: list[tuple[str, tuple]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, axiom: str, witness: tuple) -> None:
        self.violations.append((axiom, witness))

    def failed_axioms(self) -> set[str]:
        return {a for a, _ in self.violations}

    def summary(self) -> str:
        status = "pass" if self.ok else "FAIL"
        return f"{self.name}: {self.checked - len(self.violations)}/{self.checked} {status}"

    def details(self) -> str:
        return "\n".join(f"  {a} violated at {w}" for a, w in self.violations)


# --------------------------------------------------------------------------
# groups


class GroupTable:
    """Finite group given by its multiplication table; verified on construction."""

    def __init__(self, mul: Sequence[Sequence[int]], check: bool = True):
        self.mul = tuple(tuple(int(v) for v in row) for row in mul)
        self.n = len(self.mul)
        if check:
            self._validate()
        self.unit = self._find_unit()
        self.inv = tuple(self._find_inverse(a) for a in range(self.n))

    def _validate(self) -> None:
        n, m = self.n, self.mul
        if n == 0:
            raise GroupError("empty carrier")
        for a, row in enumerate(m):
            if len(row) != n:
                raise GroupError(f"row {a} has length {len(row)}, expected {n}")
            for v in row:
                if not 0 <= v < n:
                    raise GroupError(f"entry {v} out of range in row {a}")
        for a, b, c in product(range(n), repeat=3):
            if m[m[a][b]][c] != m[a][m[b][c]]:
                raise GroupError(f"not associative at {(a, b, c)}")
        unit = self._find_unit()
        if unit is None:
            raise GroupError("no two-sided unit")
        for a in range(n):
            if self._find_inverse(a, unit) is None:
                raise GroupError(f"element {a} has no inverse")

    def _find_unit(self):
        for e in range(self.n):
            if all(self.mul[e][a] == a and self.mul[a][e] == a for a in range(self.n)):
                return e
        return None

    def _find_inverse(self, a: int, unit: int | None = None):
        e = self.unit if unit is None else unit
        for b in range(self.n):
            if self.mul[a][b] == e and self.mul[b][a] == e:
                return b
        return None

    def __call__(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupTable) and self.mul == other.mul

    def __hash__(self):
        return hash(self.mul)

    def __repr__(self) -> str:
        return f"GroupTable(n={self.n})"

    def is_abelian(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a] for a in range(self.n) for b in range(a))

    def order_of(self, a: int) -> int:
        k, x = 1, a
        while x != self.unit:
            x = self.mul[x][a]
            k += 1
        return k

    def prod(self, *xs: int) -> int:
        out = self.unit
        for x in xs:
            out = self.mul[out][x]
        return out

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        if sorted(perm) != list(range(self.n)):
            return False
        m = self.mul
        return all(perm[m[a][b]] == m[perm[a]][perm[b]] for a in range(self.n) for b in range(self.n))

    def automorphisms(self) -> list[tuple[int, ...]]:
        """All automorphisms, by extending maps on a generating set."""
        gens = self.generators()
        auts = []
        images = [[b for b in range(self.n) if self.order_of(b) == self.order_of(g)] for g in gens]
        for choice in product(*images):
            perm = self._extend(gens, choice)
            if perm is not None and self.is_automorphism(perm):
                auts.append(tuple(perm))
        return sorted(auts)

    def generators(self) -> list[int]:
        gens: list[int] = []
        span = {self.unit}
        for a in range(self.n):
            if a not in span:
                gens.append(a)
                span = self.subgroup_generated(gens)
        return gens

    def subgroup_generated(self, gens: Iterable[int]) -> set[int]:
        span = {self.unit}
        frontier = [self.unit]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul[x][g]
                if y not in span:
                    span.add(y)
                    frontier.append(y)
        return span

    def _extend(self, gens, images):
        img = {self.unit: self.unit}
        frontier = [self.unit]
        while frontier:
            x = frontier.pop()
            for g, gi in zip(gens, images):
                y = self.mul[x][g]
                yi = self.mul[img[x]][gi]
                if y in img:
                    if img[y] != yi:
                        return None
                else:
                    img[y] = yi
                    frontier.append(y)
        if len(img) != self.n or len(set(img.values())) != self.n:
            return None
        return [img[a] for a in range(self.n)]

    def relabel(self, perm: Sequence[int]) -> GroupTable:
        """Transport along the bijection ``a -> perm[a]``."""
        inv = [0] * self.n
        for a, pa in enumerate(perm):
            inv[pa] = a
        mul = [[perm[self.mul[inv[x]][inv[y]]] for y in range(self.n)] for x in range(self.n)]
        return GroupTable(mul, check=False)

    def is_subgroup(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        if not s:
            return False
        return all(self.mul[a][b] in s for a in s for b in s)

    @classmethod
    def cyclic(cls, n: int) -> GroupTable:
        return cls([[(a + b) % n for b in range(n)] for a in range(n)], check=False)

    @classmethod
    def from_permutations(cls, gens: Sequence[Sequence[int]]) -> GroupTable:
        """Group generated by permutations, identity labelled 0."""
        k = len(gens[0])
        ident = tuple(range(k))
        elems = [ident]
        seen = {ident: 0}
        i = 0
        while i < len(elems):
            x = elems[i]
            for g in gens:
                y = tuple(g[x[j]] for j in range(k))
                if y not in seen:
                    seen[y] = len(elems)
                    elems.append(y)
            i += 1
        elems = [ident] + sorted(elems[1:])
        seen = {e: i for i, e in enumerate(elems)}
        # (x*y)(j) = x(y(j)): apply y first
        mul = [[seen[tuple(x[y[j]] for j in range(k))] for y in elems] for x in elems]
        return cls(mul, check=False)

    @classmethod
    def symmetric(cls, k: int) -> GroupTable:
        if k == 1:
            return cls([[0]])
        gens = [tuple([1, 0] + list(range(2, k)))]
        if k > 2:
            gens.append(tuple(list(range(1, k)) + [0]))
        return cls.from_permutations(gens)

    @classmethod
    def direct_product(cls, g: GroupTable, h: GroupTable) -> GroupTable:
        """Element ``(a, b)`` is labelled ``a * len(h) + b``."""
        n, m = g.n, h.n
        mul = [[0] * (n * m) for _ in range(n * m)]
        for a1, b1, a2, b2 in product(range(n), range(m), range(n), range(m)):
            mul[a1 * m + b1][a2 * m + b2] = g.mul[a1][a2] * m + h.mul[b1][b2]
        return cls(mul, check=False)


def is_group_hom(f: Sequence[int], g: GroupTable, h: GroupTable) -> bool:
    return all(f[g.mul[a][b]] == h.mul[f[a]][f[b]] for a in range(g.n) for b in range(g.n))


# --------------------------------------------------------------------------
# post-groups


class PostGroupTable:
    """A group ``(G, ·)`` with a second table ``▷``.  Not verified on
    construction so that defective tables can be inspected."""

    def __init__(self, dot: GroupTable, rhd: Sequence[Sequence[int]]):
        self.dot = dot
        self.rhd = tuple(tuple(int(v) for v in row) for row in rhd)
        self.n = dot.n
        if len(self.rhd) != self.n or any(len(r) != self.n for r in self.rhd):
            raise GroupError("▷ table has the wrong shape")

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, PostGroupTable) and self.dot == other.dot and self.rhd == other.rhd

    def __hash__(self):
        return hash((self.dot, self.rhd))

    def __repr__(self) -> str:
        return f"PostGroupTable(n={self.n})"

    def L(self, a: int) -> tuple[int, ...]:
        return self.rhd[a]

    def circ(self, a: int, b: int) -> int:
        return self.dot.mul[a][self.rhd[a][b]]

    def with_entry(self, a: int, b: int, value: int) -> PostGroupTable:
        rows = [list(r) for r in self.rhd]
        rows[a][b] = value
        return PostGroupTable(self.dot, rows)

    @classmethod
    def trivial(cls, g: GroupTable) -> PostGroupTable:
        """``a ▷ b = b``."""
        return cls(g, [list(range(g.n)) for _ in range(g.n)])


def verify_postgroup(t: PostGroupTable) -> Report:
    """Exhaustive check of distributivity (Post-2), weighted associativity
    (Post-4), bijectivity of every ``L_a`` and the unit laws."""
    rep = Report("postgroup")
    n, m, r, e = t.n, t.dot.mul, t.rhd, t.dot.unit
    for a in range(n):
        rep.checked += 1
        if len(set(r[a])) != n:
            rep.fail("bijective", (a,))
        rep.checked += 2
        if r[a][e] != e:
            rep.fail("a▷e=e", (a,))
        if r[e][a] != a:
            rep.fail("e▷a=a", (a,))
    for a in range(n):
        ra = r[a]
        for b in range(n):
            ab = m[a][ra[b]]
            rb = r[b]
            for c in range(n):
                rep.checked += 2
                if ra[m[b][c]] != m[ra[b]][ra[c]]:
                    rep.fail("Post-2", (a, b, c))
                if r[ab][c] != ra[rb[c]]:
                    rep.fail("Post-4", (a, b, c))
    return rep


def subadjacent(t: PostGroupTable) -> GroupTable:
    """``a∘b = a·(a▷b)``."""
    return GroupTable([[t.circ(a, b) for b in range(t.n)] for a in range(t.n)])


def dagger(t: PostGroupTable, a: int) -> int:
    """``(L_a)^{-1}(a^{-1})``: the inverse of ``a`` in the sub-adjacent group."""
    target = t.dot.inverse(a)
    return t.rhd[a].index(target)


def check_action_homomorphism(t: PostGroupTable) -> Report:
    """``L_{a∘b} = L_a L_b`` for all ``a, b``."""
    rep = Report("L▷ homomorphism")
    for a, b in product(range(t.n), repeat=2):
        rep.checked += 1
        ab = t.circ(a, b)
        if any(t.rhd[ab][c] != t.rhd[a][t.rhd[b][c]] for c in range(t.n)):
            rep.fail("L_(a∘b)=L_a L_b", (a, b))
    return rep


def is_postgroup_hom(f: Sequence[int], s: PostGroupTable, t: PostGroupTable) -> bool:
    n = s.n
    return all(
        f[s.dot.mul[a][b]] == t.dot.mul[f[a]][f[b]] and f[s.rhd[a][b]] == t.rhd[f[a]][f[b]]
        for a in range(n)
        for b in range(n)
    )


# --------------------------------------------------------------------------
# actions and relative Rota-Baxter operators


class ActionTable:
    """Action ``Φ`` of ``G`` on ``H`` by automorphisms: ``phi[g][h]``."""

    def __init__(self, g: GroupTable, h: GroupTable, phi: Sequence[Sequence[int]]):
        self.G, self.H = g, h
        self.phi = tuple(tuple(row) for row in phi)
        if len(self.phi) != g.n or any(len(row) != h.n for row in self.phi):
            raise GroupError("action table has the wrong shape")

    def __call__(self, a: int, h: int) -> int:
        return self.phi[a][h]

    def inverse_apply(self, a: int, h: int) -> int:
        return self.phi[a].index(h)

    def verify(self) -> Report:
        rep = Report("action")
        G, H = self.G, self.H
        for a in range(G.n):
            rep.checked += 1
            if not H.is_automorphism(self.phi[a]):
                rep.fail("Φ(a)∈Aut(H)", (a,))
        rep.checked += 1
        if self.phi[G.unit] != tuple(range(H.n)):
            rep.fail("Φ(e)=Id", (G.unit,))
        for a, b in product(range(G.n), repeat=2):
            rep.checked += 1
            ab = G.mul[a][b]
            if any(self.phi[ab][h] != self.phi[a][self.phi[b][h]] for h in range(H.n)):
                rep.fail("Φ(ab)=Φ(a)Φ(b)", (a, b))
        return rep

    @classmethod
    def trivial(cls, g: GroupTable, h: GroupTable) -> ActionTable:
        return cls(g, h, [list(range(h.n)) for _ in range(g.n)])

    @classmethod
    def adjoint(cls, g: GroupTable) -> ActionTable:
        """Conjugation ``Ad_a(b) = a b a^{-1}`` of ``G`` on itself."""
        m = g.mul
        return cls(g, g, [[m[m[a][b]][g.inv[a]] for b in range(g.n)] for a in range(g.n)])


@dataclass
class RBOperator:
    B: tuple[int, ...]
    action: ActionTable

    def __post_init__(self):
        self.B = tuple(self.B)
        if len(self.B) != self.action.H.n:
            raise RBError("B must be defined on every element of H")

    @property
    def G(self) -> GroupTable:
        return self.action.G

    @property
    def H(self) -> GroupTable:
        return self.action.H

    def verify(self) -> Report:
        return verify_rrbo(self.B, self.action)


def verify_rrbo(B: Sequence[int], action: ActionTable) -> Report:
    """``B(h)·B(k) = B(h·Φ(B(h))(k))`` for all ``h, k``."""
    rep = Report("RRBO")
    G, H = action.G, action.H
    for h, k in product(range(H.n), repeat=2):
        rep.checked += 1
        if G.mul[B[h]][B[k]] != B[H.mul[h][action.phi[B[h]][k]]]:
            rep.fail("RRBO", (h, k))
    return rep


def is_rb_operator(B: Sequence[int], action: ActionTable) -> bool:
    G, H, phi = action.G, action.H, action.phi
    for h in range(H.n):
        bh = B[h]
        row = G.mul[bh]
        for k in range(H.n):
            if row[B[k]] != B[H.mul[h][phi[bh][k]]]:
                return False
    return True


def id_as_rb(t: PostGroupTable) -> RBOperator:
    """Identity map as an RB operator on the sub-adjacent group, acting on
    ``(G, ·)`` through ``L^▷``."""
    circ = subadjacent(t)
    action = ActionTable(circ, t.dot, [t.rhd[a] for a in range(t.n)])
    return RBOperator(tuple(range(t.n)), action)


def descendant_group(rb: RBOperator) -> GroupTable:
    """``h∘k = h·Φ(B(h))(k)``."""
    H, phi, B = rb.H, rb.action.phi, rb.B
    return GroupTable([[H.mul[h][phi[B[h]][k]] for k in range(H.n)] for h in range(H.n)])


def rb_to_postgroup(rb: RBOperator) -> PostGroupTable:
    """``h▷k = Φ(B(h))(k)`` on ``(H, ·_H)``."""
    rep = rb.verify()
    if not rep.ok:
        raise RBError(f"not a relative Rota-Baxter operator: {rep.violations[0]}")
    phi, B = rb.action.phi, rb.B
    return PostGroupTable(rb.H, [[phi[B[h]][k] for k in range(rb.H.n)] for h in range(rb.H.n)])


def factorization_product(B: Sequence[int], action: ActionTable) -> list[list[int]]:
    """Group law on ``H×G`` transported from ``H ⋊_Φ G`` along
    ``(h, a) -> (h, B(h)a)``.  The pair ``(h, a)`` is labelled ``h*|G| + a``."""
    G, H, phi = action.G, action.H, action.phi
    gm, hm, ng = G.mul, H.mul, G.n
    size = H.n * ng
    out = [[0] * size for _ in range(size)]
    for h, a, k, b in product(range(H.n), range(ng), range(H.n), range(ng)):
        ba = gm[B[h]][a]
        first = hm[h][phi[ba][k]]
        second = G.prod(G.inv[B[first]], B[h], a, B[k], b)
        out[h * ng + a][k * ng + b] = first * ng + second
    return out


def semidirect_factorization_check(B: Sequence[int], action: ActionTable) -> bool:
    """Whether ``H×{e_G}`` and ``{e_H}×G`` are subgroups of ``(H×G, ∗)``."""
    G, H = action.G, action.H
    table = GroupTable(factorization_product(B, action), check=False)
    left = [h * G.n + G.unit for h in range(H.n)]
    right = [H.unit * G.n + a for a in range(G.n)]
    return table.is_subgroup(left) and table.is_subgroup(right)


def find_rb_operators(action: ActionTable, limit: int = 6**6) -> list[tuple[int, ...]]:
    """Brute force over every map ``H -> G``."""
    G, H = action.G, action.H
    if G.n ** H.n > limit:
        raise ValueError(f"search space {G.n}^{H.n} exceeds limit {limit}")
    return [B for B in product(range(G.n), repeat=H.n) if is_rb_operator(B, action)]


# --------------------------------------------------------------------------
# matched pairs


@dataclass
class MatchedPairData:
    """Groups ``G``, ``H`` with ``a⇀h = lact[a][h]`` and ``a↼h = ract[a][h]``."""

    G: GroupTable
    H: GroupTable
    lact: tuple[tuple[int, ...], ...]
    ract: tuple[tuple[int, ...], ...]

    def sigma(self, a: int, h: int) -> tuple[int, int]:
        return self.lact[a][h], self.ract[a][h]


def verify_matched_pair(mp: MatchedPairData, triples: Iterable[tuple[int, int, int]] | None = None) -> Report:
    """MG-1 .. MG-6.  Three-variable axioms run over ``triples`` when given,
    otherwise over everything."""
    rep = Report("matched pair")
    G, H, L, R = mp.G, mp.H, mp.lact, mp.ract
    gm, hm = G.mul, H.mul
    for h in range(H.n):
        rep.checked += 1
        if L[G.unit][h] != h:
            rep.fail("MG-1", (h,))
    for a in range(G.n):
        rep.checked += 1
        if R[a][H.unit] != a:
            rep.fail("MG-4", (a,))
    if triples is None:
        gg = list(product(range(G.n), range(G.n), range(H.n)))
        hh = list(product(range(G.n), range(H.n), range(H.n)))
    else:
        triples = list(triples)
        gg = [(x % G.n, y % G.n, z % H.n) for x, y, z in triples]
        hh = [(x % G.n, y % H.n, z % H.n) for x, y, z in triples]
    for a, b, h in gg:
        rep.checked += 2
        if L[a][L[b][h]] != L[gm[a][b]][h]:
            rep.fail("MG-2", (a, b, h))
        if R[gm[a][b]][h] != gm[R[a][L[b][h]]][R[b][h]]:
            rep.fail("MG-3", (a, b, h))
    for a, h, k in hh:
        rep.checked += 2
        if R[R[a][h]][k] != R[a][hm[h][k]]:
            rep.fail("MG-5", (a, h, k))
        if L[a][hm[h][k]] != hm[L[a][h]][L[R[a][h]][k]]:
            rep.fail("MG-6", (a, h, k))
    return rep


def rb_to_matched_pair(rb: RBOperator) -> MatchedPairData:
    """``a⇀h = Φ(a)(h)``, ``a↼h = B(Φ(a)(h))^{-1}·a·B(h)`` between ``(G, ·)``
    and the descendant group on ``H``."""
    G, phi, B = rb.G, rb.action.phi, rb.B
    lact = [[phi[a][h] for h in range(rb.H.n)] for a in range(G.n)]
    ract = [[G.prod(G.inv[B[phi[a][h]]], a, B[h]) for h in range(rb.H.n)] for a in range(G.n)]
    return MatchedPairData(G, descendant_group(rb), tuple(map(tuple, lact)), tuple(map(tuple, ract)))


# --------------------------------------------------------------------------
# table files


def _format_rows(rows) -> list[str]:
    return [" ".join(str(v) for v in row) for row in rows]


def format_table(t: PostGroupTable) -> str:
    lines = [f"n={t.n}", "dot:"] + _format_rows(t.dot.mul) + ["rhd:"] + _format_rows(t.rhd)
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, ln in enumerate(text.splitlines(), 1):
        ln = ln.split("#", 1)[0].strip()
        if ln:
            out.append((i, ln))
    return out


def parse_sections(text: str, names: Sequence[str]) -> tuple[int, dict[str, list[list[int]]]]:
    """Read ``n=<size>`` followed by the named ``<name>:`` blocks of ``n`` rows."""
    lines = _content_lines(text)
    if not lines:
        raise TableFormatError(1, "empty table file")
    lineno, head = lines[0]
    if not head.startswith("n="):
        raise TableFormatError(lineno, "expected 'n=<size>'")
    try:
        n = int(head[2:])
    except ValueError:
        raise TableFormatError(lineno, f"bad size {head[2:]!r}") from None
    if n < 1:
        raise TableFormatError(lineno, "size must be positive")
    pos = 1
    blocks: dict[str, list[list[int]]] = {}
    for name in names:
        if pos >= len(lines):
            raise TableFormatError(lines[-1][0], f"missing '{name}:' section")
        lineno, ln = lines[pos]
        if ln != f"{name}:":
            raise TableFormatError(lineno, f"expected '{name}:'")
        pos += 1
        rows = []
        for _ in range(n):
            if pos >= len(lines):
                raise TableFormatError(lines[-1][0], f"'{name}' needs {n} rows")
            lineno, ln = lines[pos]
            try:
                row = [int(v) for v in ln.split()]
            except ValueError:
                raise TableFormatError(lineno, f"non-integer entry in {ln!r}") from None
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise TableFormatError(lineno, f"row must hold {n} indices in [0, {n})")
            rows.append(row)
            pos += 1
        blocks[name] = rows
    if pos != len(lines):
        raise TableFormatError(lines[pos][0], "trailing content")
    return n, blocks


def parse_table(text: str) -> PostGroupTable:
    _n, blocks = parse_sections(text, ("dot", "rhd"))
    try:
        dot = GroupTable(blocks["dot"])
    except GroupError as exc:
        raise TableFormatError(1, f"dot is not a group: {exc}") from None
    if dot.unit != 0:
        raise TableFormatError(1, "element 0 must be the unit of dot")
    return PostGroupTable(dot, blocks["rhd"])
