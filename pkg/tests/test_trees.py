from __future__ import annotations

from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from postalg.trees import (
    EMPTY_FOREST,
    Cut,
    Forest,
    OrderedForest,
    PlanarTree,
    Tree,
    TreeSyntaxError,
    _flatten,
    admissible_cuts,
    all_cuts,
    enumerate_trees,
    forest_cuts,
    ladder,
    ordered_forests,
    remove_cut,
    trees_up_to,
)

T = Tree.parse
L2, L3, CHERRY = T("[[]]"), T("[[[]]]"), T("[[][]]")


# ---- independent oracles -------------------------------------------------


def _tree_from_parents(parents):
    kids = {i: [] for i in range(len(parents) + 1)}
    for child, par in enumerate(parents, 1):
        kids[par].append(child)

    def nested(v):
        return [nested(c) for c in kids[v]]

    return nested(0)


def brute_force_trees(n):
    """Every parent array (parent index below the child) then canonical dedup."""
    seen = set()
    for parents in product(*(range(i) for i in range(1, n))):
        seen.add(str(Tree._from_nested(_tree_from_parents(parents))))
    return sorted(seen)


def dyck_planar(n):
    """Planar trees with n nodes from balanced bracket words of length 2(n-1)."""
    out = []

    def rec(prefix, opened, closed):
        if closed == n - 1:
            out.append("[" + prefix + "]")
            return
        if opened < n - 1:
            rec(prefix + "[", opened + 1, closed)
        if closed < opened:
            rec(prefix + "]", opened, closed + 1)

    rec("", 0, 0)
    return sorted(out)


def path_admissible(t, edges):
    """Admissibility by walking every root-to-leaf path."""
    parent, kids = _flatten(t)
    cut_nodes = {e + 1 for e in edges}
    for leaf in (v for v in range(len(parent)) if not kids[v]):
        hits, v = 0, leaf
        while v > 0:
            hits += v in cut_nodes
            v = parent[v]
        if hits > 1:
            return False
    return True


# ---- enumeration ---------------------------------------------------------


def test_counts_nonplanar():
    assert [len(enumerate_trees(n)) for n in range(1, 8)] == [1, 1, 2, 4, 9, 20, 48]


def test_counts_planar():
    assert [len(enumerate_trees(n, planar=True)) for n in range(1, 7)] == [1, 1, 2, 5, 14, 42]


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_brute_force(n):
    assert [str(t) for t in enumerate_trees(n)] == brute_force_trees(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_planar_enumeration_matches_dyck_words(n):
    assert [str(t) for t in enumerate_trees(n, planar=True)] == dyck_planar(n)


def test_enumeration_edge_cases():
    assert enumerate_trees(0) == []
    assert [str(t) for t in enumerate_trees(1)] == ["[]"]
    assert enumerate_trees(4) == enumerate_trees(4)


def test_ordered_forest_counts():
    assert [len(ordered_forests(g)) for g in range(6)] == [1, 1, 2, 5, 14, 42]


# ---- canonical forms and parsing -------------------------------------------


def test_sibling_order_canonical():
    assert str(T("[[][[]]]")) == str(T("[[[]][]]")) == "[[[]][]]"
    assert T("[[][[]]]") == T("[[[]][]]")
    assert PlanarTree.parse("[[][[]]]") != PlanarTree.parse("[[[]][]]")
    assert PlanarTree.parse("[[][[]]]").to_tree() == T("[[[]][]]")


def test_parse_errors():
    for bad in ["[", "]", "[[]", "[]x", "[][]"]:
        with pytest.raises(TreeSyntaxError):
            T(bad)
    assert Forest.parse("1") == EMPTY_FOREST
    assert str(Forest.parse("[][[]]")) == "[[]][]"
    assert str(OrderedForest.parse("[][[]]")) == "[][[]]"


def test_ladder_and_stats():
    assert ladder(3) == L3
    assert L3.depth() == 2 and CHERRY.depth() == 1
    assert CHERRY.nodes == 3 and CHERRY.num_edges == 2


@given(st.integers(1, 6), st.data())
def test_canonicalization_idempotent(n, data):
    t = data.draw(st.sampled_from(enumerate_trees(n, planar=True)))
    canon = t.to_tree()
    assert canon.canonical() == canon
    assert str(T(str(canon))) == str(canon)


# ---- cuts ----------------------------------------------------------------


def test_all_cuts_examples():
    assert len(all_cuts(T("[]"))) == 1
    assert len(all_cuts(L2)) == 2
    assert len(all_cuts(CHERRY)) == 4


def test_admissible_ladder3():
    got = [(str(c), str(p), str(r)) for c, p, r in admissible_cuts(L3)]
    # edge 0 joins the root to its child (lower edge), edge 1 is the upper edge
    assert got == [("{}", "1", "[[[]]]"), ("{0}", "[[]]", "[]"), ("{1}", "[]", "[[]]")]


def test_admissible_cherry_and_bullet():
    got = {(str(c), str(p), str(r)) for c, p, r in admissible_cuts(CHERRY)}
    assert got == {("{}", "1", "[[][]]"), ("{0}", "[]", "[[]]"), ("{1}", "[]", "[[]]"), ("{0,1}", "[][]", "[]")}
    assert [(str(c), str(p), str(r)) for c, p, r in admissible_cuts(T("[]"))] == [("{}", "1", "[]")]


def test_remove_cut_examples():
    assert remove_cut(L2, []) == Forest.of(L2)
    assert str(remove_cut(L2, [0])) == "[][]"
    assert str(remove_cut(CHERRY, [0, 1])) == "[][][]"
    with pytest.raises(IndexError):
        remove_cut(L2, [1])
    with pytest.raises(IndexError):
        Cut(L2, frozenset({5}))


@pytest.mark.parametrize("t", trees_up_to(6), ids=str)
def test_cut_invariants(t):
    cuts = all_cuts(t)
    assert len(cuts) == 2 ** t.num_edges
    adm = admissible_cuts(t)
    assert len(adm) <= len(cuts)
    assert (len(adm) == len(cuts)) == (t.depth() <= 1)
    expected = {frozenset(es) for k in range(t.num_edges + 1)
                for es in combinations(range(t.num_edges), k) if path_admissible(t, es)}
    assert {c.edges for c, _, _ in adm} == expected
    for c, pruned, root in adm:
        assert pruned.nodes + root.nodes == t.nodes
        assert len(pruned) == len(c)
        assert remove_cut(t, c) == pruned * Forest.of(root)
    for c in cuts:
        f = remove_cut(t, c)
        assert f.nodes == t.nodes and len(f) == len(c) + 1


def test_forest_cuts_product():
    f = Forest.of(L2, CHERRY)
    assert len(list(forest_cuts(f))) == len(admissible_cuts(L2)) * len(admissible_cuts(CHERRY))
    assert list(forest_cuts(EMPTY_FOREST)) == [((), EMPTY_FOREST, EMPTY_FOREST)]
