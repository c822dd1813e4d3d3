from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from postalg.butcher import Character, char_rhd
from postalg.coeff import QQ
from postalg.postgroup import (
    GroupError,
    GroupTable,
    PostGroupTable,
    TableFormatError,
    verify_postgroup,
)
from postalg.ybe import (
    BraidedGroupTable,
    RMap,
    braided_to_postgroup,
    butcher_rmap,
    butcher_rmap_expanded,
    character_braid_sides,
    format_rmap,
    parse_rmap,
    postgroup_to_rmap,
    verify_braid,
    verify_braided_group,
    verify_nondegenerate,
)
from postalg.braces import enumerate_braces, brace_to_postgroup

S3 = GroupTable.symmetric(3)


def small_postgroups():
    out = [PostGroupTable.trivial(S3), PostGroupTable.trivial(GroupTable.cyclic(4))]
    for n in (4, 6):
        out += [brace_to_postgroup(b) for b in enumerate_braces(n)]
    return out


def test_flip():
    f = RMap.flip(4)
    assert verify_braid(f).ok
    assert verify_nondegenerate(f)
    assert f.squared_is_identity()


def test_trivial_rhd_gives_conjugation():
    t = PostGroupTable.trivial(S3)
    b = postgroup_to_rmap(t)
    m, inv = S3.mul, S3.inv
    for x in range(6):
        for y in range(6):
            assert b.rmap(x, y) == (y, m[m[inv[y]][x]][y])
    assert verify_braid(b.rmap).ok


def test_abelian_trivial_is_flip():
    t = PostGroupTable.trivial(GroupTable.cyclic(5))
    assert postgroup_to_rmap(t).rmap == RMap.flip(5)


def test_butcher_table_rmap(t9):
    b = postgroup_to_rmap(t9)
    rep = verify_braid(b.rmap)
    assert rep.ok and rep.checked == 729
    assert b.rmap.squared_is_identity()
    assert verify_nondegenerate(b.rmap)
    assert verify_braided_group(b).ok
    assert braided_to_postgroup(b) == t9


def test_perturbed_rmap_fails(t9):
    r = postgroup_to_rmap(t9).rmap
    assert not verify_braid(r.swap_outputs(1, 5)).ok
    assert not verify_braid(r.swap_outputs(10, 40)).ok


def test_degenerate_map():
    r = RMap.from_function(3, lambda x, y: (0, y))
    assert not verify_nondegenerate(r)
    assert not r.is_bijective()
    assert "bijective" in verify_braid(r).failed_axioms()


@pytest.mark.parametrize("t", small_postgroups(), ids=lambda t: f"n{t.n}")
def test_every_postgroup_gives_braiding(t):
    assert verify_postgroup(t).ok
    b = postgroup_to_rmap(t)
    assert verify_braid(b.rmap).ok
    assert verify_nondegenerate(b.rmap)
    assert verify_braided_group(b).ok
    back = braided_to_postgroup(b)
    assert back == t
    assert postgroup_to_rmap(back) == b
    if t.dot.is_abelian():
        assert b.rmap.squared_is_identity()


def test_conjugation_braiding_recovers_trivial_rhd():
    circ = S3
    m, inv = circ.mul, circ.inv
    r = RMap.from_function(6, lambda x, y: (y, m[m[inv[y]][x]][y]))
    t = braided_to_postgroup(BraidedGroupTable(circ, r))
    assert t == PostGroupTable.trivial(S3)


def test_flip_braiding_on_abelian_group():
    g = GroupTable.cyclic(6)
    t = braided_to_postgroup(BraidedGroupTable(g, RMap.flip(6)))
    assert t.dot == g and t == PostGroupTable.trivial(g)


def test_braided_to_postgroup_rejects():
    with pytest.raises(GroupError):
        braided_to_postgroup(BraidedGroupTable(S3, RMap.flip(6)))


def test_rmap_file_roundtrip(t9):
    r = postgroup_to_rmap(t9).rmap
    assert parse_rmap(format_rmap(r)) == r
    with pytest.raises(TableFormatError) as info:
        parse_rmap("n=2\n0 0 -> 0 0\n0 1 -> 1 0\n1 0 -> 0 1\n1 1 - 1 1\n")
    assert info.value.lineno == 5
    with pytest.raises(TableFormatError):
        parse_rmap("n=2\n0 0 -> 0 0\n")


# ---- Butcher characters ---------------------------------------------------


def test_butcher_rmap_unit():
    e = Character.identity(QQ, 4)
    assert butcher_rmap(e, e) == (e, e)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_butcher_rmap_first_and_expanded(s1, s2):
    a = Character.random(QQ, 4, random.Random(s1))
    b = Character.random(QQ, 4, random.Random(s2))
    u, v = butcher_rmap(a, b)
    assert u == char_rhd(a, b)
    assert u("[]") == b("[]")
    assert v == butcher_rmap_expanded(a, b)


def test_butcher_braid_relation_and_involution():
    rng = random.Random(2024)
    for _ in range(3):
        a, b, c = (Character.random(QQ, 4, rng) for _ in range(3))
        lhs, rhs = character_braid_sides(a, b, c)
        assert lhs == rhs
        assert butcher_rmap(*butcher_rmap(a, b)) == (a, b)
