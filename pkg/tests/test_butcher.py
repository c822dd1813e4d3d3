from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from postalg.butcher import (
    Character,
    CharacterError,
    FinitePregroup,
    char_compose,
    char_dot,
    char_inverse_antipode,
    char_inverse_circ,
    char_inverse_dot,
    char_rhd,
    convolution,
    finite_pregroup,
    format_character,
    parse_character,
)
from postalg.coeff import QQ, PrimeField

F3 = PrimeField(3)


def rand_char(seed, order=5, ring=QQ):
    return Character.random(ring, order, random.Random(seed))


seeds = st.integers(0, 10**6)


def test_dot_examples():
    a = Character(QQ, 3, {"[]": 2})
    b = Character(QQ, 3, {"[]": 3})
    assert char_dot(a, b)("[]") == 5
    assert char_dot(a, Character.identity(QQ, 3)) == a
    a3, b3 = Character(F3, 2, {"[]": 2}), Character(F3, 2, {"[]": 2})
    assert char_dot(a3, b3)("[]") == F3.coerce(1)


def test_rhd_examples():
    a, b = rand_char(1, 4), rand_char(2, 4)
    r = char_rhd(a, b)
    assert r("[]") == b("[]")
    assert r("[[]]") == b("[[]]") + a("[]") * b("[]")
    assert r("[[][]]") == b("[[][]]") + 2 * a("[]") * b("[[]]") + a("[]") ** 2 * b("[]")
    assert r("[[[]]]") == b("[[[]]]") + a("[]") * b("[[]]") + a("[[]]") * b("[]")


def test_compose_examples():
    a, b = rand_char(3, 4), rand_char(4, 4)
    c = char_compose(a, b)
    assert c("[]") == a("[]") + b("[]")
    assert c("[[]]") == a("[[]]") + b("[[]]") + a("[]") * b("[]")
    assert c("[[[]]]") == a("[[[]]]") + b("[[[]]]") + a("[]") * b("[[]]") + a("[[]]") * b("[]")
    assert c("[[][]]") == a("[[][]]") + b("[[][]]") + 2 * a("[]") * b("[[]]") + a("[]") ** 2 * b("[]")
    assert char_compose(a, Character.identity(QQ, 4)) == a


def test_inverse_examples():
    a = rand_char(5, 4)
    inv = char_inverse_circ(a)
    assert inv("[]") == -a("[]")
    assert inv("[[]]") == -a("[[]]") + a("[]") ** 2
    e = Character.identity(QQ, 4)
    assert char_inverse_circ(e) == e
    assert char_inverse_dot(a)("[[]]") == -a("[[]]")


def test_character_defaults_and_errors():
    a = Character(QQ, 3, {"[[]]": Fraction(1, 2)})
    assert a("[]") == 0 and a("1") == 1
    assert a("[[]][[]]") == Fraction(1, 4)
    with pytest.raises(CharacterError):
        Character(QQ, 2, {"[[][]]": 1})
    with pytest.raises(CharacterError):
        char_dot(a, Character(QQ, 4, {}))
    with pytest.raises(CharacterError):
        char_rhd(a, Character(F3, 3, {}))


def test_finite_carrier_sizes():
    assert len(finite_pregroup(3, 2)) == 9
    assert len(finite_pregroup(3, 3)) == 81
    g = FinitePregroup(3, 1)
    assert len(g) == 3
    assert all(g.rhd(a, b) == b for a in g for b in g)
    for p in (2, 4, 1):
        with pytest.raises(ValueError):
            FinitePregroup(p, 2)


def test_finite_index_roundtrip():
    g = FinitePregroup(3, 3)
    assert g.element(0) == Character.identity(F3, 3)
    assert all(g.index(g.element(i)) == i for i in range(len(g)))


def test_finite_pregroup_axioms_exhaustive():
    g = FinitePregroup(3, 2)
    els = g.elements()
    for a, b, c in product(els, repeat=3):
        assert char_rhd(a, char_dot(b, c)) == char_dot(char_rhd(a, b), char_rhd(a, c))
        assert char_rhd(char_compose(a, b), c) == char_rhd(a, char_rhd(b, c))


def test_finite_closure_and_inverse():
    g = FinitePregroup(3, 2)
    idx = {g.index(a) for a in g}
    assert idx == set(range(9))
    e = Character.identity(F3, 2)
    for a in g:
        assert char_compose(a, char_inverse_circ(a)) == e


@settings(max_examples=25, deadline=None)
@given(seeds, seeds, seeds)
def test_pregroup_axioms_rational(s1, s2, s3):
    a, b, c = rand_char(s1), rand_char(s2), rand_char(s3)
    assert char_rhd(a, char_dot(b, c)) == char_dot(char_rhd(a, b), char_rhd(a, c))
    assert char_rhd(char_dot(a, char_rhd(a, b)), c) == char_rhd(a, char_rhd(b, c))
    assert char_dot(a, b) == char_dot(b, a)


@settings(max_examples=25, deadline=None)
@given(seeds, seeds, seeds)
def test_butcher_group(s1, s2, s3):
    a, b, c = rand_char(s1), rand_char(s2), rand_char(s3)
    assert char_compose(char_compose(a, b), c) == char_compose(a, char_compose(b, c))
    e = Character.identity(QQ, 5)
    inv = char_inverse_circ(a)
    assert char_compose(a, inv) == e and char_compose(inv, a) == e


@settings(max_examples=15, deadline=None)
@given(seeds, seeds)
def test_compose_is_convolution(s1, s2):
    a, b = rand_char(s1), rand_char(s2)
    assert char_compose(a, b) == convolution(a, b)
    assert char_inverse_circ(a) == char_inverse_antipode(a)


def test_prime_field_characters_random():
    rng = random.Random(11)
    a, b = Character.random(F3, 4, rng), Character.random(F3, 4, rng)
    assert char_compose(a, b) == convolution(a, b)


def test_text_roundtrip():
    a = rand_char(9, 4)
    assert parse_character(format_character(a)) == a
    b = Character(F3, 3, {"[[]]": 2})
    assert parse_character(format_character(b)) == b
    assert format_character(b) == "order 3 ring Fp:3\n[[]] 2\n"
    assert parse_character("order 2 ring Fp:3\n[] 2 mod 3\n")("[]") == F3.coerce(2)


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("order x ring Q\n", 1),
    ("order 2 ring Q\n[] 1\n[[[]]] 1\n", 3),
    ("order 2 ring Q\n\n[] 1/0\n", 3),
    ("order 2 ring Q\n[[] 1\n", 2),
])
def test_parse_errors(text, line):
    with pytest.raises(ValueError, match=f"line {line}"):
        parse_character(text)
