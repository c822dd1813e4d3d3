from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import pytest

from postalg.coeff import GF, RingError
from postalg.linear import LinComb
from postalg.postlie import (
    GradedElement,
    _rhd_words,
    bch,
    bracket,
    concat,
    counit,
    deshuffle,
    exp_action,
    exp_dot,
    exp_gl,
    extend_rhd,
    format_graded,
    formal_integration_ops,
    formal_rhd,
    gl_product,
    graft,
    inverse_magnus,
    is_primitive,
    lie_butcher_product,
    log_dot,
    log_gl,
    magnus,
    multigraft,
    parse_graded,
    planar_trees,
    random_lie_element,
    tree_element,
)
from postalg.trees import OrderedForest, ordered_forests

E = GradedElement.of


def words_up_to(n):
    return [w for g in range(n + 1) for w in ordered_forests(g)]


def basis(w, N):
    return GradedElement({w: 1}, N)


def commutator_pool(N):
    """Trees and commutators of pairs of trees, all of grade <= N."""
    trees = planar_trees(N)
    out = [tree_element(t, N) for t in trees]
    for a, b in product(trees, repeat=2):
        if a.nodes + b.nodes <= N and a != b:
            out.append(bracket(tree_element(a, N), tree_element(b, N)))
    return out


def assoc(x, y, z):
    return extend_rhd(x, extend_rhd(y, z)) - extend_rhd(extend_rhd(x, y), z)


# --------------------------------------------------------------------------
# examples


def test_concat_and_deshuffle():
    assert concat(E("[]"), E("[[]]")) == E("[] [[]]")
    assert bracket(E("[]"), E("[]")) == 0
    d = deshuffle(E("[] [[]]"))
    w = OrderedForest.parse
    assert d == LinComb({(w(""), w("[] [[]]")): 1, (w("[]"), w("[[]]")): 1,
                         (w("[[]]"), w("[]")): 1, (w("[] [[]]"), w("")): 1})
    assert deshuffle(E("[] []"))[(w("[]"), w("[]"))] == 2
    assert is_primitive(E("[[]]"))
    assert is_primitive(bracket(E("[]"), E("[[]]")))
    assert not is_primitive(E("[] []"))
    assert counit(GradedElement.one() + E("[]")) == 1


def test_graft_examples():
    assert graft(E("[]"), E("[]")) == E("[[]]")
    assert graft(E("[]"), E("[[]]")) == E("[[[]]]") + E("[[][]]")
    assert graft(E("[[]]"), E("[]")) == E("[[[]]]")
    # new child goes to the left
    assert graft(E("[[]]"), E("[[]]")) == E("[[[]][]]") + E("[[[[]]]]")
    with pytest.raises(ValueError):
        graft(E("[] []"), E("[]"))


def test_extend_rhd_examples():
    assert extend_rhd(E("[] []"), E("[]")) == E("[[][]]")
    assert extend_rhd(E("[]"), E("[] []")) == E("[[]] []") + E("[] [[]]")
    assert extend_rhd(GradedElement.one(), E("[[]]")) == E("[[]]")
    assert extend_rhd(E("[]"), GradedElement.one()) == 0


def test_gl_examples():
    assert gl_product(E("[]"), E("[]")) == E("[] []") + E("[[]]")
    one = GradedElement.one()
    assert gl_product(one, E("[[]]")) == E("[[]]")
    assert gl_product(E("[[]]"), one) == E("[[]]")


def test_truncation_drops_high_grades():
    x = E("[[[]]]", N=3)
    assert gl_product(x, x) == 0
    assert E("[[[[]]]]", N=3) == 0


def test_exp_log_examples():
    x = E("[]")
    assert exp_dot(x) == GradedElement({"": 1, "[]": 1, "[] []": Fraction(1, 2),
                                        "[] [] []": Fraction(1, 6), "[] [] [] []": Fraction(1, 24)})
    assert log_dot(exp_dot(x)) == x
    g = exp_gl(x)
    assert g.coeff("[[]]") == Fraction(1, 2)
    assert g.coeff("[] []") == Fraction(1, 2)
    with pytest.raises(ValueError):
        exp_dot(GradedElement.one())
    with pytest.raises(ValueError):
        log_dot(E("[]"))


def test_exp_refuses_finite_characteristic():
    x = GradedElement({"[]": 1}, 3, GF(3))
    with pytest.raises(RingError):
        exp_dot(x)
    with pytest.raises(RingError):
        log_gl(GradedElement.one(3, GF(3)) + x)


def test_magnus_low_order():
    om = magnus(E("[]", N=3))
    expected = GradedElement({
        "[]": 1, "[[]]": Fraction(-1, 2), "[[[]]]": Fraction(1, 3),
        "[[][]]": Fraction(1, 12),
        "[[]] []": Fraction(1, 12), "[] [[]]": Fraction(-1, 12),
    }, 3)
    assert om == expected
    assert is_primitive(om)


def test_text_round_trip():
    x = E("[[]]", coef=Fraction(-2, 3)) + E("[] []", coef=5)
    assert parse_graded(format_graded(x)) == x
    with pytest.raises(ValueError):
        parse_graded("1/2 [[]")
    with pytest.raises(ValueError):
        GradedElement({}, 99)


# --------------------------------------------------------------------------
# post-Lie identities and the extension to words


@pytest.mark.parametrize("N", [5])
def test_postlie_axioms_up_to_grade(N):
    pool = commutator_pool(N)
    trees = [tree_element(t, N) for t in planar_trees(N)]
    checked = 0
    for x in trees:
        for y, z in product(pool, repeat=2):
            if (x.min_grade() + y.min_grade() + z.min_grade()) > N:
                continue
            checked += 1
            assert extend_rhd(x, bracket(y, z)) == bracket(extend_rhd(x, y), z) + bracket(y, extend_rhd(x, z))
    for x, y, z in product(pool, repeat=3):
        if x.min_grade() + y.min_grade() + z.min_grade() > N:
            continue
        checked += 1
        assert extend_rhd(bracket(x, y), z) == assoc(x, y, z) - assoc(y, x, z)
    # every in-range triple of trees and tree commutators
    assert checked == 17 + 19
    assert all(is_primitive(p) for p in pool)


def test_extension_matches_multigraft():
    for u, v in product(words_up_to(5), repeat=2):
        if u.nodes + v.nodes > 5 or len(v) == 0:
            continue
        assert LinComb(dict(_rhd_words(u, v))) == multigraft(u, v), (u, v)


def test_gl_associative_and_unital():
    N = 5
    ws = [w for w in words_up_to(4)]
    one = GradedElement.one(N)
    for w in ws:
        x = basis(w, N)
        assert gl_product(one, x) == x == gl_product(x, one)
    rng = random.Random(3)
    for _ in range(60):
        a, b, c = (basis(rng.choice(ws), N) for _ in range(3))
        assert gl_product(gl_product(a, b), c) == gl_product(a, gl_product(b, c))


def _delta_product(mul, x, y):
    """``Δ(x)Δ(y)`` computed factorwise."""
    N = x.N
    out = LinComb()
    for (a1, a2), p in deshuffle(x).items():
        for (b1, b2), q in deshuffle(y).items():
            left = mul(basis(a1, N), basis(b1, N))
            right = mul(basis(a2, N), basis(b2, N))
            for w1, c1 in left.terms.items():
                for w2, c2 in right.terms.items():
                    out.add_term((w1, w2), p * q * c1 * c2)
    return out


@pytest.mark.parametrize("mul", [concat, gl_product], ids=["concat", "gl"])
def test_deshuffle_is_multiplicative(mul):
    N = 4
    ws = words_up_to(4)
    for u, v in product(ws, repeat=2):
        if u.nodes + v.nodes > N:
            continue
        x, y = basis(u, N), basis(v, N)
        assert deshuffle(mul(x, y)) == _delta_product(mul, x, y), (u, v)


def test_exp_log_inverse():
    rng = random.Random(11)
    for _ in range(5):
        x = random_lie_element(rng, N=5, terms=3, brackets=1)
        assert log_dot(exp_dot(x)) == x
        assert log_gl(exp_gl(x)) == x
        assert inverse_magnus(magnus(x)) == x


def test_grade_additivity():
    for u, v in product(words_up_to(3), repeat=2):
        if len(v) == 0:
            continue
        for w, _ in _rhd_words(u, v):
            assert w.nodes == u.nodes + v.nodes


def test_bch():
    rng = random.Random(5)
    N = 4
    x, y, z = (random_lie_element(rng, N, terms=2, brackets=1) for _ in range(3))
    assert bch(x, y).homogeneous(2) == (x + y + bracket(x, y).scale(Fraction(1, 2))).homogeneous(2)
    assert is_primitive(bch(x, y))
    assert bch(bch(x, y), z) == bch(x, bch(y, z))
    assert bch(x, GradedElement.zero(N)) == x
    with pytest.raises(ValueError):
        bch(E("[] []"), x)


def test_formal_integration_postgroup():
    rng = random.Random(17)
    N = 4
    zero = GradedElement.zero(N)
    for _ in range(4):
        a, b, c = (random_lie_element(rng, N, terms=2, brackets=1) for _ in range(3))
        dot = lambda p, q: formal_integration_ops(p, q)[0]  # noqa: E731
        rhd = formal_rhd
        assert rhd(a, dot(b, c)) == dot(rhd(a, b), rhd(a, c))
        assert rhd(dot(a, rhd(a, b)), c) == rhd(a, rhd(b, c))
        assert rhd(zero, b) == b
        assert rhd(a, zero) == zero
        assert is_primitive(rhd(a, b))
        # the integrated action agrees with the group-like action
        assert exp_action(magnus(a), b) == extend_rhd(exp_gl(magnus(a)), b)


def test_lie_butcher_identity():
    rng = random.Random(23)
    N = 4
    for _ in range(4):
        a, b = (random_lie_element(rng, N, terms=2, brackets=1) for _ in range(2))
        assert exp_dot(lie_butcher_product(a, b)) == gl_product(exp_dot(a), exp_dot(b))


def test_grouplike_closure():
    rng = random.Random(29)
    N = 4
    a, b = (random_lie_element(rng, N, terms=2, brackets=1) for _ in range(2))
    ga, gb = exp_dot(a), exp_dot(b)
    for g in (gl_product(ga, gb), concat(ga, gb), exp_gl(a)):
        d = deshuffle(g)
        expect = LinComb()
        for (w1, c1), (w2, c2) in product(g.terms.items(), repeat=2):
            if w1.nodes + w2.nodes <= N:
                expect.add_term((w1, w2), c1 * c2)
        assert d == expect


def test_words_are_ordered():
    assert concat(E("[]"), E("[[]]")) != concat(E("[[]]"), E("[]"))
    assert concat(GradedElement.one(), E("[[]]")) == E("[[]]")


def test_deshuffle_coassociative_and_counital():
    N = 5
    for w in words_up_to(N):
        d = deshuffle(basis(w, N))
        left, right = LinComb(), LinComb()
        for (a, b), c in d.items():
            for (a1, a2), c1 in deshuffle(basis(a, N)).items():
                left.add_term((a1, a2, b), c * c1)
            for (b1, b2), c2 in deshuffle(basis(b, N)).items():
                right.add_term((a, b1, b2), c * c2)
        assert left == right
        assert LinComb({b: c for (a, b), c in d.items() if len(a) == 0}) == LinComb({w: 1})
        assert LinComb({a: c for (a, b), c in d.items() if len(b) == 0}) == LinComb({w: 1})


def test_truncated_series_examples():
    assert exp_dot(E("[]", N=2)) == GradedElement({"": 1, "[]": 1, "[] []": Fraction(1, 2)}, 2)
    assert log_dot(GradedElement.one(3) + E("[]", N=3)) == GradedElement(
        {"[]": 1, "[] []": Fraction(-1, 2), "[] [] []": Fraction(1, 3)}, 3)
    assert exp_gl(E("[]", N=2)) == GradedElement(
        {"": 1, "[]": 1, "[] []": Fraction(1, 2), "[[]]": Fraction(1, 2)}, 2)


def test_magnus_leading_term():
    rng = random.Random(31)
    for _ in range(5):
        x = random_lie_element(rng, 4, terms=3, brackets=1)
        assert magnus(x).homogeneous(1) == x.homogeneous(1)


def test_integrated_action_on_exponentials():
    rng = random.Random(37)
    N = 4
    for _ in range(3):
        x, y = (random_lie_element(rng, N, terms=2, brackets=1) for _ in range(2))
        lhs = extend_rhd(exp_gl(magnus(x)), exp_dot(y))
        assert lhs == exp_dot(formal_rhd(x, y))


def test_lie_butcher_two_pipelines():
    N = 3
    x = y = E("[]", N=N)
    z = lie_butcher_product(x, y)
    assert z == log_dot(gl_product(exp_dot(x), exp_dot(y)))
    assert lie_butcher_product(x, GradedElement.zero(N)) == x
