"""The semigroup itself: product, inverses, order, Green's relations."""

import pytest

from epshift.core import (Element, SemigroupCtx, ZERO, green, green_witness,
                          idempotent_leq, inverse, is_idempotent, multiply,
                          natural_leq)
from epshift.errors import (EmptyOutsideFamily, NotIdempotent, NotRelated,
                            OutsideFamily)
from epshift.family import Family, close
from epshift.omega_sets import EMPTY, EpSet

from conftest import random_epset

RAY = EpSet.ray(0)
PROG = EpSet.progression(2, 3)


def ray_ctx():
    return SemigroupCtx(close([RAY]))


def prog_ctx():
    return SemigroupCtx(close([PROG]))


# -- element construction -----------------------------------------------------

def test_element_validation():
    with pytest.raises(ValueError):
        Element(0, 0, EMPTY)
    with pytest.raises(TypeError):
        Element(0, 0, "not a set")
    assert ZERO.is_zero
    assert str(ZERO) == "0"
    assert str(Element(1, -2, RAY)) == "(1,-2;[0))"


def test_ctx_validation():
    ctx = ray_ctx()
    assert ctx.element(3, -5, RAY) == Element(3, -5, RAY)
    with pytest.raises(OutsideFamily):
        ctx.element(0, 0, EpSet.of(2))
    with pytest.raises(EmptyOutsideFamily):
        ctx.zero()
    assert prog_ctx().zero() is ZERO
    assert ctx.contains(Element(0, 0, RAY))
    assert not ctx.contains(ZERO)


# -- multiplication ------------------------------------------------------------

def test_multiply_case_split_examples():
    ctx = ray_ctx()
    # right factor starts past the left one's end
    assert ctx.mul(Element(0, 0, RAY), Element(1, 1, RAY)) == Element(1, 1, RAY)
    assert ctx.mul(Element(-3, -1, RAY), Element(2, 4, RAY)) == Element(0, 4, RAY)
    # idempotent square
    e = Element(4, 4, RAY)
    assert ctx.mul(e, e) == e


def test_multiply_zero_collapse():
    ctx = prog_ctx()
    a = Element(0, 5, PROG)
    b = Element(1, 0, PROG)
    assert ctx.mul(a, b) is ZERO
    assert ctx.mul(ZERO, a) is ZERO
    assert ctx.mul(a, ZERO) is ZERO
    assert ctx.mul(ZERO, ZERO) is ZERO


def test_multiply_free_function_and_chain():
    ctx = ray_ctx()
    a = Element(0, 0, RAY)
    assert multiply(ctx, a, a) == a
    assert ctx.mul_all(a, Element(1, 1, RAY), Element(2, 2, RAY)) \
        == Element(2, 2, RAY)


def test_zero_in_family_without_empty_raises():
    ctx = ray_ctx()
    with pytest.raises(EmptyOutsideFamily):
        ctx.mul(ZERO, Element(0, 0, RAY))


def test_corrupted_context_surfaces_empty_product():
    # a family that skipped verification and is not actually closed
    broken = Family([EpSet.of(0), EpSet.of(2)], check=False)
    ctx = SemigroupCtx(broken)
    with pytest.raises(EmptyOutsideFamily):
        ctx.mul(Element(0, 0, EpSet.of(0)), Element(0, 0, EpSet.of(2)))


def test_product_set_stays_in_family(rng):
    from epshift.errors import ClosureDiverged
    for _ in range(60):
        try:
            fam = close([random_epset(rng, max_threshold=5, max_period=4)
                         for _ in range(2)], cap=32)
        except ClosureDiverged:
            continue
        ctx = SemigroupCtx(fam)
        for _ in range(40):
            from epshift.selftest import random_element
            a = random_element(rng, fam, span=10)
            b = random_element(rng, fam, span=10)
            c = ctx.mul(a, b)
            assert ctx.contains(c)


# -- inverses and idempotents ----------------------------------------------------

def test_inverse_examples():
    assert inverse(Element(2, 5, RAY)) == Element(5, 2, RAY)
    assert inverse(ZERO) is ZERO
    e = Element(3, 3, PROG)
    assert inverse(e) == e


def test_is_idempotent():
    assert is_idempotent(Element(4, 4, EpSet.of(0)))
    assert not is_idempotent(Element(4, 5, EpSet.of(0)))
    assert is_idempotent(ZERO)


def test_inverse_axioms_randomized(rng):
    ctx = prog_ctx()
    fam = ctx.family
    from epshift.selftest import random_element
    for _ in range(800):
        a = random_element(rng, fam, span=15)
        ai = inverse(a)
        assert ctx.mul(ctx.mul(a, ai), a) == a
        assert ctx.mul(ctx.mul(ai, a), ai) == ai


# -- natural partial order --------------------------------------------------------

def test_natural_leq_examples():
    assert natural_leq(Element(1, 1, RAY), Element(0, 0, RAY))
    assert not natural_leq(Element(0, 0, RAY), Element(1, 1, RAY))
    a = Element(2, 7, PROG)
    assert natural_leq(a, a)
    assert natural_leq(ZERO, a)
    assert not natural_leq(a, ZERO)


def test_natural_leq_definitional(rng):
    from epshift.selftest import random_element
    ctx = prog_ctx()
    fam = ctx.family
    for _ in range(800):
        a = random_element(rng, fam, span=12)
        b = random_element(rng, fam, span=12)
        assert natural_leq(a, b) == (ctx.mul(ctx.mul(a, inverse(a)), b) == a)


def test_idempotent_leq_examples():
    assert idempotent_leq(Element(3, 3, RAY), Element(1, 1, RAY))
    assert not idempotent_leq(Element(1, 1, RAY), Element(3, 3, RAY))
    e = Element(2, 2, RAY)
    assert idempotent_leq(e, e)
    assert idempotent_leq(ZERO, e)
    assert not idempotent_leq(e, ZERO)
    with pytest.raises(NotIdempotent):
        idempotent_leq(Element(0, 1, RAY), e)
    with pytest.raises(NotIdempotent):
        idempotent_leq(e, Element(0, 1, RAY))


def test_idempotent_leq_agrees_with_natural(rng):
    for _ in range(500):
        f1 = random_epset(rng, max_threshold=5, max_period=4)
        f2 = random_epset(rng, max_threshold=5, max_period=4)
        if f1.is_empty or f2.is_empty:
            continue
        e = Element(rng.randint(-8, 8), 0, f1)
        e = Element(e.i, e.i, f1)
        f = Element(rng.randint(-8, 8), 0, f2)
        f = Element(f.i, f.i, f2)
        assert idempotent_leq(e, f) == natural_leq(e, f)


# -- Green's relations ---------------------------------------------------------------

def test_green_criteria_examples():
    f = EpSet.of(2)
    assert green(Element(0, 3, f), Element(0, 7, f), "R")
    assert not green(Element(0, 3, f), Element(1, 3, f), "R")
    assert green(Element(0, 3, f), Element(5, 3, f), "L")
    assert green(Element(0, 3, f), Element(5, 8, f), "D")
    assert not green(Element(0, 3, f), Element(5, 8, f), "H")
    assert green(Element(0, 0, EpSet.ray(1)), Element(0, 0, EpSet.ray(5)), "J")
    assert not green(Element(0, 0, EpSet.of(0, 1)), Element(0, 0, EpSet.of(0)),
                     "J")
    # the zero is related only to itself
    for rel in ("R", "L", "H", "D", "J"):
        assert green(ZERO, ZERO, rel)
        assert not green(ZERO, Element(0, 0, f), rel)
    with pytest.raises(ValueError):
        green(ZERO, ZERO, "X")


def test_green_h_is_equality(rng):
    from epshift.selftest import random_element
    fam = close([EpSet.of(0, 1)])
    for _ in range(500):
        a = random_element(rng, fam, span=6)
        b = random_element(rng, fam, span=6)
        assert green(a, b, "H") == (a == b)


def test_green_witness_r_example():
    f = EpSet.of(2)
    a, b = Element(0, 3, f), Element(0, 7, f)
    x, y = green_witness(a, b, "R")
    assert (x, y) == (Element(3, 7, f), Element(7, 3, f))
    ctx = SemigroupCtx(close([f]))
    assert ctx.mul(a, x) == b and ctx.mul(b, y) == a


def test_green_witness_l_and_d():
    f = EpSet.ray(2)
    ctx = SemigroupCtx(close([f]))
    a, b = Element(1, 5, f), Element(-3, 5, f)
    x, y = green_witness(a, b, "L")
    assert ctx.mul(x, a) == b and ctx.mul(y, b) == a
    a, b = Element(1, 5, f), Element(-3, 9, f)
    c, cinv = green_witness(a, b, "D")
    assert ctx.mul(c, cinv) == ctx.mul(a, inverse(a))
    assert ctx.mul(cinv, c) == ctx.mul(inverse(b), b)
    # the trivial self-witness is the right idempotent
    x, _ = green_witness(a, a, "R")
    assert x == ctx.mul(inverse(a), a)


def test_green_witness_errors():
    f = EpSet.of(2)
    with pytest.raises(NotRelated):
        green_witness(Element(0, 3, f), Element(1, 3, f), "R")
    with pytest.raises(ValueError):
        green_witness(Element(0, 3, f), Element(0, 3, f), "J")
    assert green_witness(ZERO, ZERO, "D") == (ZERO, ZERO)


def test_idempotents_commute_randomized(rng):
    fam = close([EpSet.of(0, 1)])
    ctx = SemigroupCtx(fam)
    sets = fam.nonempty_members
    for _ in range(600):
        e = Element(rng.randint(-10, 10), 0, rng.choice(sets))
        e = Element(e.i, e.i, e.fset)
        f = Element(rng.randint(-10, 10), 0, rng.choice(sets))
        f = Element(f.i, f.i, f.fset)
        assert ctx.mul(e, f) == ctx.mul(f, e)
