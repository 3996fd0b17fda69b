import itertools
import random

import pytest
from hypothesis import given, strategies as st

from charhopf.algebra import SmashElement
from charhopf.presentation import FuelExhausted
from charhopf.presets import load_preset
from charhopf.rewrite import (ALL, confluence_selftest, dimension, enumerate_pbw, is_pbw_normal, normal_form,
                              random_element)
from charhopf.scalars import INFINITE
from charhopf.superletters import SuperElement


def test_is_pbw_normal():
    p = load_preset("uq_sl2:3")
    assert is_pbw_normal(((2,), (2,), (1,)), p)
    assert not is_pbw_normal(((1,), (2,)), p)
    assert not is_pbw_normal(((1,), (1,), (1,)), p)
    with pytest.raises(ValueError):
        is_pbw_normal(((1, 2),), p)


def test_normal_form_examples():
    qp = load_preset("quantum_plane:2,3")
    e = SmashElement.word(qp.grading, (1, 2))
    assert normal_form(e, qp) == SuperElement.superword(qp.grading, [(2,), (1,)], qp.grading.q(1, 2))
    p = load_preset("uq_sl2:3")
    gr = p.grading
    q = gr.field.gen()
    expected = (SuperElement.superword(gr, [(2,), (1,)], q ** 2) + SuperElement.scalar(gr, 1)
                - SuperElement.group_element(gr, (2,)))
    assert normal_form(SmashElement.word(gr, (1, 2)), p) == expected
    t = load_preset("taft:3")
    assert not normal_form(SmashElement.word(t.grading, (1, 1, 1)), t)


def test_enumerate_examples():
    assert len(enumerate_pbw(load_preset("taft:3"), ALL)) == 9
    assert len(enumerate_pbw(load_preset("uq_sl2:3"), ALL)) == 27
    U = load_preset("Uq_sl2")
    mons = enumerate_pbw(U, 2)
    assert sorted(m.superword() for m in mons) == sorted(
        [(), ((1,),), ((2,),), ((1,), (1,)), ((2,), (1,)), ((2,), (2,))])
    with pytest.raises(ValueError):
        enumerate_pbw(U, ALL)


def test_dimension():
    assert dimension(load_preset("taft:3")) == 9
    assert dimension(load_preset("radford:2")) == 8
    assert dimension(load_preset("book:3")) == 27
    assert dimension(load_preset("Uq_sl2")) == INFINITE


def test_confluence_trivial_cases():
    p = load_preset("uq_sl2:3")
    zero = SuperElement.zero(p.grading)
    assert normal_form(zero, p, "leftmost") == normal_form(zero, p, "rightmost") == zero
    mono = SuperElement.superword(p.grading, [(2,), (2,), (1,)], 1, (2,))
    assert normal_form(mono, p, "leftmost") == normal_form(mono, p, "rightmost") == mono


@pytest.mark.parametrize("name", ["uq_sl2:3", "book:3", "quantum_plane_lifting:1,1,1", "Uq_sl2", "b2_nichols"])
def test_confluence_selftest(name):
    assert confluence_selftest(load_preset(name), 30, 6, seed=3).ok


@pytest.mark.parametrize("name", ["uq_sl2:3", "quantum_plane:2,3", "radford:2", "b2_nichols"])
def test_basis_property(name):
    p = load_preset(name)
    D = 4
    allowed = {m.superword() for m in enumerate_pbw(p, D, group_elements=[p.grading.group.identity])}
    for n in range(D + 1):
        for w in itertools.product(range(1, p.theta + 1), repeat=n):
            nf = normal_form(SmashElement.word(p.grading, w), p)
            assert {U for (U, _) in nf.terms} <= allowed


@given(st.integers(0, 10 ** 6))
def test_normal_form_linear_and_idempotent(seed):
    p = load_preset("uq_sl2:5")
    rng = random.Random(seed)
    a, b = random_element(p, rng, 5), random_element(p, rng, 5)
    c = p.grading.field.gen()
    assert normal_form(a + b.scale(c), p) == normal_form(a, p) + normal_form(b, p).scale(c)
    na = normal_form(a, p)
    assert normal_form(na, p) == na


def test_fuel_guard():
    p = load_preset("uq_sl2:5")
    e = SmashElement.word(p.grading, (1, 2) * 4)
    with pytest.raises(FuelExhausted):
        normal_form(e, p, "rightmost", fuel=3)


def test_unknown_strategy():
    p = load_preset("taft:2")
    with pytest.raises(ValueError):
        normal_form(SuperElement.zero(p.grading), p, "middle")


def test_super_letters_outside_L_are_unfolded():
    p = load_preset("uq_sl2:3")
    e = SuperElement.superletter(p.grading, (1, 2))
    assert normal_form(e, p) == p.c[(1, 2)]
