import itertools

from charhopf.algebra import SmashElement, leading_word, reverse_element
from charhopf.grading import Grading
from charhopf.scalars import rationals
from charhopf.superletters import (SuperElement, expand_superelement, expand_superletter, prec_L_check,
                                   superletter_in_L, superword_lex_lt, superword_prec)
from charhopf.words import enumerate_lyndon

from helpers import generic_grading, sl2_grading


def test_expansion_examples():
    gr = generic_grading("rational_function")
    q11, q12 = gr.q(1, 1), gr.q(1, 2)
    x = lambda *w: SmashElement.word(gr, w)  # noqa: E731
    assert expand_superletter((1, 2), gr) == x(1, 2) - x(2, 1).scale(q12)
    expected = x(1, 1, 2) - x(1, 2, 1).scale(q12 * (1 + q11)) + x(2, 1, 1).scale(q11 * q12 ** 2)
    assert expand_superletter((1, 1, 2), gr) == expected
    u = expand_superletter((1, 1, 2), gr)
    v = expand_superletter((1, 2), gr)
    from charhopf.algebra import graded_commutator
    assert expand_superletter((1, 1, 2, 1, 2), gr) == graded_commutator(u, v)


def test_superelement_expansion():
    gr = sl2_grading(3)
    U = SuperElement.superword(gr, [(2,), (1,)])
    assert expand_superelement(U) == SmashElement.word(gr, (2, 1))
    e = SuperElement.superword(gr, [(1, 2)], 1, (1,))
    assert expand_superelement(e) == expand_superletter((1, 2), gr).times_group((1,))


def test_leading_word_property():
    F = rationals()
    gr = Grading.nichols(F, [[F(v) for v in row] for row in ((2, 3, 5), (7, 11, 13), (17, 19, 23))])
    for u in enumerate_lyndon(3, 5):
        if len(u) < 2:
            continue
        e = expand_superletter(u, gr)
        assert leading_word(e) == u
        assert e.terms[(u, ())] == 1
        assert e.terms.get((u[::-1], ()))
        assert leading_word(reverse_element(e)) == u


def test_expansion_is_injective():
    gr = generic_grading("rationals")
    L = enumerate_lyndon(2, 3)
    seen = {}
    for n in range(1, 4):
        for U in itertools.product(L, repeat=n):
            if sum(map(len, U)) > 5:
                continue
            key = frozenset(expand_superelement(SuperElement.superword(gr, U)).terms.items())
            assert key not in seen, (U, seen.get(key))
            seen[key] = U


def test_orders():
    assert superword_lex_lt(((1,), (2,)), ((2,),))
    assert superword_lex_lt(((1,),), ((1,), (2,)))
    assert superword_lex_lt(((1,), (2,)), ((1, 2),))
    assert superword_prec(((2,),), ((1,), (1,)))
    assert superword_prec(((2,), (1,)), ((1,), (2,)))
    assert superword_prec((), ((1,),))


def test_prec_is_total_strict_order():
    L = enumerate_lyndon(2, 3)
    words = [()] + [U for n in range(1, 5) for U in itertools.product(L, repeat=n) if sum(map(len, U)) <= 4]
    for U, V in itertools.product(words, repeat=2):
        assert superword_prec(U, V) + superword_prec(V, U) + (U == V) == 1
    for U, V, W in itertools.product(words[:40], repeat=3):
        if superword_prec(U, V) and superword_prec(V, W):
            assert superword_prec(U, W)


def test_prec_L_check_examples():
    gr = sl2_grading(3)
    L = [(1,), (2,)]
    assert prec_L_check(SuperElement.zero(gr), [(1, 2)], L)
    lift = SuperElement.scalar(gr, 1) - SuperElement.group_element(gr, (2,))
    assert prec_L_check(lift, [(1, 2)], L)
    assert prec_L_check(SuperElement.superword(gr, [(2,), (1,)]), [(1,), (2,)], L)
    assert not prec_L_check(SuperElement.superword(gr, [(1,), (2,)]), [(1,), (2,)], L)
    assert prec_L_check(SuperElement.superword(gr, [(1,), (2,)]), [(1,), (2,)], L, strict=False)
    assert not prec_L_check(SuperElement.superword(gr, [(2,), (1,), (1,)]), [(1, 2)], L)
    assert not prec_L_check(SuperElement.superword(gr, [(2,), (1,)], 1, (1,)), [(1, 2)], L)


def test_superletter_in_L_unfolds():
    gr = generic_grading("rationals")
    e = superletter_in_L(gr, {(1,), (2,)}, (1, 1, 2))
    assert expand_superelement(e) == expand_superletter((1, 1, 2), gr)
    assert all(len(u) == 1 for (U, _) in e.terms for u in U)
