import pytest

from charhopf.grading import AbelianGroup, Character, Grading, GradingError, N_default, degrees, q_bichar
from charhopf.scalars import INFINITE, cyclotomic, rational_function

from helpers import sl2_grading


def test_group_arithmetic():
    G = AbelianGroup(0, (3,))
    g = G.generator(0)
    assert G.mul(g, g) == (2,)
    assert G.mul((2,), (2,)) == (1,)
    assert G.mul(G.identity, (2,)) == (2,)
    assert G.inv((1,)) == (2,)
    assert G.order() == 3
    assert len(G.elements()) == 3
    H = AbelianGroup(1, (2,))
    assert H.order() == INFINITE and not H.is_finite()
    with pytest.raises(GradingError):
        H.elements()
    with pytest.raises(GradingError):
        G.mul((1,), (1, 0))
    assert H.format((2, 1)) == "g1^2 g2"


def test_character_evaluation():
    gr = sl2_grading(3)
    q = gr.field.gen()
    chi1, chi2 = gr.chi
    assert chi1(gr.group.identity) == 1
    assert chi2((1,)) == q ** 2
    assert chi1((2,)) == q ** -4
    assert (chi1 * chi2).is_trivial()


def test_character_needs_roots_of_unity():
    F = cyclotomic(5)
    with pytest.raises(GradingError):
        Character(AbelianGroup(0, (3,)), [F.gen()])


def test_degrees():
    gr = sl2_grading(3)
    z, g, chi = degrees((1, 2), gr)
    assert z == (1, 1) and g == (2,) and chi.is_trivial()
    z, g, chi = degrees((), gr)
    assert z == (0, 0) and g == (0,) and chi.is_trivial()
    assert degrees((1, 1, 2), gr)[0] == (2, 1)


def test_bicharacter():
    gr = sl2_grading(3)
    assert q_bichar((1, 0), (0, 1), gr) == gr.q(1, 2)
    assert q_bichar((1, 0), (1, 1), gr) == gr.q(1, 1) * gr.q(1, 2)
    assert q_bichar((0, 0), (3, 2), gr) == 1


def test_bicharacter_is_biadditive():
    gr = Grading.nichols(rational_function(), [[2, 3], [5, 7]])
    a, b, c = (1, 2), (0, 3), (2, 1)
    ab = tuple(x + y for x, y in zip(a, b))
    assert gr.qbichar(ab, c) == gr.qbichar(a, c) * gr.qbichar(b, c)
    assert gr.qbichar(c, ab) == gr.qbichar(c, a) * gr.qbichar(c, b)


def test_default_N():
    F = cyclotomic(3)
    z = F.gen()
    gr = Grading.nichols(F, [[z, 1], [1, z]])
    assert N_default((1,), gr) == 3
    gr2 = Grading.nichols(F, [[z, z], [z, z]])
    assert N_default((1, 2), gr2) == 3
    gr3 = Grading.nichols(rational_function(), [[rational_function().gen()]])
    assert N_default((1,), gr3) == INFINITE


def test_bosonization_realises_the_matrix():
    F = cyclotomic(6)
    z = F.gen()
    qm = [[z, z ** 2], [z ** 5, -1]]
    gr = Grading.nichols(F, qm)
    bos = gr.bosonization()
    for i in (1, 2):
        for j in (1, 2):
            assert bos.q(i, j) == gr.q(i, j)
