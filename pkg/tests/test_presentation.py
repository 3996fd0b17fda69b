import pytest

from charhopf.algebra import graded_commutator
from charhopf.grading import AbelianGroup, Grading
from charhopf.presentation import (LiftingError, Presentation, PresentationError, compute_C, compute_D,
                                   standard_lifting, validate)
from charhopf.presets import MUTANTS, PRESETS, load_preset
from charhopf.rewrite import normal_form
from charhopf.scalars import INFINITE, cyclotomic, rational_function
from charhopf.superletters import SuperElement, expand_superelement, expand_superletter, prec_L_check, superword_zdeg

from helpers import sl2_grading

PRESET_NAMES = ["uq_sl2:3", "uq_sl2:5", "Uq_sl2", "taft:3", "radford:2", "book:3", "quantum_plane:2,3",
                "quantum_plane_lifting:1,1,1", "rank1_lifting:3,2", "b2_nichols"]


def test_compute_C():
    assert compute_C([(1,), (2,)]) == [(1, 2)]
    assert compute_C([(1,), (1, 2), (2,)]) == [(1, 1, 2), (1, 2, 2)]
    assert compute_C([(1,)], theta=1) == []
    with pytest.raises(PresentationError):
        compute_C([(1,), (1, 1, 2), (2,)])


def test_compute_C_matches_definition():
    L = [(1,), (1, 1, 2), (1, 2), (2,)]
    from charhopf.words import shirshov
    brute = sorted({u + v for u in L for v in L if u < v and u + v not in L and shirshov(u + v) == (u, v)})
    assert compute_C(L) == brute == [(1, 1, 1, 2), (1, 1, 2, 1, 2), (1, 2, 2)]


def test_compute_D():
    assert compute_D(load_preset("uq_sl2:3").L, load_preset("uq_sl2:3").N) == [(1,), (2,)]
    p = load_preset("Uq_sl2")
    assert compute_D(p.L, p.N) == []
    assert compute_D([(1,), (2,)], {(1,): 3, (2,): INFINITE}) == [(1,)]


def test_presets_are_valid():
    for name in PRESET_NAMES:
        rep = validate(load_preset(name))
        assert rep.ok, (name, str(rep))


def test_mutants_violate_lifting_conditions():
    for name in MUTANTS:
        assert "lifting" in validate(load_preset(name)).rules()


def _corrupt(p, **changes):
    data = dict(L=p.L, N=dict(p.N), c=dict(p.c), d=dict(p.d))
    data.update(changes)
    return Presentation(p.grading, data["L"], data["N"], data["c"], data["d"])


def test_validation_corpus():
    p = load_preset("uq_sl2:3")
    gr = p.grading
    long_c = SuperElement.superword(gr, [(2,), (1,), (1,)])
    assert "prec_L" in validate(_corrupt(p, c={(1, 2): long_c})).rules()
    assert "order" in validate(_corrupt(p, N={(1,): 5, (2,): 3})).rules()
    assert validate(_corrupt(p, N={(1,): INFINITE, (2,): 3}, d={(2,): p.d[(2,)]})).ok
    assert "unknown" in validate(_corrupt(p, N={(1,): INFINITE, (2,): 3})).rules()
    wrong_deg = SuperElement.superword(gr, [(2,)])
    assert "homogeneity" in validate(_corrupt(p, c={(1, 2): wrong_deg})).rules()
    assert "unknown" in validate(_corrupt(p, c={(1, 1, 2): SuperElement.zero(gr)})).rules()
    assert "closure" in validate(_corrupt(p, L=[(1,), (1, 1, 2), (2,)])).rules()
    with pytest.raises(ValueError):
        _corrupt(p, L=[(1,), (2, 1), (2,)])
    ascending = SuperElement.superword(gr, [(1,), (2,)])
    assert "prec_L" in validate(_corrupt(p, c={(1, 2): ascending})).rules()
    nonL = SuperElement.superword(gr, [(1, 2)])
    assert "prec_L" in validate(_corrupt(p, c={(1, 2): nonL})).rules()


def test_standard_lifting():
    p = load_preset("Uq_sl2")
    gr = p.grading
    assert p.c[(1, 2)] == SuperElement.scalar(gr, 1) - SuperElement.group_element(gr, (2,))
    core = Presentation(sl2_grading(3), [(1,), (2,)])
    zero = standard_lifting(core, {(1, 2): 0}, {(1,): 0})
    assert all(not e for e in zero.c.values()) and all(not e for e in zero.d.values())
    r = load_preset("radford:3")
    assert r.d[(1,)] == SuperElement.scalar(r.grading, 1) - SuperElement.group_element(r.grading, (3,))


def test_standard_lifting_rejects_forbidden_coefficients():
    F = cyclotomic(3, "q")
    q = F.gen()
    # chi1 chi2 nontrivial: lambda must vanish
    gr = Grading(F, AbelianGroup(0, (3,)), [(1,), (1,)], [[q], [q]])
    core = Presentation(gr, [(1,), (2,)])
    with pytest.raises(LiftingError):
        standard_lifting(core, {(1, 2): 1})
    # taft: g^N = 1, so mu must vanish
    with pytest.raises(LiftingError):
        standard_lifting(load_preset("taft:3"), mu={(1,): 1})
    with pytest.raises(LiftingError):
        standard_lifting(core, {(1, 1, 2): 1})


def test_redbr_examples():
    p = load_preset("uq_sl2:3")
    assert p.redbr((1,), (2,)) == p.c[(1, 2)]
    gr = sl2_grading(3)
    p2 = Presentation(gr, [(1,), (1, 2), (2,)])
    assert p2.redbr((1,), (1, 2)) == p2.c[(1, 1, 2)]
    assert p2.redbr((1,), (2,)) == SuperElement.superletter(gr, (1, 2))
    with pytest.raises(PresentationError):
        p2.redbr((2,), (1,))
    with pytest.raises(PresentationError):
        p2.redbr((1,), (1, 1, 2))


def test_redbr_recursive_case():
    p = load_preset("b2_nichols")
    from charhopf.words import shirshov
    assert shirshov((1, 1, 2, 2)) == ((1,), (1, 2, 2))
    q = p.grading.field.gen()
    r = p.redbr((1, 1, 2), (2,))
    assert r == SuperElement.superword(p.grading, [(1, 2), (1, 2)], q ** 2 - 1)


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_redbr_properties(name):
    p = load_preset(name)
    gr = p.grading
    for i, u in enumerate(p.L):
        for v in p.L[i + 1:]:
            r = p.redbr(u, v)
            assert prec_L_check(r, [u + v], p.L, strict=False)
            keys = {gr.ghat_key(superword_zdeg(U, gr.theta)) for (U, _) in r.terms}
            assert keys <= {gr.ghat_key(superword_zdeg((u + v,), gr.theta))}
            comm = graded_commutator(expand_superletter(u, gr), expand_superletter(v, gr))
            assert not normal_form(comm - expand_superelement(r), p)


def test_generators_listing():
    p = load_preset("uq_sl2:3")
    labels = [label for label, _ in p.generators()]
    assert labels == ["[1.2]", "[1]^3", "[2]^3"]


def test_rational_function_generic_presentation():
    F = rational_function()
    gr = Grading.nichols(F, [[F.gen()]])
    p = Presentation(gr, [(1,)])
    assert p.N[(1,)] == INFINITE and p.C == [] and p.D == []


def test_corrupted_redbr_is_detected_at_letter_level():
    p = load_preset("b2_nichols")
    gr = p.grading
    u, v = (1, 1, 2), (2,)
    comm = graded_commutator(expand_superletter(u, gr), expand_superletter(v, gr))
    good = p.redbr(u, v)
    bad = good + SuperElement.superword(gr, [(1, 2), (1, 2)])
    assert not normal_form(comm - expand_superelement(good), p)
    assert normal_form(comm - expand_superelement(bad), p)
