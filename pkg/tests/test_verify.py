import random

import pytest

from charhopf.algebra import SmashElement
from charhopf.presets import MUTANTS, PRESETS, load_preset
from charhopf.rewrite import enumerate_pbw, normal_form, random_element
from charhopf.superletters import SuperElement, expand_superelement
from charhopf.verify import (OracleConfig, OracleError, hopf_axiom_spotcheck, hopf_ideal_check, ideal_membership,
                             oracle_dimension, top_degree)

DEFAULTS = ["uq_sl2:3", "Uq_sl2", "taft:3", "radford:2", "book:3", "quantum_plane:2,3",
            "quantum_plane_lifting:1,1,1", "rank1_lifting:3,2"]


def test_oracle_examples():
    assert oracle_dimension(load_preset("taft:2"), OracleConfig(max_zdeg=2)).total == 4
    assert oracle_dimension(load_preset("taft:3"), OracleConfig(max_zdeg=3)).total == 9
    res = oracle_dimension(load_preset("quantum_plane:2,3"), OracleConfig(max_zdeg=3))
    assert res.per_degree == [1, 2, 2, 1] and res.total == 6


def test_oracle_per_degree_matches_pbw_counts():
    p = load_preset("quantum_plane:2,3")
    D = 2 + 3 - 2
    res = oracle_dimension(p, OracleConfig(max_zdeg=D))
    mons = enumerate_pbw(p, D)
    counts = [sum(1 for m in mons if m.degree() == n) for n in range(D + 1)]
    assert res.per_degree == counts


def test_oracle_guards():
    with pytest.raises(ValueError):
        OracleConfig(max_zdeg=-1)
    with pytest.raises(OracleError):
        oracle_dimension(load_preset("uq_sl2:3"), OracleConfig(max_zdeg=8, max_columns=100))
    with pytest.raises(OracleError):
        oracle_dimension(load_preset("Uq_sl2"))
    with pytest.raises(OracleError):
        oracle_dimension(load_preset("taft:2"), OracleConfig(max_zdeg=5, word_caps=((5, 0),)))


def test_top_degree():
    assert top_degree(load_preset("uq_sl2:5")) == 8


@pytest.mark.parametrize("name", ["uq_sl2:3", "taft:3", "radford:2", "quantum_plane:2,3", "book:3"])
def test_membership(name):
    p = load_preset(name)
    cfg = OracleConfig(max_zdeg=5)
    for _label, r in p.generators():
        assert ideal_membership(expand_superelement(r), p, cfg)
    assert not ideal_membership(SmashElement.scalar(p.grading, 1), p, cfg)
    rng = random.Random(5)
    for _ in range(10):
        e = random_element(p, rng, 5)
        diff = expand_superelement(e) - expand_superelement(normal_form(e, p))
        assert ideal_membership(diff, p, cfg)
    # a nonzero normal form is never in the ideal
    mono = SuperElement.superword(p.grading, enumerate_pbw(p, 2)[-1].superword())
    assert not ideal_membership(expand_superelement(mono), p, cfg)


def test_membership_degree_guard():
    p = load_preset("taft:2")
    with pytest.raises(OracleError):
        ideal_membership(SmashElement.word(p.grading, (1, 1, 1)), p, OracleConfig(max_zdeg=2))


@pytest.mark.parametrize("name", DEFAULTS + ["b2_nichols", "uq_sl2:5", "quantum_plane:3,2"])
def test_hopf_ideal_presets(name):
    rep = hopf_ideal_check(load_preset(name))
    assert rep.ok, str(rep)


@pytest.mark.parametrize("name", MUTANTS)
def test_hopf_ideal_mutants(name):
    rep = hopf_ideal_check(load_preset(name))
    assert not rep.ok
    assert all(item.residue != "0" for item in rep.failures())


@pytest.mark.parametrize("name", DEFAULTS + ["b2_nichols"])
def test_hopf_axioms(name):
    assert hopf_axiom_spotcheck(load_preset(name), 2).ok


def test_all_presets_listed():
    assert set(PRESETS) == {"uq_sl2", "Uq_sl2", "taft", "radford", "book", "quantum_plane",
                            "quantum_plane_lifting", "rank1_lifting"}
