"""Named presentations: the standard small examples plus a few test fixtures.

``load_preset("uq_sl2:3")`` and ``load_preset("uq_sl2", 3)`` are equivalent.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .grading import AbelianGroup, Grading
from .presentation import Presentation, standard_lifting
from .scalars import cyclotomic, rational_function


class PresetError(ValueError):
    pass


def _int(v, name):
    try:
        return int(v)
    except (TypeError, ValueError):
        raise PresetError(f"{name} must be an integer, got {v!r}") from None


def uq_sl2(N=3) -> Presentation:
    """Small quantum group: [x1x2] = 1 - g^2, x1^N = x2^N = 0 over Z/(N)."""
    N = _int(N, "N")
    if N <= 2 or N % 2 == 0:
        raise PresetError("uq_sl2 needs an odd order N > 2")
    F = cyclotomic(N, "q")
    q = F.gen()
    grading = Grading(F, AbelianGroup(0, (N,)), [(1,), (1,)], [[q ** -2], [q ** 2]])
    core = Presentation(grading, [(1,), (2,)], name=f"uq_sl2({N})")
    return standard_lifting(core, {(1, 2): 1})


def Uq_sl2() -> Presentation:
    """Generic quantum group over Q(q): [x1x2] = 1 - g^2 with Gamma = Z."""
    F = rational_function("q")
    q = F.gen()
    grading = Grading(F, AbelianGroup(1, ()), [(1,), (1,)], [[q ** -2], [q ** 2]])
    core = Presentation(grading, [(1,), (2,)], name="Uq_sl2")
    return standard_lifting(core, {(1, 2): 1})


def taft(N=2) -> Presentation:
    """Taft algebra: x1^N = 0, g x1 = q x1 g, Gamma = Z/(N)."""
    N = _int(N, "N")
    if N < 2:
        raise PresetError("taft needs N >= 2")
    F = cyclotomic(N, "q")
    grading = Grading(F, AbelianGroup(0, (N,)), [(1,)], [[F.gen()]])
    return Presentation(grading, [(1,)], name=f"taft({N})")


def rank1_lifting(N=2, mu=1) -> Presentation:
    """x1^N = mu (1 - g^N) over Gamma = Z/(N^2), chi(g) = q of order N."""
    N = _int(N, "N")
    if N < 2:
        raise PresetError("rank1_lifting needs N >= 2")
    F = cyclotomic(N, "q")
    grading = Grading(F, AbelianGroup(0, (N * N,)), [(1,)], [[F.gen()]])
    core = Presentation(grading, [(1,)], name=f"rank1_lifting({N},{mu})")
    return standard_lifting(core, mu={(1,): F(_scalar_arg(mu))})


def radford(N=2) -> Presentation:
    """Radford algebra: x1^N = 1 - g^N over Z/(N^2)."""
    p = rank1_lifting(N, 1)
    p.name = f"radford({_int(N, 'N')})"
    return p


def book(N=3) -> Presentation:
    """Book algebra h(1, q): chi1(g) = q^-1, chi2(g) = q, [x1x2] = x1^N = x2^N = 0."""
    N = _int(N, "N")
    if N < 2:
        raise PresetError("book needs N >= 2")
    F = cyclotomic(N, "q")
    q = F.gen()
    grading = Grading(F, AbelianGroup(0, (N,)), [(1,), (1,)], [[q ** -1], [q]])
    return Presentation(grading, [(1,), (2,)], name=f"book({N})")


def quantum_plane(N1=2, N2=3) -> Presentation:
    """Nichols algebra of type A1 x A1: q11, q22 of orders N1, N2 and q12 q21 = 1."""
    N1, N2 = _int(N1, "N1"), _int(N2, "N2")
    if N1 < 2 or N2 < 2:
        raise PresetError("quantum_plane needs N1, N2 >= 2")
    M = math.lcm(N1, N2)
    F = cyclotomic(M, "z")
    z = F.gen()
    qm = [[z ** (M // N1), z], [z ** -1, z ** (M // N2)]]
    return Presentation(Grading.nichols(F, qm), [(1,), (2,)], name=f"quantum_plane({N1},{N2})")


def quantum_plane_lifting(lam=1, mu1=0, mu2=0, N=2) -> Presentation:
    """[x1x2] = lam (1 - g^2), x_i^N = mu_i (1 - g^N); Gamma = Z/(N^2), g1 = g2 = g."""
    N = _int(N, "N")
    if N < 2:
        raise PresetError("quantum_plane_lifting needs N >= 2")
    F = cyclotomic(N, "q")
    q = F.gen()
    grading = Grading(F, AbelianGroup(0, (N * N,)), [(1,), (1,)], [[q ** -1], [q]])
    core = Presentation(grading, [(1,), (2,)], name=f"quantum_plane_lifting({lam},{mu1},{mu2})")
    return standard_lifting(core, {(1, 2): F(_scalar_arg(lam))},
                            {(1,): F(_scalar_arg(mu1)), (2,): F(_scalar_arg(mu2))})


def b2_nichols() -> Presentation:
    """Generic Nichols algebra of type B2 over Q(q), L = {x1, x1x1x2, x1x2, x2}."""
    F = rational_function("q")
    q = F.gen()
    qm = [[q ** 2, q ** -2], [q ** -2, q ** 4]]
    L = [(1,), (1, 1, 2), (1, 2), (2,)]
    return Presentation(Grading.nichols(F, qm), L, name="b2_nichols")


# -- invalid liftings (lambda or mu nonzero although the character is nontrivial) -------

def _mixed_plane():
    F = cyclotomic(4, "q")
    i = F.gen()
    # chi_j(g_k) = q_kj with q11 = q22 = -1, q12 = i, q21 = -i
    grading = Grading(F, AbelianGroup(0, (4, 4)), [(1, 0), (0, 1)], [[-1, -i], [i, -1]])
    return Presentation(grading, [(1,), (2,)])


def mutant_plane_lambda() -> Presentation:
    """[x1x2] = 1 - g1 g2 although chi1 chi2 is not trivial."""
    return standard_lifting(_mixed_plane(), {(1, 2): 1}, check=False, name="mutant_plane_lambda")


def mutant_plane_mu() -> Presentation:
    """x1^2 = 1 - g1^2 although chi1^2 is not trivial."""
    return standard_lifting(_mixed_plane(), mu={(1,): 1}, check=False, name="mutant_plane_mu")


def mutant_rank1_mu() -> Presentation:
    """x1^3 = 1 - g^3 over Z/(9) x Z/(2) with chi1 = (q, -1), so chi1^3 is not trivial."""
    F = cyclotomic(3, "q")
    grading = Grading(F, AbelianGroup(0, (9, 2)), [(1, 0)], [[F.gen(), -1]])
    core = Presentation(grading, [(1,)])
    return standard_lifting(core, mu={(1,): 1}, check=False, name="mutant_rank1_mu")


def _scalar_arg(v):
    if isinstance(v, str):
        try:
            return Fraction(v)
        except ValueError:
            return v
    return v


PRESETS = {
    "uq_sl2": uq_sl2,
    "Uq_sl2": Uq_sl2,
    "taft": taft,
    "radford": radford,
    "book": book,
    "quantum_plane": quantum_plane,
    "quantum_plane_lifting": quantum_plane_lifting,
    "rank1_lifting": rank1_lifting,
}

FIXTURES = {
    "b2_nichols": b2_nichols,
    "mutant_plane_lambda": mutant_plane_lambda,
    "mutant_plane_mu": mutant_plane_mu,
    "mutant_rank1_mu": mutant_rank1_mu,
}

MUTANTS = ("mutant_plane_lambda", "mutant_plane_mu", "mutant_rank1_mu")


def load_preset(name: str, *params) -> Presentation:
    if ":" in name and not params:
        name, _, arg = name.partition(":")
        params = tuple(a.strip() for a in arg.split(",") if a.strip())
    make = PRESETS.get(name) or FIXTURES.get(name)
    if make is None:
        raise PresetError(f"unknown preset {name!r}; known: {', '.join(sorted(PRESETS) + sorted(FIXTURES))}")
    try:
        return make(*params)
    except TypeError as exc:
        raise PresetError(f"bad parameters for {name}: {exc}") from None
