"""Shared constructions for the tests."""

import random

from charhopf.algebra import SmashElement, graded_commutator, q_commutator_general
from charhopf.grading import AbelianGroup, Grading
from charhopf.scalars import cyclotomic, rational_function, rationals


def sl2_grading(N=3):
    F = cyclotomic(N, "q")
    q = F.gen()
    return Grading(F, AbelianGroup(0, (N,)), [(1,), (1,)], [[q ** -2], [q ** 2]])


def generic_grading(kind="cyclotomic", theta=2):
    """Two or three letters with unrelated q_ij and a group Z^theta."""
    if kind == "cyclotomic":
        F = cyclotomic(12, "z")
        vals = [F.root(k) for k in (1, 5, 7, 2, 3, 11, 4, 9, 10)]
    elif kind == "rational_function":
        F = rational_function("q")
        q = F.gen()
        vals = [q ** k for k in (2, -1, 3, -2, 4, 1, 5, -3, 6)]
    else:
        F = rationals()
        vals = [F(v) for v in (2, 3, -5, 7, 11, -13, 17, 19, 23)]
    qm = [[vals[theta * i + j] for j in range(theta)] for i in range(theta)]
    grp = AbelianGroup(theta, ())
    g = [tuple(int(i == j) for j in range(theta)) for i in range(theta)]
    chi = [[qm[i][j] for i in range(theta)] for j in range(theta)]
    return Grading(F, grp, g, chi)


def random_homogeneous(grading, rng: random.Random, max_len=3):
    """Random element homogeneous in both Z^theta-degree and group part."""
    theta = grading.theta
    n = rng.randint(0, max_len)
    base = [rng.randint(1, theta) for _ in range(n)]
    grp = grading.group
    g = tuple(rng.randint(-1, 1) for _ in range(grp.free_rank)) + tuple(rng.randrange(m) for m in grp.torsion)
    F = grading.field
    terms = {}
    for _ in range(rng.randint(1, 3)):
        w = base[:]
        rng.shuffle(w)
        terms[(tuple(w), g)] = F(rng.choice([1, 2, -1, 3])) * (F.gen() ** rng.randint(0, 3) if F.kind != "rationals" else F.one)
    return SmashElement(grading, terms)


def identities_hold(gr, rng):
    a, b, c = (random_homogeneous(gr, rng) for _ in range(3))
    F = gr.field
    q, q1, q2 = (F(rng.choice([2, 3, -1])) * (F.gen() ** rng.randint(0, 4) if F.kind != "rationals" else 1)
                 for _ in range(3))
    qc = q_commutator_general
    ok = qc(a, b * c, q * q1) == qc(a, b, q) * c + (b * qc(a, c, q1)).scale(q)
    ok &= qc(a * b, c, q * q1) == a * qc(b, c, q1) + (qc(a, c, q) * b).scale(q1)
    lhs = qc(qc(a, b, q1), c, q2 * q)
    rhs = qc(a, qc(b, c, q), q1 * q2) - (b * qc(a, c, q2)).scale(q1) + (qc(a, c, q2) * b).scale(q)
    ok &= lhs == rhs
    # graded form with q = q_{a,b}
    if a and b and c:
        gc = graded_commutator
        (wa, ga), (wb, _) = next(iter(a.terms)), next(iter(b.terms))
        g_a = gr.group.mul(gr.g_of(a._zdeg(wa)), ga)
        qab = gr.chi_eval(b._zdeg(wb), g_a)
        ok &= gc(a, b * c) == gc(a, b) * c + (b * gc(a, c)).scale(qab)
    return ok
