"""Abelian groups, characters and the bicharacter q_{a,b}.

Group elements are integer tuples ``(free..., torsion...)`` with torsion
coordinates reduced into ``[0, m_i)``.  Degrees in Z^theta are integer
tuples of length theta.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

from .scalars import INFINITE, FieldSpec, Scalar, multiplicative_order


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/(m_1) + ... + Z/(m_k)."""

    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(m) for m in self.torsion))
        if self.free_rank < 0 or any(m < 2 for m in self.torsion):
            raise GradingError("invalid group presentation")

    @property
    def rank(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def identity(self) -> tuple:
        return (0,) * self.rank

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self):
        if self.free_rank:
            return INFINITE
        return reduce(lambda a, b: a * b, self.torsion, 1)

    def element(self, exps) -> tuple:
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.rank:
            raise GradingError(f"group element needs {self.rank} exponents, got {len(exps)}")
        f = self.free_rank
        return exps[:f] + tuple(e % m for e, m in zip(exps[f:], self.torsion))

    def generator(self, i: int) -> tuple:
        e = [0] * self.rank
        e[i] = 1
        return self.element(e)

    def mul(self, a: tuple, b: tuple) -> tuple:
        if len(a) != self.rank or len(b) != self.rank:
            raise GradingError("group element from a different group")
        f = self.free_rank
        if not self.torsion:
            return tuple(x + y for x, y in zip(a, b))
        return tuple(x + y for x, y in zip(a[:f], b[:f])) + tuple(
            (x + y) % m for x, y, m in zip(a[f:], b[f:], self.torsion))

    def inv(self, a: tuple) -> tuple:
        return self.element(-x for x in a)

    def pow(self, a: tuple, k: int) -> tuple:
        return self.element(k * x for x in a)

    def elements(self):
        """All elements, in lexicographic order of exponent vectors."""
        if self.free_rank:
            raise GradingError("cannot enumerate an infinite group")
        return [tuple(t) for t in itertools.product(*(range(m) for m in self.torsion))]

    def torsion_elements(self):
        """Elements with zero free part: one representative per free coset."""
        z = (0,) * self.free_rank
        return [z + tuple(t) for t in itertools.product(*(range(m) for m in self.torsion))]

    def format(self, g: tuple) -> str:
        parts = []
        for i, e in enumerate(g):
            if e == 1:
                parts.append(f"g{i + 1}")
            elif e:
                parts.append(f"g{i + 1}^{e}")
        return " ".join(parts)


group_mul = AbelianGroup.mul


class Character:
    """A character of an AbelianGroup, stored by its values on the generators."""

    __slots__ = ("group", "values", "field", "_cache")

    def __init__(self, group: AbelianGroup, values, field: FieldSpec | None = None):
        values = tuple(values)
        if len(values) != group.rank:
            raise GradingError(f"character needs {group.rank} values, got {len(values)}")
        for i, v in enumerate(values):
            if not v:
                raise GradingError("character values must be nonzero")
            if i >= group.free_rank:
                m = group.torsion[i - group.free_rank]
                if not (v ** m).is_one():
                    raise GradingError(f"value {v!r} on a generator of order {m} is not an m-th root of 1")
        self.group = group
        self.values = values
        self.field = values[0].field if values else field
        self._cache = {}

    def __call__(self, g: tuple) -> Scalar:
        return char_eval(self, g)

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.group, [a * b for a, b in zip(self.values, other.values)], self.field)

    def __pow__(self, k: int) -> "Character":
        return Character(self.group, [a ** k for a in self.values], self.field)

    def __eq__(self, other):
        return isinstance(other, Character) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def is_trivial(self) -> bool:
        return all(v.is_one() for v in self.values)

    def __repr__(self):
        return f"Character({list(self.values)!r})"


def char_eval(chi: Character, g: tuple) -> Scalar:
    try:
        return chi._cache[g]
    except KeyError:
        pass
    if not chi.values:
        if chi.field is None:
            raise GradingError("character of the trivial group has no field attached")
        return chi.field.one
    val = chi.field.one
    for v, e in zip(chi.values, g):
        if e:
            val = val * v ** e
    chi._cache[g] = val
    return val


class Grading:
    """theta letters with group-likes g_i and characters chi_i.

    Nichols mode (``Grading.nichols``) has a trivial group and takes the braiding
    matrix q_{ij} directly.  Its bosonization realises the same matrix with
    Gamma = Z^theta, g_i = e_i and chi_j(e_i) = q_{ij}.
    """

    def __init__(self, field: FieldSpec, group: AbelianGroup, g, chi, qmatrix=None):
        self.field = field
        self.group = group
        self.g = [group.element(x) for x in g]
        self.chi = [c if isinstance(c, Character) else Character(group, [field(v) for v in c], field) for c in chi]
        self.theta = len(self.g)
        if len(self.chi) != self.theta or self.theta < 1:
            raise GradingError("need one group element and one character per letter")
        self.nichols = qmatrix is not None
        if qmatrix is None:
            qmatrix = [[char_eval(self.chi[j], self.g[i]) for j in range(self.theta)]
                       for i in range(self.theta)]
        else:
            qmatrix = [[field(x) for x in row] for row in qmatrix]
        self.qmatrix = qmatrix
        for row in qmatrix:
            if len(row) != self.theta or any(not x for x in row):
                raise GradingError("q-matrix entries must be nonzero")
        self._q_cache = {}
        self._chi_cache = {}
        self._g_cache = {}
        self._boson = None
        self.caches = {}  # shared memo space for expansions etc.

    @classmethod
    def nichols(cls, field: FieldSpec, qmatrix) -> "Grading":
        theta = len(qmatrix)
        group = AbelianGroup(0, ())
        return cls(field, group, [()] * theta, [Character(group, (), field)] * theta, qmatrix=qmatrix)

    # -- bicharacter ----------------------------------------------------------------
    def q(self, i: int, j: int) -> Scalar:
        """q_{ij} with 1-based letter indices."""
        return self.qmatrix[i - 1][j - 1]

    def qbichar(self, a: tuple, b: tuple) -> Scalar:
        key = (a, b)
        try:
            return self._q_cache[key]
        except KeyError:
            pass
        val = self.field.one
        for i, ai in enumerate(a):
            if ai:
                row = self.qmatrix[i]
                for j, bj in enumerate(b):
                    if bj:
                        val = val * row[j] ** (ai * bj)
        self._q_cache[key] = val
        return val

    def chi_eval(self, zdeg: tuple, g: tuple) -> Scalar:
        """chi_zdeg(g) = prod_i chi_i(g)^zdeg_i."""
        if not any(g):
            return self.field.one
        key = (zdeg, g)
        try:
            return self._chi_cache[key]
        except KeyError:
            pass
        val = self.field.one
        for c, d in zip(self.chi, zdeg):
            if d:
                val = val * char_eval(c, g) ** d
        self._chi_cache[key] = val
        return val

    def g_of(self, zdeg: tuple) -> tuple:
        try:
            return self._g_cache[zdeg]
        except KeyError:
            pass
        grp = self.group
        h = grp.identity
        for gi, d in zip(self.g, zdeg):
            if d:
                h = grp.mul(h, grp.pow(gi, d))
        self._g_cache[zdeg] = h
        return h

    def char_of(self, zdeg: tuple) -> Character:
        grp = self.group
        vals = [self.chi_eval(zdeg, grp.generator(k)) for k in range(grp.rank)]
        return Character(grp, vals, self.field)

    def ghat_key(self, zdeg: tuple) -> tuple:
        """Hashable stand-in for the character chi_zdeg.

        In Nichols mode this is the bosonized character, i.e. the values
        q_{e_j, zdeg} for j = 1..theta.
        """
        if self.nichols:
            return tuple(self.qbichar(_unit(self.theta, j), zdeg) for j in range(self.theta))
        return tuple(self.chi_eval(zdeg, self.group.generator(k)) for k in range(self.group.rank))

    def is_trivial_degree(self, zdeg: tuple) -> bool:
        return all(v.is_one() for v in self.ghat_key(zdeg))

    def bosonization(self) -> "Grading":
        """Group-realisation of the braiding: itself unless in Nichols mode."""
        if not self.nichols:
            return self
        if self._boson is None:
            theta = self.theta
            grp = AbelianGroup(theta, ())
            g = [_unit(theta, i) for i in range(theta)]
            chi = [Character(grp, [self.qmatrix[i][j] for i in range(theta)], self.field) for j in range(theta)]
            self._boson = Grading(self.field, grp, g, chi)
        return self._boson

    def zero_degree(self) -> tuple:
        return (0,) * self.theta


def _unit(theta, j):
    e = [0] * theta
    e[j] = 1
    return tuple(e)


def zdeg_of(word, theta: int) -> tuple:
    d = [0] * theta
    for i in word:
        d[i - 1] += 1
    return tuple(d)


def degrees(u, grading: Grading):
    """(Z^theta degree, deg_Gamma, deg_Gamma-hat) of a word."""
    z = zdeg_of(u, grading.theta)
    return z, grading.g_of(z), grading.char_of(z)


def q_bichar(a_deg, b_deg, grading: Grading) -> Scalar:
    return grading.qbichar(tuple(a_deg), tuple(b_deg))


def N_default(u, grading: Grading):
    """ord q_{u,u}; order 1 forces N_u = INFINITE in characteristic 0."""
    z = zdeg_of(u, grading.theta)
    r = multiplicative_order(grading.qbichar(z, z))
    return INFINITE if r == 1 else r
