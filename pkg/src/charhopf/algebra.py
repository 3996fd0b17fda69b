"""Elements of the smash product kX # k[Gamma] and its tensor square.

An element is a sparse map ``(word, group element) -> nonzero scalar`` with
the group part written on the right.  The smash rule
``(u, g) (v, h) = chi_v(g) (uv, gh)`` is applied on every product, so the
representation is canonical and equality is dict equality.
"""

from __future__ import annotations

from .grading import Grading, zdeg_of
from .scalars import Scalar


class HomogeneityError(ValueError):
    pass


class _Combination:
    """Shared machinery for SmashElement and SuperElement."""

    __slots__ = ("grading", "terms")

    def __init__(self, grading: Grading, terms=None):
        self.grading = grading
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def _raw(cls, grading, terms):
        self = object.__new__(cls)
        self.grading = grading
        self.terms = terms
        return self

    # subclasses define the Z^theta degree of a key's word part
    def _zdeg(self, x) -> tuple:
        raise NotImplementedError

    @classmethod
    def zero(cls, grading):
        return cls._raw(grading, {})

    @classmethod
    def scalar(cls, grading, c):
        c = grading.field(c)
        return cls._raw(grading, {((), grading.group.identity): c} if c else {})

    @classmethod
    def group_element(cls, grading, g, coeff=1):
        return cls._raw(grading, {((), grading.group.element(g)): grading.field(coeff)})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def __eq__(self, other):
        if isinstance(other, (int, Scalar)) and not isinstance(other, bool):
            other = type(self).scalar(self.grading, other)
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other):
        if isinstance(other, _Combination):
            if type(other) is not type(self):
                raise TypeError(f"cannot combine {type(self).__name__} and {type(other).__name__}")
            return other
        return type(self).scalar(self.grading, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        add_into(out, other.terms)
        return type(self)._raw(self.grading, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.grading, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = self.grading.field(c)
        if not c:
            return type(self)._raw(self.grading, {})
        return type(self)._raw(self.grading, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, _Combination):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = type(self).scalar(self.grading, 1)
        for _ in range(k):
            out = out * self
        return out

    def times_group(self, g):
        """Right multiplication by a group element (no scalar appears)."""
        grp = self.grading.group
        return type(self)._raw(self.grading, {(x, grp.mul(h, g)): c for (x, h), c in self.terms.items()})

    def is_group_free(self):
        ident = self.grading.group.identity
        return all(h == ident for (_, h) in self.terms)

    def __repr__(self):
        from .expr import format_element
        return format_element(self)


class SmashElement(_Combination):
    """Element of kX # k[Gamma]; keys are (word, group element)."""

    __slots__ = ()

    def _zdeg(self, x):
        return zdeg_of(x, self.grading.theta)

    @classmethod
    def word(cls, grading, u, coeff=1):
        return cls._raw(grading, {(tuple(u), grading.group.identity): grading.field(coeff)})

    @classmethod
    def letter(cls, grading, i):
        return cls.word(grading, (i,))


def add_into(acc: dict, terms: dict, coeff=None):
    """acc += coeff * terms, dropping zeros."""
    for k, v in terms.items():
        if coeff is not None:
            v = v * coeff
        old = acc.get(k)
        if old is None:
            acc[k] = v
        else:
            s = old + v
            if s:
                acc[k] = s
            else:
                del acc[k]


def multiply(a: _Combination, b: _Combination) -> _Combination:
    """Smash product: (x, g)(y, h) = chi_y(g) (xy, gh)."""
    if type(a) is not type(b):
        raise TypeError("operands of different element types")
    grading = a.grading
    grp = grading.group
    out = {}
    bdeg = [(y, h, c, a._zdeg(y)) for (y, h), c in b.terms.items()]
    for (x, g), ca in a.terms.items():
        trivial = not any(g)
        for y, h, cb, zy in bdeg:
            c = ca * cb
            if not trivial:
                c = c * grading.chi_eval(zy, g)
                key = (x + y, grp.mul(g, h))
            else:
                key = (x + y, h)
            old = out.get(key)
            if old is None:
                out[key] = c
            else:
                s = old + c
                if s:
                    out[key] = s
                else:
                    del out[key]
    return type(a)._raw(grading, out)


def q_commutator_general(a, b, q):
    """[a, b]_q = ab - q ba."""
    return multiply(a, b) - multiply(b, a).scale(q)


def _gamma_degree(e, x, g):
    grading = e.grading
    z = e._zdeg(x)
    if grading.nichols:
        return z
    return grading.group.mul(grading.g_of(z), g)


def graded_commutator(a, b):
    """[a, b] = [a, b]_{q_{a,b}} with q_{a,b} = chi_b(g_a).

    ``a`` must be Gamma-homogeneous and ``b`` Gamma-hat-homogeneous.
    """
    if not a or not b:
        return type(a).zero(a.grading)
    grading = a.grading
    gdegs = {_gamma_degree(a, x, g) for (x, g) in a.terms}
    if len(gdegs) != 1:
        raise HomogeneityError("left argument is not Gamma-homogeneous")
    zb = {b._zdeg(y) for (y, _) in b.terms}
    if len({grading.ghat_key(z) for z in zb}) != 1:
        raise HomogeneityError("right argument is not Gamma-hat-homogeneous")
    ga = gdegs.pop()
    zb = next(iter(zb))
    if grading.nichols:
        q = grading.qbichar(ga, zb)
    else:
        q = grading.chi_eval(zb, ga)
    return q_commutator_general(a, b, q)


def leading_word(a: SmashElement):
    if not a:
        raise ValueError("the zero element has no leading word")
    if not a.is_group_free():
        raise ValueError("leading word is only defined on kX")
    return min(x for (x, _) in a.terms)


def reverse_element(a: SmashElement) -> SmashElement:
    if not a.is_group_free():
        raise ValueError("reversal is only defined on kX")
    return SmashElement._raw(a.grading, {(x[::-1], h): c for (x, h), c in a.terms.items()})


def counit(a: _Combination) -> Scalar:
    total = a.grading.field.zero
    for (x, _), c in a.terms.items():
        if not x:
            total = total + c
    return total


# -- tensor square ----------------------------------------------------------------

class TensorElement:
    """Sparse element of (kX # k[Gamma]) (x) (kX # k[Gamma])."""

    __slots__ = ("grading", "terms")

    def __init__(self, grading, terms=None):
        self.grading = grading
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        add_into(out, other.terms)
        return TensorElement(self.grading, out)

    def __sub__(self, other):
        out = dict(self.terms)
        add_into(out, other.terms, self.grading.field(-1))
        return TensorElement(self.grading, out)

    def __mul__(self, other):
        return tensor_multiply(self, other)

    def __repr__(self):
        return f"TensorElement({len(self.terms)} terms)"


def tensor_multiply(s: TensorElement, t: TensorElement) -> TensorElement:
    grading = s.grading
    grp = grading.group
    theta = grading.theta
    out = {}
    other = [(c, k, d, l, zdeg_of(c, theta), zdeg_of(d, theta), v) for ((c, k), (d, l)), v in t.terms.items()]
    for ((a, g), (b, h)), u in s.terms.items():
        for c, k, d, l, zc, zd, v in other:
            coeff = u * v * grading.chi_eval(zc, g) * grading.chi_eval(zd, h)
            key = ((a + c, grp.mul(g, k)), (b + d, grp.mul(h, l)))
            old = out.get(key)
            if old is None:
                out[key] = coeff
            else:
                s2 = old + coeff
                if s2:
                    out[key] = s2
                else:
                    del out[key]
    return TensorElement(grading, out)


def _delta_word(grading, u):
    cache = grading.caches.setdefault("delta", {})
    try:
        return cache[u]
    except KeyError:
        pass
    one = grading.field.one
    e = grading.group.identity
    if not u:
        t = TensorElement(grading, {(((), e), ((), e)): one})
    else:
        prev = _delta_word(grading, u[:-1])
        i = u[-1]
        dx = TensorElement(grading, {(((i,), e), ((), e)): one, (((), grading.g[i - 1]), ((i,), e)): one})
        t = tensor_multiply(prev, dx)
    cache[u] = t
    return t


def coproduct(a: SmashElement) -> TensorElement:
    """Algebra map with x_i -> x_i (x) 1 + g_i (x) x_i and g -> g (x) g."""
    grading = a.grading
    grp = grading.group
    out = {}
    for (u, g), c in a.terms.items():
        for ((x, h), (y, k)), v in _delta_word(grading, u).terms.items():
            key = ((x, grp.mul(h, g)), (y, grp.mul(k, g)))
            old = out.get(key)
            val = c * v
            if old is None:
                out[key] = val
            else:
                s = old + val
                if s:
                    out[key] = s
                else:
                    del out[key]
    return TensorElement(grading, out)


def antipode(a: SmashElement) -> SmashElement:
    """Anti-algebra map with S(g) = g^-1 and S(x_i) = -g_i^-1 x_i."""
    grading = a.grading
    grp = grading.group
    minus = grading.field(-1)
    images = {}
    for i in range(1, grading.theta + 1):
        gi_inv = grp.inv(grading.g[i - 1])
        images[i] = SmashElement.group_element(grading, gi_inv, minus) * SmashElement.letter(grading, i)
    total = SmashElement.zero(grading)
    for (u, g), c in a.terms.items():
        # S(x_i1 ... x_in g) = g^-1 S(x_in) ... S(x_i1)
        term = SmashElement.scalar(grading, c)
        for i in u:
            term = images[i] * term
        total = total + SmashElement.group_element(grading, grp.inv(g)) * term
    return total


def tensor_apply(t: TensorElement, left=None, right=None, combine=None):
    """Apply linear maps to the tensor factors and multiply the results.

    ``left``/``right`` map a single (word, group) key to a SmashElement; with
    ``combine`` set to ``multiply`` this computes m o (left (x) right).
    """
    grading = t.grading
    total = SmashElement.zero(grading)
    for ((x, g), (y, h)), c in t.terms.items():
        a = left((x, g)) if left else SmashElement._raw(grading, {(x, g): grading.field.one})
        b = right((y, h)) if right else SmashElement._raw(grading, {(y, h): grading.field.one})
        total = total + (combine or multiply)(a, b).scale(c)
    return total
