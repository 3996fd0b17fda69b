"""Exact coefficient fields of characteristic zero.

Three backends share one interface:

* ``rationals()`` -- Q, stored as a residue modulo ``x - 1``;
* ``cyclotomic(n)`` -- Q(zeta_n), residues modulo the n-th cyclotomic
  polynomial on the power basis ``1, zeta, ..., zeta^(phi(n)-1)``;
* ``rational_function()`` -- Q(q), reduced fractions of integer polynomials.

Scalars are immutable and hashable; equal values have identical canonical
representations, so ``==`` and ``hash`` are structural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from . import kernels

INFINITE = math.inf


class FieldError(ArithmeticError):
    """Mixed-field operands or an operation the backend does not support."""


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "rationals" | "cyclotomic" | "rational_function"
    n: int = 1
    symbol: str = "z"
    _data: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.kind not in ("rationals", "cyclotomic", "rational_function"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("cyclotomic order must be >= 1")

    # -- construction of elements -------------------------------------------------
    def __call__(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldError(f"scalar from {value.field} used in {self}")
            return value
        if isinstance(value, str):
            from .expr import parse_scalar
            return parse_scalar(value, self)
        if isinstance(value, (int, Rational)):
            value = Fraction(value)
            if self.kind == "rational_function":
                return RatFunc._make(self, (value.numerator,), (value.denominator,))
            num = [0] * self.degree
            num[0] = value.numerator
            return Cyc._make(self, num, value.denominator)
        raise TypeError(f"cannot convert {value!r} to a scalar of {self}")

    @property
    def zero(self):
        return self._cached("zero", lambda: self(0))

    @property
    def one(self):
        return self._cached("one", lambda: self(1))

    def gen(self):
        """The distinguished generator: zeta for cyclotomic, q for Q(q)."""
        if self.kind == "cyclotomic":
            return self.root(1)
        if self.kind == "rational_function":
            return RatFunc._make(self, (0, 1), (1,))
        raise FieldError("Q has no distinguished generator")

    def root(self, k: int) -> "Cyc":
        return primitive_root(self, k)

    def q(self, k: int) -> "RatFunc":
        if self.kind != "rational_function":
            raise FieldError("q^k only exists in the rational function field")
        if k >= 0:
            return RatFunc._make(self, (0,) * k + (1,), (1,))
        return RatFunc._make(self, (1,), (0,) * (-k) + (1,))

    # -- cyclotomic data ------------------------------------------------------------
    @property
    def degree(self) -> int:
        if self.kind == "rational_function":
            raise FieldError("Q(q) is not a finite extension")
        return len(self.modulus)

    @property
    def modulus(self) -> tuple:
        """Cyclotomic polynomial without its leading coefficient."""
        if self.kind == "rationals":
            return (-1,)
        return self._cached("modulus", lambda: tuple(cyclotomic_polynomial(self.n)[:-1]))

    def _cached(self, key, make):
        try:
            return self._data[key]
        except KeyError:
            val = self._data[key] = make()
            return val

    def __str__(self):
        if self.kind == "cyclotomic":
            return f"Q(zeta_{self.n})"
        if self.kind == "rational_function":
            return f"Q({self.symbol})"
        return "Q"

    def to_json(self):
        if self.kind == "cyclotomic":
            return {"kind": "cyclotomic", "n": self.n, "symbol": self.symbol}
        if self.kind == "rational_function":
            return {"kind": "rational_function", "symbol": self.symbol}
        return {"kind": "rationals"}


@lru_cache(maxsize=None)
def rationals() -> FieldSpec:
    return FieldSpec("rationals", 1, "z")


@lru_cache(maxsize=None)
def cyclotomic(n: int, symbol: str = "z") -> FieldSpec:
    return FieldSpec("cyclotomic", n, symbol)


@lru_cache(maxsize=None)
def rational_function(symbol: str = "q") -> FieldSpec:
    return FieldSpec("rational_function", 1, symbol)


def field_from_json(data) -> FieldSpec:
    if isinstance(data, str):
        kind, _, arg = data.partition(":")
        data = {"kind": kind}
        if arg:
            data["n"] = int(arg)
    kind = data.get("kind", "rationals")
    if kind == "cyclotomic":
        return cyclotomic(int(data["n"]), data.get("symbol", "z"))
    if kind == "rational_function":
        return rational_function(data.get("symbol", "q"))
    if kind == "rationals":
        return rationals()
    raise ValueError(f"unknown field kind {kind!r}")


# ---------------------------------------------------------------------------------
# integer polynomial helpers (lists, lowest degree first)

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod_monic(a, b):
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            q[k - db] = c
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    return q, _trim(a[:db])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, r = _poly_divmod_monic(p, cyclotomic_polynomial(d))
            assert not r
    return tuple(p)


def _content(p):
    return math.gcd(*p) if p else 0


def _poly_exact_div(a, b):
    """Quotient a / b over Z, assuming it is exact."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            t, r = divmod(c, lb)
            if r:
                raise ArithmeticError("inexact polynomial division")
            q[k - db] = t
            for j in range(db + 1):
                a[k - db + j] -= t * b[j]
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return q


def _prem(a, b):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [lb * x for x in a]
        for j in range(db + 1):
            a[shift + j] -= c * b[j]
        a = _trim(a)
    return a


def _primitive(p):
    c = _content(p)
    if p[-1] < 0:
        c = -c
    return [x // c for x in p]


def poly_gcd(a, b):
    """Primitive gcd with positive leading coefficient."""
    a, b = _trim(a), _trim(b)
    if not a:
        return _primitive(b) if b else [1]
    if not b:
        return _primitive(a)
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else [])
    return _primitive(a)


def _poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _poly_scale(a, c):
    return [c * x for x in a]


# ---------------------------------------------------------------------------------

class Scalar:
    __slots__ = ()

    def __radd__(self, other):
        return self + other

    def __rsub__(self, other):
        return (-self) + other

    def __rmul__(self, other):
        return self * other

    def __rtruediv__(self, other):
        return self.field(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldError(f"mixed fields {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Rational)):
            return self.field(other)
        return NotImplemented

    def __repr__(self):
        from .expr import format_scalar
        return format_scalar(self)


class Cyc(Scalar):
    """Element of Q or Q(zeta_n): integer residue ``num`` over positive ``den``."""

    __slots__ = ("field", "num", "den", "_hash")

    @classmethod
    def _make(cls, fld, num, den):
        if den < 0:
            den = -den
            num = [-x for x in num]
        g = math.gcd(den, *num)
        if g != 1:
            num = [x // g for x in num]
            den //= g
        self = object.__new__(cls)
        self.field = fld
        self.num = tuple(num)
        self.den = den
        self._hash = None
        return self

    def is_zero(self):
        return not any(self.num)

    def is_one(self):
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, Cyc):
            return self.num == other.num and self.den == other.den and self.field == other.field
        if isinstance(other, (int, Rational)):
            other = Fraction(other)
            return (self.den == other.denominator and self.num[0] == other.numerator
                    and not any(self.num[1:]))
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            if not any(self.num[1:]):
                h = hash(Fraction(self.num[0], self.den))
            else:
                h = hash((self.field.kind, self.field.n, self.num, self.den))
            self._hash = h
        return h

    def __neg__(self):
        return Cyc._make(self.field, [-x for x in self.num], self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return Cyc._make(self.field, [a + b for a, b in zip(self.num, other.num)], self.den)
        da, db = self.den, other.den
        return Cyc._make(self.field, [a * db + b * da for a, b in zip(self.num, other.num)], da * db)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.num) == 1:
            return Cyc._make(self.field, [self.num[0] * other.num[0]], self.den * other.den)
        return Cyc._make(self.field, kernels.cyc_mul(self.num, other.num, self.field.modulus),
                         self.den * other.den)

    def inverse(self):
        if not any(self.num):
            raise ZeroDivisionError("division by zero scalar")
        if len(self.num) == 1:
            return Cyc._make(self.field, [self.den], self.num[0])
        return _cyc_inverse(self)

    def rational(self):
        """The value as a Fraction when it lies in Q, else None."""
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)


def _cyc_inverse(a: Cyc) -> Cyc:
    fld = a.field
    d = fld.degree
    # columns of the multiplication-by-a matrix on the power basis
    cols = []
    e = [0] * d
    for j in range(d):
        e[j] = 1
        cols.append(kernels.cyc_mul(a.num, e, fld.modulus))
        e[j] = 0
    m = [[Fraction(cols[j][i]) for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
    for c in range(d):
        piv = next(r for r in range(c, d) if m[r][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(d):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    sol = [m[i][d] for i in range(d)]
    den = 1
    for x in sol:
        den = den * x.denominator // math.gcd(den, x.denominator)
    # a was scaled by 1/a.den
    return Cyc._make(fld, [int(x * den) * a.den for x in sol], den)


class RatFunc(Scalar):
    """Element of Q(q): ``num / den`` with integer coefficient tuples.

    Canonical form: gcd(num, den) = 1 in Q[q], the joint content of both is 1
    and ``den`` has a positive leading coefficient.
    """

    __slots__ = ("field", "num", "den", "_hash")

    @classmethod
    def _make(cls, fld, num, den):
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self = object.__new__(cls)
            self.field, self.num, self.den, self._hash = fld, (), (1,), None
            return self
        if len(den) > 1:
            if not any(den[:-1]):
                # monomial denominator c*q^m: cancel common powers of q
                low = next(i for i, x in enumerate(num) if x)
                s = min(low, len(den) - 1)
                if s:
                    num = num[s:]
                    den = den[s:]
            else:
                g = poly_gcd(num, den)
                if len(g) > 1:
                    num = _poly_exact_div(num, g)
                    den = _poly_exact_div(den, g)
        c = math.gcd(_content(num), _content(den))
        if den[-1] < 0:
            c = -c
        if c != 1:
            num = [x // c for x in num]
            den = [x // c for x in den]
        self = object.__new__(cls)
        self.field, self.num, self.den, self._hash = fld, tuple(num), tuple(den), None
        return self

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == (1,) and self.den == (1,)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den and self.field == other.field
        if isinstance(other, (int, Rational)):
            other = Fraction(other)
            if other == 0:
                return not self.num
            return self.num == (other.numerator,) and self.den == (other.denominator,)
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            if len(self.num) <= 1 and len(self.den) == 1:
                h = hash(Fraction(self.num[0] if self.num else 0, self.den[0]))
            else:
                h = hash(("Q(q)", self.num, self.den))
            self._hash = h
        return h

    def __neg__(self):
        return RatFunc._make(self.field, [-x for x in self.num], self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc._make(self.field, _poly_add(self.num, other.num), self.den)
        num = _poly_add(kernels.poly_mul(self.num, other.den), kernels.poly_mul(other.num, self.den))
        return RatFunc._make(self.field, num, kernels.poly_mul(self.den, other.den))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return self.field.zero
        return RatFunc._make(self.field, kernels.poly_mul(self.num, other.num),
                             kernels.poly_mul(self.den, other.den))

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("division by zero scalar")
        return RatFunc._make(self.field, self.den, self.num)

    def rational(self):
        if len(self.num) <= 1 and len(self.den) == 1:
            return Fraction(self.num[0] if self.num else 0, self.den[0])
        return None


# ---------------------------------------------------------------------------------

def field_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if not (isinstance(a, Scalar) and isinstance(b, Scalar)):
        raise TypeError("field_arith expects two scalars")
    if a.field != b.field:
        raise FieldError(f"mixed fields {a.field} and {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def primitive_root(fld: FieldSpec, k: int) -> Cyc:
    """zeta^k in Q(zeta_n)."""
    if fld.kind != "cyclotomic":
        raise FieldError("primitive_root needs a cyclotomic field")
    return _root_table(fld)[k % fld.n]


def _root_table(fld):
    def make():
        d = fld.degree
        powers = []
        cur = [1] + [0] * (d - 1)
        z = [0] * d
        if d > 1:
            z[1] = 1
        else:
            # phi(n) = 1 only for n = 1, 2 where zeta = 1 or -1
            z[0] = 1 if fld.n == 1 else -1
        for _ in range(fld.n):
            powers.append(Cyc._make(fld, cur, 1))
            cur = kernels.cyc_mul(cur, z, fld.modulus)
        return powers
    return fld._cached("roots", make)


def root_exponent(a: Scalar):
    """k with a == zeta^k when ``a`` is a power of the cyclotomic generator."""
    if not isinstance(a, Cyc) or a.field.kind != "cyclotomic":
        return None
    lookup = a.field._cached("root_lookup", lambda: {r: k for k, r in enumerate(_root_table(a.field))})
    return lookup.get(a)


def multiplicative_order(a: Scalar):
    """Least r >= 1 with a^r = 1, or INFINITE."""
    if not a:
        raise ZeroDivisionError("zero has no multiplicative order")
    if isinstance(a, RatFunc):
        c = a.rational()
        if c == 1:
            return 1
        if c == -1:
            return 2
        return INFINITE
    fld = a.field
    if fld.kind == "rationals":
        c = a.rational()
        return 1 if c == 1 else 2 if c == -1 else INFINITE
    # the roots of unity in Q(zeta_n) have order dividing lcm(n, 2)
    bound = fld.n if fld.n % 2 == 0 else 2 * fld.n
    p = a
    for r in range(1, bound + 1):
        if p.is_one():
            return r
        p = p * a
    return INFINITE
