"""Text form of scalars and elements: a small recursive-descent parser and printer.

Grammar (whitespace-insensitive, juxtaposition multiplies)::

    expr    = ["+"|"-"] term {("+"|"-") term}
    term    = power {["*"|"/"] power}
    power   = primary ["^" ["-"] nat]
    primary = number | symbol | "x" nat | "g" nat | "[" word "]" | "(" expr ")"

``symbol`` is the field generator (``z`` or ``q``).  Division is only by
nonzero scalars; negative exponents only on scalars and group elements.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .scalars import Cyc, FieldSpec, RatFunc, Scalar, root_exponent
from .words import format_word, is_lyndon, parse_word


class ExpressionError(ValueError):
    def __init__(self, msg, src="", pos=0):
        line = src.count("\n", 0, pos) + 1
        col = pos - (src.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{msg} (line {line}, column {col})")
        self.line = line
        self.column = col


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<bracket>\[[^\]]*\])
  | (?P<gen>[xg]\d+)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op>[-+*/^()])
""", re.VERBOSE)


def _tokenize(src):
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise ExpressionError(f"unexpected character {src[pos]!r}", src, pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(src)))
    return out


class _Parser:
    def __init__(self, src, field: FieldSpec, grading=None, L=None):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0
        self.field = field
        self.grading = grading
        self.L = L

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ExpressionError(msg, self.src, tok[2])

    def expect(self, text):
        t = self.take()
        if t[1] != text:
            self.error(f"expected {text!r}", t)

    def parse(self):
        val = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return val

    def expr(self):
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        val = self.term()
        if sign < 0:
            val = -val
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def _starts_primary(self, t):
        return t[0] in ("num", "bracket", "gen", "name") or t[1] == "("

    def term(self):
        val = self.power()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                val = _mul(val, self.power())
            elif t[0] == "op" and t[1] == "/":
                self.take()
                rhs = self.power()
                if not isinstance(rhs, Scalar):
                    rhs = _as_scalar(rhs)
                    if rhs is None:
                        self.error("division is only by scalars", t)
                if not rhs:
                    self.error("division by zero", t)
                val = _mul(val, rhs.inverse())
            elif self._starts_primary(t):
                val = _mul(val, self.power())
            else:
                return val

    def power(self):
        val = self.primary()
        if self.peek()[1] == "^":
            t = self.take()
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            n = self.take()
            if n[0] != "num":
                self.error("exponent must be an integer", n)
            k = -int(n[1]) if neg else int(n[1])
            val = self._pow(val, k, t)
        return val

    def _pow(self, val, k, tok):
        if isinstance(val, Scalar):
            if k < 0 and not val:
                self.error("zero to a negative power", tok)
            return val ** k
        s = _as_scalar(val)
        if s is not None:
            return type(val).scalar(val.grading, s ** k)
        if len(val.terms) == 1:
            ((U, g), c), = val.terms.items()
            if not U and c.is_one():
                return type(val).group_element(val.grading, val.grading.group.pow(g, k))
        if k < 0:
            self.error("negative exponent on a non-invertible element", tok)
        return val ** k

    def primary(self):
        t = self.take()
        kind, text, _ = t
        if kind == "num":
            return self.field(int(text))
        if kind == "op" and text == "(":
            val = self.expr()
            self.expect(")")
            return val
        if kind == "name":
            if self.field.kind != "rationals" and text == self.field.symbol:
                return self.field.gen()
            self.error(f"unknown symbol {text!r}", t)
        if kind == "gen":
            grading = self._need_grading(t)
            idx = int(text[1:])
            if text[0] == "x":
                if not 1 <= idx <= grading.theta:
                    self.error(f"letter x{idx} out of range", t)
                return self._letter((idx,), t)
            grp = grading.group
            if not 1 <= idx <= grp.rank:
                self.error(f"group generator g{idx} out of range", t)
            from .superletters import SuperElement
            return SuperElement.group_element(grading, grp.generator(idx - 1))
        if kind == "bracket":
            grading = self._need_grading(t)
            try:
                w = parse_word(text[1:-1], grading.theta)
            except ValueError as exc:
                self.error(str(exc), t)
            if not w:
                self.error("empty super letter", t)
            if not is_lyndon(w):
                self.error(f"[{format_word(w)}] is not a Lyndon word", t)
            return self._letter(w, t)
        self.error(f"unexpected {text!r}" if text else "unexpected end of input", t)

    def _need_grading(self, t):
        if self.grading is None:
            self.error("only scalars are allowed here", t)
        return self.grading

    def _letter(self, w, t):
        from .superletters import superletter_in_L
        return superletter_in_L(self.grading, self.L, w)


def _as_scalar(e):
    """The scalar value of a multiple of 1, else None."""
    if isinstance(e, Scalar):
        return e
    if not e.terms:
        return e.grading.field.zero
    if len(e.terms) == 1:
        ((U, g), c), = e.terms.items()
        if not U and not any(g):
            return c
    return None


def _mul(a, b):
    if isinstance(a, Scalar) and isinstance(b, Scalar):
        return a * b
    if isinstance(a, Scalar):
        return b.scale(a)
    if isinstance(b, Scalar):
        return a.scale(b)
    return a * b


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    return _Parser(text, field).parse()


def parse_expression(src: str, grading, L=None):
    """Evaluate ``src`` to a SuperElement over ``grading``.

    Super letters [w] with w outside ``L`` are unfolded into commutators of
    members of ``L``.
    """
    from .superletters import SuperElement
    val = _Parser(src, grading.field, grading, L).parse()
    if isinstance(val, Scalar):
        return SuperElement.scalar(grading, val)
    return val


# -- printing -----------------------------------------------------------------------

def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _monomial(sym, k):
    return "1" if k == 0 else sym if k == 1 else f"{sym}^{k}"


def _poly_terms(coeffs, sym, shift=0):
    """(sign, text) pairs for sum c_k sym^(k+shift), highest power first."""
    out = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        mono = _monomial(sym, k + shift)
        if mono == "1":
            body = _frac(c)
        elif c == 1:
            body = mono
        else:
            body = f"{_frac(c)} {mono}"
        out.append((sign, body))
    return out


def _join(terms):
    if not terms:
        return "0"
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


def _scalar_parts(a: Scalar):
    """(negative, body, atomic): ``a = (-1)^negative * body``."""
    r = a.rational()
    if r is not None:
        return r < 0, _frac(abs(r)), True
    fld = a.field
    if isinstance(a, Cyc):
        k = root_exponent(a)
        if k is not None:
            return False, _monomial(fld.symbol, k), True
        k = root_exponent(-a)
        if k is not None:
            return True, _monomial(fld.symbol, k), True
        terms = _poly_terms([Fraction(x, a.den) for x in a.num], fld.symbol)
        if len(terms) == 1:
            return terms[0][0] == "-", terms[0][1], True
        return False, _join(terms), False
    if isinstance(a, RatFunc):
        sym = fld.symbol
        den = a.den
        if all(x == 0 for x in den[:-1]):
            m = len(den) - 1
            terms = _poly_terms([Fraction(x, den[-1]) for x in a.num], sym, -m)
            if len(terms) == 1:
                return terms[0][0] == "-", terms[0][1], True
            return False, _join(terms), False
        num = _join(_poly_terms(a.num, sym))
        dtext = _join(_poly_terms(den, sym))
        return False, f"({num})/({dtext})", False
    raise TypeError(f"unknown scalar type {type(a).__name__}")


def format_scalar(a: Scalar) -> str:
    neg, body, _ = _scalar_parts(a)
    return ("-" if neg else "") + body


def _format_superword(U):
    parts = []
    i = 0
    while i < len(U):
        j = i
        while j < len(U) and U[j] == U[i]:
            j += 1
        s = f"[{format_word(U[i])}]"
        parts.append(s if j - i == 1 else f"{s}^{j - i}")
        i = j
    return "".join(parts)


def _format_word(x):
    return " ".join(f"x{i}" for i in x)


def term_sort_key(key):
    x, g = key
    return (-sum(len(u) if isinstance(u, tuple) else 1 for u in x), x, g)


def format_element(e) -> str:
    from .superletters import SuperElement
    grading = e.grading
    if not e.terms:
        return "0"
    superword = isinstance(e, SuperElement)
    pieces = []
    for key in sorted(e.terms, key=term_sort_key):
        x, g = key
        c = e.terms[key]
        mono = [_format_superword(x) if superword else _format_word(x)] if x else []
        if any(g):
            mono.append(grading.group.format(g))
        mono = " ".join(mono)
        neg, body, atomic = _scalar_parts(c)
        if not mono:
            text = body if atomic or len(e.terms) == 1 else f"({body})"
        elif body == "1":
            text = mono
        else:
            text = f"{body if atomic else '(' + body + ')'} {mono}"
        pieces.append(("-" if neg else "+", text))
    return _join(pieces)
