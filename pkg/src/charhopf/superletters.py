"""Super letters [u], super words and their orders.

A super word is a tuple of Lyndon words (each a tuple of letter indices),
e.g. ``((1, 1, 2), (1, 2))`` for [x1x1x2][x1x2].  Tuple comparison again
gives the lexicographic order on super words, with super letters ordered
like their words.
"""

from __future__ import annotations

from .algebra import SmashElement, _Combination, graded_commutator, multiply
from .grading import Grading
from .words import is_lyndon, shirshov


class SuperElement(_Combination):
    """Linear combination of (super word, group element) pairs."""

    __slots__ = ()

    def _zdeg(self, U):
        return superword_zdeg(U, self.grading.theta)

    @classmethod
    def superword(cls, grading, U, coeff=1, g=None):
        g = grading.group.identity if g is None else grading.group.element(g)
        return cls._raw(grading, {(tuple(tuple(u) for u in U), g): grading.field(coeff)})

    @classmethod
    def superletter(cls, grading, u):
        return cls.superword(grading, (tuple(u),))

    @classmethod
    def from_smash(cls, a: SmashElement):
        """Embed kX # k[Gamma] letter-wise: x_i1...x_in -> [x_i1]...[x_in]."""
        return cls._raw(a.grading, {(tuple((i,) for i in x), g): c for (x, g), c in a.terms.items()})


_ZDEG = {}


def superword_zdeg(U, theta: int) -> tuple:
    key = (U, theta)
    try:
        return _ZDEG[key]
    except KeyError:
        pass
    d = [0] * theta
    for u in U:
        for i in u:
            d[i - 1] += 1
    d = tuple(d)
    if len(_ZDEG) < 1_000_000:
        _ZDEG[key] = d
    return d


def superword_length(U) -> int:
    return sum(len(u) for u in U)


def expand_superletter(u, grading: Grading) -> SmashElement:
    """[x_i] = x_i and [u] = [[v], [w]] for Sh(u) = (v, w)."""
    u = tuple(u)
    cache = grading.caches.setdefault("superletter", {})
    try:
        return cache[u]
    except KeyError:
        pass
    if not is_lyndon(u):
        raise ValueError(f"{u} is not a Lyndon word")
    if len(u) == 1:
        val = SmashElement.letter(grading, u[0])
    else:
        v, w = shirshov(u)
        val = graded_commutator(expand_superletter(v, grading), expand_superletter(w, grading))
    cache[u] = val
    return val


def _expand_superword(U, grading):
    cache = grading.caches.setdefault("superword", {})
    try:
        return cache[U]
    except KeyError:
        pass
    if not U:
        val = SmashElement.scalar(grading, 1)
    else:
        val = multiply(_expand_superword(U[:-1], grading), expand_superletter(U[-1], grading))
    if len(cache) < 200_000:
        cache[U] = val
    return val


def expand_superelement(e: SuperElement) -> SmashElement:
    grading = e.grading
    out = SmashElement.zero(grading)
    terms = {}
    from .algebra import add_into
    for (U, g), c in e.terms.items():
        ex = _expand_superword(U, grading)
        if any(g):
            ex = ex.times_group(g)
        add_into(terms, ex.terms, c)
    out.terms = terms
    return out


def superword_lex_lt(U, V) -> bool:
    return tuple(U) < tuple(V)


def prec_key(U):
    """Sort key that is increasing along the order U < V (read: U precedes V)."""
    return (superword_length(U), _Reversed(tuple(U)))


class _Reversed:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return self.v > other.v

    def __eq__(self, other):
        return self.v == other.v


def superword_prec(U, V) -> bool:
    """U precedes V: shorter, or equally long and lexicographically larger."""
    lu, lv = superword_length(U), superword_length(V)
    if lu != lv:
        return lu < lv
    return tuple(U) > tuple(V)


def prec_L_check(a: _Combination, W, L, strict: bool = True) -> bool:
    """a is a combination of super words U over L with l(U) = l(W), U > W
    (U >= W when not strict) and of terms Vg with V over L, l(V) < l(W)."""
    L = {tuple(u) for u in L}
    W = tuple(tuple(w) for w in W)
    lw = superword_length(W)
    for (U, g), _ in a.terms.items():
        if any(u not in L for u in U):
            return False
        lu = superword_length(U)
        if lu < lw:
            continue
        if lu > lw or any(g):
            return False
        if U < W or (strict and U == W):
            return False
    return True


def superletter_in_L(grading: Grading, L, w) -> SuperElement:
    """[w] written over super letters of L.

    Members of L stay single letters; any other Lyndon word is unfolded
    through [w] = [[v], [w']] with Sh(w) = (v, w') until all factors lie in L.
    With ``L`` None every Lyndon word counts as a letter.
    """
    w = tuple(w)
    if not is_lyndon(w):
        raise ValueError(f"{w} is not a Lyndon word")
    if L is None or w in L or len(w) == 1:
        return SuperElement.superletter(grading, w)
    v, w2 = shirshov(w)
    return graded_commutator(superletter_in_L(grading, L, v), superletter_in_L(grading, L, w2))
